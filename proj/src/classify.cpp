#include "hypalg/classify.hpp"

namespace hypalg {

std::string to_string(const Verdict& v) {
    switch (v.kind) {
    case Verdict::Kind::Polynomial:
        return "POLYNOMIAL(deg<" + std::to_string(v.degree_bound) + ")";
    case Verdict::Kind::Algebraic:
        return "ALGEBRAIC";
    case Verdict::Kind::Transcendental:
        return "TRANSCENDENTAL";
    }
    return "?";
}

std::string to_string(DecisionNode::Name n) {
    switch (n) {
    case DecisionNode::Name::PolynomialCheck: return "PolynomialCheck";
    case DecisionNode::Name::DegreeBalance: return "DegreeBalance";
    case DecisionNode::Name::ContractionRationality:
        return "ContractionRationality";
    case DecisionNode::Name::Reducedness: return "Reducedness";
    case DecisionNode::Name::InterlacingCriterion:
        return "InterlacingCriterion";
    }
    return "?";
}

ClassificationTrace classify(const HypergeomSpec& spec,
                             const ClassifyOptions& options) {
    HypergeomSpec canonical = cancel_common(spec);
    ClassificationTrace trace;
    trace.canonical = canonical.pair();
    trace.scale = canonical.scale;
    trace.leading_value = canonical.leading_value;

    // Definedness: a natural root of D is tolerated only when C truncates
    // the series strictly earlier (a documented extension of the usual
    // b_k not in -N requirement).
    auto dzero = first_natural_root(canonical.d_poly);
    auto czero = first_natural_root(canonical.c_poly);
    if (canonical.leading_value == 0) {
        // The zero series. Not reachable through ordinary inputs with
        // u0 != 0, but derivative specs of constants produce it.
        trace.raw_contracted = is_contracted(trace.canonical);
        trace.raw_reduced = is_reduced(trace.canonical);
        trace.nodes.push_back({DecisionNode::Name::PolynomialCheck, true,
                               "leading value 0: the zero series"});
        trace.contracted = trace.canonical;
        trace.verdict = Verdict{Verdict::Kind::Polynomial, 0};
        return trace;
    }
    if (dzero && !(czero && *czero < *dzero))
        throw IllDefinedError(
            "denominator factor vanishes at n = " + std::to_string(*dzero) +
            " and no top parameter truncates the series before that");
    if (dzero) trace.truncation_shields_denominator_zero = true;

    trace.raw_contracted = is_contracted(trace.canonical);
    trace.raw_reduced = is_reduced(trace.canonical);

    // (1) a_j in -N for some j?  <=>  C has a natural root.
    auto trunc = truncation_degree(canonical);
    if (trunc) {
        trace.nodes.push_back(
            {DecisionNode::Name::PolynomialCheck, true,
             "series truncates: u_n = 0 for n >= " + std::to_string(*trunc)});
        trace.contracted = trace.canonical;
        trace.verdict = Verdict{Verdict::Kind::Polynomial, *trunc};
        return trace;
    }
    trace.nodes.push_back({DecisionNode::Name::PolynomialCheck, false,
                           "no top parameter lies in -N"});

    // (2) p = q+1?  <=>  deg C = deg D in factor form.
    if (!degree_balanced(trace.canonical)) {
        bool entire = canonical.c_poly.degree() < canonical.d_poly.degree();
        trace.nodes.push_back(
            {DecisionNode::Name::DegreeBalance, false,
             entire ? "deg C < deg D: entire series, infinite radius"
                    : "deg C > deg D: zero radius of convergence"});
        trace.contracted = trace.canonical;
        trace.verdict = Verdict{Verdict::Kind::Transcendental, 0};
        return trace;
    }
    trace.nodes.push_back({DecisionNode::Name::DegreeBalance, true,
                           "deg C = deg D = " +
                               std::to_string(canonical.c_poly.degree())});

    // (3) contraction
    ContractionResult contraction = contract(trace.canonical);
    trace.contracted = contraction.pair;
    trace.contraction_steps = std::move(contraction.steps);

    // (4) parameters of the contraction rational?
    auto params = has_rational_parameters(trace.contracted);
    if (!params) {
        trace.nodes.push_back(
            {DecisionNode::Name::ContractionRationality, false,
             "the contracted pair does not split over Q"});
        trace.verdict = Verdict{Verdict::Kind::Transcendental, 0};
        return trace;
    }
    trace.contracted_params = params;
    trace.nodes.push_back({DecisionNode::Name::ContractionRationality, true,
                           "all contracted parameters are rational"});

    // (5) contraction reduced?
    if (!is_reduced(trace.contracted)) {
        trace.nodes.push_back(
            {DecisionNode::Name::Reducedness, false,
             "the contraction still has an integral parameter difference"});
        trace.verdict = Verdict{Verdict::Kind::Transcendental, 0};
        return trace;
    }
    trace.nodes.push_back({DecisionNode::Name::Reducedness, true,
                           "no integral parameter differences remain"});

    // (6) interlacing criterion
    CriteriaOptions copt;
    copt.parallel = options.parallel_lambda;
    trace.ic_report = ic_check(params->first, params->second, copt);
    bool ok = trace.ic_report->satisfied;
    trace.nodes.push_back(
        {DecisionNode::Name::InterlacingCriterion, ok,
         ok ? "lambda C and lambda D interlace for every unit lambda"
            : trace.ic_report->witness.value_or("interlacing fails")});
    trace.verdict = Verdict{
        ok ? Verdict::Kind::Algebraic : Verdict::Kind::Transcendental, 0};
    return trace;
}

namespace {

bool in_minus_n(const Rational& x) { return is_nonpositive_integer(x); }

// Corollary list for 2F1([alpha, beta], [alpha+k]) with k integral.
bool gaussian_list_shifted(const Rational& alpha, const Rational& beta,
                           const Integer& k) {
    if (k <= 0) return true;
    bool ai = is_integer(alpha), bi = is_integer(beta);
    Rational kk{k};
    if (ai && !bi) return true;                              // a)
    if (!ai && in_minus_n(beta)) return true;                // b)
    if (!ai && !bi && is_natural(beta - alpha - kk)) return true; // c)
    if (ai && bi) {
        if (alpha < beta && beta <= 0 && beta - alpha >= kk) return true; // d)
        // e) as printed: 0 < alpha < beta <= 0 -- unsatisfiable, kept literal
        if (Rational(0) < alpha && alpha < beta && beta <= 0 &&
            beta - alpha >= kk)
            return true;
        if (beta <= 0 && Rational(0) < alpha) return true; // f)
    }
    return false;
}

// Corollary list for 2F1([k, beta], [gamma]) with k integral.
bool gaussian_list_integer_top(const Integer& k, const Rational& beta,
                               const Rational& gamma) {
    if (k <= 0) return true;
    Rational kk{k};
    if (!in_minus_n(beta) && is_natural(beta - gamma)) return true; // a)
    if (in_minus_n(beta)) return true;                              // b)
    if (is_integer(beta) && is_integer(gamma) && Rational(0) < beta &&
        beta < gamma && gamma <= kk)
        return true;                                                // c)
    if (!is_integer(beta) && is_natural(kk - gamma)) return true;   // d)
    return false;
}

} // namespace

std::optional<Verdict> gaussian_degenerate_verdict(const Rational& alpha,
                                                   const Rational& beta,
                                                   const Rational& gamma) {
    bool applicable = false;
    bool algebraic = false;
    // Every integral relation yields a valid parameterization of one of the
    // two lists; the function is algebraic iff some applicable case fires.
    if (is_integer(gamma - alpha)) {
        applicable = true;
        algebraic = algebraic ||
                    gaussian_list_shifted(alpha, beta, num(gamma - alpha));
    }
    if (is_integer(gamma - beta)) {
        applicable = true;
        algebraic = algebraic ||
                    gaussian_list_shifted(beta, alpha, num(gamma - beta));
    }
    if (is_integer(alpha)) {
        applicable = true;
        algebraic =
            algebraic || gaussian_list_integer_top(num(alpha), beta, gamma);
    }
    if (is_integer(beta)) {
        applicable = true;
        algebraic =
            algebraic || gaussian_list_integer_top(num(beta), alpha, gamma);
    }
    if (!applicable) return std::nullopt;
    return Verdict{algebraic ? Verdict::Kind::Algebraic
                             : Verdict::Kind::Transcendental,
                   0};
}

HypergeomSpec derivative_spec(const HypergeomSpec& spec) {
    // d/dx sum u_n x^n = sum (n+1) u_{n+1} x^n, so with v_n = (n+1) u_{n+1}:
    //   v_{n+1}/v_n = scale * C(n+1)(n+2) / (D(n+1)(n+1)).
    if (spec.origin.kind == Origin::Kind::pFq) {
        // Keep the F-form origin: every parameter shifts by +1.
        std::vector<Parameter> top, bottom;
        for (const auto& p : spec.origin.top)
            top.push_back(p.shifted(Rational(1)));
        for (const auto& p : spec.origin.bottom)
            bottom.push_back(p.shifted(Rational(1)));
        Rational d0 = spec.d_poly.eval(Rational(0));
        if (d0 == 0)
            throw IllDefinedError("derivative of an ill-defined series");
        Rational u1 =
            spec.leading_value * spec.scale * spec.c_poly.eval(Rational(0)) / d0;
        return assemble(top, bottom, Form::F, spec.scale, u1);
    }
    PolyQ c2 = spec.c_poly.shift(Integer(1)) *
               PolyQ::linear_factor(Rational(2));
    PolyQ d2 = spec.d_poly.shift(Integer(1)) *
               PolyQ::linear_factor(Rational(1));
    Rational d0 = spec.d_poly.eval(Rational(0));
    if (d0 == 0)
        throw IllDefinedError("derivative of an ill-defined series");
    Rational u1 =
        spec.leading_value * spec.scale * spec.c_poly.eval(Rational(0)) / d0;
    HypergeomSpec out = from_factor_pair(c2, d2, spec.scale, u1);
    return cancel_common(out);
}

} // namespace hypalg
