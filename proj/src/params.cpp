#include "hypalg/params.hpp"

#include <algorithm>
#include <map>

namespace hypalg {

Parameter Parameter::rational(const Rational& value) {
    Parameter p;
    p.v_ = value;
    return p;
}

Parameter Parameter::algebraic(const PolyQ& minpoly, const Rational& lo,
                               const Rational& hi) {
    if (minpoly.degree() < 1)
        throw Error("algebraic parameter needs a nonconstant polynomial");
    if (!(lo < hi)) throw Error("isolating interval is empty");
    PolyQ sf = squarefree_part(minpoly);

    // Strip rational roots; they are not part of an irrational singleton's
    // conjugate set. If the isolated root itself is rational, collapse.
    std::optional<Rational> rational_in_interval;
    for (const Rational& r : rational_roots(sf)) {
        if (lo < r && r < hi) {
            if (rational_in_interval)
                throw Error("isolating interval contains several roots");
            rational_in_interval = r;
        }
        sf = sf.divide_exact(PolyQ::linear_factor(-r));
    }
    bool sign_change =
        !sf.is_constant() && sf.eval(lo) * sf.eval(hi) < 0;
    if (rational_in_interval) {
        if (sign_change)
            throw Error("isolating interval contains several roots");
        return rational(*rational_in_interval);
    }
    if (!sign_change)
        throw Error("isolating interval has no sign change after squarefree "
                    "normalization");
    Parameter p;
    p.v_ = RealAlgebraic{sf.monic(), lo, hi};
    return p;
}

Parameter Parameter::block(const PolyQ& poly, unsigned multiplicity) {
    if (poly.degree() < 1)
        throw Error("root block needs a nonconstant polynomial");
    if (multiplicity == 0) throw Error("root block multiplicity must be >= 1");
    Parameter p;
    p.v_ = RootBlock{poly.monic(), multiplicity};
    return p;
}

bool Parameter::is_rational() const {
    return std::holds_alternative<Rational>(v_);
}
bool Parameter::is_real_algebraic() const {
    return std::holds_alternative<RealAlgebraic>(v_);
}
bool Parameter::is_block() const {
    return std::holds_alternative<RootBlock>(v_);
}

const Rational& Parameter::rational_value() const {
    return std::get<Rational>(v_);
}
const RealAlgebraic& Parameter::real_algebraic() const {
    return std::get<RealAlgebraic>(v_);
}
const RootBlock& Parameter::root_block() const {
    return std::get<RootBlock>(v_);
}

Parameter Parameter::shifted(const Rational& r) const {
    if (is_rational()) return rational(rational_value() + r);
    if (is_real_algebraic()) {
        const auto& ra = real_algebraic();
        // minpoly of x+r is M(x-r)
        return algebraic(ra.minpoly.compose_affine(Rational(1), -r),
                         ra.lo + r, ra.hi + r);
    }
    const auto& rb = root_block();
    return block(rb.poly.compose_affine(Rational(1), -r), rb.multiplicity);
}

namespace {

struct IntervalKey {
    Rational lo, hi;
    bool operator<(const IntervalKey& o) const {
        if (lo != o.lo) return lo < o.lo;
        return hi < o.hi;
    }
    bool operator==(const IntervalKey& o) const {
        return lo == o.lo && hi == o.hi;
    }
};

// Builds the monic product of (t + p) over one side's parameters, validating
// conjugate closure of the real-algebraic singletons: for each minimal
// polynomial of degree d, all d roots must be real, isolated by pairwise
// disjoint intervals, and present with equal multiplicity.
PolyQ side_product(const std::vector<Parameter>& params, const char* side) {
    PolyQ prod = PolyQ::constant(Rational(1));
    struct Group {
        std::map<IntervalKey, unsigned> intervals;
    };
    std::vector<std::pair<PolyQ, Group>> groups;

    for (const Parameter& p : params) {
        if (p.is_rational()) {
            prod = prod * PolyQ::linear_factor(p.rational_value());
        } else if (p.is_block()) {
            const auto& rb = p.root_block();
            prod = prod * negate_roots_monic(rb.poly).pow(rb.multiplicity);
        } else {
            const auto& ra = p.real_algebraic();
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [&](const auto& g) {
                                       return g.first == ra.minpoly;
                                   });
            if (it == groups.end()) {
                groups.push_back({ra.minpoly, Group{}});
                it = std::prev(groups.end());
            }
            ++it->second.intervals[IntervalKey{ra.lo, ra.hi}];
        }
    }

    for (const auto& [minpoly, group] : groups) {
        const auto& iv = group.intervals;
        std::size_t d = static_cast<std::size_t>(minpoly.degree());
        if (iv.size() != d)
            throw ConjugateClosureViolation(
                std::string(side) + " parameters: minimal polynomial " +
                minpoly.to_string() + " has degree " + std::to_string(d) +
                " but only " + std::to_string(iv.size()) +
                " distinct roots are present");
        unsigned mult = iv.begin()->second;
        for (const auto& [key, count] : iv)
            if (count != mult)
                throw ConjugateClosureViolation(
                    std::string(side) +
                    " parameters: conjugate roots of " +
                    minpoly.to_string() +
                    " appear with unequal multiplicities");
        // Disjointness certifies the intervals isolate distinct roots.
        for (auto a = iv.begin(); a != iv.end(); ++a)
            for (auto b = std::next(a); b != iv.end(); ++b)
                if (a->first.hi > b->first.lo && b->first.hi > a->first.lo)
                    throw ConjugateClosureViolation(
                        std::string(side) +
                        " parameters: overlapping isolating intervals for " +
                        minpoly.to_string());
        prod = prod * negate_roots_monic(minpoly).pow(mult);
    }
    return prod;
}

} // namespace

std::size_t parameter_count(const std::vector<Parameter>& params) {
    std::size_t n = 0;
    for (const auto& p : params) {
        if (p.is_block())
            n += static_cast<std::size_t>(p.root_block().poly.degree()) *
                 p.root_block().multiplicity;
        else
            ++n;
    }
    return n;
}

HypergeomSpec assemble(const std::vector<Parameter>& top,
                       const std::vector<Parameter>& bottom, Form form,
                       const Rational& scale, const Rational& u0) {
    if (scale == 0) throw Error("argument scale must be nonzero");
    HypergeomSpec spec;
    spec.c_poly = side_product(top, "top");
    spec.d_poly = side_product(bottom, "bottom");
    if (form == Form::F)
        spec.d_poly = spec.d_poly * PolyQ::linear_factor(Rational(1));
    spec.scale = scale;
    spec.leading_value = u0;
    spec.origin.kind =
        form == Form::F ? Origin::Kind::pFq : Origin::Kind::scriptF;
    spec.origin.top = top;
    spec.origin.bottom = bottom;
    spec.origin.scale = scale;
    spec.origin.u0 = u0;
    return spec;
}

HypergeomSpec from_recurrence(const PolyQ& a, const PolyQ& b,
                              const Rational& u0) {
    if (a.is_zero()) throw Error("recurrence numerator A must be nonzero");
    if (b.is_zero()) throw Error("recurrence denominator B must be nonzero");

    // B may vanish at a natural only if A truncates the sequence strictly
    // earlier.
    auto bzero = first_natural_root(b);
    if (bzero) {
        auto azero = first_natural_root(a);
        if (!azero || *azero >= *bzero)
            throw IllDefinedError(
                "B(" + std::to_string(*bzero) +
                ") = 0 is not shielded by an earlier truncation of A");
    }

    HypergeomSpec spec;
    spec.scale = a.leading() / b.leading();
    spec.c_poly = a.monic();
    spec.d_poly = b.monic();
    spec.leading_value = u0;
    spec.origin.kind = Origin::Kind::recurrence;
    spec.origin.rec_a = a;
    spec.origin.rec_b = b;
    spec.origin.scale = spec.scale;
    spec.origin.u0 = u0;
    return spec;
}

HypergeomSpec from_factor_pair(const PolyQ& c, const PolyQ& d,
                               const Rational& scale, const Rational& u0) {
    if (scale == 0) throw Error("argument scale must be nonzero");
    HypergeomSpec spec;
    spec.c_poly = c.is_zero() ? c : c.monic();
    spec.d_poly = d.is_zero() ? d : d.monic();
    if (spec.c_poly.is_zero() || spec.d_poly.is_zero())
        throw Error("factor pair polynomials must be nonzero");
    spec.scale = scale;
    spec.leading_value = u0;
    spec.origin.kind = Origin::Kind::factor_pair;
    spec.origin.scale = scale;
    spec.origin.u0 = u0;
    return spec;
}

HypergeomSpec cancel_common(const HypergeomSpec& spec) {
    HypergeomSpec out = spec;
    if (out.c_poly.is_constant() || out.d_poly.is_constant()) return out;
    PolyQ g = poly_gcd(out.c_poly, out.d_poly);
    if (!g.is_constant()) {
        out.c_poly = out.c_poly.divide_exact(g);
        out.d_poly = out.d_poly.divide_exact(g);
    }
    return out;
}

std::optional<unsigned long> truncation_degree(const HypergeomSpec& spec) {
    auto root = first_natural_root(spec.c_poly);
    if (!root) return std::nullopt;
    return *root + 1;
}

} // namespace hypalg
