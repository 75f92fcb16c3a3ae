#include <doctest.h>

#include <random>

#include "hypalg/params.hpp"
#include "hypalg/parse.hpp"

using namespace hypalg;

namespace {

PolyQ lf(long num, long den = 1) {
    return PolyQ::linear_factor(Rational(num, den));
}

Parameter rat(long num, long den = 1) {
    return Parameter::rational(Rational(num, den));
}

// Rising factorial (a)_n over a rational a.
Rational rising(const Rational& a, unsigned long n) {
    Rational r(1);
    for (unsigned long i = 0; i < n; ++i) r *= a + Rational(Integer(i));
    return r;
}

} // namespace

TEST_CASE("assemble the introductory 3F2 with sqrt(2) parameters") {
    // top 1/2, 1+sqrt2, 1-sqrt2; bottom sqrt2, -sqrt2; F-form, scale 4
    Parameter plus = parse_parameter_text("1+sqrt(2)");
    Parameter minus = parse_parameter_text("1-sqrt(2)");
    Parameter rp = parse_parameter_text("sqrt(2)");
    Parameter rm = parse_parameter_text("-sqrt(2)");
    auto spec = assemble({rat(1, 2), plus, minus}, {rp, rm}, Form::F,
                         Rational(4), Rational(1));
    // c = (t+1/2)(t^2+2t-1), d = (t^2-2)(t+1)
    PolyQ conj{Rational(-1), Rational(2), Rational(1)};
    CHECK(spec.c_poly == lf(1, 2) * conj);
    PolyQ sq2{Rational(-2), Rational(0), Rational(1)};
    CHECK(spec.d_poly == sq2 * lf(1));
    CHECK(spec.scale == Rational(4));
}

TEST_CASE("assemble 2F1([1,1],[2])") {
    auto spec = assemble({rat(1), rat(1)}, {rat(2)}, Form::F, Rational(1),
                         Rational(1));
    CHECK(spec.c_poly == lf(1) * lf(1));
    CHECK(spec.d_poly == lf(2) * lf(1));
}

TEST_CASE("a lone sqrt(2) violates conjugate closure") {
    Parameter r2 = parse_parameter_text("sqrt(2)");
    CHECK_THROWS_AS(
        assemble({r2}, {}, Form::F, Rational(1), Rational(1)),
        ConjugateClosureViolation);
    // unequal multiplicities of the two conjugates
    Parameter rm = parse_parameter_text("-sqrt(2)");
    CHECK_THROWS_AS(
        assemble({r2, r2, rm}, {}, Form::F, Rational(1), Rational(1)),
        ConjugateClosureViolation);
    // both conjugates present is fine
    CHECK_NOTHROW(assemble({r2, rm}, {}, Form::F, Rational(1), Rational(1)));
}

TEST_CASE("from_recurrence on the introductory sequence") {
    // (n+1)(n^2-2) u_{n+1} = 2(2n+1)(n^2+2n-1) u_n
    PolyQ a = PolyQ::constant(Rational(2)) * PolyQ{Rational(1), Rational(2)} *
              PolyQ{Rational(-1), Rational(2), Rational(1)};
    PolyQ b = lf(1) * PolyQ{Rational(-2), Rational(0), Rational(1)};
    auto spec = from_recurrence(a, b, Rational(1));
    CHECK(spec.scale == Rational(4));
    CHECK(spec.c_poly ==
          lf(1, 2) * PolyQ{Rational(-1), Rational(2), Rational(1)});
    CHECK(spec.d_poly == lf(1) * PolyQ{Rational(-2), Rational(0), Rational(1)});
}

TEST_CASE("from_recurrence scale lcm cancels on the 14-recurrence") {
    InputDocument doc = parse_expression(
        "rec: u0=1; A=(14*n+1)*(14*n+3)*(14*n+11)*(n^2+2*n+4); "
        "B=56*(7*n+1)*(7*n+3)*(n+3)*(n^2+3)");
    auto spec = to_spec(doc);
    CHECK(spec.scale == Rational(1)); // 2744/2744
}

TEST_CASE("from_recurrence geometric with cancellation pending") {
    auto spec = from_recurrence(lf(1), lf(1), Rational(5));
    CHECK(spec.scale == Rational(1));
    CHECK(spec.leading_value == Rational(5));
    auto canon = cancel_common(spec);
    CHECK(canon.c_poly.is_constant());
    CHECK(canon.d_poly.is_constant());
}

TEST_CASE("from_recurrence rejects unshielded denominator zeros") {
    // B(2) = 0 with no truncation at all
    CHECK_THROWS_AS(from_recurrence(lf(1), lf(-2), Rational(1)),
                    IllDefinedError);
    // truncation at n=3 strictly after the zero of B at n=2
    CHECK_THROWS_AS(from_recurrence(lf(-3), lf(-2), Rational(1)),
                    IllDefinedError);
    // truncation at n=1 strictly before the zero at n=2 is tolerated
    CHECK_NOTHROW(from_recurrence(lf(-1), lf(-2), Rational(1)));
}

TEST_CASE("cancel_common") {
    auto spec =
        assemble({rat(1), rat(1)}, {rat(2)}, Form::F, Rational(1), Rational(1));
    auto canon = cancel_common(spec);
    CHECK(canon.c_poly == lf(1));
    CHECK(canon.d_poly == lf(2));
    // coprime pair unchanged
    auto spec2 = assemble({rat(1, 2)}, {rat(1, 3)}, Form::scriptF, Rational(1),
                          Rational(1));
    CHECK(cancel_common(spec2).c_poly == spec2.c_poly);
    // identical pair cancels to the empty script function
    auto spec3 =
        assemble({rat(1, 2)}, {rat(1, 2)}, Form::scriptF, Rational(1),
                 Rational(1));
    auto canon3 = cancel_common(spec3);
    CHECK(canon3.c_poly == PolyQ::constant(Rational(1)));
    CHECK(canon3.d_poly == PolyQ::constant(Rational(1)));
    // idempotent
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> numd(-4, 4);
    std::uniform_int_distribution<long> dend(1, 3);
    for (int i = 0; i < 100; ++i) {
        std::vector<Parameter> top, bottom;
        for (int j = 0; j < 3; ++j) top.push_back(rat(numd(rng), dend(rng)));
        for (int j = 0; j < 2; ++j) bottom.push_back(rat(numd(rng), dend(rng)));
        auto s = assemble(top, bottom, Form::scriptF, Rational(1), Rational(1));
        auto once = cancel_common(s);
        auto twice = cancel_common(once);
        CHECK(once.c_poly == twice.c_poly);
        CHECK(once.d_poly == twice.d_poly);
    }
}

TEST_CASE("truncation degree") {
    auto spec = assemble({rat(-2), rat(1, 2)}, {rat(1, 3)}, Form::F,
                         Rational(1), Rational(1));
    CHECK(truncation_degree(cancel_common(spec)) == 3);

    Parameter plus = parse_parameter_text("1+sqrt(2)");
    Parameter minus = parse_parameter_text("1-sqrt(2)");
    auto intro = assemble({rat(1, 2), plus, minus},
                          {parse_parameter_text("sqrt(2)"),
                           parse_parameter_text("-sqrt(2)")},
                          Form::F, Rational(4), Rational(1));
    CHECK(truncation_degree(cancel_common(intro)) == std::nullopt);

    auto zero = assemble({rat(0)}, {rat(1, 2)}, Form::scriptF, Rational(1),
                         Rational(1));
    CHECK(truncation_degree(cancel_common(zero)) == 1);
}

TEST_CASE("coefficients from the factor pair match the rising factorials") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> numd(1, 9);
    std::uniform_int_distribution<long> dend(1, 5);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<Rational> top = {Rational(numd(rng), dend(rng)),
                                     Rational(numd(rng), dend(rng))};
        std::vector<Rational> bottom = {Rational(numd(rng), dend(rng))};
        Rational scale(numd(rng), dend(rng));
        Rational u0(numd(rng), dend(rng));
        std::vector<Parameter> tp, bp;
        for (const auto& t : top) tp.push_back(Parameter::rational(t));
        for (const auto& b : bottom) bp.push_back(Parameter::rational(b));
        auto spec = assemble(tp, bp, Form::F, scale, u0);

        // independent route: u0 scale^n prod (a)_n / (prod (b)_n n!)
        Rational u = spec.leading_value;
        Rational spow(1);
        for (unsigned long n = 0; n < 30; ++n) {
            Rational direct = u0 * spow * rising(top[0], n) * rising(top[1], n) /
                              (rising(bottom[0], n) * rising(Rational(1), n));
            CHECK(u == direct);
            Rational dn = spec.d_poly.eval(Rational(Integer(n)));
            u = u * spec.scale * spec.c_poly.eval(Rational(Integer(n))) / dn;
            spow *= scale;
        }
    }
}

TEST_CASE("origin round trip: re-assembling reproduces the spec") {
    Parameter plus = parse_parameter_text("1+sqrt(2)");
    Parameter minus = parse_parameter_text("1-sqrt(2)");
    auto spec = assemble({rat(1, 2), plus, minus},
                         {parse_parameter_text("sqrt(2)"),
                          parse_parameter_text("-sqrt(2)")},
                         Form::F, Rational(4), Rational(1));
    REQUIRE(spec.origin.kind == Origin::Kind::pFq);
    auto again = assemble(spec.origin.top, spec.origin.bottom, Form::F,
                          spec.origin.scale, spec.origin.u0);
    CHECK(again.c_poly == spec.c_poly);
    CHECK(again.d_poly == spec.d_poly);
    CHECK(again.scale == spec.scale);
    CHECK(again.leading_value == spec.leading_value);
}

TEST_CASE("recurrence and parameter assembly agree on the intro example") {
    PolyQ a = PolyQ::constant(Rational(2)) * PolyQ{Rational(1), Rational(2)} *
              PolyQ{Rational(-1), Rational(2), Rational(1)};
    PolyQ b = lf(1) * PolyQ{Rational(-2), Rational(0), Rational(1)};
    auto rec = from_recurrence(a, b, Rational(1));

    auto asmbl = assemble({rat(1, 2), parse_parameter_text("1+sqrt(2)"),
                           parse_parameter_text("1-sqrt(2)")},
                          {parse_parameter_text("sqrt(2)"),
                           parse_parameter_text("-sqrt(2)")},
                          Form::F, Rational(4), Rational(1));
    CHECK(rec.c_poly == asmbl.c_poly);
    CHECK(rec.d_poly == asmbl.d_poly);
    CHECK(rec.scale == asmbl.scale);
}

TEST_CASE("parameter_count weights blocks by degree") {
    Parameter blk = parse_parameter_text("allroots(t^3+t+1)");
    CHECK(parameter_count({rat(1), blk}) == 4);
}

TEST_CASE("root() isolating a rational collapses to a rational parameter") {
    Parameter p = parse_parameter_text("root(t^2-4, 1, 3)");
    CHECK(p.is_rational());
    CHECK(p.rational_value() == Rational(2));
    // mixed factor: rational root stripped from the minimal polynomial
    Parameter q = parse_parameter_text("root((t-1)*(t^2-2), 5/4, 3/2)");
    REQUIRE(q.is_real_algebraic());
    CHECK(q.real_algebraic().minpoly ==
          PolyQ{Rational(-2), Rational(0), Rational(1)});
}
