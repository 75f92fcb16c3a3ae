#include <doctest.h>

#include <random>

#include "hypalg/polyq.hpp"

using namespace hypalg;

namespace {

PolyQ lf(long num, long den = 1) {
    return PolyQ::linear_factor(Rational(num, den));
}

PolyQ random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> degd(0, max_deg);
    std::uniform_int_distribution<long> numd(-6, 6);
    std::uniform_int_distribution<long> dend(1, 4);
    int d = degd(rng);
    std::vector<Rational> c(d + 1);
    for (auto& x : c) x = Rational(numd(rng), dend(rng));
    if (c.back() == 0) c.back() = 1;
    return PolyQ(std::move(c));
}

} // namespace

TEST_CASE("gcd examples") {
    CHECK(poly_gcd(lf(2) * lf(2), lf(2) * lf(5)) == lf(2));
    // Euclidean remainder sequence of a coprime pair
    PolyQ a{Rational(4), Rational(-2), Rational(1)};  // t^2 - 2t + 4
    PolyQ b{Rational(4), Rational(2), Rational(1)};   // t^2 + 2t + 4
    CHECK(poly_gcd(a, b) == PolyQ::constant(Rational(1)));
    PolyQ c{Rational(3), Rational(0), Rational(1)};   // t^2 + 3
    CHECK(poly_gcd(c, c) == c);
}

TEST_CASE("gcd divides both inputs and is symmetric") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        PolyQ p = random_poly(rng, 5), q = random_poly(rng, 5);
        if (p.is_zero() || q.is_zero()) continue;
        PolyQ g = poly_gcd(p, q);
        CHECK(p.divmod(g).second.is_zero());
        CHECK(q.divmod(g).second.is_zero());
        CHECK(poly_gcd(q, p) == g);
    }
}

TEST_CASE("shift examples") {
    CHECK((lf(1) * lf(1)).shift(1) == lf(2) * lf(2));
    PolyQ p{Rational(3), Rational(0), Rational(1)}; // t^2 + 3
    CHECK(p.shift(1) == PolyQ{Rational(4), Rational(2), Rational(1)});
    CHECK(lf(-3).shift(-2) == lf(-5));
}

TEST_CASE("shift round trips") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> sh(-7, 7);
    for (int i = 0; i < 100; ++i) {
        PolyQ p = random_poly(rng, 6);
        Integer n(sh(rng));
        CHECK(p.shift(n).shift(-n) == p);
    }
}

TEST_CASE("rational roots with multiplicity") {
    PolyQ p = lf(-1) * lf(-2); // roots 1, 2
    CHECK(rational_roots(p) == std::vector<Rational>{Rational(1), Rational(2)});
    PolyQ q{Rational(-2), Rational(0), Rational(1)}; // t^2 - 2
    CHECK(rational_roots(q).empty());
    // (2t-1)^2 (t+4)
    PolyQ r = PolyQ{Rational(-1), Rational(2)} * PolyQ{Rational(-1), Rational(2)} *
              lf(4);
    CHECK(rational_roots(r) ==
          std::vector<Rational>{Rational(-4), Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("roots and cofactor reconstruct the polynomial") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        PolyQ p = random_poly(rng, 5);
        if (p.is_zero() || p.is_constant()) continue;
        auto roots = rational_roots(p);
        // rebuild: product of (t - r) times the root-free cofactor
        PolyQ rootpart = PolyQ::constant(Rational(1));
        for (const auto& r : roots)
            rootpart = rootpart * PolyQ::linear_factor(-r);
        PolyQ cofactor = p.divide_exact(rootpart);
        CHECK(cofactor * rootpart == p);
        CHECK(rational_roots(cofactor).empty());
    }
}

TEST_CASE("shift search bound from the Cauchy bounds") {
    PolyQ a{Rational(-2), Rational(0), Rational(1)}; // t^2 - 2, B = 3
    PolyQ b = lf(-5);                                // t - 5,  B = 6
    CHECK(cauchy_root_bound(a) == Rational(3));
    CHECK(cauchy_root_bound(b) == Rational(6));
    CHECK(shift_search_bound(a, b) == 9);
    CHECK(shift_search_bound(lf(-1), lf(-1)) == 4);
    CHECK(shift_search_bound(PolyQ::variable(), PolyQ::variable()) == 2);
}

TEST_CASE("squarefree part and natural roots") {
    PolyQ p = lf(-2) * lf(-2) * lf(3);
    CHECK(squarefree_part(p) == lf(-2) * lf(3));
    CHECK(first_natural_root(p) == 2);
    CHECK(first_natural_root(lf(2)) == std::nullopt);
    CHECK(first_natural_root(PolyQ::variable()) == 0);
}

TEST_CASE("negate_roots_monic") {
    // roots {1, 2}: block polynomial x^2 - 3x + 2 becomes (t+1)(t+2)
    PolyQ block{Rational(2), Rational(-3), Rational(1)};
    CHECK(negate_roots_monic(block) == lf(1) * lf(2));
    PolyQ odd = lf(-1) * lf(-2) * lf(-3);
    CHECK(negate_roots_monic(odd) == lf(1) * lf(2) * lf(3));
}

TEST_CASE("divmod invariant") {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 200; ++i) {
        PolyQ p = random_poly(rng, 6), d = random_poly(rng, 3);
        if (d.is_zero()) continue;
        auto [q, r] = p.divmod(d);
        CHECK(q * d + r == p);
        CHECK((r.is_zero() || r.degree() < d.degree()));
    }
}

TEST_CASE("compose_affine") {
    PolyQ p{Rational(1), Rational(2), Rational(1)}; // (t+1)^2
    // p(2t + 3) = (2t+4)^2 = 4t^2 + 16t + 16
    CHECK(p.compose_affine(Rational(2), Rational(3)) ==
          PolyQ{Rational(16), Rational(16), Rational(4)});
}

TEST_CASE("to_string renders exact coefficients") {
    PolyQ p{Rational(-1, 2), Rational(0), Rational(3)};
    CHECK(p.to_string() == "3*t^2 - 1/2");
    CHECK(PolyQ().to_string() == "0");
    CHECK(lf(-5).to_string("n") == "n - 5");
}
