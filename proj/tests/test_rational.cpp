#include <doctest.h>

#include <random>
#include <vector>

#include "hypalg/rational.hpp"

using namespace hypalg;

TEST_CASE("bracket maps integers to 1 and others to the fractional part") {
    CHECK(bracket(Rational(2)).value == Rational(1));
    CHECK(bracket(Rational(-1, 3)).value == Rational(2, 3));
    CHECK(bracket(Rational(3, 2)).value == Rational(1, 2));
    CHECK(bracket(Rational(0)).value == Rational(1));
    CHECK(bracket(Rational(-7)).value == Rational(1));
}

TEST_CASE("bracket is 1-periodic") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> numd(-60, 60);
    std::uniform_int_distribution<long> dend(1, 12);
    for (int i = 0; i < 500; ++i) {
        Rational x(numd(rng), dend(rng));
        CHECK(bracket(x + 1) == bracket(x));
        CHECK(bracket(x - 5) == bracket(x));
    }
}

TEST_CASE("prec_compare on the spec examples") {
    CHECK(prec_compare(Rational(1, 3), Rational(1, 2)) == Prec::before);
    // equal fractional parts: the larger real number comes first
    CHECK(prec_compare(Rational(2), Rational(1)) == Prec::before);
    CHECK(prec_compare(Rational(1), Rational(2)) == Prec::after);
    CHECK(prec_compare(Rational(1, 2), Rational(1, 2)) == Prec::equal);
}

namespace {

// The order is the lexicographic order on the key (<x>, -x); agreement on
// every pair inherits totality and transitivity from the key.
int key_compare(const Rational& a, const Rational& b) {
    Rational ba = bracket(a).value, bb = bracket(b).value;
    if (ba != bb) return ba < bb ? -1 : 1;
    if (a != b) return a > b ? -1 : 1;
    return 0;
}

} // namespace

TEST_CASE("prec_compare is the lexicographic (bracket, -value) order") {
    std::vector<Rational> grid;
    for (long d = 1; d <= 12; ++d)
        for (long n = -2 * d; n <= 2 * d; ++n) grid.emplace_back(n, d);

    for (const auto& a : grid)
        for (const auto& b : grid) {
            int k = key_compare(a, b);
            Prec p = prec_compare(a, b);
            if (k < 0) CHECK(p == Prec::before);
            if (k == 0) CHECK(p == Prec::equal);
            if (k > 0) CHECK(p == Prec::after);
        }

    // spot transitivity on random triples
    std::mt19937_64 rng(999);
    std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
    for (int i = 0; i < 2000; ++i) {
        const Rational &a = grid[pick(rng)], &b = grid[pick(rng)],
                       &c = grid[pick(rng)];
        if (prec_leq(a, b) && prec_leq(b, c)) CHECK(prec_leq(a, c));
    }
}

TEST_CASE("rational text round trip") {
    CHECK(parse_rational_text("-1/3") == Rational(-1, 3));
    CHECK(parse_rational_text("4") == Rational(4));
    CHECK(parse_rational_text("256/27") == Rational(256, 27));
    CHECK(to_fraction_string(Rational(4)) == "4/1");
    CHECK(to_fraction_string(Rational(-2, 6)) == "-1/3");
    CHECK(to_pretty_string(Rational(4)) == "4");
    CHECK_THROWS_AS(parse_rational_text("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational_text("x"), ParseError);
    CHECK_THROWS_AS(parse_rational_text("1/0"), ParseError);
}

TEST_CASE("floor and -N membership") {
    CHECK(floor_int(Rational(-1, 3)) == Integer(-1));
    CHECK(floor_int(Rational(7, 2)) == Integer(3));
    CHECK(is_nonpositive_integer(Rational(0)));
    CHECK(is_nonpositive_integer(Rational(-4)));
    CHECK(!is_nonpositive_integer(Rational(1)));
    CHECK(!is_nonpositive_integer(Rational(-1, 2)));
}
