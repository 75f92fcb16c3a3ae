#include "hypalg/transform.hpp"

namespace hypalg {

namespace {

bool pair_degenerate(const FactorPair& p) {
    return p.c.is_constant() || p.d.is_constant();
}

// Removes all common factors of c(t) and d(t+n) for n = 0..bound ascending,
// logging one step per gcd round. Removal only deletes parameters, so no new
// differences appear and ascending n realizes minimality.
void strip_direction(PolyQ& c, PolyQ& d, RemovalStep::Direction dir,
                     std::vector<RemovalStep>& steps) {
    if (c.is_constant() || d.is_constant()) return;
    unsigned long bound = shift_search_bound(c, d);
    for (unsigned long n = 0; n <= bound; ++n) {
        while (!c.is_constant() && !d.is_constant()) {
            PolyQ g = poly_gcd(c, d.shift(Integer(n)));
            if (g.is_constant()) break;
            c = c.divide_exact(g);
            d = d.divide_exact(g.shift(Integer(-Integer(n))));
            RemovalStep step;
            step.direction = dir;
            step.difference = n;
            step.removed_factor =
                dir == RemovalStep::Direction::top_minus_bottom
                    ? g
                    : g.shift(Integer(-Integer(n)));
            step.pairs_removed = static_cast<unsigned long>(g.degree());
            steps.push_back(std::move(step));
        }
    }
}

} // namespace

ContractionResult contract(const FactorPair& pair) {
    ContractionResult res;
    PolyQ c = pair.c.is_zero() ? pair.c : pair.c.monic();
    PolyQ d = pair.d.is_zero() ? pair.d : pair.d.monic();
    if (c.is_zero() || d.is_zero())
        throw Error("contract: factor pair polynomials must be nonzero");
    strip_direction(c, d, RemovalStep::Direction::top_minus_bottom, res.steps);
    res.pair = FactorPair{std::move(c), std::move(d)};
    return res;
}

ContractionResult reduce_full(const FactorPair& pair) {
    ContractionResult res = contract(pair);
    PolyQ c = res.pair.c, d = res.pair.d;
    // Symmetric pass: common factors of d(t) and c(t+n) realize d - c in N.
    std::vector<RemovalStep> extra;
    strip_direction(d, c, RemovalStep::Direction::bottom_minus_top, extra);
    // strip_direction logged the d-side divisor as "removed_factor"; the
    // convention is the c-side divisor, which is that factor shifted by -n.
    // The helper already applies the shift for bottom_minus_top steps.
    for (auto& s : extra) res.steps.push_back(std::move(s));
    res.pair = FactorPair{std::move(c), std::move(d)};
    return res;
}

bool is_contracted(const FactorPair& pair) {
    if (pair_degenerate(pair)) return true;
    unsigned long bound = shift_search_bound(pair.c, pair.d);
    for (unsigned long n = 0; n <= bound; ++n)
        if (!poly_gcd(pair.c, pair.d.shift(Integer(n))).is_constant())
            return false;
    return true;
}

bool is_reduced(const FactorPair& pair) {
    if (!is_contracted(pair)) return false;
    if (pair_degenerate(pair)) return true;
    unsigned long bound = shift_search_bound(pair.c, pair.d);
    for (unsigned long n = 1; n <= bound; ++n)
        if (!poly_gcd(pair.d, pair.c.shift(Integer(n))).is_constant())
            return false;
    return true;
}

std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>>
has_rational_parameters(const FactorPair& pair) {
    std::pair<std::vector<Rational>, std::vector<Rational>> out;
    if (!pair.c.is_constant()) {
        auto roots = rational_roots(pair.c);
        if (static_cast<int>(roots.size()) != pair.c.degree())
            return std::nullopt;
        for (const auto& r : roots) out.first.push_back(-r);
        std::sort(out.first.begin(), out.first.end());
    }
    if (!pair.d.is_constant()) {
        auto roots = rational_roots(pair.d);
        if (static_cast<int>(roots.size()) != pair.d.degree())
            return std::nullopt;
        for (const auto& r : roots) out.second.push_back(-r);
        std::sort(out.second.begin(), out.second.end());
    }
    return out;
}

bool degree_balanced(const FactorPair& pair) {
    return pair.c.degree() == pair.d.degree();
}

} // namespace hypalg
