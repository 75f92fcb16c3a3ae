#include "hypalg/polyq.hpp"

#include <algorithm>

#include "hypalg/numutil.hpp"

namespace hypalg {

PolyQ::PolyQ(std::initializer_list<Rational> ascending)
    : coeff_(ascending) {
    trim();
}

PolyQ::PolyQ(std::vector<Rational> ascending) : coeff_(std::move(ascending)) {
    trim();
}

PolyQ PolyQ::constant(const Rational& c) {
    PolyQ p;
    if (c != 0) p.coeff_ = {c};
    return p;
}

PolyQ PolyQ::variable() { return PolyQ{Rational(0), Rational(1)}; }

PolyQ PolyQ::linear_factor(const Rational& a) { return PolyQ{a, Rational(1)}; }

void PolyQ::trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

Rational PolyQ::coeff(std::size_t i) const {
    return i < coeff_.size() ? coeff_[i] : Rational(0);
}

Rational PolyQ::leading() const {
    if (coeff_.empty()) throw Error("leading coefficient of zero polynomial");
    return coeff_.back();
}

Rational PolyQ::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

PolyQ PolyQ::operator-() const {
    PolyQ r(*this);
    for (auto& c : r.coeff_) c = -c;
    return r;
}

PolyQ PolyQ::operator+(const PolyQ& rhs) const {
    std::vector<Rational> c(std::max(coeff_.size(), rhs.coeff_.size()),
                            Rational(0));
    for (std::size_t i = 0; i < coeff_.size(); ++i) c[i] += coeff_[i];
    for (std::size_t i = 0; i < rhs.coeff_.size(); ++i) c[i] += rhs.coeff_[i];
    return PolyQ(std::move(c));
}

PolyQ PolyQ::operator-(const PolyQ& rhs) const { return *this + (-rhs); }

PolyQ PolyQ::operator*(const PolyQ& rhs) const {
    if (is_zero() || rhs.is_zero()) return PolyQ();
    std::vector<Rational> c(coeff_.size() + rhs.coeff_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeff_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeff_.size(); ++j)
            c[i + j] += coeff_[i] * rhs.coeff_[j];
    return PolyQ(std::move(c));
}

PolyQ PolyQ::operator*(const Rational& s) const {
    if (s == 0) return PolyQ();
    PolyQ r(*this);
    for (auto& c : r.coeff_) c *= s;
    return r;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    PolyQ rem(*this);
    if (rem.degree() < divisor.degree()) return {PolyQ(), rem};
    std::vector<Rational> quo(rem.degree() - divisor.degree() + 1, Rational(0));
    const Rational lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        std::size_t k = rem.degree() - divisor.degree();
        Rational f = rem.leading() / lead;
        quo[k] = f;
        // rem -= f * t^k * divisor
        for (std::size_t i = 0; i < divisor.coeff_.size(); ++i)
            rem.coeff_[k + i] -= f * divisor.coeff_[i];
        rem.trim();
    }
    return {PolyQ(std::move(quo)), rem};
}

PolyQ PolyQ::divide_exact(const PolyQ& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw Error("polynomial division was not exact");
    return q;
}

PolyQ PolyQ::monic() const {
    if (is_zero()) throw Error("monic normalization of zero polynomial");
    return *this * (Rational(1) / leading());
}

PolyQ PolyQ::derivative() const {
    if (coeff_.size() <= 1) return PolyQ();
    std::vector<Rational> c(coeff_.size() - 1);
    for (std::size_t i = 1; i < coeff_.size(); ++i)
        c[i - 1] = coeff_[i] * Rational(Integer(i));
    return PolyQ(std::move(c));
}

PolyQ PolyQ::pow(unsigned e) const {
    PolyQ r = PolyQ::constant(Rational(1));
    PolyQ base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

PolyQ PolyQ::shift(const Integer& n) const {
    return compose_affine(Rational(1), Rational(n));
}

PolyQ PolyQ::compose_affine(const Rational& a, const Rational& b) const {
    // Horner in the substituted argument a t + b.
    PolyQ arg{b, a};
    PolyQ acc;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it)
        acc = acc * arg + PolyQ::constant(*it);
    return acc;
}

std::string PolyQ::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeff_.size(); k-- > 0;) {
        const Rational& c = coeff_[k];
        if (c == 0) continue;
        std::string term;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (k == 0) {
            term = to_pretty_string(mag);
        } else {
            if (mag != 1) term = to_pretty_string(mag) + "*";
            term += var;
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

PolyQ poly_gcd(const PolyQ& p, const PolyQ& q) {
    if (p.is_zero() && q.is_zero())
        throw Error("gcd of two zero polynomials");
    PolyQ a = p, b = q;
    while (!b.is_zero()) {
        PolyQ r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_constant()) return PolyQ::constant(Rational(1));
    return a.monic();
}

Rational cauchy_root_bound(const PolyQ& p) {
    if (p.is_zero()) throw Error("root bound of zero polynomial");
    Rational lead = p.leading();
    if (lead < 0) lead = -lead;
    Rational mx(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = p.coeff(i);
        if (a < 0) a = -a;
        if (a > mx) mx = a;
    }
    return Rational(1) + mx / lead;
}

unsigned long shift_search_bound(const PolyQ& p, const PolyQ& q) {
    Integer b = ceil_int(cauchy_root_bound(p) + cauchy_root_bound(q));
    if (b > 100000000)
        throw Error("shift search bound too large: " + b.str());
    return b.convert_to<unsigned long>();
}

std::vector<Rational> rational_roots(const PolyQ& p) {
    if (p.is_zero()) throw Error("rational_roots of zero polynomial");
    std::vector<Rational> roots;
    PolyQ cur = p;
    // t^m factor first
    while (!cur.is_zero() && cur.coeff(0) == 0 && cur.degree() > 0) {
        roots.emplace_back(0);
        cur = cur.divide_exact(PolyQ::variable());
    }
    if (cur.degree() > 0) {
        // primitive integer form
        Integer denlcm = 1;
        for (const auto& c : cur.coefficients())
            denlcm = lcm(denlcm, den(c));
        std::vector<Integer> z;
        z.reserve(cur.coefficients().size());
        for (const auto& c : cur.coefficients())
            z.push_back(num(c) * (denlcm / den(c)));
        Integer content = 0;
        for (const auto& v : z) content = gcd(content, v);
        for (auto& v : z) v /= content;

        for (const Integer& pnum : divisors(z.front()))
            for (const Integer& pden : divisors(z.back())) {
                if (gcd(pnum, pden) != 1) continue;
                for (int sign : {1, -1}) {
                    Rational cand(sign * pnum, pden);
                    while (cur.degree() > 0 && cur.eval(cand) == 0) {
                        roots.push_back(cand);
                        cur = cur.divide_exact(PolyQ::linear_factor(-cand));
                    }
                }
            }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

PolyQ squarefree_part(const PolyQ& p) {
    if (p.is_zero()) throw Error("squarefree part of zero polynomial");
    if (p.degree() == 0) return PolyQ::constant(Rational(1));
    PolyQ g = poly_gcd(p, p.derivative());
    return p.divide_exact(g).monic();
}

std::optional<unsigned long> first_natural_root(const PolyQ& p) {
    if (p.is_zero() || p.is_constant()) return std::nullopt;
    Integer bound = ceil_int(cauchy_root_bound(p));
    if (bound > 10000000)
        throw Error("natural root scan bound too large");
    unsigned long b = bound.convert_to<unsigned long>();
    for (unsigned long m = 0; m <= b; ++m)
        if (p.eval(Rational(Integer(m))) == 0) return m;
    return std::nullopt;
}

PolyQ negate_roots_monic(const PolyQ& p) {
    return p.compose_affine(Rational(-1), Rational(0)).monic();
}

} // namespace hypalg
