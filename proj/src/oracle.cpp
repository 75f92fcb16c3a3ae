#include "hypalg/oracle.hpp"

#include <algorithm>

#include "hypalg/numutil.hpp"
#include "hypalg/transform.hpp"

namespace hypalg {

SeriesPrefix coefficients(const HypergeomSpec& spec, unsigned long m) {
    HypergeomSpec canon = cancel_common(spec);
    SeriesPrefix prefix;
    prefix.spec_ref = spec;
    prefix.coefficients.reserve(m);
    if (m == 0) return prefix;
    Rational u = canon.leading_value;
    prefix.coefficients.push_back(u);
    for (unsigned long n = 0; n + 1 < m; ++n) {
        Rational dn = canon.d_poly.eval(Rational(Integer(n)));
        if (dn == 0) {
            if (u != 0)
                throw IllDefinedError(
                    "denominator vanishes at n = " + std::to_string(n) +
                    " before the series truncates");
            prefix.coefficients.emplace_back(0);
            continue;
        }
        u = u * canon.scale * canon.c_poly.eval(Rational(Integer(n))) / dn;
        prefix.coefficients.push_back(u);
    }
    return prefix;
}

std::set<Integer> denominator_primes(const SeriesPrefix& prefix) {
    std::set<Integer> primes;
    for (const auto& u : prefix.coefficients) {
        Integer d = den(u);
        if (d == 1) continue;
        for (const auto& p : prime_divisors(d)) primes.insert(p);
    }
    return primes;
}

std::string BivariatePolyQ::to_string() const {
    std::string out;
    for (unsigned long i = 0; i <= dx; ++i)
        for (unsigned long j = 0; j <= dy; ++j) {
            const Rational& c = at(i, j);
            if (c == 0) continue;
            Rational mag = c < 0 ? Rational(-c) : c;
            std::string term;
            if (mag != 1 || (i == 0 && j == 0))
                term = to_pretty_string(mag);
            if (i > 0) {
                if (!term.empty()) term += "*";
                term += i == 1 ? "x" : "x^" + std::to_string(i);
            }
            if (j > 0) {
                if (!term.empty()) term += "*";
                term += j == 1 ? "y" : "y^" + std::to_string(j);
            }
            if (out.empty())
                out = (c < 0 ? "-" : "") + term;
            else
                out += (c < 0 ? " - " : " + ") + term;
        }
    return out.empty() ? "0" : out;
}

namespace {

std::vector<std::vector<Rational>> truncated_powers(
    const std::vector<Rational>& f, unsigned long dy, std::size_t len) {
    std::vector<std::vector<Rational>> pw(dy + 1,
                                          std::vector<Rational>(len));
    pw[0][0] = 1;
    for (unsigned long j = 1; j <= dy; ++j)
        for (std::size_t a = 0; a < len; ++a) {
            if (pw[j - 1][a] == 0) continue;
            for (std::size_t b = 0; a + b < len && b < f.size(); ++b)
                pw[j][a + b] += pw[j - 1][a] * f[b];
        }
    return pw;
}

// --- modular fast path ------------------------------------------------

constexpr std::uint64_t kPrimes[] = {2147483647ULL, 2147483629ULL,
                                     2147483587ULL};

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_of(const Integer& n, std::uint64_t p) {
    Integer m = n % Integer(p);
    if (m < 0) m += Integer(p);
    return m.convert_to<std::uint64_t>();
}

// Rational mod p; false if the denominator is divisible by p.
bool mod_of(const Rational& q, std::uint64_t p, std::uint64_t& out) {
    std::uint64_t d = mod_of(den(q), p);
    if (d == 0) return false;
    out = mod_of(num(q), p) * mod_pow(d, p - 2, p) % p;
    return true;
}

// Rank of the guessing matrix mod p; false if p divides some denominator.
bool modular_rank(const std::vector<Rational>& f, unsigned long dx,
                  unsigned long dy, std::size_t len, std::uint64_t p,
                  std::size_t& rank_out) {
    std::vector<std::uint64_t> fp(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!mod_of(f[i], p, fp[i])) return false;

    std::vector<std::vector<std::uint64_t>> pw(
        dy + 1, std::vector<std::uint64_t>(len, 0));
    pw[0][0] = 1;
    for (unsigned long j = 1; j <= dy; ++j)
        for (std::size_t a = 0; a < len; ++a) {
            if (pw[j - 1][a] == 0) continue;
            for (std::size_t b = 0; a + b < len && b < fp.size(); ++b)
                pw[j][a + b] =
                    (pw[j][a + b] + pw[j - 1][a] * fp[b]) % p;
        }

    std::size_t cols = (dx + 1) * (dy + 1);
    std::vector<std::vector<std::uint64_t>> m(
        len, std::vector<std::uint64_t>(cols, 0));
    for (std::size_t n = 0; n < len; ++n)
        for (unsigned long i = 0; i <= dx; ++i) {
            if (i > n) continue;
            for (unsigned long j = 0; j <= dy; ++j)
                m[n][i * (dy + 1) + j] = pw[j][n - i];
        }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < len; ++col) {
        std::size_t sel = rank;
        while (sel < len && m[sel][col] == 0) ++sel;
        if (sel == len) continue;
        std::swap(m[rank], m[sel]);
        std::uint64_t inv = mod_pow(m[rank][col], p - 2, p);
        for (std::size_t c = col; c < cols; ++c)
            m[rank][c] = m[rank][c] * inv % p;
        for (std::size_t r = 0; r < len; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            std::uint64_t f2 = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = (m[r][c] + (p - f2) * m[rank][c]) % p;
        }
        ++rank;
    }
    rank_out = rank;
    return true;
}

} // namespace

bool annihilates(const BivariatePolyQ& poly,
                 const std::vector<Rational>& prefix) {
    auto pw = truncated_powers(prefix, poly.dy, prefix.size());
    for (std::size_t n = 0; n < prefix.size(); ++n) {
        Rational acc(0);
        for (unsigned long i = 0; i <= poly.dx && i <= n; ++i)
            for (unsigned long j = 0; j <= poly.dy; ++j)
                acc += poly.at(i, j) * pw[j][n - i];
        if (acc != 0) return false;
    }
    return true;
}

std::optional<BivariatePolyQ> guess_annihilator(const SeriesPrefix& prefix,
                                                unsigned long dx,
                                                unsigned long dy) {
    const auto& f = prefix.coefficients;
    const std::size_t len = f.size();
    const std::size_t cols = (dx + 1) * (dy + 1);
    if (len < cols + 10)
        throw InsufficientTermsError(
            "guessing at bidegree (" + std::to_string(dx) + "," +
            std::to_string(dy) + ") needs at least " +
            std::to_string(cols + 10) + " terms, got " + std::to_string(len));

    // A full-column-rank reduction mod p certifies full rank over Q, which
    // settles absence without exact elimination.
    for (std::uint64_t p : kPrimes) {
        std::size_t rank = 0;
        if (!modular_rank(f, dx, dy, len, p, rank)) continue;
        if (rank == cols) return std::nullopt;
        break;
    }

    // Exact reduced row echelon form over Q.
    auto pw = truncated_powers(f, dy, len);
    std::vector<std::vector<Rational>> m(len, std::vector<Rational>(cols));
    for (std::size_t n = 0; n < len; ++n)
        for (unsigned long i = 0; i <= dx && i <= n; ++i)
            for (unsigned long j = 0; j <= dy; ++j)
                m[n][i * (dy + 1) + j] = pw[j][n - i];

    std::vector<std::size_t> pivot_col;
    std::vector<std::size_t> free_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t sel = rank;
        while (sel < len && m[sel][col] == 0) ++sel;
        if (sel == len) {
            free_cols.push_back(col);
            continue;
        }
        std::swap(m[rank], m[sel]);
        Rational inv = Rational(1) / m[rank][col];
        for (std::size_t c = col; c < cols; ++c) m[rank][c] *= inv;
        for (std::size_t r = 0; r < len; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= factor * m[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
        if (rank == len) {
            for (std::size_t c = col + 1; c < cols; ++c)
                free_cols.push_back(c);
            break;
        }
    }
    if (free_cols.empty()) return std::nullopt;

    // Kernel vector for the first free column.
    std::size_t f0 = free_cols.front();
    std::vector<Rational> x(cols, Rational(0));
    x[f0] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        if (pivot_col[r] < f0) x[pivot_col[r]] = -m[r][f0];

    // Primitive integer normalization, first nonzero coefficient positive.
    Integer denlcm = 1;
    for (const auto& v : x) denlcm = lcm(denlcm, den(v));
    Integer content = 0;
    for (auto& v : x) {
        v *= Rational(denlcm);
        content = gcd(content, num(v));
    }
    for (auto& v : x) v /= Rational(content);
    for (const auto& v : x) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& w : x) w = -w;
        break;
    }

    BivariatePolyQ poly;
    poly.dx = dx;
    poly.dy = dy;
    poly.coeff = std::move(x);
    if (!annihilates(poly, f))
        throw Error("internal: guessed kernel element fails re-verification");
    return poly;
}

namespace {

PolyQ poly_from_parameters(const std::vector<Rational>& params) {
    PolyQ p = PolyQ::constant(Rational(1));
    for (const auto& a : params) p = p * PolyQ::linear_factor(a);
    return p;
}

std::vector<Rational> residual_impl(const HypergeomSpec& spec,
                                    const std::vector<Rational>& u) {
    HypergeomSpec canon = cancel_common(spec);
    PolyQ c = canon.c_poly, d = canon.d_poly;
    // For rational parameters, rebuild the operator factors from the
    // parameter lists themselves; this exercises the Euler-operator
    // expansion rather than reusing the stored polynomials.
    if (auto params = has_rational_parameters(canon.pair())) {
        c = poly_from_parameters(params->first);
        d = poly_from_parameters(params->second);
    }
    // Fold the argument scale into the variable: v_n = u_n / scale^n.
    std::vector<Rational> residual;
    if (u.size() < 2) return residual;
    Rational spow(1);
    std::vector<Rational> v(u.size());
    for (std::size_t n = 0; n < u.size(); ++n) {
        v[n] = u[n] / spow;
        spow *= canon.scale;
    }
    residual.reserve(u.size() - 1);
    for (std::size_t n = 1; n < u.size(); ++n) {
        Rational t(Integer(n - 1));
        residual.push_back(c.eval(t) * v[n - 1] - d.eval(t) * v[n]);
    }
    return residual;
}

} // namespace

std::vector<Rational> ode_residual(const HypergeomSpec& spec,
                                   unsigned long m) {
    return residual_impl(spec, coefficients(spec, m).coefficients);
}

std::vector<Rational> ode_residual_on_prefix(
    const HypergeomSpec& spec, const std::vector<Rational>& prefix) {
    return residual_impl(spec, prefix);
}

} // namespace hypalg
