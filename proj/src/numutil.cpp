#include "hypalg/numutil.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <numeric>

namespace hypalg {

namespace {

Integer abs_int(Integer n) { return n < 0 ? Integer(-n) : n; }

bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

// Pollard rho (Brent variant). Expects n composite, odd, > 1.
Integer pollard_rho(const Integer& n) {
    Integer c = 1;
    while (true) {
        Integer x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x > y ? Integer(x - y) : Integer(y - x);
            if (diff == 0) break;
            d = gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
        ++c;
    }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::map<Integer, unsigned> factor_integer(Integer n) {
    n = abs_int(n);
    if (n == 0) throw Error("factor_integer: zero has no factorization");
    std::map<Integer, unsigned> out;
    for (Integer p : {Integer(2), Integer(3), Integer(5)}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    // wheel over 6k+-1 up to a fixed trial bound
    for (Integer p = 7; p <= 1000000 && p * p <= n; p += 4) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
        p += 2;
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) factor_into(n, out);
    return out;
}

std::vector<Integer> divisors(const Integer& n, std::size_t limit) {
    auto fac = factor_integer(n);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        if (base * (e + 1) > limit)
            throw Error("divisors: divisor count exceeds limit");
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

std::set<Integer> prime_divisors(const Integer& n) {
    std::set<Integer> out;
    if (abs_int(n) <= 1) return out;
    for (const auto& [p, e] : factor_integer(n)) out.insert(p);
    return out;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

} // namespace hypalg
