#pragma once

/// Small integer-theoretic utilities shared by the polynomial layer and the
/// verification oracles: factorization, divisor enumeration, totients.

#include <map>
#include <set>
#include <vector>

#include "hypalg/rational.hpp"

namespace hypalg {

/// Prime factorization of |n| for n != 0. Trial division backed by
/// Miller-Rabin plus Pollard rho for any large cofactor.
std::map<Integer, unsigned> factor_integer(Integer n);

/// All positive divisors of |n|, unsorted. Throws Error if there are more
/// than `limit` of them.
std::vector<Integer> divisors(const Integer& n, std::size_t limit = 200000);

/// Set of primes dividing |n| (n != 0).
std::set<Integer> prime_divisors(const Integer& n);

unsigned long euler_phi(unsigned long n);

} // namespace hypalg
