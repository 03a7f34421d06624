#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ecmf/bigint.hpp"

namespace ecmf {

// Trial-division bound: factorization is complete for |n| <= kFactorLimit.
// That covers every desk-scale quantity in this library; anything beyond it
// raises FactorizationLimit instead of silently returning partial factors.
inline constexpr std::int64_t kFactorLimit = 1'000'000'000'000; // 10^12

bool is_prime(const BigInt& n);

// (prime, exponent) pairs in ascending prime order; n must be nonzero.
std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n);

std::vector<BigInt> divisors(const BigInt& n);

// Product of the distinct primes dividing n; radical(1) = 1.
BigInt radical(const BigInt& n);

BigInt euler_phi(const BigInt& n);

std::vector<std::int64_t> primes_up_to(std::int64_t bound);

// Legendre symbol with the convention that every value at p = 2 is 0 (the
// convention the cusp-form dimension formula uses). Rejects non-prime p.
int legendre_symbol(const BigInt& a, const BigInt& p);

// Plain square detection mod p for any prime p, 2 included. Used to decide
// split vs nonsplit multiplicative reduction, where the p = 2 convention
// above would erase the sign.
bool is_quadratic_residue(const BigInt& a, const BigInt& p);

BigInt mod_pow(BigInt base, BigInt exp, const BigInt& mod);

// Inverse of a mod m; gcd(a, m) must be 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

} // namespace ecmf
