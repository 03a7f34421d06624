#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ecmf/bigint.hpp"
#include "ecmf/reduction.hpp"
#include "ecmf/weierstrass.hpp"

namespace ecmf {

// |E_p|: 1 (for the point at infinity) + sum over x mod p of
// 1 + chi(f(x)), where y^2 = f(x) is the reduced curve. Naive O(p) scan.
// Requires p >= 5 and a p-integral model.
std::uint64_t count_points(const WeierstrassModel& m, const BigInt& p);

// A_p: good reduction p + 1 - |E_p| (needs p >= 5); additive 0;
// multiplicative +1 split / -1 nonsplit (any p).
std::int64_t ap(const WeierstrassModel& m, const BigInt& p);

// A_{p^k} via the recurrence A_p A_{p^{k-1}} - p A_{p^{k-2}} at good primes
// and A_p A_{p^{k-1}} at bad ones; A_{p^0} = 1.
BigInt ap_prime_power(const WeierstrassModel& m, const BigInt& p, unsigned k);

// A_n multiplicatively over the prime powers of n.
BigInt an(const WeierstrassModel& m, const BigInt& n);

struct ApTable {
    std::string model;
    std::int64_t nmax = 0;
    std::map<std::int64_t, BigInt> a;      // missing keys were not computable
    std::vector<std::int64_t> skipped;     // n whose A_n needs counting at 2 or 3
    std::vector<std::string> warnings;     // Hasse-bound guard, never fatal
};

// Primes may be evaluated concurrently by callers; assembly here is a plain
// ascending scan, so the output is deterministic either way.
ApTable build_ap_table(const WeierstrassModel& m, std::int64_t nmax);

// CSV with header "n,a_n", rows ascending.
std::string ap_table_csv(const ApTable& table);

// a_p = -sum_x chi(x (x - a^P)(x + b^P)) at a good prime p; must equal
// ap() on the same curve.
std::int64_t frey_ap_formula(const FreyData& f, const BigInt& p);

} // namespace ecmf
