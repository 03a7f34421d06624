#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ecmf/bigint.hpp"

namespace ecmf {

// A primitive Pythagorean triple with its generators.
struct PythagTriple {
    BigInt x, y, z; // even leg, odd leg, hypotenuse
    BigInt a, b;    // x = 2ab, y = a^2 - b^2, z = a^2 + b^2
};

// Requires a > b > 0, gcd(a, b) = 1, a + b odd; violations are reported
// individually in the error message.
PythagTriple pythag_param(const BigInt& a, const BigInt& b);

struct ExponentReduction {
    enum class Kind { Four, OddPrime };
    Kind kind;
    BigInt p;              // the odd prime divisor (OddPrime only)
    BigInt cofactor;       // r with n = p * r, or 2^{k-2} for the Four case
    std::string witness;   // the substitution that rewrites x^n
};

// Any exponent n > 2 reduces to n = 4 or to an odd prime: powers of two
// via (x^{2^{k-2}})^4, everything else via (x^r)^p with p the smallest odd
// prime factor.
ExponentReduction exponent_reduce(const BigInt& n);

// Exhaustive scan of 1 <= x <= y <= bound for squares among x^4 + y^4;
// the returned list is empty. bound <= 10^4.
std::vector<std::pair<long, long>> n4_search(long bound);

struct EisensteinLemmaReport {
    long range = 0;
    long checked = 0;
    bool residues_ok = false;   // every w is 0 or +-1 mod lambda
    bool cubes_ok = false;      // lambda^4 | w^3 -+ 1 whenever lambda does not divide w
    bool three_unit_ok = false; // 3 / lambda^2 is a unit
};

// Brute-force verification of the Z[rho] lemmas over |a|, |b| <= range
// (range <= 50). A counterexample aborts with the witness; it would mean
// the Eisenstein arithmetic itself is broken.
EisensteinLemmaReport eisenstein_lemma_check(long range);

struct AbcQuality {
    BigInt rad;
    double q; // log c / log rad
};

// For coprime positive a + b = c.
AbcQuality abc_quality(const BigInt& a, const BigInt& b, const BigInt& c);

// Largest n with z^n <= rad(xyz)^{3/2}, i.e. z^{2n} <= rad(xyz)^3 exactly.
// The K = 1 constant is illustrative only, not a theorem.
long flt_exponent_bound(const BigInt& x, const BigInt& y, const BigInt& z);

struct AbcScanRow {
    BigInt a, b, c, rad;
    double q;
};

// Every coprime a + b = c with a <= b and c <= cmax, sorted by quality
// descending (ties by c then a ascending).
std::vector<AbcScanRow> abc_quality_scan(long cmax);

// CSV with header "a,b,c,rad,q".
std::string abc_scan_csv(const std::vector<AbcScanRow>& rows);

} // namespace ecmf
