#pragma once

#include <string>
#include <vector>

#include "ecmf/bigint.hpp"
#include "ecmf/weierstrass.hpp"

namespace ecmf {

enum class ReductionType { Good, MultiplicativeSplit, MultiplicativeNonsplit, Additive };

std::string reduction_type_name(ReductionType t);

bool is_multiplicative(ReductionType t);

// Classify the reduction of the curve mod p by the root pattern of its
// cubic: good when the roots stay distinct, multiplicative when exactly two
// coincide, additive when all three do. Split vs nonsplit is decided by
// whether x0 - x1 (double root minus simple root) is a square mod p.
//
// For p >= 5 the model only needs p-integral coefficients (the square is
// completed mod p); for p in {2, 3} the model must already be y^2 = cubic
// with p-integral coefficients. At p >= 5 the outcome agrees with the
// criterion "additive iff p | c4" at bad primes.
ReductionType reduction_type(const WeierstrassModel& m, const BigInt& p);

struct BadPrime {
    BigInt p;
    ReductionType type;
    unsigned exponent; // f_p
};

// Bad primes with conductor exponents f_p: 1 for multiplicative, 2 for
// additive at p >= 5. Additive reduction at 2 or 3 is rejected (the delta_p
// correction is out of scope). Requires an integral y^2 = cubic model.
std::vector<BadPrime> bad_primes(const WeierstrassModel& m);

BigInt conductor(const WeierstrassModel& m);

bool is_semistable(const WeierstrassModel& m);

struct FreyData {
    BigInt a, b, c;
    unsigned P;
    WeierstrassModel model; // y^2 = x (x - a^P)(x + b^P)
    BigInt delta;           // (abc)^{2P}, cross-checked against the root formula
    BigInt conductor;       // rad(abc)
    bool semistable;        // verified at every bad prime
};

// Builds the curve attached to a^P + b^P = c^P. The identity, pairwise
// coprimality and abc != 0 are all enforced; semistability is verified by
// reduction_type at every prime dividing abc.
FreyData frey_curve(const BigInt& a, const BigInt& b, const BigInt& c, unsigned P);

} // namespace ecmf
