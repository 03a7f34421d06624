#pragma once

#include <string>
#include <vector>

#include "ecmf/bigint.hpp"

namespace ecmf {

// 2x2 integer matrix, row major.
struct IntMat2 {
    BigInt a, b, c, d;

    BigInt det() const { return a * d - b * c; }
    BigInt trace() const { return a + d; }

    IntMat2 operator*(const IntMat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    IntMat2 operator+(const IntMat2& o) const {
        return {a + o.a, b + o.b, c + o.c, d + o.d};
    }

    bool operator==(const IntMat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    // Inverse for det = +-1, the only case the library needs.
    IntMat2 unimodular_inverse() const;

    bool in_sl2() const { return det() == 1; }

    std::string str() const;

    static IntMat2 identity() { return {1, 0, 0, 1}; }
    static IntMat2 S() { return {0, -1, 1, 0}; }          // z -> -1/z
    static IntMat2 T(const BigInt& n = 1) { return {1, n, 0, 1}; } // z -> z + n
};

enum class SubgroupKind { GammaN, Gamma0N };

struct SubgroupSpec {
    SubgroupKind kind;
    BigInt level;

    static SubgroupSpec principal(BigInt n) { return {SubgroupKind::GammaN, std::move(n)}; }
    static SubgroupSpec gamma0(BigInt n) { return {SubgroupKind::Gamma0N, std::move(n)}; }
};

// Membership by the entrywise congruence test; gamma must have det 1.
bool subgroup_contains(const IntMat2& gamma, const SubgroupSpec& spec);

// Upper-triangular orbit representatives of SL2(Z)\M_n: all (a, b; 0, d)
// with ad = n, a, d > 0, 0 <= b < d. Their count is sum of divisors of n.
std::vector<IntMat2> coset_reps_Mn(const BigInt& n);

// Canonical representative of the SL2(Z)-orbit of m (det m > 0): the unique
// matrix of the shape coset_reps_Mn produces. Row reduction mirrors the
// Euclidean algorithm on the left-column entries.
IntMat2 hermite_reduce(IntMat2 m);

} // namespace ecmf
