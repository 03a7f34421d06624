#pragma once

#include <string>
#include <vector>

#include "ecmf/bigint.hpp"
#include "ecmf/weierstrass.hpp"

namespace ecmf {

// Affine rational point or the point at infinity.
struct CurvePoint {
    bool infinity = true;
    BigRat x;
    BigRat y;

    static CurvePoint at_infinity() { return {}; }
    static CurvePoint affine(BigRat px, BigRat py) { return {false, std::move(px), std::move(py)}; }

    bool operator==(const CurvePoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }

    std::string str() const;
};

bool on_curve(const WeierstrassModel& m, const CurvePoint& p);

CurvePoint negate_point(const WeierstrassModel& m, const CurvePoint& p);

// Chord-tangent addition on y^2 = cubic models (a1 = a3 = 0). Off-curve
// inputs are rejected.
CurvePoint add_points(const WeierstrassModel& m, const CurvePoint& p, const CurvePoint& q);

CurvePoint scalar_mul(const WeierstrassModel& m, const BigInt& k, const CurvePoint& p);

enum class TorsionStructure { Trivial, Z2, Z2xZ2 };

struct TwoTorsion {
    std::vector<CurvePoint> points; // the point at infinity first
    TorsionStructure structure;
};

// E[2]: the point at infinity together with (r, 0) for each rational root r
// of the cubic.
TwoTorsion two_torsion(const WeierstrassModel& m);

// All rational roots of the monic cubic x^3 + a2 x^2 + a4 x + a6.
std::vector<BigRat> rational_cubic_roots(const BigRat& a2, const BigRat& a4, const BigRat& a6);

// The same chord-tangent law over any field type with +, -, *, / and ==;
// this is what add_points uses over the rationals, and tests exercise it
// over F_p through ResidueInt.
template <typename K>
struct AffinePoint {
    bool infinity;
    K x, y;

    static AffinePoint at_infinity(const K& model) { return {true, model, model}; }
    static AffinePoint affine(K px, K py) { return {false, std::move(px), std::move(py)}; }
};

template <typename K>
bool on_cubic(const K& a2, const K& a4, const K& a6, const AffinePoint<K>& p) {
    if (p.infinity) return true;
    return p.y * p.y == ((p.x + a2) * p.x + a4) * p.x + a6;
}

template <typename K>
AffinePoint<K> cubic_add(const K& a2, const K& a4, const K& /*a6*/, const AffinePoint<K>& p,
                         const AffinePoint<K>& q) {
    // a6 never enters the chord-tangent formulas once both points lie on
    // the curve; it stays in the signature so call sites name the curve.
    if (p.infinity) return q;
    if (q.infinity) return p;
    const K zero = p.x - p.x;
    K slope = zero;
    if (p.x == q.x) {
        if (p.y + q.y == zero) return AffinePoint<K>::at_infinity(zero);
        const K two = p.y / p.y + p.y / p.y;
        const K three = two + p.y / p.y;
        slope = (three * p.x * p.x + two * a2 * p.x + a4) / (two * p.y);
    } else {
        slope = (q.y - p.y) / (q.x - p.x);
    }
    const K xr = slope * slope - a2 - p.x - q.x;
    const K yr = zero - (p.y + slope * (xr - p.x));
    return AffinePoint<K>::affine(xr, yr);
}

} // namespace ecmf
