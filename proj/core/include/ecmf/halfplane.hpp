#pragma once

#include <complex>
#include <string>

#include "ecmf/mat2.hpp"

namespace ecmf {

// A point of the upper half plane; Im(z) > 0 is enforced at construction.
struct UpperHalfPoint {
    UpperHalfPoint(double re, double im);

    double re;
    double im;

    std::complex<double> value() const { return {re, im}; }
};

// j(alpha, z) = c z + d.
std::complex<double> j_factor(const IntMat2& alpha, const UpperHalfPoint& z);

// (a z + b) / (c z + d) for gamma in SL2(Z); the image stays in the half plane.
UpperHalfPoint mobius_apply(const IntMat2& gamma, const UpperHalfPoint& z);

struct FundamentalReduction {
    UpperHalfPoint point;   // the representative in the fundamental domain
    IntMat2 gamma;          // gamma * z = point
    std::string word;       // gamma as the applied sequence of S and T powers
};

// Translate by T and invert by S until |Re| <= 1/2 and |z| >= 1, with the
// canonical boundary choices Re in [-1/2, 1/2) and, on the unit circle,
// Re <= 0. Iteration is capped; the cap is never reached for valid input.
FundamentalReduction fundamental_reduce(const UpperHalfPoint& z);

} // namespace ecmf
