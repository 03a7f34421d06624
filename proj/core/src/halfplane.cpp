#include "ecmf/halfplane.hpp"

#include <cmath>

#include "ecmf/errors.hpp"

namespace ecmf {

namespace {

constexpr int kMaxReductionSteps = 10000;
constexpr double kBoundaryTol = 1e-12;

std::complex<double> to_complex(const IntMat2& m, const std::complex<double>& z) {
    const double a = to_double(m.a), b = to_double(m.b);
    const double c = to_double(m.c), d = to_double(m.d);
    return (a * z + b) / (c * z + d);
}

// Prepend one step to the word being accumulated (steps apply left to right
// in application order, so the newest matrix goes on the left).
void prepend(std::string& word, const std::string& step) {
    if (word.empty()) word = step;
    else word = step + "*" + word;
}

} // namespace

UpperHalfPoint::UpperHalfPoint(double re_, double im_) : re(re_), im(im_) {
    if (!(im > 0.0))
        throw DomainError("UpperHalfPoint: imaginary part must be positive");
}

std::complex<double> j_factor(const IntMat2& alpha, const UpperHalfPoint& z) {
    return to_double(alpha.c) * z.value() + to_double(alpha.d);
}

UpperHalfPoint mobius_apply(const IntMat2& gamma, const UpperHalfPoint& z) {
    if (gamma.det() != 1)
        throw DomainError("mobius_apply: matrix is not in SL2(Z)");
    const std::complex<double> w = to_complex(gamma, z.value());
    return {w.real(), w.imag()};
}

FundamentalReduction fundamental_reduce(const UpperHalfPoint& z0) {
    std::complex<double> z = z0.value();
    IntMat2 gamma = IntMat2::identity();
    std::string word;

    int steps = 0;
    for (;;) {
        if (++steps > kMaxReductionSteps)
            throw DomainError("fundamental_reduce: iteration cap exceeded");

        // Translate into Re in [-1/2, 1/2).
        const double n = std::floor(z.real() + 0.5);
        if (std::abs(n) > 9e15)
            throw DomainError("fundamental_reduce: real part too large");
        if (n != 0.0) {
            z -= n;
            const BigInt ni(static_cast<long long>(n));
            gamma = IntMat2::T(-ni) * gamma;
            prepend(word, "T^" + BigInt(-ni).str());
        }
        if (std::norm(z) < 1.0 - kBoundaryTol) {
            z = -1.0 / z;
            gamma = IntMat2::S() * gamma;
            prepend(word, "S");
            continue;
        }
        break;
    }

    // Boundary ties: on the unit circle prefer Re <= 0, and on the vertical
    // edges prefer Re = -1/2.
    if (std::abs(std::norm(z) - 1.0) <= kBoundaryTol && z.real() > kBoundaryTol) {
        z = -1.0 / z;
        gamma = IntMat2::S() * gamma;
        prepend(word, "S");
    }
    if (z.real() >= 0.5 - kBoundaryTol) {
        z -= 1.0;
        gamma = IntMat2::T(-1) * gamma;
        prepend(word, "T^-1");
    }

    if (word.empty()) word = "I";
    return {UpperHalfPoint{z.real(), z.imag()}, gamma, word};
}

} // namespace ecmf
