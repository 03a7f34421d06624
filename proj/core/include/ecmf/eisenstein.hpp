#pragma once

#include <array>
#include <optional>
#include <string>

#include "ecmf/bigint.hpp"

namespace ecmf {

// a + b*rho with rho = e^{2*pi*i/3}, so rho^2 = -1 - rho. The norm
// a^2 - a*b + b^2 is nonnegative and vanishes only at zero.
class EisensteinInt {
public:
    EisensteinInt() : a_(0), b_(0) {}
    EisensteinInt(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    EisensteinInt operator+(const EisensteinInt& o) const { return {a_ + o.a_, b_ + o.b_}; }
    EisensteinInt operator-(const EisensteinInt& o) const { return {a_ - o.a_, b_ - o.b_}; }
    EisensteinInt operator-() const { return {-a_, -b_}; }

    // (a + b rho)(c + d rho) = ac - bd + (ad + bc - bd) rho
    EisensteinInt operator*(const EisensteinInt& o) const {
        return {a_ * o.a_ - b_ * o.b_, a_ * o.b_ + b_ * o.a_ - b_ * o.b_};
    }

    bool operator==(const EisensteinInt& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const EisensteinInt& o) const { return !(*this == o); }

    // conj(a + b rho) = a + b rho^2 = (a - b) - b rho
    EisensteinInt conj() const { return {a_ - b_, -b_}; }

    BigInt norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
    bool is_unit() const { return norm() == 1; }

    std::string str() const;

    static EisensteinInt rho() { return {0, 1}; }
    static EisensteinInt lambda() { return {1, -1}; } // 1 - rho, the prime above 3

    // The six units of Z[rho]: +-1, +-rho, +-rho^2.
    static const std::array<EisensteinInt, 6>& units();

private:
    BigInt a_, b_;
};

// Quotient alpha/beta when beta divides alpha exactly, otherwise nullopt.
std::optional<EisensteinInt> eis_exact_div(const EisensteinInt& alpha, const EisensteinInt& beta);

bool eis_divides(const EisensteinInt& divisor, const EisensteinInt& value);

BigInt eis_norm(const EisensteinInt& alpha);

// Largest k with lambda^k dividing alpha; alpha must be nonzero.
unsigned eis_lambda_valuation(EisensteinInt alpha);

// Residue of alpha mod lambda as one of {-1, 0, +1}.
int eis_mod_lambda(const EisensteinInt& alpha);

} // namespace ecmf
