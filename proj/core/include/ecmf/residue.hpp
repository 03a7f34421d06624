#pragma once

#include "ecmf/bigint.hpp"
#include "ecmf/errors.hpp"
#include "ecmf/primes.hpp"

namespace ecmf {

// An element of Z/mZ, stored as the canonical representative in [0, m).
class ResidueInt {
public:
    ResidueInt(BigInt value, BigInt modulus) : m_(std::move(modulus)) {
        if (m_ <= 0) throw DomainError("ResidueInt: modulus must be positive");
        v_ = value % m_;
        if (v_ < 0) v_ += m_;
    }

    const BigInt& value() const { return v_; }
    const BigInt& modulus() const { return m_; }

    ResidueInt operator+(const ResidueInt& o) const { return {v_ + check(o).v_, m_}; }
    ResidueInt operator-(const ResidueInt& o) const { return {v_ - check(o).v_, m_}; }
    ResidueInt operator*(const ResidueInt& o) const { return {v_ * check(o).v_, m_}; }
    ResidueInt operator-() const { return {-v_, m_}; }

    ResidueInt inverse() const { return {mod_inverse(v_, m_), m_}; }
    ResidueInt operator/(const ResidueInt& o) const { return *this * check(o).inverse(); }
    ResidueInt pow(const BigInt& e) const { return {mod_pow(v_, e, m_), m_}; }

    bool operator==(const ResidueInt& o) const { return m_ == o.m_ && v_ == o.v_; }
    bool operator!=(const ResidueInt& o) const { return !(*this == o); }

private:
    const ResidueInt& check(const ResidueInt& o) const {
        if (o.m_ != m_) throw DomainError("ResidueInt: mismatched moduli");
        return o;
    }

    BigInt v_;
    BigInt m_;
};

} // namespace ecmf
