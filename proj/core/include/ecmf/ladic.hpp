#pragma once

#include <vector>

#include "ecmf/bigint.hpp"

namespace ecmf {

// A truncated l-adic integer: digits (a_1, ..., a_depth) with a_n in Z/l^n Z
// and a_n = a_{n+1} mod l^n. Finite truncations of the inverse limit are all
// the tests here ever need; there is no lazy/infinite representation.
class LAdicTrunc {
public:
    LAdicTrunc(BigInt prime, std::vector<BigInt> digits);

    static LAdicTrunc embed(const BigInt& prime, unsigned depth, const BigInt& value);

    const BigInt& prime() const { return prime_; }
    unsigned depth() const { return static_cast<unsigned>(digits_.size()); }
    const std::vector<BigInt>& digits() const { return digits_; }

    // Component at level n (1-based), i.e. the value mod l^n.
    const BigInt& digit(unsigned n) const;

    LAdicTrunc operator+(const LAdicTrunc& o) const;
    LAdicTrunc operator*(const LAdicTrunc& o) const;

    bool operator==(const LAdicTrunc& o) const {
        return prime_ == o.prime_ && digits_ == o.digits_;
    }

    bool compatible() const;

private:
    LAdicTrunc() = default;

    BigInt prime_;
    std::vector<BigInt> digits_;
};

} // namespace ecmf
