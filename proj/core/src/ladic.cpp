#include "ecmf/ladic.hpp"

#include "ecmf/errors.hpp"
#include "ecmf/primes.hpp"

namespace ecmf {

namespace {

BigInt reduce(const BigInt& v, const BigInt& mod) {
    BigInt r = v % mod;
    if (r < 0) r += mod;
    return r;
}

} // namespace

LAdicTrunc::LAdicTrunc(BigInt prime, std::vector<BigInt> digits)
    : prime_(std::move(prime)), digits_(std::move(digits)) {
    if (!is_prime(prime_)) throw NonPrimeModulus("LAdicTrunc: l must be prime");
    if (digits_.empty()) throw DomainError("LAdicTrunc: depth must be positive");
    BigInt mod = 1;
    for (auto& d : digits_) {
        mod *= prime_;
        d = reduce(d, mod);
    }
    if (!compatible())
        throw DomainError("LAdicTrunc: digits violate a_n = a_{n+1} mod l^n");
}

LAdicTrunc LAdicTrunc::embed(const BigInt& prime, unsigned depth, const BigInt& value) {
    if (depth == 0) throw DomainError("LAdicTrunc: depth must be positive");
    std::vector<BigInt> digits(depth, value);
    return LAdicTrunc(prime, std::move(digits));
}

const BigInt& LAdicTrunc::digit(unsigned n) const {
    if (n == 0 || n > depth()) throw DomainError("LAdicTrunc: level out of range");
    return digits_[n - 1];
}

LAdicTrunc LAdicTrunc::operator+(const LAdicTrunc& o) const {
    if (prime_ != o.prime_ || depth() != o.depth())
        throw DomainError("LAdicTrunc: mismatched prime or depth");
    LAdicTrunc out;
    out.prime_ = prime_;
    BigInt mod = 1;
    for (unsigned i = 0; i < depth(); ++i) {
        mod *= prime_;
        out.digits_.push_back(reduce(digits_[i] + o.digits_[i], mod));
    }
    return out;
}

LAdicTrunc LAdicTrunc::operator*(const LAdicTrunc& o) const {
    if (prime_ != o.prime_ || depth() != o.depth())
        throw DomainError("LAdicTrunc: mismatched prime or depth");
    LAdicTrunc out;
    out.prime_ = prime_;
    BigInt mod = 1;
    for (unsigned i = 0; i < depth(); ++i) {
        mod *= prime_;
        out.digits_.push_back(reduce(digits_[i] * o.digits_[i], mod));
    }
    return out;
}

bool LAdicTrunc::compatible() const {
    BigInt mod = 1;
    for (unsigned i = 0; i + 1 < digits_.size(); ++i) {
        mod *= prime_;
        if (reduce(digits_[i + 1], mod) != digits_[i]) return false;
    }
    return true;
}

} // namespace ecmf
