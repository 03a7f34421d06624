#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ecmf {

// Exact arithmetic used throughout. Frey discriminants (abc)^{2P} overflow
// machine words immediately, so every integer that can grow is a BigInt.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const BigRat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const BigRat& r) { return den(r) == 1; }

inline BigInt pow_int(BigInt base, unsigned long exp) {
    BigInt result(1);
    while (exp) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

inline BigRat pow_rat(const BigRat& base, unsigned long exp) {
    BigRat result(1);
    BigRat b = base;
    unsigned long e = exp;
    while (e) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

// Floor of the square root of a nonnegative integer.
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    if (n == 0) return 0;
    BigInt x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = isqrt(n);
    return r * r == n;
}

inline std::string to_string(const BigInt& n) { return n.str(); }

inline std::string to_string(const BigRat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline double to_double(const BigInt& n) { return n.convert_to<double>(); }
inline double to_double(const BigRat& r) { return r.convert_to<double>(); }

} // namespace ecmf
