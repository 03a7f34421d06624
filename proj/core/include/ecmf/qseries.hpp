#pragma once

#include <string>
#include <vector>

#include "ecmf/bigint.hpp"

namespace ecmf {

// Truncated power/Laurent series in q with exact rational coefficients.
// Coefficients run from q^lowest (lowest in {-1, 0, 1}) up to q^{prec-1};
// prec is the exclusive truncation order.
class QSeries {
public:
    QSeries(int weight, long lowest, long prec, std::vector<BigRat> coeffs);

    static QSeries zero(int weight, long prec);

    int weight() const { return weight_; }
    long lowest() const { return lowest_; }
    long prec() const { return prec_; }
    const std::vector<BigRat>& coeffs() const { return c_; }

    // Coefficient of q^n; zero outside the stored window (n < lowest),
    // error past the truncation order.
    BigRat coeff(long n) const;

    bool is_cusp_form() const { return lowest_ >= 1 || coeff(0) == 0; }

    QSeries with_weight(int weight) const;

    // Raise `lowest` past leading zero coefficients (capped at 1).
    QSeries trimmed() const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries scaled(const BigRat& s) const;
    QSeries pow(unsigned e) const;

    // Exact series division; the divisor's leading coefficient must be
    // nonzero. Weights subtract; precision follows the shorter operand.
    QSeries divided_by(const QSeries& o) const;

    // Equality of the overlapping coefficient window (weights must match).
    bool agrees_with(const QSeries& o) const;

private:
    int weight_;
    long lowest_;
    long prec_;
    std::vector<BigRat> c_;
};

// sigma_k(n) = sum of d^k over divisors d of n.
BigInt sigma_k(const BigInt& n, unsigned k);

// Normalized Eisenstein series: E4 = 1 + 240 sum sigma_3(n) q^n (weight 4),
// E6 = 1 - 504 sum sigma_5(n) q^n (weight 6). Only k = 4, 6 exist here.
QSeries eisenstein_series(int k, long prec);

// Delta computed both as (E4^3 - E6^2)/1728 and as q prod (1 - q^i)^24;
// the two must agree coefficientwise or the build is broken.
QSeries delta_series(long prec);

// Ramanujan tau(n): the q^n coefficient of Delta.
BigInt tau(long n);

// j = E4^3 / Delta, a weight-zero Laurent series starting at q^{-1}.
QSeries j_series(long prec);

// Level-1 Hecke operator. The coefficient rule, derived from the
// upper-triangular coset representatives, is
//   a_m(T_n f) = sum over d | gcd(m, n) of d^{k-1} a_{mn/d^2}(f),
// with gcd(0, n) = n. Output precision is floor(prec(f)/n); inputs too
// short raise InsufficientPrecision carrying the required precision.
QSeries hecke_Tn(const QSeries& f, long n);

struct DimFormulaParts {
    BigInt N;
    BigInt mu0;
    BigInt mu02;
    BigInt mu03;
    BigInt c0;
    BigInt g0;
};

// dim S_2(Gamma_0(N)) = g_0(N) = 1 + mu0/12 - mu02/4 - mu03/3 - c0/2.
// A non-integral or negative g_0 signals an implementation bug.
DimFormulaParts dim_S2_gamma0(const BigInt& N);

} // namespace ecmf
