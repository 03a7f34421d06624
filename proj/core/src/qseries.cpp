#include "ecmf/qseries.hpp"

#include <algorithm>

#include "ecmf/errors.hpp"
#include "ecmf/primes.hpp"

namespace ecmf {

QSeries::QSeries(int weight, long lowest, long prec, std::vector<BigRat> coeffs)
    : weight_(weight), lowest_(lowest), prec_(prec), c_(std::move(coeffs)) {
    if (lowest_ < -1 || lowest_ > 1)
        throw DomainError("QSeries: lowest must be in {-1, 0, 1}");
    if (prec_ <= lowest_) throw DomainError("QSeries: prec must exceed lowest");
    if (static_cast<long>(c_.size()) != prec_ - lowest_)
        throw DomainError("QSeries: coefficient count must equal prec - lowest");
}

QSeries QSeries::zero(int weight, long prec) {
    return QSeries(weight, 0, prec, std::vector<BigRat>(static_cast<std::size_t>(prec)));
}

BigRat QSeries::coeff(long n) const {
    if (n >= prec_)
        throw InsufficientPrecision("QSeries: coefficient past truncation order", n + 1);
    if (n < lowest_) return 0;
    return c_[static_cast<std::size_t>(n - lowest_)];
}

QSeries QSeries::with_weight(int weight) const { return QSeries(weight, lowest_, prec_, c_); }

QSeries QSeries::trimmed() const {
    long lo = lowest_;
    std::size_t drop = 0;
    while (lo < 1 && drop < c_.size() - 1 && c_[drop] == 0) { ++lo; ++drop; }
    return QSeries(weight_, lo, prec_, std::vector<BigRat>(c_.begin() + drop, c_.end()));
}

QSeries QSeries::operator+(const QSeries& o) const {
    if (weight_ != o.weight_)
        throw DomainError("QSeries: cannot add series of different weights");
    const long lo = std::min(lowest_, o.lowest_);
    const long pr = std::min(prec_, o.prec_);
    std::vector<BigRat> out(static_cast<std::size_t>(pr - lo));
    for (long n = lo; n < pr; ++n)
        out[static_cast<std::size_t>(n - lo)] = coeff(n) + o.coeff(n);
    return QSeries(weight_, lo, pr, std::move(out));
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + o.scaled(BigRat(-1)); }

QSeries QSeries::scaled(const BigRat& s) const {
    std::vector<BigRat> out(c_);
    for (auto& v : out) v *= s;
    return QSeries(weight_, lowest_, prec_, std::move(out));
}

QSeries QSeries::operator*(const QSeries& o) const {
    const long lo = lowest_ + o.lowest_;
    const long pr = std::min(prec_ + o.lowest_, o.prec_ + lowest_);
    if (lo < -1 || lo > 1)
        throw DomainError("QSeries: product lowest exponent out of range");
    std::vector<BigRat> out(static_cast<std::size_t>(pr - lo));
    for (long i = lowest_; i < prec_; ++i) {
        const BigRat& ci = c_[static_cast<std::size_t>(i - lowest_)];
        if (ci == 0) continue;
        const long jmax = std::min(o.prec_, pr - i);
        for (long j = o.lowest_; j < jmax; ++j) {
            const BigRat& cj = o.c_[static_cast<std::size_t>(j - o.lowest_)];
            if (cj == 0) continue;
            out[static_cast<std::size_t>(i + j - lo)] += ci * cj;
        }
    }
    return QSeries(weight_ + o.weight_, lo, pr, std::move(out));
}

QSeries QSeries::pow(unsigned e) const {
    if (e == 0) {
        std::vector<BigRat> one(static_cast<std::size_t>(prec_));
        one[0] = 1;
        return QSeries(0, 0, prec_, std::move(one));
    }
    // Square-and-multiply; only sound for lowest = 0 (otherwise the lowest
    // exponent would leave the representable range anyway).
    QSeries base = *this;
    QSeries acc = QSeries::zero(0, prec_);
    bool have_acc = false;
    unsigned rest = e;
    while (rest) {
        if (rest & 1) {
            acc = have_acc ? acc * base : base;
            have_acc = true;
        }
        rest >>= 1;
        if (rest) base = base * base;
    }
    return acc;
}

QSeries QSeries::divided_by(const QSeries& o) const {
    const BigRat lead = o.coeff(o.lowest_);
    if (lead == 0)
        throw DomainError("QSeries: divisor has zero leading coefficient");
    const long lq = lowest_ - o.lowest_;
    const long pr = std::min(prec_ - o.lowest_, o.prec_ + lq - o.lowest_);
    if (lq < -1 || lq > 1)
        throw DomainError("QSeries: quotient lowest exponent out of range");
    if (pr <= lq) throw InsufficientPrecision("QSeries: division needs more input terms", 0);
    std::vector<BigRat> q(static_cast<std::size_t>(pr - lq));
    for (long n = lq; n < pr; ++n) {
        BigRat acc = coeff(n + o.lowest_);
        for (long m = lq; m < n; ++m)
            acc -= q[static_cast<std::size_t>(m - lq)] * o.coeff(n + o.lowest_ - m);
        q[static_cast<std::size_t>(n - lq)] = acc / lead;
    }
    return QSeries(weight_ - o.weight_, lq, pr, std::move(q));
}

bool QSeries::agrees_with(const QSeries& o) const {
    if (weight_ != o.weight_) return false;
    const long lo = std::min(lowest_, o.lowest_);
    const long pr = std::min(prec_, o.prec_);
    for (long n = lo; n < pr; ++n)
        if (coeff(n) != o.coeff(n)) return false;
    return true;
}

BigInt sigma_k(const BigInt& n, unsigned k) {
    if (n <= 0) throw DomainError("sigma_k: n must be positive");
    BigInt out = 0;
    for (const BigInt& d : divisors(n)) out += pow_int(d, k);
    return out;
}

QSeries eisenstein_series(int k, long prec) {
    if (prec < 1) throw DomainError("eisenstein_series: prec must be >= 1");
    if (k != 4 && k != 6)
        throw DomainError("eisenstein_series: only k = 4 and k = 6 are defined");
    const BigInt scale = (k == 4) ? BigInt(240) : BigInt(-504);
    const unsigned power = static_cast<unsigned>(k - 1);
    std::vector<BigRat> c(static_cast<std::size_t>(prec));
    c[0] = 1;
    for (long n = 1; n < prec; ++n)
        c[static_cast<std::size_t>(n)] = BigRat(scale * sigma_k(BigInt(n), power));
    return QSeries(k, 0, prec, std::move(c));
}

namespace {

// q prod_{i>=1} (1 - q^i)^24, truncated exclusively at prec.
QSeries delta_eta_product(long prec) {
    // prod (1 - q^i) up to q^{prec-2}, then 24th power and a shift by q.
    const long inner = prec - 1;
    std::vector<BigRat> p(static_cast<std::size_t>(inner));
    p[0] = 1;
    for (long i = 1; i < inner; ++i)
        for (long n = inner - 1; n >= i; --n)
            p[static_cast<std::size_t>(n)] -= p[static_cast<std::size_t>(n - i)];
    QSeries base(0, 0, inner, std::move(p));
    QSeries pw = base.pow(24);
    std::vector<BigRat> shifted(static_cast<std::size_t>(prec - 1));
    for (long n = 0; n < pw.prec(); ++n)
        shifted[static_cast<std::size_t>(n)] = pw.coeff(n);
    return QSeries(12, 1, prec, std::move(shifted));
}

} // namespace

QSeries delta_series(long prec) {
    if (prec < 2) throw DomainError("delta_series: prec must be >= 2");
    const QSeries e4 = eisenstein_series(4, prec);
    const QSeries e6 = eisenstein_series(6, prec);
    const QSeries from_eis =
        (e4.pow(3) - e6.pow(2)).scaled(BigRat(1, 1728)).trimmed();
    const QSeries from_product = delta_eta_product(prec);
    if (!from_eis.agrees_with(from_product))
        throw InternalInconsistency("delta_series: (E4^3 - E6^2)/1728 and the "
                                    "q-product expansion disagree");
    for (long n = 1; n < prec; ++n)
        if (!is_integer(from_eis.coeff(n)))
            throw InternalInconsistency("delta_series: non-integer tau coefficient");
    return from_eis;
}

BigInt tau(long n) {
    if (n < 1) throw DomainError("tau: n must be positive");
    return num(delta_series(n + 1).coeff(n));
}

QSeries j_series(long prec) {
    if (prec < 0) throw DomainError("j_series: prec must be >= 0");
    // Division by Delta (lowest 1) costs two orders of precision.
    const long inner = prec + 2;
    const QSeries e4 = eisenstein_series(4, inner);
    return e4.pow(3).divided_by(delta_series(inner));
}

QSeries hecke_Tn(const QSeries& f, long n) {
    if (n < 1) throw DomainError("hecke_Tn: n must be positive");
    if (f.lowest() < 0)
        throw DomainError("hecke_Tn: Laurent input is not a modular form");
    const long out_prec = f.prec() / n;
    if (out_prec <= f.lowest())
        throw InsufficientPrecision("hecke_Tn: input precision too small",
                                    n * (f.lowest() + 1));
    const unsigned k = static_cast<unsigned>(f.weight());
    std::vector<BigRat> out(static_cast<std::size_t>(out_prec - f.lowest()));
    for (long m = f.lowest(); m < out_prec; ++m) {
        BigRat acc = 0;
        const BigInt g = (m == 0) ? BigInt(n) : gcd(BigInt(m), BigInt(n));
        for (const BigInt& d : divisors(g)) {
            const long dl = d.convert_to<long>();
            acc += BigRat(pow_int(d, k - 1)) * f.coeff(m * n / (dl * dl));
        }
        out[static_cast<std::size_t>(m - f.lowest())] = acc;
    }
    return QSeries(f.weight(), f.lowest(), out_prec, std::move(out));
}

DimFormulaParts dim_S2_gamma0(const BigInt& N) {
    if (N < 1) throw DomainError("dim_S2_gamma0: N must be >= 1");
    DimFormulaParts parts;
    parts.N = N;

    const auto fac = factorize(N);

    parts.mu0 = 1;
    for (const auto& [p, e] : fac)
        parts.mu0 *= pow_int(p, e) + pow_int(p, e - 1);

    if (N % 4 == 0) {
        parts.mu02 = 0;
    } else {
        parts.mu02 = 1;
        for (const auto& [p, e] : fac) parts.mu02 *= 1 + legendre_symbol(-4, p);
    }

    if (N % 2 == 0 || N % 9 == 0) {
        parts.mu03 = 0;
    } else {
        parts.mu03 = 1;
        for (const auto& [p, e] : fac) parts.mu03 *= 1 + legendre_symbol(-3, p);
    }

    parts.c0 = 0;
    for (const BigInt& d : divisors(N)) parts.c0 += euler_phi(gcd(d, N / d));

    const BigRat g0 = 1 + BigRat(parts.mu0, 12) - BigRat(parts.mu02, 4) -
                      BigRat(parts.mu03, 3) - BigRat(parts.c0, 2);
    if (!is_integer(g0) || g0 < 0)
        throw FormulaViolation("dim_S2_gamma0: g0(" + N.str() + ") = " + to_string(g0) +
                               " is not a nonnegative integer");
    parts.g0 = num(g0);
    return parts;
}

} // namespace ecmf
