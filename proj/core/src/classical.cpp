#include "ecmf/classical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "ecmf/eisenstein.hpp"
#include "ecmf/errors.hpp"
#include "ecmf/primes.hpp"

namespace ecmf {

PythagTriple pythag_param(const BigInt& a, const BigInt& b) {
    std::vector<std::string> violations;
    if (!(b > 0)) violations.push_back("b must be positive");
    if (!(a > b)) violations.push_back("a must exceed b");
    if (a > 0 && b > 0 && gcd(a, b) != 1) violations.push_back("gcd(a, b) must be 1");
    if ((a + b) % 2 == 0) violations.push_back("a and b must have opposite parity");
    if (!violations.empty()) {
        std::string msg = "pythag_param:";
        for (const auto& v : violations) msg += " " + v + ";";
        throw DomainError(msg);
    }
    PythagTriple t{2 * a * b, a * a - b * b, a * a + b * b, a, b};
    if (t.x * t.x + t.y * t.y != t.z * t.z)
        throw InternalInconsistency("pythag_param: parametrization identity failed");
    return t;
}

ExponentReduction exponent_reduce(const BigInt& n) {
    if (n <= 2) throw DomainError("exponent_reduce: n must exceed 2");
    // Power of two?
    BigInt m = n;
    unsigned k = 0;
    while (m % 2 == 0) { m /= 2; ++k; }
    if (m == 1) {
        ExponentReduction out;
        out.kind = ExponentReduction::Kind::Four;
        out.p = 0;
        out.cofactor = pow_int(BigInt(2), k - 2);
        out.witness = "x^" + n.str() + " = (x^" + out.cofactor.str() + ")^4";
        return out;
    }
    // Smallest odd prime factor of n.
    BigInt p = 0;
    for (const auto& [q, e] : factorize(n)) {
        if (q == 2) continue;
        p = q;
        break;
    }
    ExponentReduction out;
    out.kind = ExponentReduction::Kind::OddPrime;
    out.p = p;
    out.cofactor = n / p;
    out.witness = "x^" + n.str() + " = (x^" + out.cofactor.str() + ")^" + p.str();
    return out;
}

std::vector<std::pair<long, long>> n4_search(long bound) {
    if (bound < 1) throw DomainError("n4_search: bound must be positive");
    if (bound > 10000) throw DomainError("n4_search: bound limited to 10^4");
    std::vector<std::pair<long, long>> hits;
    for (long x = 1; x <= bound; ++x) {
        const unsigned long long x4 =
            static_cast<unsigned long long>(x) * x * x * x;
        for (long y = x; y <= bound; ++y) {
            const unsigned long long y4 =
                static_cast<unsigned long long>(y) * y * y * y;
            const unsigned long long s = x4 + y4;
            unsigned long long r =
                static_cast<unsigned long long>(std::sqrt(static_cast<double>(s)));
            while (r * r > s) --r;
            while ((r + 1) * (r + 1) <= s) ++r;
            if (r * r == s) hits.emplace_back(x, y);
        }
    }
    return hits;
}

EisensteinLemmaReport eisenstein_lemma_check(long range) {
    if (range < 1 || range > 50)
        throw DomainError("eisenstein_lemma_check: range must be in [1, 50]");

    const EisensteinInt lambda = EisensteinInt::lambda();
    const EisensteinInt lambda4 = lambda * lambda * lambda * lambda;

    EisensteinLemmaReport report;
    report.range = range;

    for (long a = -range; a <= range; ++a) {
        for (long b = -range; b <= range; ++b) {
            const EisensteinInt w{BigInt(a), BigInt(b)};
            ++report.checked;

            const int r = eis_mod_lambda(w);
            if (!eis_divides(lambda, w - EisensteinInt{BigInt(r), BigInt(0)}))
                throw InternalInconsistency("eisenstein_lemma_check: residue lemma fails at " +
                                            w.str());

            if (!eis_divides(lambda, w)) {
                const EisensteinInt w3 = w * w * w;
                const EisensteinInt one{BigInt(1), BigInt(0)};
                if (!eis_divides(lambda4, w3 - one) && !eis_divides(lambda4, w3 + one))
                    throw InternalInconsistency("eisenstein_lemma_check: cube lemma fails at " +
                                                w.str());
            }
        }
    }
    report.residues_ok = true;
    report.cubes_ok = true;

    const auto q = eis_exact_div(EisensteinInt{BigInt(3), BigInt(0)}, lambda * lambda);
    report.three_unit_ok = q.has_value() && q->is_unit();
    if (!report.three_unit_ok)
        throw InternalInconsistency("eisenstein_lemma_check: 3/lambda^2 is not a unit");
    return report;
}

AbcQuality abc_quality(const BigInt& a, const BigInt& b, const BigInt& c) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw DomainError("abc_quality: a, b, c must be positive");
    if (a + b != c) throw DomainError("abc_quality: a + b must equal c");
    if (gcd(a, b) != 1) throw NotCoprime("abc_quality: a, b, c must be coprime");
    const BigInt rad = radical(a * b * c);
    const double q = std::log(to_double(c)) / std::log(to_double(rad));
    return {rad, q};
}

long flt_exponent_bound(const BigInt& x, const BigInt& y, const BigInt& z) {
    if (x <= 0 || y <= 0 || z <= 1)
        throw DomainError("flt_exponent_bound: need positive x, y and z >= 2");
    const BigInt rad3 = pow_int(radical(x * y * z), 3);
    long n = 0;
    BigInt z2n = 1;
    const BigInt z2 = z * z;
    for (;;) {
        z2n *= z2;
        if (z2n > rad3) return n;
        ++n;
    }
}

std::vector<AbcScanRow> abc_quality_scan(long cmax) {
    if (cmax < 3) throw DomainError("abc_quality_scan: cmax must be >= 3");
    std::vector<AbcScanRow> rows;
    for (long c = 3; c <= cmax; ++c) {
        for (long a = 1; 2 * a <= c; ++a) {
            const long b = c - a;
            if (std::gcd(a, b) != 1) continue;
            const AbcQuality q = abc_quality(BigInt(a), BigInt(b), BigInt(c));
            rows.push_back({BigInt(a), BigInt(b), BigInt(c), q.rad, q.q});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const AbcScanRow& lhs, const AbcScanRow& rhs) {
        if (lhs.q != rhs.q) return lhs.q > rhs.q;
        if (lhs.c != rhs.c) return lhs.c < rhs.c;
        return lhs.a < rhs.a;
    });
    return rows;
}

std::string abc_scan_csv(const std::vector<AbcScanRow>& rows) {
    std::ostringstream out;
    out << "a,b,c,rad,q\n";
    char buf[32];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.12g", r.q);
        out << r.a.str() << "," << r.b.str() << "," << r.c.str() << "," << r.rad.str()
            << "," << buf << "\n";
    }
    return out.str();
}

} // namespace ecmf
