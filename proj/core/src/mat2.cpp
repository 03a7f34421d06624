#include "ecmf/mat2.hpp"

#include "ecmf/errors.hpp"
#include "ecmf/primes.hpp"

namespace ecmf {

IntMat2 IntMat2::unimodular_inverse() const {
    const BigInt dt = det();
    if (dt == 1) return {d, -b, -c, a};
    if (dt == -1) return {-d, b, c, -a};
    throw DomainError("unimodular_inverse: determinant is not +-1");
}

std::string IntMat2::str() const {
    return "(" + a.str() + "," + b.str() + ";" + c.str() + "," + d.str() + ")";
}

namespace {

BigInt mod_reduce(const BigInt& v, const BigInt& n) {
    BigInt r = v % n;
    if (r < 0) r += n;
    return r;
}

} // namespace

bool subgroup_contains(const IntMat2& gamma, const SubgroupSpec& spec) {
    if (gamma.det() != 1)
        throw DomainError("subgroup_contains: matrix is not in SL2(Z)");
    if (spec.level <= 0) throw DomainError("subgroup_contains: level must be positive");
    const BigInt& n = spec.level;
    switch (spec.kind) {
    case SubgroupKind::GammaN:
        return mod_reduce(gamma.a - 1, n) == 0 && mod_reduce(gamma.b, n) == 0 &&
               mod_reduce(gamma.c, n) == 0 && mod_reduce(gamma.d - 1, n) == 0;
    case SubgroupKind::Gamma0N:
        return mod_reduce(gamma.c, n) == 0;
    }
    return false;
}

std::vector<IntMat2> coset_reps_Mn(const BigInt& n) {
    if (n <= 0) throw DomainError("coset_reps_Mn: n must be positive");
    std::vector<IntMat2> out;
    for (const BigInt& a : divisors(n)) {
        const BigInt d = n / a;
        for (BigInt b = 0; b < d; ++b) out.push_back({a, b, 0, d});
    }
    return out;
}

IntMat2 hermite_reduce(IntMat2 m) {
    if (m.det() <= 0) throw DomainError("hermite_reduce: determinant must be positive");
    // Euclid on the left column: subtract a multiple of row 2 from row 1,
    // then rotate rows (an SL2 operation); |c| strictly shrinks each pass.
    while (m.c != 0) {
        const BigInt q = m.a / m.c;
        const BigInt ra = m.a - q * m.c;
        const BigInt rb = m.b - q * m.d;
        m = IntMat2{m.c, m.d, -ra, -rb};
    }
    // det = ad > 0 with a, d sharing a sign; -I fixes the negative case.
    if (m.a < 0) m = IntMat2{-m.a, -m.b, m.c, -m.d};
    m.b = mod_reduce(m.b, m.d);
    return m;
}

} // namespace ecmf
