#include "ecmf/reduction.hpp"

#include <vector>

#include "ecmf/errors.hpp"
#include "ecmf/primes.hpp"

namespace ecmf {

std::string reduction_type_name(ReductionType t) {
    switch (t) {
    case ReductionType::Good: return "good";
    case ReductionType::MultiplicativeSplit: return "multiplicative-split";
    case ReductionType::MultiplicativeNonsplit: return "multiplicative-nonsplit";
    case ReductionType::Additive: return "additive";
    }
    return "?";
}

bool is_multiplicative(ReductionType t) {
    return t == ReductionType::MultiplicativeSplit || t == ReductionType::MultiplicativeNonsplit;
}

namespace {

BigInt mod_p(const BigInt& v, const BigInt& p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r;
}

// Reduce a p-integral rational mod p.
BigInt rat_mod_p(const BigRat& v, const BigInt& p) {
    const BigInt d = mod_p(den(v), p);
    if (d == 0) throw NonIntegralModel("model is not integral at p = " + p.str());
    return mod_p(mod_p(num(v), p) * mod_inverse(d, p), p);
}

struct CubicModP {
    BigInt p;
    BigInt c2, c1, c0; // x^3 + c2 x^2 + c1 x + c0 over F_p
};

// The monic cubic whose point count mod p matches the model's. For p >= 5
// the square is completed mod p; for p = 2, 3 the model must already be in
// y^2 = cubic shape.
CubicModP cubic_mod_p(const WeierstrassModel& m, const BigInt& p) {
    if (p < 5 && !m.is_cubic_form())
        throw NonIntegralModel("p = " + p.str() + ": model must be y^2 = cubic");
    if (p >= 5) {
        const BigInt inv4 = mod_inverse(4, p);
        const BigInt inv2 = mod_inverse(2, p);
        return {p, mod_p(rat_mod_p(m.b2(), p) * inv4, p),
                mod_p(rat_mod_p(m.b4(), p) * inv2, p),
                mod_p(rat_mod_p(m.b6(), p) * inv4, p)};
    }
    return {p, rat_mod_p(m.a2(), p), rat_mod_p(m.a4(), p), rat_mod_p(m.a6(), p)};
}

struct RootPattern {
    int distinct_roots;     // of the splitting pattern found mod p
    bool has_triple;
    bool has_double;
    BigInt double_root;     // valid when has_double
    BigInt simple_root;     // valid when has_double
};

// Root multiplicities by direct scan; only used for p = 2, 3.
RootPattern scan_roots(const CubicModP& g) {
    RootPattern out{0, false, false, 0, 0};
    for (BigInt x = 0; x < g.p; ++x) {
        // Repeated synthetic division by (X - x), coefficients descending.
        std::vector<BigInt> cur{1, g.c2, g.c1, g.c0};
        int k = 0;
        while (cur.size() > 1) {
            std::vector<BigInt> quot;
            BigInt acc = 0;
            for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
                acc = mod_p(acc * x + cur[i], g.p);
                quot.push_back(acc);
            }
            const BigInt rem = mod_p(acc * x + cur.back(), g.p);
            if (rem != 0) break;
            ++k;
            cur = quot;
        }
        if (k == 0) continue;
        ++out.distinct_roots;
        if (k >= 3) out.has_triple = true;
        if (k == 2) {
            out.has_double = true;
            out.double_root = x;
        }
    }
    if (out.has_double) {
        // Sum of roots is -c2, so the simple root is determined.
        out.simple_root = mod_p(-g.c2 - 2 * out.double_root, g.p);
    }
    return out;
}

} // namespace

ReductionType reduction_type(const WeierstrassModel& m, const BigInt& p) {
    if (!is_prime(p)) throw NonPrimeModulus("reduction_type: p must be prime");
    if (m.is_singular()) throw SingularCurve();
    const CubicModP g = cubic_mod_p(m, p);

    if (p < 5) {
        const RootPattern pat = scan_roots(g);
        if (pat.has_triple) return ReductionType::Additive;
        if (pat.has_double)
            return is_quadratic_residue(pat.double_root - pat.simple_root, p)
                       ? ReductionType::MultiplicativeSplit
                       : ReductionType::MultiplicativeNonsplit;
        return ReductionType::Good;
    }

    // disc(x^3 + c2 x^2 + c1 x + c0)
    const BigInt disc =
        mod_p(-4 * g.c2 * g.c2 * g.c2 * g.c0 + g.c2 * g.c2 * g.c1 * g.c1 +
                  18 * g.c2 * g.c1 * g.c0 - 4 * g.c1 * g.c1 * g.c1 - 27 * g.c0 * g.c0,
              p);
    if (disc != 0) return ReductionType::Good;

    // Depress: t = x - c2/3 gives t^3 + P t + Q.
    const BigInt inv3 = mod_inverse(3, p);
    const BigInt s = mod_p(g.c2 * inv3, p); // c2/3
    const BigInt P = mod_p(g.c1 - 3 * s * s, p);
    const BigInt Q = mod_p(g.c0 - g.c1 * s + 2 * s * s * s, p);
    if (P == 0 && Q == 0) return ReductionType::Additive;

    // Double root of t^3 + Pt + Q: t0 = -3Q/(2P); simple root t1 = -2 t0.
    const BigInt t0 = mod_p(-3 * Q * mod_inverse(2 * P, p), p);
    const BigInt diff = mod_p(3 * t0, p); // t0 - t1
    return is_quadratic_residue(diff, p) ? ReductionType::MultiplicativeSplit
                                         : ReductionType::MultiplicativeNonsplit;
}

std::vector<BadPrime> bad_primes(const WeierstrassModel& m) {
    if (!m.is_cubic_form() || !m.is_integral())
        throw NonIntegralModel("conductor: model must be y^2 = cubic with integer coefficients");
    if (m.is_singular()) throw SingularCurve();

    // disc_weierstrass = 16 * disc(cubic); drop the 16 so that p = 2 is
    // governed by the cubic's own root pattern.
    const BigRat dw = m.disc_weierstrass();
    BigInt disc_cubic = num(dw) / 16;
    if (BigRat(disc_cubic * 16) != dw)
        throw InternalInconsistency("conductor: discriminant is not 16 * integer");

    std::vector<BadPrime> out;
    for (const auto& [p, e] : factorize(disc_cubic)) {
        const ReductionType t = reduction_type(m, p);
        if (t == ReductionType::Good) continue;
        unsigned fp = 1;
        if (t == ReductionType::Additive) {
            if (p < 5)
                throw UnsupportedAdditiveSmallPrime(
                    "conductor: additive reduction at p = " + p.str() +
                    " needs the delta_p correction, which is not implemented");
            fp = 2;
        }
        out.push_back({p, t, fp});
    }
    return out;
}

BigInt conductor(const WeierstrassModel& m) {
    BigInt n = 1;
    for (const auto& bp : bad_primes(m)) n *= pow_int(bp.p, bp.exponent);
    return n;
}

bool is_semistable(const WeierstrassModel& m) {
    for (const auto& bp : bad_primes(m))
        if (bp.type == ReductionType::Additive) return false;
    return true;
}

FreyData frey_curve(const BigInt& a, const BigInt& b, const BigInt& c, unsigned P) {
    if (P == 0) throw DomainError("frey_curve: exponent must be positive");
    if (a == 0 || b == 0 || c == 0)
        throw NotAFermatTriple("frey_curve: abc must be nonzero");
    if (pow_int(a, P) + pow_int(b, P) != pow_int(c, P))
        throw NotAFermatTriple("frey_curve: a^P + b^P != c^P");
    if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1)
        throw NotCoprime("frey_curve: a, b, c must be pairwise coprime");

    FreyData f{a, b, c, P,
               WeierstrassModel::root_form(BigRat(0), BigRat(pow_int(a, P)),
                                           BigRat(-pow_int(b, P))),
               0, 0, false};

    f.delta = pow_int(a * b * c, 2 * P);
    if (BigRat(f.delta) != f.model.disc_root())
        throw InternalInconsistency("frey_curve: (abc)^{2P} != root-formula discriminant");

    f.conductor = radical(abs(a * b * c));

    // Semistability at every prime of bad reduction. The coprime-roots
    // argument guarantees it; reduction_type re-derives it from the model.
    f.semistable = true;
    for (const auto& [p, e] : factorize(a * b * c)) {
        const ReductionType t = reduction_type(f.model, p);
        if (!is_multiplicative(t))
            throw InternalInconsistency("frey_curve: reduction at p = " + p.str() +
                                        " is " + reduction_type_name(t) +
                                        ", expected multiplicative");
    }
    return f;
}

} // namespace ecmf
