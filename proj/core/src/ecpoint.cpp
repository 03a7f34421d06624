#include "ecmf/ecpoint.hpp"

#include <algorithm>

#include "ecmf/errors.hpp"
#include "ecmf/primes.hpp"

namespace ecmf {

std::string CurvePoint::str() const {
    if (infinity) return "O";
    return "(" + to_string(x) + "," + to_string(y) + ")";
}

bool on_curve(const WeierstrassModel& m, const CurvePoint& p) {
    if (p.infinity) return true;
    const BigRat lhs = p.y * p.y + m.a1() * p.x * p.y + m.a3() * p.y;
    const BigRat rhs = p.x * p.x * p.x + m.a2() * p.x * p.x + m.a4() * p.x + m.a6();
    return lhs == rhs;
}

namespace {

void require_cubic_form(const WeierstrassModel& m) {
    if (!m.is_cubic_form())
        throw DomainError("group law: model must be in y^2 = cubic form; "
                          "apply to_short_form first");
}

void require_on_curve(const WeierstrassModel& m, const CurvePoint& p) {
    if (!on_curve(m, p)) throw DomainError("group law: point is not on the curve");
}

} // namespace

CurvePoint negate_point(const WeierstrassModel& m, const CurvePoint& p) {
    require_cubic_form(m);
    if (p.infinity) return p;
    return CurvePoint::affine(p.x, -p.y);
}

CurvePoint add_points(const WeierstrassModel& m, const CurvePoint& p, const CurvePoint& q) {
    require_cubic_form(m);
    require_on_curve(m, p);
    require_on_curve(m, q);
    if (p.infinity) return q;
    if (q.infinity) return p;

    BigRat slope;
    if (p.x == q.x) {
        if (p.y == -q.y) return CurvePoint::at_infinity(); // vertical chord
        // Tangent: 2y y' = 3x^2 + 2 a2 x + a4.
        slope = (3 * p.x * p.x + 2 * m.a2() * p.x + m.a4()) / (2 * p.y);
    } else {
        slope = (q.y - p.y) / (q.x - p.x);
    }

    // Vieta on x^3 + a2 x^2 + ... - (slope x + c)^2: root sum = slope^2 - a2.
    const BigRat xr = slope * slope - m.a2() - p.x - q.x;
    const BigRat yr = -(p.y + slope * (xr - p.x));
    return CurvePoint::affine(xr, yr);
}

CurvePoint scalar_mul(const WeierstrassModel& m, const BigInt& k, const CurvePoint& p) {
    require_cubic_form(m);
    require_on_curve(m, p);
    if (k < 0) return scalar_mul(m, -k, negate_point(m, p));
    CurvePoint acc = CurvePoint::at_infinity();
    CurvePoint base = p;
    BigInt e = k;
    while (e > 0) {
        if ((e & 1) == 1) acc = add_points(m, acc, base);
        e >>= 1;
        if (e > 0) base = add_points(m, base, base);
    }
    return acc;
}

std::vector<BigRat> rational_cubic_roots(const BigRat& a2, const BigRat& a4, const BigRat& a6) {
    // Scale x = u/D with D the lcm of the denominators; the cubic in u is
    // monic with integer coefficients, so its rational roots are integers
    // dividing the constant term.
    BigInt D = den(a2);
    D = D / gcd(D, den(a4)) * den(a4);
    D = D / gcd(D, den(a6)) * den(a6);
    const BigRat DR(D);
    const BigInt A = num(a2 * DR);
    const BigInt B = num(a4 * DR * DR);
    const BigInt C = num(a6 * DR * DR * DR);

    auto eval = [&](const BigInt& u) { return ((u + A) * u + B) * u + C; };

    std::vector<BigInt> uroots;
    auto push_unique = [&](const BigInt& u) {
        if (std::find(uroots.begin(), uroots.end(), u) == uroots.end()) uroots.push_back(u);
    };

    if (C == 0) {
        push_unique(0);
        // Deflate to u^2 + A u + B and solve over the integers.
        const BigInt disc = A * A - 4 * B;
        if (disc >= 0 && is_perfect_square(disc)) {
            const BigInt s = isqrt(disc);
            if ((-A + s) % 2 == 0) push_unique((-A + s) / 2);
            if ((-A - s) % 2 == 0) push_unique((-A - s) / 2);
        }
    } else {
        for (const BigInt& d : divisors(C)) {
            if (eval(d) == 0) push_unique(d);
            if (eval(-d) == 0) push_unique(-d);
        }
    }

    std::vector<BigRat> roots;
    roots.reserve(uroots.size());
    for (const BigInt& u : uroots) roots.emplace_back(BigRat(u) / DR);
    std::sort(roots.begin(), roots.end());
    return roots;
}

TwoTorsion two_torsion(const WeierstrassModel& m) {
    require_cubic_form(m);
    if (m.is_singular()) throw SingularCurve();

    std::vector<BigRat> roots;
    if (m.form() == CurveForm::Root) {
        const auto& r = m.roots();
        roots.assign(r.begin(), r.end());
        std::sort(roots.begin(), roots.end());
    } else {
        roots = rational_cubic_roots(m.a2(), m.a4(), m.a6());
    }

    TwoTorsion out;
    out.points.push_back(CurvePoint::at_infinity());
    for (const auto& r : roots) out.points.push_back(CurvePoint::affine(r, BigRat(0)));
    switch (roots.size()) {
    case 3: out.structure = TorsionStructure::Z2xZ2; break;
    case 1: out.structure = TorsionStructure::Z2; break;
    default: out.structure = TorsionStructure::Trivial; break;
    }
    return out;
}

} // namespace ecmf
