#include "ecmf/lattice.hpp"

#include <cmath>
#include <numbers>

#include "ecmf/errors.hpp"
#include "ecmf/halfplane.hpp"

namespace ecmf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNearPoleTol = 1e-8;

double zeta_even(int k) {
    // Direct sum with the leading Euler-Maclaurin corrections; for k >= 3
    // this is accurate to machine precision long before N = 1e5.
    const int N = 100000;
    double s = 0.0;
    for (int n = N; n >= 1; --n) s += std::pow(static_cast<double>(n), -k);
    const double Nd = N;
    s += std::pow(Nd, 1.0 - k) / (k - 1) - 0.5 * std::pow(Nd, -static_cast<double>(k));
    return s;
}

// cot(pi w), stable for Im(w) >= 0 via q = exp(2 pi i w).
Cplx cot_pi(const Cplx& w) {
    const Cplx q = std::exp(Cplx(0.0, 2.0 * kPi) * w);
    return Cplx(0.0, 1.0) * (q + 1.0) / (q - 1.0);
}

// S_k(w) = sum over n in Z of (w + n)^{-k} = pi^k Q_k(cot(pi w)), where
// Q_1 = c and Q_{k+1} = (1 + c^2) Q_k' / k.
std::vector<double> cot_poly(int k) {
    std::vector<double> q{0.0, 1.0}; // Q_1 = c
    for (int j = 1; j < k; ++j) {
        std::vector<double> dq(q.size() > 1 ? q.size() - 1 : 1, 0.0);
        for (std::size_t i = 1; i < q.size(); ++i) dq[i - 1] = q[i] * static_cast<double>(i);
        std::vector<double> next(dq.size() + 2, 0.0);
        for (std::size_t i = 0; i < dq.size(); ++i) {
            next[i] += dq[i] / j;
            next[i + 2] += dq[i] / j;
        }
        q = std::move(next);
    }
    return q;
}

Cplx S_k(int k, const Cplx& w) {
    // Reduce to Im >= 0 by S_k(-w) = (-1)^k S_k(w).
    if (w.imag() < 0.0) {
        const Cplx v = S_k(k, -w);
        return (k % 2 == 0) ? v : -v;
    }
    const Cplx c = cot_pi(w);
    const std::vector<double> q = cot_poly(k);
    Cplx acc(0.0, 0.0);
    for (std::size_t i = q.size(); i-- > 0;) acc = acc * c + q[i];
    return acc * std::pow(Cplx(kPi, 0.0), k);
}

// l1 shells in the (k1, k2) index plane.
template <typename F>
void for_shell(int s, F&& f) {
    for (int k1 = -s; k1 <= s; ++k1) {
        const int r = s - std::abs(k1);
        if (r == 0) {
            f(k1, 0);
        } else {
            f(k1, r);
            f(k1, -r);
        }
    }
}

struct BasisCoords {
    double t1, t2;
};

// Solve z = t1 w1 + t2 w2 over the reals.
BasisCoords to_basis(const Cplx& w1, const Cplx& w2, const Cplx& z) {
    const double det = w1.real() * w2.imag() - w1.imag() * w2.real();
    if (det == 0.0) throw DomainError("lattice: degenerate basis");
    const double t1 = (z.real() * w2.imag() - z.imag() * w2.real()) / det;
    const double t2 = (w1.real() * z.imag() - w1.imag() * z.real()) / det;
    return {t1, t2};
}

double frac_centered(double t) { return t - std::floor(t + 0.5); }

} // namespace

LatticeSpec::LatticeSpec(Cplx o1, Cplx o2, int r, LatticeSummation meth)
    : omega1(o1), omega2(o2), radius(r), method(meth) {
    if (radius <= 0) throw DomainError("LatticeSpec: radius must be positive");
    if (std::abs(o1) == 0.0 || std::abs(o2) == 0.0)
        throw DomainError("LatticeSpec: basis vectors must be nonzero");
    const Cplx ratio = o2 / o1;
    if (!(ratio.imag() > 0.0))
        throw DomainError("LatticeSpec: Im(omega2/omega1) must be positive");

    // Reduced basis for the row sums: gamma tau in the fundamental domain
    // corresponds to the basis change (w2, w1) -> (a w2 + b w1, c w2 + d w1).
    const FundamentalReduction red = fundamental_reduce({ratio.real(), ratio.imag()});
    const double a = to_double(red.gamma.a), b = to_double(red.gamma.b);
    const double c = to_double(red.gamma.c), d = to_double(red.gamma.d);
    w2r = a * omega2 + b * omega1;
    w1r = c * omega2 + d * omega1;
    tau = w2r / w1r;
}

LatticeSpec LatticeSpec::square(int radius, LatticeSummation method) {
    return LatticeSpec(Cplx(1.0, 0.0), Cplx(0.0, 1.0), radius, method);
}

LatticeSpec LatticeSpec::hexagonal(int radius, LatticeSummation method) {
    return LatticeSpec(Cplx(1.0, 0.0), std::exp(Cplx(0.0, 2.0 * kPi / 3.0)), radius, method);
}

SumResult eisenstein_Gk_numeric(const LatticeSpec& L, int k) {
    if (k < 3) throw DomainError("eisenstein_Gk_numeric: the sum diverges for k < 3");
    if (k % 2 == 1) return {Cplx(0.0, 0.0), 0.0};

    if (L.method == LatticeSummation::Shells) {
        Cplx total(0.0, 0.0);
        double last = 0.0;
        for (int s = 1; s <= L.radius; ++s) {
            Cplx shell(0.0, 0.0);
            for_shell(s, [&](int k1, int k2) {
                const Cplx w = static_cast<double>(k1) * L.omega1 +
                               static_cast<double>(k2) * L.omega2;
                shell += std::pow(w, -k);
            });
            total += shell;
            last = std::abs(shell);
        }
        return {total, last};
    }

    // Rows: G_k = w1^{-k} (2 zeta(k) + 2 sum_{m>=1} S_k(m tau)).
    Cplx inner(2.0 * zeta_even(k), 0.0);
    Cplx last(0.0, 0.0);
    for (int m = 1; m <= L.radius; ++m) {
        last = 2.0 * S_k(k, static_cast<double>(m) * L.tau);
        inner += last;
    }
    const Cplx scale = std::pow(L.w1r, -k);
    return {inner * scale, std::abs(last * scale)};
}

WpValue wp_eval(const LatticeSpec& L, Cplx z) {
    const BasisCoords t = to_basis(L.w1r, L.w2r, z);
    const double t1 = frac_centered(t.t1);
    const double t2 = frac_centered(t.t2);
    if (std::max(std::abs(t1), std::abs(t2)) < kNearPoleTol)
        throw NearPole("wp_eval: z is within 1e-8 of the lattice in basis coordinates");

    if (L.method == LatticeSummation::Shells) {
        Cplx p = 1.0 / (z * z);
        Cplx dp = -2.0 / (z * z * z);
        double last = 0.0;
        for (int s = 1; s <= L.radius; ++s) {
            Cplx dshell(0.0, 0.0), dpshell(0.0, 0.0);
            for_shell(s, [&](int k1, int k2) {
                const Cplx w = static_cast<double>(k1) * L.omega1 +
                               static_cast<double>(k2) * L.omega2;
                const Cplx d = z - w;
                dshell += 1.0 / (d * d) - 1.0 / (w * w);
                dpshell += -2.0 / (d * d * d);
            });
            p += dshell;
            dp += dpshell;
            last = std::abs(dshell);
        }
        return {p, dp, last};
    }

    // Rows on the reduced basis with z reduced into the cell around 0;
    // both leave the function values unchanged.
    const Cplx u = Cplx(t1, 0.0) + Cplx(t2, 0.0) * L.tau;
    Cplx P = S_k(2, u) - Cplx(kPi * kPi / 3.0, 0.0);
    Cplx DP = S_k(3, u);
    double last = 0.0;
    for (int m = 1; m <= L.radius; ++m) {
        const Cplx mt = static_cast<double>(m) * L.tau;
        const Cplx rowP = S_k(2, u - mt) + S_k(2, u + mt) - 2.0 * S_k(2, mt);
        const Cplx rowD = S_k(3, u - mt) + S_k(3, u + mt);
        P += rowP;
        DP += rowD;
        last = std::abs(rowP) + std::abs(rowD);
    }
    const Cplx s1 = 1.0 / (L.w1r * L.w1r);
    const Cplx s2 = s1 / L.w1r;
    return {P * s1, -2.0 * DP * s2, last};
}

double ode_residual(const LatticeSpec& L, Cplx z) {
    const WpValue v = wp_eval(L, z);
    const Cplx g4 = eisenstein_Gk_numeric(L, 4).value;
    const Cplx g6 = eisenstein_Gk_numeric(L, 6).value;
    const Cplx res = v.wp_prime * v.wp_prime - 4.0 * v.wp * v.wp * v.wp +
                     60.0 * g4 * v.wp + 140.0 * g6;
    return std::abs(res);
}

TorusPoint TorusPoint::reduced() const {
    auto wrap = [](double t) {
        double r = t - std::floor(t);
        if (r >= 1.0) r -= 1.0; // guard against floor rounding at the seam
        return r;
    };
    return {wrap(t1), wrap(t2)};
}

TorusPoint TorusPoint::operator+(const TorusPoint& o) const {
    return TorusPoint{t1 + o.t1, t2 + o.t2}.reduced();
}

bool TorusPoint::is_zero(double tol) const {
    const TorusPoint r = reduced();
    auto near_int = [&](double t) { return t < tol || t > 1.0 - tol; };
    return near_int(r.t1) && near_int(r.t2);
}

TorusTorsion torus_torsion(long n) {
    if (n < 1) throw DomainError("torus_torsion: n must be positive");
    TorusTorsion out;
    out.n = n;
    out.points.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j)
        for (long k = 0; k < n; ++k)
            out.points.push_back({static_cast<double>(j) / n, static_cast<double>(k) / n});
    out.generator1 = {1.0 / n, 0.0};
    out.generator2 = {0.0, 1.0 / n};
    out.structure = "Z/" + std::to_string(n) + " + Z/" + std::to_string(n);
    return out;
}

Cplx torus_to_z(const LatticeSpec& L, const TorusPoint& t) {
    const TorusPoint r = t.reduced();
    return r.t1 * L.omega1 + r.t2 * L.omega2;
}

NumericPoint torus_to_curve(const LatticeSpec& L, const TorusPoint& t) {
    if (t.is_zero()) return {};
    const WpValue v = wp_eval(L, torus_to_z(L, t));
    return {false, v.wp, v.wp_prime};
}

NumericPoint numeric_curve_add(const Cplx& g2, const Cplx& /*g3*/, const NumericPoint& p,
                               const NumericPoint& q, double tol) {
    if (p.infinity) return q;
    if (q.infinity) return p;

    Cplx slope;
    if (std::abs(p.x - q.x) <= tol * (1.0 + std::abs(p.x))) {
        if (std::abs(p.y + q.y) <= tol * (1.0 + std::abs(p.y))) return {}; // vertical
        // Tangent on y^2 = 4x^3 - g2 x - g3: 2 y y' = 12 x^2 - g2.
        slope = (12.0 * p.x * p.x - g2) / (2.0 * p.y);
    } else {
        slope = (q.y - p.y) / (q.x - p.x);
    }
    // 4x^3 - ... - (slope x + c)^2 = 0 has root sum slope^2 / 4.
    const Cplx xr = slope * slope / 4.0 - p.x - q.x;
    const Cplx yr = -(p.y + slope * (xr - p.x));
    return {false, xr, yr};
}

namespace {

std::uint64_t pow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

TateReport tate_truncation(long ell, int depth) {
    if (ell != 2 && ell != 3 && ell != 5)
        throw DomainError("tate_truncation: ell must be one of {2, 3, 5}");
    if (depth < 1 || depth > 6)
        throw DomainError("tate_truncation: depth must be in [1, 6]");

    const std::uint64_t l = static_cast<std::uint64_t>(ell);
    TateReport report;
    report.ell = ell;
    report.depth = depth;

    for (int n = 1; n <= depth; ++n)
        report.level_sizes.push_back(pow_u64(l, 2 * n));

    // E[l^n] on the torus is { (a / l^n, b / l^n) }, stored as integer pairs
    // (a, b) mod l^n. The transition map phi_n is multiplication by l:
    // (a, b) at level n+1 goes to the level-n point l * (a/l^{n+1}, b/l^{n+1})
    // = (a mod l^n, b mod l^n) / l^n.
    for (int n = 1; n < depth; ++n) {
        const std::uint64_t hi = pow_u64(l, n + 1);
        const std::uint64_t lo = pow_u64(l, n);

        // Kernel of phi_n: both coordinates multiples of l^n.
        std::uint64_t kernel = 0;
        for (std::uint64_t a = 0; a < hi; a += lo)
            for (std::uint64_t b = 0; b < hi; b += lo)
                if (a % lo == 0 && b % lo == 0) ++kernel;

        bool surjective;
        if (hi * hi <= 1'000'000) {
            // Enumerate the whole level and collect the image.
            std::vector<bool> hit(static_cast<std::size_t>(lo * lo), false);
            for (std::uint64_t a = 0; a < hi; ++a)
                for (std::uint64_t b = 0; b < hi; ++b)
                    hit[static_cast<std::size_t>((a % lo) * lo + (b % lo))] = true;
            surjective = true;
            for (bool h : hit)
                if (!h) surjective = false;
        } else {
            // |image| = |E[l^{n+1}]| / |kernel| = l^{2n} = |E[l^n]|, and the
            // image sits inside E[l^n], so full kernel count proves onto.
            surjective = kernel == l * l;
        }
        report.transitions.push_back({n, kernel, surjective});
    }

    // Generator sequences P_n = (1/l^n, 0), Q_n = (0, 1/l^n):
    // phi(P_{n+1}) = l * (1/l^{n+1}, 0) = (1/l^n, 0) = P_n, verified as the
    // exact fraction identity l * 1 * l^n = 1 * l^{n+1}.
    report.generators_compatible = true;
    for (int n = 1; n < depth; ++n) {
        const BigInt lhs = BigInt(ell) * 1 * pow_int(BigInt(ell), static_cast<unsigned>(n));
        const BigInt rhs = BigInt(1) * pow_int(BigInt(ell), static_cast<unsigned>(n + 1));
        if (lhs != rhs) report.generators_compatible = false;
    }

    // Freeness of rank 2 over Z/l^depth: (x, y) -> x P_d + y Q_d sends the
    // pair to (x/l^d, y/l^d), so distinct pairs give distinct points and all
    // l^{2d} points are reached; verified by enumeration when feasible.
    const std::uint64_t full = pow_u64(l, depth);
    report.rank2_free = true;
    if (full * full <= 1'000'000) {
        std::vector<bool> hit(static_cast<std::size_t>(full * full), false);
        for (std::uint64_t x = 0; x < full; ++x)
            for (std::uint64_t y = 0; y < full; ++y) {
                // x * P_d + y * Q_d in integer torus coordinates at level d
                const std::uint64_t px = x * 1 % full;
                const std::uint64_t py = y * 1 % full;
                const std::size_t idx = static_cast<std::size_t>(px * full + py);
                if (hit[idx]) report.rank2_free = false;
                hit[idx] = true;
            }
        for (bool h : hit)
            if (!h) report.rank2_free = false;
    } else {
        // Injectivity is the coordinate identity itself; spot check the
        // generators' orders: l^{d-1} P_d != 0 and l^d P_d = 0.
        const std::uint64_t almost = pow_u64(l, depth - 1);
        if (almost % full == 0 || (almost * l) % full != 0) report.rank2_free = false;
    }
    return report;
}

} // namespace ecmf
