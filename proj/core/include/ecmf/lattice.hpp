#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ecmf/bigint.hpp"

namespace ecmf {

using Cplx = std::complex<double>;

// Two ways to truncate the lattice sums.
//
// Shells adds terms over |k1| + |k2| = 1, 2, ..., R in the given basis: the
// literal definition, with the last shell as the error estimate. Its error
// decays polynomially in R, which is enough to watch convergence but far too
// slow for the 1e-6 .. 1e-10 checks downstream.
//
// Rows first replaces the basis by the reduced one (same lattice) and then
// adds R whole rows, each row summed in closed form through cotangent
// derivatives, so the row tail decays like exp(-pi sqrt(3) R). Rows is the
// default everywhere a tolerance matters.
enum class LatticeSummation { Shells, Rows };

struct LatticeSpec {
    LatticeSpec(Cplx omega1, Cplx omega2, int radius = 40,
                LatticeSummation method = LatticeSummation::Rows);

    Cplx omega1, omega2;
    int radius;
    LatticeSummation method;

    // Reduced basis (same lattice, tau in the fundamental domain).
    Cplx w1r, w2r;
    Cplx tau;

    static LatticeSpec square(int radius = 40,
                              LatticeSummation method = LatticeSummation::Rows);
    static LatticeSpec hexagonal(int radius = 40,
                                 LatticeSummation method = LatticeSummation::Rows);
};

struct SumResult {
    Cplx value;
    double error_estimate;
};

// G_k = sum over nonzero lattice points of w^{-k}; k >= 3. Odd k gives an
// exact zero since every nonzero lattice point has a negative.
SumResult eisenstein_Gk_numeric(const LatticeSpec& L, int k);

struct WpValue {
    Cplx wp;
    Cplx wp_prime;
    double error_estimate;
};

// Weierstrass p-function and derivative. Points within 1e-8 of the lattice
// (in basis coordinates) are rejected as NearPole.
WpValue wp_eval(const LatticeSpec& L, Cplx z);

// |wp'^2 - 4 wp^3 + 60 G4 wp + 140 G6| at z.
double ode_residual(const LatticeSpec& L, Cplx z);

// A point of C/L in basis coordinates, canonical representatives in [0, 1).
struct TorusPoint {
    double t1 = 0.0;
    double t2 = 0.0;

    TorusPoint reduced() const;
    TorusPoint operator+(const TorusPoint& o) const;
    bool is_zero(double tol = 1e-12) const;
};

struct TorusTorsion {
    long n;
    std::vector<TorusPoint> points;     // exactly n^2 of them
    TorusPoint generator1, generator2;  // (1/n, 0) and (0, 1/n), both of order n
    std::string structure;              // "Z/n + Z/n"
};

TorusTorsion torus_torsion(long n);

Cplx torus_to_z(const LatticeSpec& L, const TorusPoint& t);

struct NumericPoint {
    bool infinity = true;
    Cplx x{};
    Cplx y{};
};

// z + L -> (wp(z), wp'(z)) on y^2 = 4x^3 - g2 x - g3 with g2 = 60 G4,
// g3 = 140 G6; zero maps to the point at infinity.
NumericPoint torus_to_curve(const LatticeSpec& L, const TorusPoint& t);

// Chord-tangent addition on y^2 = 4x^3 - g2 x - g3 in floating point.
NumericPoint numeric_curve_add(const Cplx& g2, const Cplx& g3, const NumericPoint& p,
                               const NumericPoint& q, double tol = 1e-9);

struct TateLevelCheck {
    int level;                 // n, for the transition E[l^{n+1}] -> E[l^n]
    std::uint64_t kernel_size; // must be l^2
    bool surjective;
};

struct TateReport {
    long ell = 0;
    int depth = 0;
    std::vector<std::uint64_t> level_sizes; // |E[l^n]| = l^{2n}
    std::vector<TateLevelCheck> transitions;
    bool generators_compatible = false;
    bool rank2_free = false;
};

// Verifies, on the torus model E[l^n] = (Z/l^n)^2, that the
// multiplication-by-l transitions are surjective, that the canonical
// generator sequences are compatible, and that the truncated module is free
// of rank 2 over Z/l^depth. l in {2, 3, 5}, depth <= 6.
TateReport tate_truncation(long ell, int depth);

} // namespace ecmf
