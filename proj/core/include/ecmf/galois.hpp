#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ecmf/bigint.hpp"
#include "ecmf/ladic.hpp"

namespace ecmf {

// F_{p^k} as F_p[t] / (modulus), with the modulus the first irreducible
// monic polynomial of degree k in lexicographic coefficient order
// (constant term least significant). Elements are coefficient vectors of
// length k, constant term first. Immutable after construction.
class FqField {
public:
    FqField(long p, int k);

    long p() const { return p_; }
    int k() const { return k_; }
    // Modulus coefficients c_0 .. c_{k-1} of x^k + c_{k-1} x^{k-1} + ... + c_0.
    const std::vector<long>& modulus() const { return mod_; }

    using Elem = std::vector<long>;

    Elem zero() const { return Elem(static_cast<std::size_t>(k_), 0); }
    Elem one() const;
    Elem gen() const; // the class of t
    Elem from_int(long v) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(Elem a, BigInt e) const;

    // Frob_p: x -> x^p.
    Elem frobenius(const Elem& a) const;

    bool is_zero(const Elem& a) const;

    // All p^k elements in lexicographic order; guarded against large fields.
    std::vector<Elem> all_elements() const;

    std::string elem_str(const Elem& a) const;

private:
    long p_;
    int k_;
    std::vector<long> mod_;
};

// Least m >= 1 with Frob^m fixing the generator t; equals k.
int frobenius_order(long p, int k);

// For each divisor d of k, the size of the fixed set of Frob^d (must be
// p^d); each fixed set is verified closed under + and *. Requires k <= 8.
std::map<int, long> subfield_lattice(long p, int k);

// The automorphism zeta -> zeta^a on p^k-th roots of unity, recorded by the
// unit a mod p^k. Roots of unity live as exponents; no complex floats.
class CycloAut {
public:
    CycloAut(long p, int k, BigInt a);

    long p() const { return p_; }
    int k() const { return k_; }
    const BigInt& value() const { return a_; } // chi(sigma)

    CycloAut compose(const CycloAut& o) const;     // chi multiplies
    CycloAut project(int k_lower) const;           // reduce mod p^{k_lower}

    static CycloAut identity(long p, int k) { return {p, k, BigInt(1)}; }

private:
    long p_;
    int k_;
    BigInt a_;
};

// Levels 1..depth of the character tower below a unit a mod p^depth.
std::vector<CycloAut> cyclotomic_tower(long p, int depth, const BigInt& a);

// The tower assembled as a truncated p-adic unit; the LAdicTrunc constructor
// re-verifies the compatibility invariant.
LAdicTrunc tower_to_ladic(const std::vector<CycloAut>& tower);

} // namespace ecmf
