#include "ecmf/galois.hpp"

#include <algorithm>

#include "ecmf/errors.hpp"
#include "ecmf/primes.hpp"

namespace ecmf {

namespace {

constexpr long kMaxFieldSize = 500'000;

long mod_l(long v, long p) {
    long r = v % p;
    if (r < 0) r += p;
    return r;
}

// Dense polynomial arithmetic over F_p, coefficients ascending, no leading
// zero trimming needed beyond what deg() does.
using Poly = std::vector<long>;

int deg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
    if (deg(a) < 0 || deg(b) < 0) return {0};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = mod_l(out[i + j] + a[i] * b[j], p);
    }
    return out;
}

// Remainder of a mod m (m monic of degree >= 1).
Poly poly_rem(Poly a, const Poly& m, long p) {
    const int dm = deg(m);
    for (int da = deg(a); da >= dm; da = deg(a)) {
        const long c = a[static_cast<std::size_t>(da)];
        for (int i = 0; i <= dm; ++i) {
            const std::size_t idx = static_cast<std::size_t>(da - dm + i);
            a[idx] = mod_l(a[idx] - c * m[static_cast<std::size_t>(i)], p);
        }
    }
    a.resize(static_cast<std::size_t>(std::max(dm, 1)), 0);
    return a;
}

Poly poly_gcd(Poly a, Poly b, long p) {
    while (deg(b) >= 0) {
        // Make b monic before reducing; scaling by a unit keeps the ideal.
        Poly bm = b;
        const long lead = bm[static_cast<std::size_t>(deg(bm))];
        const long inv = mod_inverse(BigInt(lead), BigInt(p)).convert_to<long>();
        for (auto& c : bm) c = mod_l(c * inv, p);
        Poly r = poly_rem(a, bm, p);
        a = std::move(bm);
        b = std::move(r);
    }
    return a;
}

Poly poly_pow_mod(Poly base, BigInt e, const Poly& m, long p) {
    Poly result{1};
    base = poly_rem(std::move(base), m, p);
    while (e > 0) {
        if ((e & 1) == 1) result = poly_rem(poly_mul(result, base, p), m, p);
        base = poly_rem(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    result.resize(static_cast<std::size_t>(std::max(deg(m), 1)), 0);
    return result;
}

// f monic of degree k: irreducible iff gcd(f, x^{p^d} - x) is constant for
// every d <= k/2. The d = 1 case is exactly "no roots".
bool is_irreducible(const Poly& f, long p, int k) {
    for (int d = 1; 2 * d <= k; ++d) {
        Poly xp = poly_pow_mod(Poly{0, 1}, pow_int(BigInt(p), static_cast<unsigned>(d)), f, p);
        // xp - x
        if (xp.size() < 2) xp.resize(2, 0);
        xp[1] = mod_l(xp[1] - 1, p);
        const Poly g = poly_gcd(f, xp, p);
        if (deg(g) > 0) return false;
    }
    return true;
}

} // namespace

FqField::FqField(long p, int k) : p_(p), k_(k) {
    if (!is_prime(BigInt(p))) throw NonPrimeModulus("FqField: p must be prime");
    if (k < 1) throw DomainError("FqField: degree must be positive");
    double size = 1;
    for (int i = 0; i < k; ++i) size *= static_cast<double>(p);
    if (size > static_cast<double>(kMaxFieldSize) * 1000)
        throw DomainError("FqField: field too large for desk-scale use");

    if (k == 1) {
        mod_ = {0};
        return;
    }
    // Lexicographic search over constant-first coefficient tuples.
    std::vector<long> c(static_cast<std::size_t>(k), 0);
    for (;;) {
        Poly f(c.begin(), c.end());
        f.push_back(1); // monic x^k
        if (is_irreducible(f, p, k)) {
            mod_ = c;
            return;
        }
        int i = 0;
        while (i < k && ++c[static_cast<std::size_t>(i)] == p) {
            c[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == k) throw InternalInconsistency("FqField: no irreducible polynomial found");
    }
}

FqField::Elem FqField::one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
}

FqField::Elem FqField::gen() const {
    Elem e = zero();
    if (k_ == 1) e[0] = mod_l(-mod_[0], p_); // t is the root of x + c0
    else e[1] = 1;
    return e;
}

FqField::Elem FqField::from_int(long v) const {
    Elem e = zero();
    e[0] = mod_l(v, p_);
    return e;
}

FqField::Elem FqField::add(const Elem& a, const Elem& b) const {
    Elem out = zero();
    for (int i = 0; i < k_; ++i)
        out[static_cast<std::size_t>(i)] =
            mod_l(a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)], p_);
    return out;
}

FqField::Elem FqField::sub(const Elem& a, const Elem& b) const {
    Elem out = zero();
    for (int i = 0; i < k_; ++i)
        out[static_cast<std::size_t>(i)] =
            mod_l(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)], p_);
    return out;
}

FqField::Elem FqField::mul(const Elem& a, const Elem& b) const {
    if (k_ == 1) return {mod_l(a[0] * b[0], p_)};
    Poly m(mod_.begin(), mod_.end());
    m.push_back(1);
    Poly prod = poly_rem(poly_mul(a, b, p_), m, p_);
    prod.resize(static_cast<std::size_t>(k_), 0);
    return prod;
}

FqField::Elem FqField::pow(Elem a, BigInt e) const {
    Elem result = one();
    while (e > 0) {
        if ((e & 1) == 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

FqField::Elem FqField::frobenius(const Elem& a) const { return pow(a, BigInt(p_)); }

bool FqField::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](long c) { return c == 0; });
}

std::vector<FqField::Elem> FqField::all_elements() const {
    double size = 1;
    for (int i = 0; i < k_; ++i) size *= static_cast<double>(p_);
    if (size > static_cast<double>(kMaxFieldSize))
        throw DomainError("FqField: enumeration limited to fields of size <= 500000");
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(size));
    Elem cur = zero();
    for (;;) {
        out.push_back(cur);
        int i = 0;
        while (i < k_ && ++cur[static_cast<std::size_t>(i)] == p_) {
            cur[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == k_) break;
    }
    return out;
}

std::string FqField::elem_str(const Elem& a) const {
    std::string s = "[";
    for (int i = 0; i < k_; ++i) {
        if (i) s += ",";
        s += std::to_string(a[static_cast<std::size_t>(i)]);
    }
    return s + "]";
}

int frobenius_order(long p, int k) {
    const FqField f(p, k);
    const FqField::Elem t = f.gen();
    FqField::Elem cur = f.frobenius(t);
    int m = 1;
    while (cur != t) {
        cur = f.frobenius(cur);
        ++m;
        if (m > k + 1)
            throw InternalInconsistency("frobenius_order: exceeded the field degree");
    }
    return m;
}

std::map<int, long> subfield_lattice(long p, int k) {
    if (k > 8) throw DomainError("subfield_lattice: degree limited to k <= 8");
    const FqField f(p, k);
    const auto elems = f.all_elements();

    std::map<int, long> out;
    for (int d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        std::vector<FqField::Elem> fixed;
        for (const auto& e : elems) {
            FqField::Elem cur = e;
            for (int i = 0; i < d; ++i) cur = f.frobenius(cur);
            if (cur == e) fixed.push_back(e);
        }
        // Closure under field operations, exhaustive over all pairs.
        std::vector<FqField::Elem> sorted = fixed;
        std::sort(sorted.begin(), sorted.end());
        auto member = [&](const FqField::Elem& e) {
            return std::binary_search(sorted.begin(), sorted.end(), e);
        };
        for (const auto& x : fixed)
            for (const auto& y : fixed) {
                if (!member(f.add(x, y)) || !member(f.mul(x, y)))
                    throw InternalInconsistency(
                        "subfield_lattice: fixed set not closed under field operations");
            }
        out[d] = static_cast<long>(fixed.size());
    }
    return out;
}

CycloAut::CycloAut(long p, int k, BigInt a) : p_(p), k_(k), a_(std::move(a)) {
    if (!is_prime(BigInt(p))) throw NonPrimeModulus("CycloAut: p must be prime");
    if (k < 1) throw DomainError("CycloAut: level exponent must be positive");
    const BigInt mod = pow_int(BigInt(p), static_cast<unsigned>(k));
    a_ %= mod;
    if (a_ < 0) a_ += mod;
    if (gcd(a_, BigInt(p)) != 1)
        throw DomainError("CycloAut: a must be a unit mod p^k");
}

CycloAut CycloAut::compose(const CycloAut& o) const {
    if (p_ != o.p_ || k_ != o.k_)
        throw DomainError("CycloAut: mismatched levels cannot compose");
    return {p_, k_, a_ * o.a_};
}

CycloAut CycloAut::project(int k_lower) const {
    if (k_lower < 1 || k_lower > k_)
        throw DomainError("CycloAut: projection level out of range");
    return {p_, k_lower, a_};
}

std::vector<CycloAut> cyclotomic_tower(long p, int depth, const BigInt& a) {
    if (depth < 1) throw DomainError("cyclotomic_tower: depth must be positive");
    const CycloAut top(p, depth, a);
    std::vector<CycloAut> tower;
    tower.reserve(static_cast<std::size_t>(depth));
    for (int k = 1; k <= depth; ++k) tower.push_back(top.project(k));
    return tower;
}

LAdicTrunc tower_to_ladic(const std::vector<CycloAut>& tower) {
    if (tower.empty()) throw DomainError("tower_to_ladic: empty tower");
    std::vector<BigInt> digits;
    digits.reserve(tower.size());
    for (std::size_t i = 0; i < tower.size(); ++i) {
        if (tower[i].p() != tower[0].p() || tower[i].k() != static_cast<int>(i) + 1)
            throw DomainError("tower_to_ladic: tower levels must be 1..depth over one prime");
        digits.push_back(tower[i].value());
    }
    return LAdicTrunc(BigInt(tower[0].p()), std::move(digits));
}

} // namespace ecmf
