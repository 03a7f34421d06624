#include "ecmf/apcount.hpp"

#include <cmath>
#include <sstream>

#include "ecmf/errors.hpp"
#include "ecmf/primes.hpp"

namespace ecmf {

namespace {

constexpr std::int64_t kScanLimit = 100'000'000; // O(p) scans stay desk scale

std::uint64_t to_u64(const BigInt& v) { return v.convert_to<std::uint64_t>(); }

BigInt mod_p(const BigInt& v, const BigInt& p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r;
}

BigInt rat_mod_p(const BigRat& v, const BigInt& p) {
    const BigInt d = mod_p(den(v), p);
    if (d == 0) throw NonIntegralModel("model is not integral at p = " + p.str());
    return mod_p(mod_p(num(v), p) * mod_inverse(d, p), p);
}

struct Fp64Cubic {
    std::uint64_t p;
    std::uint64_t c2, c1, c0;
};

Fp64Cubic cubic_mod_p64(const WeierstrassModel& m, const BigInt& p) {
    if (p < 5) throw UnsupportedPrime("point counting needs p >= 5");
    if (!is_prime(p)) throw NonPrimeModulus("point counting: p must be prime");
    if (p > kScanLimit)
        throw DomainError("point counting: p exceeds the naive-scan limit");
    const BigInt inv4 = mod_inverse(4, p);
    const BigInt inv2 = mod_inverse(2, p);
    return {to_u64(p), to_u64(mod_p(rat_mod_p(m.b2(), p) * inv4, p)),
            to_u64(mod_p(rat_mod_p(m.b4(), p) * inv2, p)),
            to_u64(mod_p(rat_mod_p(m.b6(), p) * inv4, p))};
}

std::vector<bool> square_table(std::uint64_t p) {
    std::vector<bool> qr(p, false);
    for (std::uint64_t t = 0; t <= p / 2; ++t) qr[t * t % p] = true;
    return qr;
}

} // namespace

std::uint64_t count_points(const WeierstrassModel& m, const BigInt& p) {
    const Fp64Cubic g = cubic_mod_p64(m, p);
    const std::vector<bool> qr = square_table(g.p);
    std::uint64_t count = 1; // the point at infinity
    for (std::uint64_t x = 0; x < g.p; ++x) {
        const std::uint64_t fx = ((x + g.c2) % g.p * x % g.p + g.c1) % g.p * x % g.p;
        const std::uint64_t v = (fx + g.c0) % g.p;
        if (v == 0) count += 1;
        else if (qr[v]) count += 2;
    }
    return count;
}

std::int64_t ap(const WeierstrassModel& m, const BigInt& p) {
    switch (reduction_type(m, p)) {
    case ReductionType::Good: {
        if (p < 5)
            throw UnsupportedPrime("ap: good reduction at p = " + p.str() +
                                   " is outside the p >= 5 counting range");
        const BigInt v = p + 1 - BigInt(count_points(m, p));
        return v.convert_to<std::int64_t>();
    }
    case ReductionType::Additive: return 0;
    case ReductionType::MultiplicativeSplit: return 1;
    case ReductionType::MultiplicativeNonsplit: return -1;
    }
    return 0;
}

BigInt ap_prime_power(const WeierstrassModel& m, const BigInt& p, unsigned k) {
    if (k == 0) return 1;
    const std::int64_t a_p = ap(m, p);
    const bool good = reduction_type(m, p) == ReductionType::Good;
    BigInt prev2 = 1;        // A_{p^0}
    BigInt prev1 = a_p;      // A_{p^1}
    for (unsigned i = 2; i <= k; ++i) {
        BigInt cur = a_p * prev1;
        if (good) cur -= p * prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

BigInt an(const WeierstrassModel& m, const BigInt& n) {
    if (n <= 0) throw DomainError("an: n must be positive");
    BigInt out = 1;
    for (const auto& [p, e] : factorize(n)) out *= ap_prime_power(m, p, e);
    return out;
}

ApTable build_ap_table(const WeierstrassModel& m, std::int64_t nmax) {
    if (nmax < 1) throw DomainError("ap table: nmax must be positive");
    ApTable table;
    table.model = m.str();
    table.nmax = nmax;

    // Prime data first, reused for every n.
    const std::vector<std::int64_t> primes = primes_up_to(nmax);
    std::map<std::int64_t, std::int64_t> prime_ap;
    for (std::int64_t q : primes) {
        const BigInt p(q);
        try {
            const std::int64_t a_p = ap(m, p);
            prime_ap[q] = a_p;
            if (reduction_type(m, p) == ReductionType::Good &&
                a_p * a_p > 4 * q) {
                std::ostringstream w;
                w << "Hasse bound exceeded at p = " << q << ": a_p = " << a_p;
                table.warnings.push_back(w.str());
            }
        } catch (const UnsupportedPrime&) {
            // good reduction at 2 or 3: A_q has no desk-scale definition here
        }
    }

    for (std::int64_t n = 1; n <= nmax; ++n) {
        BigInt value = 1;
        bool ok = true;
        std::int64_t rest = n;
        for (std::int64_t q : primes) {
            if (q * q > rest && rest > 1) {
                // rest itself is prime
                if (!prime_ap.count(rest)) { ok = false; }
                else value *= prime_ap.at(rest);
                rest = 1;
                break;
            }
            if (rest % q != 0) continue;
            unsigned e = 0;
            while (rest % q == 0) { rest /= q; ++e; }
            if (!prime_ap.count(q)) { ok = false; break; }
            value *= ap_prime_power(m, BigInt(q), e);
            if (rest == 1) break;
        }
        if (!ok) { table.skipped.push_back(n); continue; }
        table.a[n] = value;
    }
    return table;
}

std::string ap_table_csv(const ApTable& table) {
    std::ostringstream out;
    out << "n,a_n\n";
    for (const auto& [n, v] : table.a) out << n << "," << v.str() << "\n";
    return out.str();
}

std::int64_t frey_ap_formula(const FreyData& f, const BigInt& p) {
    if (p < 5) throw UnsupportedPrime("frey_ap_formula: p must be >= 5");
    if (!is_prime(p)) throw NonPrimeModulus("frey_ap_formula: p must be prime");
    if (f.delta % p == 0)
        throw DomainError("frey_ap_formula: p = " + p.str() + " is a bad prime");

    const std::uint64_t pp = to_u64(p);
    const std::vector<bool> qr = square_table(pp);
    const std::uint64_t aP = to_u64(mod_p(pow_int(f.a, f.P), p));
    const std::uint64_t bP = to_u64(mod_p(-pow_int(f.b, f.P), p)); // -b^P mod p
    std::int64_t sum = 0;
    for (std::uint64_t x = 0; x < pp; ++x) {
        const std::uint64_t v = x * ((x + pp - aP) % pp) % pp * ((x + pp - bP) % pp) % pp;
        if (v == 0) continue;
        sum += qr[v] ? 1 : -1;
    }
    return -sum;
}

} // namespace ecmf
