#include "ecmf/primes.hpp"

#include <algorithm>

#include "ecmf/errors.hpp"

namespace ecmf {

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    if (n > BigInt(kFactorLimit))
        throw FactorizationLimit("is_prime: argument exceeds trial-division bound 10^12");
    for (BigInt d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n) {
    if (n == 0) throw DomainError("factorize: zero has no factorization");
    if (n < 0) n = -n;
    if (n > BigInt(kFactorLimit))
        throw FactorizationLimit("factorize: argument exceeds trial-division bound 10^12");
    std::vector<std::pair<BigInt, unsigned>> out;
    auto strip = [&](const BigInt& p) {
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (BigInt d = 5; d * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
    std::vector<BigInt> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        BigInt pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt radical(const BigInt& n) {
    if (n <= 0) throw DomainError("radical: argument must be positive");
    BigInt r = 1;
    for (const auto& [p, e] : factorize(n)) r *= p;
    return r;
}

BigInt euler_phi(const BigInt& n) {
    if (n <= 0) throw DomainError("euler_phi: argument must be positive");
    BigInt r = n;
    for (const auto& [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(static_cast<std::size_t>(bound) + 1, true);
    sieve[0] = sieve[1] = false;
    for (std::int64_t i = 2; i * i <= bound; ++i) {
        if (!sieve[static_cast<std::size_t>(i)]) continue;
        for (std::int64_t j = i * i; j <= bound; j += i) sieve[static_cast<std::size_t>(j)] = false;
    }
    for (std::int64_t i = 2; i <= bound; ++i)
        if (sieve[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

int legendre_symbol(const BigInt& a, const BigInt& p) {
    if (!is_prime(p)) throw NonPrimeModulus("legendre_symbol: modulus is not prime");
    if (p == 2) return 0;
    BigInt r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    BigInt e = mod_pow(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

bool is_quadratic_residue(const BigInt& a, const BigInt& p) {
    BigInt r = a % p;
    if (r < 0) r += p;
    if (r == 0) return true;
    if (p == 2) return true;
    return mod_pow(r, (p - 1) / 2, p) == 1;
}

BigInt mod_pow(BigInt base, BigInt exp, const BigInt& mod) {
    base %= mod;
    if (base < 0) base += mod;
    BigInt result = 1;
    while (exp > 0) {
        if ((exp & 1) == 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r;
        old_r = r; r = t;
        t = old_s - q * s;
        old_s = s; s = t;
    }
    if (old_r != 1) throw DomainError("mod_inverse: arguments are not coprime");
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

} // namespace ecmf
