#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ecmf/eisenstein.hpp"
#include "ecmf/errors.hpp"
#include "ecmf/ladic.hpp"
#include "ecmf/primes.hpp"
#include "ecmf/residue.hpp"

using namespace ecmf;

TEST_CASE("legendre symbol on the worked values") {
    // squares mod 7 are {1, 2, 4}
    CHECK(legendre_symbol(2, 7) == 1);
    CHECK(legendre_symbol(0, 5) == 0);
    CHECK(legendre_symbol(-4, 2) == 0); // the p = 2 convention
    CHECK(legendre_symbol(3, 7) == -1);
    CHECK_THROWS_AS(legendre_symbol(2, 6), NonPrimeModulus);
}

TEST_CASE("Euler criterion for all a < p <= 101") {
    for (std::int64_t p : primes_up_to(101)) {
        if (p == 2) continue;
        for (std::int64_t a = 1; a < p; ++a) {
            const BigInt e = mod_pow(a, (BigInt(p) - 1) / 2, p);
            const int chi = legendre_symbol(a, p);
            CHECK(((chi == 1 && e == 1) || (chi == -1 && e == p - 1)));
        }
    }
}

TEST_CASE("legendre multiplicativity at odd primes") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> dist(1, 1000);
    for (std::int64_t p : {3, 5, 7, 31, 97}) {
        for (int i = 0; i < 200; ++i) {
            const long a = dist(rng), b = dist(rng);
            if (a % p == 0 || b % p == 0) continue;
            CHECK(legendre_symbol(BigInt(a) * b, p) ==
                  legendre_symbol(a, p) * legendre_symbol(b, p));
        }
    }
}

TEST_CASE("radical") {
    CHECK(radical(72) == 6);
    CHECK(radical(1) == 1);
    CHECK(radical(30) == 30);
    CHECK_THROWS_AS(radical(0), DomainError);
    CHECK_THROWS_AS(radical(-4), DomainError);
}

TEST_CASE("radical is squarefree and divides n up to 10^4") {
    for (long n = 1; n <= 10000; ++n) {
        const BigInt r = radical(n);
        CHECK(BigInt(n) % r == 0);
        for (const auto& [p, e] : factorize(r)) CHECK(e == 1);
    }
}

TEST_CASE("Eisenstein norms") {
    CHECK(eis_norm(EisensteinInt::lambda()) == 3);
    CHECK(eis_norm(EisensteinInt{1, 0}) == 1);
    CHECK(eis_norm(EisensteinInt{3, 1}) == 7);
}

TEST_CASE("Eisenstein norm multiplicativity on random pairs") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> dist(-50, 50);
    for (int i = 0; i < 1000; ++i) {
        const EisensteinInt a{dist(rng), dist(rng)};
        const EisensteinInt b{dist(rng), dist(rng)};
        CHECK(eis_norm(a * b) == eis_norm(a) * eis_norm(b));
        CHECK(eis_norm(a) >= 0);
        CHECK((eis_norm(a) == 0) == a.is_zero());
    }
}

TEST_CASE("lambda-adic valuation") {
    CHECK(eis_lambda_valuation(EisensteinInt{3, 0}) == 2); // lambda^2 = -3 rho
    CHECK(eis_lambda_valuation(EisensteinInt::lambda()) == 1);
    CHECK(eis_lambda_valuation(EisensteinInt{2, 0}) == 0);
    CHECK_THROWS_AS(eis_lambda_valuation(EisensteinInt{0, 0}), DomainError);
}

TEST_CASE("valuation is additive on products") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long> dist(-20, 20);
    int done = 0;
    while (done < 300) {
        const EisensteinInt a{dist(rng), dist(rng)};
        const EisensteinInt b{dist(rng), dist(rng)};
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(eis_lambda_valuation(a * b) ==
              eis_lambda_valuation(a) + eis_lambda_valuation(b));
        ++done;
    }
}

TEST_CASE("the six units") {
    CHECK(EisensteinInt::units().size() == 6);
    std::set<std::pair<long, long>> seen;
    for (const auto& u : EisensteinInt::units()) {
        CHECK(u.is_unit());
        seen.insert({u.a().convert_to<long>(), u.b().convert_to<long>()});
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("l-adic truncations on the worked values") {
    const LAdicTrunc x(3, {1, 4, 13});
    const LAdicTrunc y(3, {2, 2, 2});
    const LAdicTrunc sum = x + y;
    CHECK(sum.digits() == std::vector<BigInt>{0, 6, 15});

    const LAdicTrunc minus_one = LAdicTrunc::embed(3, 3, -1);
    CHECK(minus_one.digits() == std::vector<BigInt>{2, 8, 26});

    const LAdicTrunc one = LAdicTrunc::embed(3, 3, 1);
    CHECK((x * one).digits() == x.digits());
}

TEST_CASE("l-adic invariant enforcement and mismatches") {
    CHECK_THROWS_AS(LAdicTrunc(3, {1, 5, 13}), DomainError);       // 5 mod 3 != 1
    CHECK_THROWS_AS(LAdicTrunc(4, {1, 1}), NonPrimeModulus);
    const LAdicTrunc x(3, {1, 4});
    const LAdicTrunc y(5, {1, 1});
    CHECK_THROWS_AS(x + y, DomainError);
    CHECK_THROWS_AS(x * LAdicTrunc(3, {1, 4, 13}), DomainError);   // depth mismatch
}

TEST_CASE("l-adic compatibility is preserved by add and mul") {
    std::mt19937 rng(17);
    // General compatible sequences: a_{n+1} = a_n + (random digit) * l^n.
    auto random_trunc = [&](long ell, unsigned depth) {
        std::uniform_int_distribution<long> digit(0, ell - 1);
        std::vector<BigInt> digits;
        BigInt cur = digit(rng);
        BigInt power = ell;
        for (unsigned n = 1; n <= depth; ++n) {
            digits.push_back(cur);
            cur += digit(rng) * power;
            power *= ell;
        }
        return LAdicTrunc(ell, std::move(digits));
    };
    for (long ell : {2L, 3L, 5L}) {
        for (int i = 0; i < 200; ++i) {
            const LAdicTrunc a = random_trunc(ell, 5);
            const LAdicTrunc b = random_trunc(ell, 5);
            CHECK((a + b).compatible());
            CHECK((a * b).compatible());
        }
    }
}

TEST_CASE("residue ring basics") {
    const ResidueInt a(10, 7), b(5, 7);
    CHECK((a + b).value() == 1);
    CHECK((a * b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((b / a).inverse().value() == (a / b).value());
    CHECK_THROWS_AS(ResidueInt(1, 7) + ResidueInt(1, 5), DomainError);
}
