#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ecmf/errors.hpp"
#include "ecmf/galois.hpp"
#include "ecmf/primes.hpp"

using namespace ecmf;

TEST_CASE("F8 is built on t^3 + t + 1 and Frob(t) = t^2") {
    const FqField f(2, 3);
    CHECK(f.modulus() == std::vector<long>{1, 1, 0});
    const auto t = f.gen();
    CHECK(f.frobenius(t) == f.mul(t, t));
    CHECK(f.frobenius(f.zero()) == f.zero());
    CHECK(f.frobenius(f.one()) == f.one());
}

TEST_CASE("Frobenius fixes the prime field") {
    for (long p : {2L, 3L, 5L}) {
        const FqField f(p, 3);
        for (long v = 0; v < p; ++v) {
            const auto e = f.from_int(v);
            CHECK(f.frobenius(e) == e);
        }
    }
}

TEST_CASE("Frobenius is a ring homomorphism") {
    // Exhaustive in F8 and F9.
    for (auto [p, k] : {std::pair<long, int>{2, 3}, {3, 2}}) {
        const FqField f(p, k);
        const auto elems = f.all_elements();
        for (const auto& a : elems)
            for (const auto& b : elems) {
                CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
                CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
            }
    }
    // Random pairs in F_125.
    const FqField f(5, 3);
    const auto elems = f.all_elements();
    std::mt19937 rng(43);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int i = 0; i < 500; ++i) {
        const auto& a = elems[pick(rng)];
        const auto& b = elems[pick(rng)];
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
    }
}

TEST_CASE("Frobenius has order k") {
    CHECK(frobenius_order(2, 3) == 3);
    CHECK(frobenius_order(3, 2) == 2);
    for (long p : {2L, 3L, 5L})
        for (int k = 1; k <= 4; ++k) CHECK(frobenius_order(p, k) == k);
}

TEST_CASE("subfield lattice sizes are p^d") {
    const auto f9 = subfield_lattice(3, 2);
    CHECK(f9.at(1) == 3);
    CHECK(f9.at(2) == 9);

    const auto f8 = subfield_lattice(2, 3);
    CHECK(f8.at(1) == 2);
    CHECK(f8.at(3) == 8);

    const auto f16 = subfield_lattice(2, 4);
    CHECK(f16.at(1) == 2);
    CHECK(f16.at(2) == 4);
    CHECK(f16.at(4) == 16);

    const auto f625 = subfield_lattice(5, 4);
    CHECK(f625.at(1) == 5);
    CHECK(f625.at(2) == 25);
    CHECK(f625.at(4) == 625);

    CHECK_THROWS_AS(subfield_lattice(2, 9), DomainError);
}

TEST_CASE("cyclotomic character values and projection") {
    const CycloAut sigma(3, 2, 2);
    CHECK(sigma.value() == 2);
    CHECK(sigma.project(1).value() == 2); // 2 mod 3

    CHECK(CycloAut::identity(3, 4).value() == 1);
    CHECK_THROWS_AS(CycloAut(3, 2, 6), DomainError); // 6 is not a unit mod 9
}

TEST_CASE("the character is multiplicative") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<long> unit(1, 80);
    const BigInt mod = 81;
    for (int i = 0; i < 300; ++i) {
        const long a = unit(rng), b = unit(rng);
        if (a % 3 == 0 || b % 3 == 0) continue;
        const CycloAut sa(3, 4, a), sb(3, 4, b);
        CHECK(sa.compose(sb).value() == BigInt(a) * b % mod);
    }
}

TEST_CASE("character towers assemble into truncated p-adic units") {
    const auto tower = cyclotomic_tower(3, 4, 2);
    REQUIRE(tower.size() == 4);
    const LAdicTrunc unit = tower_to_ladic(tower);
    CHECK(unit.compatible());
    CHECK(unit.digit(1) == 2);
    CHECK(unit.digit(4) == 2);

    // Composition before or after assembly agrees.
    const auto ta = cyclotomic_tower(3, 4, 5);
    const auto tb = cyclotomic_tower(3, 4, 7);
    std::vector<CycloAut> composed;
    for (std::size_t i = 0; i < ta.size(); ++i) composed.push_back(ta[i].compose(tb[i]));
    CHECK(tower_to_ladic(composed) == tower_to_ladic(ta) * tower_to_ladic(tb));
}
