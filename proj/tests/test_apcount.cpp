#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "ecmf/apcount.hpp"
#include "ecmf/errors.hpp"
#include "ecmf/primes.hpp"

using namespace ecmf;

namespace {

const WeierstrassModel kCurve = WeierstrassModel::short_form(1, 1);        // y^2 = x^3 + x + 1
const WeierstrassModel kFrey189 = WeierstrassModel::root_form(0, 1, -8);   // y^2 = x(x-1)(x+8)

} // namespace

TEST_CASE("point counts by brute force values") {
    CHECK(count_points(kCurve, 5) == 9);
    CHECK(count_points(kFrey189, 5) == 8);
    CHECK(count_points(WeierstrassModel::short_form(-1, 0), 5) == 8);
    CHECK_THROWS_AS(count_points(kCurve, 3), UnsupportedPrime);
    CHECK_THROWS_AS(count_points(kCurve, 9), NonPrimeModulus);
}

TEST_CASE("a_p on worked curves") {
    CHECK(ap(kCurve, 5) == -3);
    CHECK(ap(kFrey189, 3) == 1);  // split multiplicative
    CHECK(ap(WeierstrassModel::short_form(0, 3), 3) == 0); // additive
    CHECK_THROWS_AS(ap(kCurve, 2), UnsupportedPrime);      // good at 2, not countable
}

TEST_CASE("prime power recurrence") {
    CHECK(ap_prime_power(kCurve, 5, 2) == 4); // (-3)^2 - 5
    for (long p : {5L, 7L, 11L})
        CHECK(ap_prime_power(kCurve, p, 1) == ap(kCurve, p));

    // Bad multiplicative branch: A_{p^k} = A_p^k.
    CHECK(ap(kFrey189, 2) == 1);
    for (unsigned k = 1; k <= 5; ++k) CHECK(ap_prime_power(kFrey189, 2, k) == 1);

    // Nonsplit gives alternating signs.
    const WeierstrassModel g = WeierstrassModel::root_form(0, 2, -3); // y^2 = x(x-2)(x+3)
    if (reduction_type(g, 5) == ReductionType::MultiplicativeNonsplit)
        for (unsigned k = 1; k <= 4; ++k)
            CHECK(ap_prime_power(g, 5, k) == (k % 2 ? -1 : 1));
}

TEST_CASE("recurrence consistency at good primes") {
    for (long p : {5L, 7L, 11L, 13L, 17L}) {
        const BigInt a = ap(kCurve, p);
        CHECK(ap_prime_power(kCurve, p, 2) == a * a - p);
    }
}

TEST_CASE("a_n is multiplicative") {
    CHECK(an(kCurve, 1) == 1);
    CHECK(an(kCurve, 35) == BigInt(ap(kCurve, 5)) * ap(kCurve, 7));
    CHECK(an(kCurve, 175) == ap_prime_power(kCurve, 5, 2) * BigInt(ap(kCurve, 7)));

    // On a curve bad at both 2 and 3 every n is computable.
    const FreyData f = frey_curve(1, 2, 3, 1);
    std::mt19937 rng(37);
    std::uniform_int_distribution<long> pick(1, 10000);
    int done = 0;
    while (done < 100) {
        const long m = pick(rng), n = pick(rng);
        if (std::gcd(m, n) != 1) continue;
        CHECK(an(f.model, BigInt(m) * n) == an(f.model, m) * an(f.model, n));
        ++done;
    }
}

TEST_CASE("ap table emits ascending CSV and skips uncomputable n") {
    const ApTable t = build_ap_table(kCurve, 20);
    CHECK(t.a.at(1) == 1);
    CHECK(t.a.at(5) == -3);
    CHECK(t.a.count(2) == 0); // good at 2: no desk-scale A_2
    CHECK(std::find(t.skipped.begin(), t.skipped.end(), 2) != t.skipped.end());
    CHECK(t.warnings.empty());

    const std::string csv = ap_table_csv(t);
    CHECK(csv.rfind("n,a_n\n1,1\n", 0) == 0);
    CHECK(ap_table_csv(build_ap_table(kCurve, 20)) == csv); // deterministic

    const ApTable full = build_ap_table(frey_curve(1, 2, 3, 1).model, 12);
    CHECK(full.skipped.empty());
    CHECK(full.a.size() == 12);
}

TEST_CASE("frey a_p formula equals the counting oracle") {
    for (auto [a, b, c] : {std::array<long, 3>{1, 8, 9}, {1, 2, 3}, {2, 3, 5}}) {
        const FreyData f = frey_curve(a, b, c, 1);
        for (std::int64_t p : primes_up_to(50)) {
            if (p < 5 || f.delta % p == 0) continue;
            const std::int64_t formula = frey_ap_formula(f, p);
            CHECK(formula == ap(f.model, p));
            CHECK(formula == p + 1 - static_cast<std::int64_t>(count_points(f.model, p)));
        }
    }
    const FreyData f = frey_curve(1, 8, 9, 1);
    CHECK(frey_ap_formula(f, 5) == -2);
    CHECK_THROWS_AS(frey_ap_formula(f, 3), UnsupportedPrime);
    // (2,3,5) has bad reduction at 5; the formula refuses bad primes.
    CHECK_THROWS_AS(frey_ap_formula(frey_curve(2, 3, 5, 1), 5), DomainError);
}
