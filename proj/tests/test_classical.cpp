#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "ecmf/classical.hpp"
#include "ecmf/errors.hpp"

using namespace ecmf;

TEST_CASE("Pythagorean parametrization") {
    const PythagTriple a = pythag_param(2, 1);
    CHECK(a.x == 4);
    CHECK(a.y == 3);
    CHECK(a.z == 5);

    const PythagTriple b = pythag_param(3, 2);
    CHECK(b.x == 12);
    CHECK(b.y == 5);
    CHECK(b.z == 13);

    CHECK_THROWS_AS(pythag_param(3, 1), DomainError); // both odd
    CHECK_THROWS_AS(pythag_param(1, 2), DomainError); // a <= b
    CHECK_THROWS_AS(pythag_param(4, 2), DomainError); // gcd 2
    CHECK_THROWS_AS(pythag_param(2, 0), DomainError);
}

TEST_CASE("every primitive triple with hypotenuse <= 100 is produced") {
    std::set<std::pair<long, long>> brute; // (even leg, odd leg)
    for (long x = 1; x <= 100; ++x)
        for (long y = 1; y <= 100; ++y) {
            const long zz = x * x + y * y;
            const long z = std::lround(std::sqrt(static_cast<double>(zz)));
            if (z > 100 || z * z != zz) continue;
            if (std::gcd(x, y) != 1) continue;
            brute.insert(x % 2 == 0 ? std::make_pair(x, y) : std::make_pair(y, x));
        }
    REQUIRE_FALSE(brute.empty());

    std::set<std::pair<long, long>> produced;
    for (long a = 1; a * a <= 100; ++a)
        for (long b = 1; b < a; ++b) {
            if (a * a + b * b > 100) continue;
            if (std::gcd(a, b) != 1 || (a + b) % 2 == 0) continue;
            const PythagTriple t = pythag_param(a, b);
            produced.insert({t.x.convert_to<long>(), t.y.convert_to<long>()});
        }
    CHECK(produced == brute);
}

TEST_CASE("exponent reduction") {
    const ExponentReduction r8 = exponent_reduce(8);
    CHECK(r8.kind == ExponentReduction::Kind::Four);
    CHECK(r8.cofactor == 2);

    const ExponentReduction r15 = exponent_reduce(15);
    CHECK(r15.kind == ExponentReduction::Kind::OddPrime);
    CHECK(r15.p == 3);
    CHECK(r15.cofactor == 5);

    const ExponentReduction r3 = exponent_reduce(3);
    CHECK(r3.p == 3);
    CHECK(r3.cofactor == 1);

    CHECK_THROWS_AS(exponent_reduce(2), DomainError);
}

TEST_CASE("exponent reduction is total on 3..10^4 with a consistent witness") {
    for (long n = 3; n <= 10000; ++n) {
        const ExponentReduction r = exponent_reduce(n);
        if (r.kind == ExponentReduction::Kind::Four) {
            CHECK(r.cofactor * 4 == n); // (x^{2^{k-2}})^4 = x^n
        } else {
            CHECK(r.p * r.cofactor == n); // (x^r)^p = x^n
            CHECK(r.p % 2 == 1);
        }
    }
}

TEST_CASE("n = 4 search finds nothing") {
    CHECK(n4_search(50).empty());
    CHECK(n4_search(1).empty());
    CHECK(n4_search(200).empty());
    CHECK_THROWS_AS(n4_search(20000), DomainError);
}

TEST_CASE("Z[rho] lemmas by brute force") {
    const EisensteinLemmaReport r = eisenstein_lemma_check(10);
    CHECK(r.checked == 441);
    CHECK(r.residues_ok);
    CHECK(r.cubes_ok);
    CHECK(r.three_unit_ok);
    CHECK_THROWS_AS(eisenstein_lemma_check(0), DomainError);
    CHECK_THROWS_AS(eisenstein_lemma_check(51), DomainError);
}

TEST_CASE("abc quality") {
    const AbcQuality q = abc_quality(1, 8, 9);
    CHECK(q.rad == 6);
    CHECK(std::abs(q.q - std::log(9.0) / std::log(6.0)) < 1e-12);

    const AbcQuality r = abc_quality(1, 1, 2);
    CHECK(r.rad == 2);
    CHECK(r.q == doctest::Approx(1.0));

    CHECK_THROWS_AS(abc_quality(1, 2, 4), DomainError);
    CHECK_THROWS_AS(abc_quality(2, 2, 4), NotCoprime);
}

TEST_CASE("illustrative exponent bound") {
    CHECK(flt_exponent_bound(1, 8, 9) == 1);
    // 2^n <= rad(2)^{1.5} = 2^{1.5} holds exactly for n = 1.
    CHECK(flt_exponent_bound(1, 1, 2) == 1);
    CHECK_THROWS_AS(flt_exponent_bound(1, 1, 1), DomainError);
}

TEST_CASE("quality scan is sorted and emitted as CSV") {
    const auto rows = abc_quality_scan(1000);
    REQUIRE_FALSE(rows.empty());
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].q >= rows[i].q);

    // The classic high-quality triple below 1000: 3 + 125 = 128 with
    // rad(3 * 125 * 128) = 30 and quality log 128 / log 30 > 1.4.
    CHECK(rows.front().q > 1.4);
    bool found = false;
    for (const auto& r : rows) {
        if (r.q <= 1.4) break;
        if (r.a == 3 && r.b == 125 && r.c == 128) found = true;
    }
    CHECK(found);

    const std::string csv = abc_scan_csv(rows);
    CHECK(csv.rfind("a,b,c,rad,q\n", 0) == 0);
}
