#include <doctest.h>

#include "cfx/verify.hpp"

using namespace cfx;

TEST_CASE("every suite passes") {
    for (const auto& name : suite_names()) {
        const auto report = run_suite(name, 60, 7);
        CAPTURE(name);
        CHECK(report.suite == name);
        CHECK(report.trials == 60);
        CHECK(report.ok());
        for (const auto& f : report.failures) MESSAGE(f);
    }
}

TEST_CASE("reports are reproducible") {
    Rng a(99), b(99);
    for (int i = 0; i < 20; ++i) {
        CHECK(random_cf(a, 5, 9) == random_cf(b, 5, 9));
        const auto sa = random_int_sumspec(a, 4, 1, 100);
        const auto sb = random_int_sumspec(b, 4, 1, 100);
        CHECK(sum_sigma(sa) == sum_sigma(sb));
        CHECK(random_small_poly(a) == random_small_poly(b));
    }
    const auto r1 = verify_delta(50, 5);
    const auto r2 = verify_delta(50, 5);
    CHECK(r1.passed == r2.passed);
    CHECK(r1.failures == r2.failures);
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope", 1, 1), InvalidArgument); }

TEST_CASE("checks report mismatches") {
    std::vector<CfTerm> terms = {{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
    CHECK(check_determinant(GeneralizedCF(terms)).empty());
    const SumSpec s({Rational(2), Rational(3)}, {Rational(1), Rational(1)});
    CHECK(check_euler(s).empty());
    CHECK(check_hone(s).empty());
    CHECK(check_varona(s).empty());
}

TEST_CASE("random generators respect their ranges") {
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto s = random_int_sumspec(rng, 3, 1, 100);
        for (std::size_t k = 1; k <= 3; ++k) {
            CHECK(s.x(k) >= Rational(1));
            CHECK(s.x(k) <= Rational(100));
            CHECK(s.x(k).is_integer());
        }
        const auto cf = random_cf(rng, 4, 9);
        for (std::size_t k = 1; k <= 4; ++k) CHECK_FALSE(cf.a(k).is_zero());
    }
}
