#include <doctest.h>

#include <string>

#include "cfx/series_expansions.hpp"
#include "cfx/verify.hpp"

using namespace cfx;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }
Rational r(const Integer& v) { return Rational(v); }

PolyRecurrence rec_of(const char* f, long x1) { return PolyRecurrence::stationary(BivarPoly::parse(f), Integer(x1)); }

SeriesSpec s_spec(const char* f, long x1, long h, std::size_t n) { return SeriesSpec(rec_of(f, x1), Integer(h), SeriesKind::S, n); }
SeriesSpec t_spec(const char* f, long x1, long h, std::size_t n) { return SeriesSpec(rec_of(f, x1), Integer(h), SeriesKind::T, n); }

// Hand sums straight from the sequence values.
Rational s_sum(const SequencePrefix& x, long h, std::size_t m) {
    Rational s;
    for (std::size_t k = 1; k <= m; ++k) s += Rational(pow(Integer(h), k - 1)) / r(x[k]);
    return s;
}

Rational t_sum(const SequencePrefix& x, long h, std::size_t m) {
    Rational s;
    for (std::size_t k = 1; k <= m; ++k) {
        const Rational term = Rational(pow(Integer(h), k - 1)) / r(x[k]);
        s += k % 2 == 1 ? term : -term;
    }
    return s;
}

}  // namespace

TEST_CASE("series argument checks") {
    CHECK_THROWS_AS(s_spec("X", 2, 0, 3), InvalidArgument);
    CHECK_THROWS_AS(s_spec("X", 2, 1, 0), InvalidArgument);
    CHECK_THROWS_AS(t_spec("X", 2, 1, 1), InvalidArgument);
    CHECK_NOTHROW(t_spec("X", 2, 1, 2));
    CHECK_THROWS_AS(expand_S(t_spec("Y", 3, 1, 3)), PreconditionViolated);
    CHECK_THROWS_AS(expand_T(s_spec("Y", 3, 1, 3)), PreconditionViolated);
}

TEST_CASE("partial sums") {
    const auto x = a001697(4);
    CHECK(series_partial_sum(x, Integer(1), SeriesKind::S, 4) == q(157, 96));
    CHECK(series_partial_sum(x, Integer(1), SeriesKind::T, 4) == q(59, 96));
    CHECK(series_partial_sum(x, Integer(3), SeriesKind::S, 2) == q(5, 2));
    CHECK(series_partial_sum(x, Integer(3), SeriesKind::T, 3) == q(1) - q(3, 2) + q(9, 8));
    CHECK(series_partial_sum(x, Integer(3), SeriesKind::S, 0) == 0);
}

TEST_CASE("truncation depths") {
    CHECK(expansion_depth(ExpansionKind::S, 3) == 6);
    CHECK(expansion_depth(ExpansionKind::T, 2) == 2);
    CHECK(expansion_depth(ExpansionKind::T, 5) == 11);
    CHECK(expansion_depth(ExpansionKind::InvS, 0) == 1);
    CHECK(expansion_depth(ExpansionKind::InvS, 4) == 9);
    CHECK_THROWS_AS(expansion_depth(ExpansionKind::T, 1), InvalidArgument);
}

TEST_CASE("S expansion terms") {
    for (const char* f : {"X", "Y", "X+Y", "X*Y", "X^2"}) {
        for (long h = 1; h <= 3; ++h) {
            const long x1 = h + 2;
            const auto rec = rec_of(f, x1);
            const std::size_t n = 6;
            const auto cf = expand_S(SeriesSpec(rec, Integer(h), SeriesKind::S, n));
            const auto x = generate(rec, n);
            REQUIRE(cf.size() == 2 * n);
            CHECK(cf.term(1) == CfTerm{q(1), q(x1 - h)});
            for (std::size_t k = 1; 2 * k <= cf.size(); ++k) {
                CHECK(cf.term(2 * k) == CfTerm{q(h), r(x[k - 1])});
                if (2 * k + 1 > cf.size()) break;
                const Integer fk = rec.F(k - 1).eval(x[k - 1], x[k]);
                CHECK(cf.term(2 * k + 1) == CfTerm{q(1), Rational(fk, x[k - 1])});
            }
            CHECK_FALSE(first_non_positive_integer_term(cf).has_value());
            for (std::size_t m = 1; m <= n; ++m) CHECK(eval_cf(cf, 2 * m) == s_sum(x, h, m));
        }
    }
}

TEST_CASE("S expansion for F = X") {
    const auto cf = expand_S(s_spec("X", 2, 1, 5));
    CHECK(eval_cf(cf, 2) == q(1, 2));
    CHECK(eval_cf(cf) == s_sum(generate(rec_of("X", 2), 5), 1, 5));
    CHECK(cf.b(6) == 8);
    CHECK(cf.b(8) == 96);
    CHECK_THROWS_AS(expand_S(s_spec("X", 1, 1, 3)), PreconditionViolated);
    CHECK_THROWS_AS(expand_S(s_spec("X", 3, 3, 3)), PreconditionViolated);
}

TEST_CASE("even convergents of the S expansion increase") {
    Rng rng(131);
    for (int i = 0; i < 20; ++i) {
        const long h = 1 + i % 3;
        const auto rec = PolyRecurrence::stationary(random_small_poly(rng), Integer(h + 1 + i % 4));
        const auto cf = expand_S(SeriesSpec(rec, Integer(h), SeriesKind::S, 7));
        const auto t = convergents(cf);
        for (std::size_t m = 1; m < 7; ++m) CHECK(*t.value(2 * m) < *t.value(2 * m + 2));
    }
}

TEST_CASE("shifted 1/S expansion, F = X, x1 = 1, h = 3") {
    const auto e = expand_inv_S_shifted(s_spec("X", 1, 3, 6));
    CHECK(e.shift.N == 2);
    CHECK(e.shift.t == 5);
    CHECK(e.shift.x_N == 2);
    CHECK_FALSE(e.degenerate_head);
    const std::vector<std::pair<long, long>> head = {{2, 5}, {18, 5}, {3, 1}, {2, 1}, {6, 8}, {1, 1}, {3, 96}, {1, 1}, {3, 10368}};
    for (std::size_t k = 1; k <= head.size(); ++k) CHECK(e.cf.term(k) == CfTerm{q(head[k - 1].first), q(head[k - 1].second)});
    CHECK(e.cf.size() == 13);
    CHECK_FALSE(first_non_positive_integer_term(e.cf).has_value());

    const auto x = a001697(8);
    for (std::size_t m = 0; m <= 6; ++m) CHECK(eval_cf(e.cf, 2 * m + 1) == s_sum(x, 3, 2 + m).inverse());
    // t / x_N is the head of S.
    CHECK(Rational(e.shift.t, e.shift.x_N) == s_sum(x, 3, 2));
}

TEST_CASE("shifted 1/S expansion with x1 > h") {
    const auto e = expand_inv_S_shifted(s_spec("X", 3, 1, 4));
    CHECK(e.shift.N == 0);
    CHECK(e.shift.t == 0);
    CHECK(e.degenerate_head);
    CHECK(e.cf.term(1) == CfTerm{q(1), q(0)});
    CHECK_THROWS_AS(eval_cf(e.cf, 1), ZeroDenominatorConvergent);
    const auto x = generate(rec_of("X", 3), 4);
    for (std::size_t m = 1; m <= 4; ++m) CHECK(eval_cf(e.cf, 2 * m + 1) == s_sum(x, 1, m).inverse());
}

TEST_CASE("shifted 1/S expansion over random recurrences") {
    Rng rng(137);
    for (int i = 0; i < 30; ++i) {
        const long h = 1 + i % 4;
        const auto rec = PolyRecurrence::stationary(random_small_poly(rng), Integer(1 + i % 3));
        const auto e = expand_inv_S_shifted(SeriesSpec(rec, Integer(h), SeriesKind::S, 5));
        const auto x = generate(rec, e.shift.N + 5);
        CHECK(x[e.shift.N + 1] > h);
        if (e.shift.N > 0) CHECK(x[e.shift.N] <= h);
        for (std::size_t m = e.degenerate_head ? 1 : 0; m <= 5; ++m) {
            CHECK(eval_cf(e.cf, 2 * m + 1) == s_sum(x, h, e.shift.N + m).inverse());
        }
    }
}

TEST_CASE("shift search respects the bit budget") {
    const SeriesSpec spec(a001697_recurrence(), pow(Integer(10), 100), SeriesKind::S, 2);
    CHECK_THROWS_AS(expand_inv_S_shifted(spec, 200), PrefixTooShort);
    CHECK_NOTHROW(expand_inv_S_shifted(spec));
}

TEST_CASE("T expansion terms") {
    for (const char* f : {"Y", "X+Y", "X*Y", "2X+Y"}) {
        for (long h = 1; h <= 3; ++h) {
            const long x1 = h + (f[0] == 'Y' ? 0 : 1);
            const auto rec = rec_of(f, x1);
            const std::size_t n = 6;
            const auto cf = expand_T(SeriesSpec(rec, Integer(h), SeriesKind::T, n));
            const auto x = generate(rec, n);
            REQUIRE(cf.size() == 3 * n - 4);
            CHECK(cf.term(1) == CfTerm{q(1), r(x[1])});
            CHECK(cf.term(2) == CfTerm{q(h) * r(x[1]), Rational(x[2], x[1]) - h});
            CHECK(cf.term(3) == CfTerm{q(h), r(rec.F(1).eval(x[1], x[2])) + 1 - r(x[1])});
            CHECK(cf.term(4) == CfTerm{r(x[1]), q(1)});
            for (std::size_t k = 2; 3 * k - 1 <= cf.size(); ++k) {
                const Integer hk = pow(Integer(h), k);
                CHECK(cf.term(3 * k - 1) == CfTerm{r(hk), r(x[k] * hk / h - hk)});
                if (3 * k > cf.size()) break;
                const Integer fk = rec.F(k).eval(x[k], x[k + 1]);
                CHECK(cf.term(3 * k) == CfTerm{r(hk / h), Rational(fk, x[k]) - 1});
                CHECK(cf.term(3 * k + 1) == CfTerm{q(1), q(1)});
            }
            CHECK_FALSE(first_non_positive_integer_term(cf).has_value());
            for (std::size_t m = 2; m <= n; ++m) CHECK(eval_cf(cf, 3 * m - 4) == t_sum(x, h, m));
        }
    }
}

TEST_CASE("T expansion preconditions") {
    CHECK_THROWS_AS(expand_T(t_spec("Y", 1, 2, 4)), PreconditionViolated);
    try {
        expand_T(t_spec("X", 1, 1, 5));
        FAIL("expected PreconditionViolated");
    } catch (const PreconditionViolated& e) {
        const std::string what = e.what();
        CHECK(what.find("b_6 = 0") != std::string::npos);
        CHECK(what.find("contracted") != std::string::npos);
    }
    // Below the first zero block the plain form still works for F = X.
    CHECK(eval_cf(expand_T(t_spec("X", 1, 1, 3))) == q(5, 8));
}

TEST_CASE("formal T expansion keeps zero denominators") {
    const auto formal = expand_T_formal(t_spec("X", 1, 1, 6));
    CHECK(formal.size() == 14);
    CHECK(formal.b(6).is_zero());
    CHECK(formal.b(9).is_zero());
    CHECK(formal.b(12).is_zero());
    const auto x = a001697(6);
    for (std::size_t m = 2; m <= 6; ++m) CHECK(eval_cf(formal, 3 * m - 4) == t_sum(x, 1, m));
}

TEST_CASE("contracted T expansion matches the closed display") {
    for (long h = 1; h <= 3; ++h) {
        for (long x1 = h; x1 <= h + 2; ++x1) {
            for (std::size_t n = 3; n <= 7; ++n) {
                const auto rec = rec_of("X", x1);
                const auto x = generate(rec, n);
                const auto cf = expand_T_contracted(SeriesSpec(rec, Integer(h), SeriesKind::T, n));
                std::vector<CfTerm> want = {{q(1), r(x[1])},
                                            {q(h) * r(x[1]), Rational(x[2], x[1]) - h},
                                            {q(h), q(1)},
                                            {r(x[1]), q(1)}};
                for (std::size_t k = 2; k + 2 <= n; ++k) want.push_back({q(h), r(x[k]) - h + 1});
                want.push_back({q(h), r(x[n - 1]) - h});
                CHECK(cf == GeneralizedCF(want));
                CHECK(eval_cf(cf) == t_sum(x, h, n));
                CHECK(eval_cf(expand_T_formal(SeriesSpec(rec, Integer(h), SeriesKind::T, n)), 3 * n - 4) == eval_cf(cf));
            }
        }
    }
}

TEST_CASE("contracted T expansion regular form") {
    const auto r4 = to_regular(expand_T_contracted(t_spec("X", 1, 1, 4)));
    CHECK(r4 == RegularCF{Integer(0), {1, 1, 1, 1, 2, 7}});
    CHECK(eval_regular(r4) == q(59, 96));
    const auto r3 = to_regular(expand_T_contracted(t_spec("X", 1, 1, 3)));
    CHECK(r3 == RegularCF{Integer(0), {1, 1, 1, 1, 1}});
    CHECK(eval_regular(r3) == q(5, 8));
}

TEST_CASE("contracted T expansion needs F = X") {
    CHECK_THROWS_AS(expand_T_contracted(t_spec("Y", 2, 1, 5)), PreconditionViolated);
    CHECK_THROWS_AS(expand_T_contracted(t_spec("X", 1, 2, 5)), PreconditionViolated);
    const auto fam = PolyRecurrence::family(
        {BivarPoly::x(), BivarPoly::x(), BivarPoly::x(), BivarPoly::parse("Y"), BivarPoly::x()}, Integer(1));
    CHECK_THROWS_AS(expand_T_contracted(SeriesSpec(fam, Integer(1), SeriesKind::T, 5)), PreconditionViolated);
    CHECK_NOTHROW(expand_T_contracted(SeriesSpec(fam, Integer(1), SeriesKind::T, 4)));
}

TEST_CASE("regular expansion of the sum of reciprocals") {
    CHECK(nouv1(1) == RegularCF{Integer(1), {}});
    CHECK(nouv1(2) == RegularCF{Integer(1), {1, 1}});
    const auto r4 = nouv1(4);
    CHECK(r4 == RegularCF{Integer(1), {1, 1, 1, 2, 1, 8}});
    CHECK(eval_regular(r4) == q(157, 96));
    const auto x = a001697(9);
    for (std::size_t N = 1; N <= 9; ++N) {
        const auto rc = nouv1(N);
        REQUIRE(rc.quotients.size() == 2 * (N - 1));
        for (std::size_t k = 1; k < N; ++k) {
            CHECK(rc.quotients[2 * k - 2] == 1);
            CHECK(rc.quotients[2 * k - 1] == x[k]);
        }
        CHECK(eval_regular(rc) == s_sum(x, 1, N));
    }
    CHECK_THROWS_AS(nouv1(0), InvalidArgument);
}

TEST_CASE("regular expansion of the alternating sum") {
    CHECK(nouv2(3) == RegularCF{Integer(0), {1, 1, 1, 1, 1}});
    CHECK(nouv2(4) == RegularCF{Integer(0), {1, 1, 1, 1, 2, 7}});
    CHECK(eval_regular(nouv2(4)) == q(59, 96));
    const auto x = a001697(9);
    for (std::size_t N = 3; N <= 9; ++N) {
        const auto rc = nouv2(N);
        REQUIRE(rc.quotients.size() == N + 2);
        CHECK(rc.quotients.back() == x[N - 1] - 1);
        for (std::size_t k = 1; k + 2 <= N; ++k) CHECK(rc.quotients[3 + k - 1] == x[k]);
        CHECK(eval_regular(rc) == t_sum(x, 1, N));
    }
    CHECK_THROWS_AS(nouv2(2), InvalidArgument);
}

TEST_CASE("seeded series suite") {
    const auto report = verify_series(60, 139);
    CHECK(report.passed == report.trials);
    for (const auto& f : report.failures) MESSAGE(f);
}
