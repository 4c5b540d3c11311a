#include "cfx/verify.hpp"

#include <array>
#include <functional>
#include <sstream>
#include <utility>

#include "cfx/series_expansions.hpp"

namespace cfx {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string mismatch(const std::string& what, std::size_t k, const Rational& got, const Rational& want) {
    return what + " at k=" + std::to_string(k) + ": got " + got.to_string() + ", expected " + want.to_string();
}

std::string describe(const SumSpec& s) {
    std::ostringstream os;
    os << "x=";
    for (std::size_t k = 1; k <= s.n(); ++k) os << (k > 1 ? "," : "") << s.x(k);
    os << " y=";
    for (std::size_t k = 1; k <= s.n(); ++k) os << (k > 1 ? "," : "") << s.y(k);
    return os.str();
}

// a_1 ... a_k.
Rational numerator_product(const GeneralizedCF& cf, std::size_t k) {
    Rational p = 1;
    for (std::size_t i = 1; i <= k; ++i) p *= cf.a(i);
    return p;
}

// Runs `trial` `trials` times; a trial returns "" on success. Exceptions
// count as failures with their message.
SuiteReport run_trials(std::string name, std::size_t trials, const std::function<std::string(std::size_t)>& trial) {
    SuiteReport report{std::move(name), trials, 0, {}};
    for (std::size_t i = 0; i < trials; ++i) {
        std::string why;
        try {
            why = trial(i);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (why.empty()) {
            ++report.passed;
        } else if (report.failures.size() < kMaxReportedFailures) {
            report.failures.push_back("trial " + std::to_string(i) + ": " + why);
        }
    }
    return report;
}

const std::array<const char*, 7> kPolyPool = {"X", "Y", "X+Y", "X*Y", "X^2", "2X+Y", "X+X*Y"};

std::string check_s_config(const PolyRecurrence& rec, const Integer& h, std::size_t depth) {
    const auto cf = expand_S(SeriesSpec(rec, h, SeriesKind::S, depth));
    const auto seq = generate(rec, depth);
    for (std::size_t m = 1; m <= depth; ++m) {
        const Rational got = eval_cf(cf, expansion_depth(ExpansionKind::S, m));
        const Rational want = series_partial_sum(seq, h, SeriesKind::S, m);
        if (got != want) return rec.description() + ": " + mismatch("S truncation", m, got, want);
    }
    return {};
}

std::string check_t_config(const PolyRecurrence& rec, const Integer& h, std::size_t depth) {
    const SeriesSpec spec(rec, h, SeriesKind::T, depth);
    const auto seq = generate(rec, depth);
    const bool contracted = rec.is_stationary() && rec.F(0).is_x();
    const auto formal = expand_T_formal(spec);
    const auto cf = contracted ? expand_T_contracted(spec) : expand_T(spec);
    for (std::size_t m = 2; m <= depth; ++m) {
        const Rational want = series_partial_sum(seq, h, SeriesKind::T, m);
        const std::size_t d = expansion_depth(ExpansionKind::T, m);
        // Contracted prefixes are not partial sums; rebuild at each m.
        const Rational got =
            contracted ? eval_cf(expand_T_contracted(SeriesSpec(rec, h, SeriesKind::T, m))) : eval_cf(cf, d);
        if (got != want) return rec.description() + ": " + mismatch("T truncation", m, got, want);
        const Rational formal_value = eval_cf(formal, d);
        if (formal_value != want) return rec.description() + ": " + mismatch("formal T truncation", m, formal_value, want);
    }
    return {};
}

std::string check_inv_s_config(const PolyRecurrence& rec, const Integer& h, std::size_t depth) {
    const auto e = expand_inv_S_shifted(SeriesSpec(rec, h, SeriesKind::S, depth));
    const auto seq = generate(rec, e.shift.N + depth);
    for (std::size_t m = e.degenerate_head ? 1 : 0; m <= depth; ++m) {
        const Rational got = eval_cf(e.cf, expansion_depth(ExpansionKind::InvS, m));
        const Rational want = series_partial_sum(seq, h, SeriesKind::S, e.shift.N + m).inverse();
        if (got != want) return rec.description() + ": " + mismatch("1/S truncation", m, got, want);
    }
    return {};
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"delta", "euler", "hone", "varona", "lemmas", "sequences", "series"};
    return names;
}

SuiteReport run_suite(std::string_view suite, std::size_t trials, std::uint64_t seed) {
    if (suite == "delta") return verify_delta(trials, seed);
    if (suite == "euler") return verify_euler(trials, seed);
    if (suite == "hone") return verify_hone(trials, seed);
    if (suite == "varona") return verify_varona(trials, seed);
    if (suite == "lemmas") return verify_lemmas(trials, seed);
    if (suite == "sequences") return verify_sequences(trials, seed);
    if (suite == "series") return verify_series(trials, seed);
    throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
}

SumSpec random_int_sumspec(Rng& rng, std::size_t n, long lo, long hi) {
    std::vector<Rational> x, y;
    for (std::size_t k = 0; k < n; ++k) {
        x.emplace_back(uniform(rng, lo, hi));
        y.emplace_back(uniform(rng, lo, hi));
    }
    return SumSpec(std::move(x), std::move(y));
}

GeneralizedCF random_cf(Rng& rng, std::size_t length, long range) {
    std::vector<CfTerm> terms;
    terms.reserve(length);
    for (std::size_t k = 0; k < length; ++k) {
        long p = 0;
        while (p == 0) p = uniform(rng, -range, range);
        const long q = uniform(rng, 1, 4);
        const long r = uniform(rng, -range, range);
        const long s = uniform(rng, 1, 4);
        terms.push_back({Rational(Integer(p), Integer(q)), Rational(Integer(r), Integer(s))});
    }
    return GeneralizedCF(std::move(terms));
}

BivarPoly random_small_poly(Rng& rng) {
    return BivarPoly::parse(kPolyPool[uniform_size(rng, 0, kPolyPool.size() - 1)]);
}

std::string check_determinant(const GeneralizedCF& cf) {
    const auto t = convergents(cf);
    Rational product = 1;
    for (std::size_t k = 0; k < cf.size(); ++k) {
        product *= cf.a(k + 1);
        const Rational lhs = t.P(k + 1) * t.Q(k) - t.P(k) * t.Q(k + 1);
        const Rational rhs = k % 2 == 0 ? product : -product;
        if (lhs != rhs) return mismatch("determinant", k, lhs, rhs);
    }
    return {};
}

std::string check_euler(const SumSpec& s) {
    const auto cf = euler_cf(s);
    const auto t = convergents(cf);
    const auto xs = s.xs();
    for (std::size_t k = 0; k <= s.n(); ++k) {
        if (t.Q(k) != xs[k]) return mismatch("Q_k = x_k", k, t.Q(k), xs[k]);
    }
    for (std::size_t k = 0; k < s.n(); ++k) {
        const Rational want = s.x(k) * s.y(k + 1);
        const Rational got = numerator_product(cf, k + 1);
        if (got != want) return mismatch("a_1...a_{k+1} = x_k y_{k+1}", k, got, want);
    }
    const Rational value = eval_cf(cf);
    if (value != sum_tau(s)) return mismatch("value", s.n(), value, sum_tau(s));
    return {};
}

std::string check_hone(const SumSpec& s) {
    const auto cf = hone_cf(s);
    const auto t = convergents(cf);
    const auto xs = s.xs();
    const auto ys = s.ys();
    for (std::size_t k = 0; k <= s.n(); ++k) {
        if (t.Q(2 * k) != xs[k]) return mismatch("Q_{2k} = x_k", k, t.Q(2 * k), xs[k]);
    }
    for (std::size_t k = 0; k < s.n(); ++k) {
        const Rational q = theta(xs, k) - theta(ys, k);
        if (t.Q(2 * k + 1) != q) return mismatch("Q_{2k+1} = theta x_k - theta y_k", k, t.Q(2 * k + 1), q);
        const Rational got = numerator_product(cf, 2 * k + 1);
        if (got != s.y(k + 1)) return mismatch("a_1...a_{2k+1} = y_{k+1}", k, got, s.y(k + 1));
    }
    const Rational value = eval_cf(cf);
    if (value != sum_sigma(s)) return mismatch("value", s.n(), value, sum_sigma(s));
    return {};
}

std::string check_varona(const SumSpec& s) {
    const std::size_t n = s.n();
    const auto cf = varona_cf(s);
    const auto aux = varona_aux_cf(s);
    const Rational tau = sum_tau(s);

    const Rational value = eval_cf(cf);
    if (value != tau) return mismatch("value", n, value, tau);
    const Rational aux_value = eval_cf(aux);
    if (aux_value != tau) return mismatch("auxiliary value", n, aux_value, tau);

    if (aux.size() >= 3) {
        std::vector<Rational> c(aux.size(), Rational(1));
        c[2] = s.x(1);
        if (equivalence_scale(aux, c) != cf) return "scaling the auxiliary form by c_3 = x_1 does not give the main form";
    }

    const auto t = convergents(aux);
    const auto xs = s.xs();
    const auto ys = s.ys();
    Rational y_prod = 1;
    for (std::size_t k = 1; 3 * k - 1 <= aux.size(); ++k) {
        y_prod *= s.y(k);
        const Rational q2 = y_prod * s.x(k + 1);
        if (t.Q(3 * k - 1) != q2) return mismatch("Q_{3k-1}", k, t.Q(3 * k - 1), q2);
        if (3 * k > aux.size()) break;
        const Rational q3 = y_prod * (theta(xs, k + 1) - s.x(k + 1) + theta(ys, k + 1));
        if (t.Q(3 * k) != q3) return mismatch("Q_{3k}", k, t.Q(3 * k), q3);
        const Rational p3 = s.y(k + 2) * y_prod * y_prod;
        const Rational got = numerator_product(aux, 3 * k);
        if (got != p3) return mismatch("a_1...a_{3k}", k, got, p3);
        if (3 * k + 1 > aux.size()) break;
        const Rational q4 = y_prod * (theta(xs, k + 1) + theta(ys, k + 1));
        if (t.Q(3 * k + 1) != q4) return mismatch("Q_{3k+1}", k, t.Q(3 * k + 1), q4);
    }
    return {};
}

SuiteReport verify_delta(std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    return run_trials("delta", trials, [&](std::size_t) { return check_determinant(random_cf(rng, uniform_size(rng, 1, 16), 9)); });
}

SuiteReport verify_euler(std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    return run_trials("euler", trials, [&](std::size_t) {
        const auto s = random_int_sumspec(rng, uniform_size(rng, 1, 12), 1, 100);
        const auto why = check_euler(s);
        return why.empty() ? why : describe(s) + ": " + why;
    });
}

SuiteReport verify_hone(std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    return run_trials("hone", trials, [&](std::size_t) {
        const auto s = random_int_sumspec(rng, uniform_size(rng, 1, 12), 1, 100);
        const auto why = check_hone(s);
        return why.empty() ? why : describe(s) + ": " + why;
    });
}

SuiteReport verify_varona(std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    return run_trials("varona", trials, [&](std::size_t) {
        const auto s = random_int_sumspec(rng, uniform_size(rng, 2, 12), 1, 100);
        const auto why = check_varona(s);
        return why.empty() ? why : describe(s) + ": " + why;
    });
}

SuiteReport verify_lemmas(std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    return run_trials("lemmas", trials, [&](std::size_t i) -> std::string {
        // Redraw until the convergent denominators the lemma divides by are nonzero.
        for (int attempt = 0; attempt < 100; ++attempt) {
            const auto cf = random_cf(rng, uniform_size(rng, 2, 15), 9);
            const auto t = convergents(cf);
            std::size_t depth = 0;
            std::vector<Rational> terms;
            try {
                if (i % 3 == 0) {
                    const std::size_t n = uniform_size(rng, 1, cf.size());
                    terms = cf_to_sum_euler(cf, n);
                    depth = n;
                } else if (i % 3 == 1) {
                    const std::size_t n = uniform_size(rng, 1, cf.size() / 2);
                    terms = cf_to_sum_hone(cf, n);
                    depth = 2 * n;
                } else {
                    const std::size_t n = uniform_size(rng, 1, (cf.size() + 1) / 3);
                    terms = cf_to_sum_varona(cf, n);
                    depth = 3 * n - 1;
                }
            } catch (const ZeroDenominatorConvergent&) {
                continue;
            }
            Rational sum;
            for (const auto& v : terms) sum += v;
            const Rational want = *t.value(depth);
            if (sum != want) return mismatch("lemma sum vs convergent", depth, sum, want);
            return {};
        }
        return "no fraction with nonzero convergent denominators in 100 draws";
    });
}

SuiteReport verify_sequences(std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    return run_trials("sequences", trials, [&](std::size_t) -> std::string {
        const auto f = random_small_poly(rng);
        const Integer x1 = uniform(rng, 1, 6);
        const auto rec = PolyRecurrence::stationary(f, x1);
        const auto seq = generate(rec, 7);
        const auto report = check_invariants(seq, rec);
        if (const auto* bad = report.first_failure()) {
            return rec.description() + ": " + bad->name + " fails at index " + std::to_string(bad->index);
        }
        if (f.is_x() && x1 == 1 && seq != a001697(7)) return "F = X, x1 = 1 differs from A001697";
        return {};
    });
}

SuiteReport verify_series(std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    constexpr std::size_t kDepth = 8;
    return run_trials("series", trials, [&](std::size_t i) -> std::string {
        const long h = uniform(rng, 1, 3);
        const auto f = random_small_poly(rng);
        if (i % 3 == 0) {
            return check_s_config(PolyRecurrence::stationary(f, Integer(uniform(rng, h + 1, h + 4))), Integer(h), kDepth);
        }
        if (i % 3 == 1) {
            return check_t_config(PolyRecurrence::stationary(f, Integer(uniform(rng, h, h + 3))), Integer(h), kDepth);
        }
        return check_inv_s_config(PolyRecurrence::stationary(f, Integer(uniform(rng, 1, 5))), Integer(h), kDepth - 2);
    });
}

}  // namespace cfx
