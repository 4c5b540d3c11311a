#include "cfx/series_expansions.hpp"

#include <string>
#include <utility>
#include <vector>

#include "cfx/theta_transforms.hpp"

namespace cfx {

namespace {

std::string describe_term(const GeneralizedCF& cf, std::size_t k) {
    return "term " + std::to_string(k) + " = (" + cf.a(k).to_string() + ", " + cf.b(k).to_string() + ")";
}

void require_kind(const SeriesSpec& spec, SeriesKind kind) {
    if (spec.kind != kind) {
        throw PreconditionViolated(kind == SeriesKind::S ? "expansion needs an S series" : "expansion needs a T series");
    }
}

// h^{k + offset} for k = 1..n.
std::vector<Rational> powers(const Integer& h, std::size_t n, long offset) {
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) out.emplace_back(pow(h, static_cast<unsigned long>(static_cast<long>(k) + offset)));
    return out;
}

std::vector<Rational> as_rationals(const SequencePrefix& seq, std::size_t first, std::size_t last) {
    std::vector<Rational> out;
    for (std::size_t k = first; k <= last; ++k) out.emplace_back(seq[k]);
    return out;
}

// Hone-form fraction of sum_{n>=0} h^n / x_{n+1} for x = (x_1..x_m) with the
// x_0 = 1 convention; the first numerator is divided by h to go from h*S to S.
std::vector<CfTerm> s_terms(std::vector<Rational> x, const Integer& h) {
    const std::size_t m = x.size();
    const auto cf = hone_cf(SumSpec(std::move(x), powers(h, m, 0)));
    std::vector<CfTerm> terms(cf.terms().begin(), cf.terms().end());
    terms.front().a /= Rational(h);
    return terms;
}

}  // namespace

SeriesSpec::SeriesSpec(PolyRecurrence rec_, Integer h_, SeriesKind kind_, std::size_t truncation_)
    : rec(std::move(rec_)), h(std::move(h_)), kind(kind_), truncation(truncation_) {
    if (h < 1) throw InvalidArgument("h must be a positive integer");
    if (truncation < 1) throw InvalidArgument("truncation must be at least 1");
    if (kind == SeriesKind::T && truncation < 2) throw InvalidArgument("T expansions need truncation >= 2");
}

Rational series_partial_sum(const SequencePrefix& x, const Integer& h, SeriesKind kind, std::size_t m) {
    Rational sum;
    Integer hp = 1;
    for (std::size_t k = 1; k <= m; ++k) {
        const Rational term(hp, x[k]);
        if (kind == SeriesKind::T && k % 2 == 0) {
            sum -= term;
        } else {
            sum += term;
        }
        hp *= h;
    }
    return sum;
}

std::size_t expansion_depth(ExpansionKind kind, std::size_t m) {
    switch (kind) {
    case ExpansionKind::S:
        return 2 * m;
    case ExpansionKind::InvS:
        return 2 * m + 1;
    case ExpansionKind::T:
        if (m < 2) throw InvalidArgument("T truncations start at m = 2");
        return 3 * m - 4;
    }
    throw InvalidArgument("unknown expansion kind");
}

std::optional<std::size_t> first_non_positive_integer_term(const GeneralizedCF& cf, std::size_t from) {
    for (std::size_t k = from; k <= cf.size(); ++k) {
        const auto& [a, b] = cf.term(k);
        if (!a.is_integer() || a.sign() <= 0 || !b.is_integer() || b.sign() <= 0) return k;
    }
    return std::nullopt;
}

GeneralizedCF expand_S(const SeriesSpec& spec, std::size_t bit_budget) {
    require_kind(spec, SeriesKind::S);
    if (spec.rec.x1() <= spec.h) {
        throw PreconditionViolated("S expansion needs x_1 > h (x_1 = " + to_string(spec.rec.x1()) +
                                   ", h = " + to_string(spec.h) + "); use the shifted 1/S expansion");
    }
    const auto seq = generate(spec.rec, spec.truncation, bit_budget);
    GeneralizedCF cf(s_terms(as_rationals(seq, 1, spec.truncation), spec.h));
    if (const auto bad = first_non_positive_integer_term(cf)) {
        throw PreconditionViolated("S expansion " + describe_term(cf, *bad) + " is not a positive integer");
    }
    return cf;
}

ShiftedExpansion expand_inv_S_shifted(const SeriesSpec& spec, std::size_t bit_budget) {
    require_kind(spec, SeriesKind::S);
    const Integer& h = spec.h;

    // Least N with x_{N+1} > h.
    std::size_t N = 0;
    try {
        SequencePrefix probe = generate(spec.rec, 1, bit_budget);
        while (probe[N + 1] <= h) {
            ++N;
            probe = generate(spec.rec, N + 1, bit_budget);
        }
    } catch (const BudgetExceeded& e) {
        throw PrefixTooShort(std::string("no x_{N+1} > h within the bit budget: ") + e.what());
    }

    const std::size_t m = spec.truncation;
    const auto seq = generate(spec.rec, N + m, bit_budget);
    const Integer& x_N = seq[N];

    const Rational head_sum = series_partial_sum(seq, h, SeriesKind::S, N);
    const Integer t = (Rational(x_N) * head_sum).to_integer();

    // S' = sum h^n / x_{N+n+1}, expanded with the x_0 = 1 convention. Its
    // third term then carries 1/x_N; scaling index 3 by x_N clears it.
    auto tail = s_terms(as_rationals(seq, N + 1, N + m), h);
    if (tail.size() >= 3) {
        std::vector<Rational> c(tail.size(), Rational(1));
        c[2] = x_N;
        const auto scaled = equivalence_scale(GeneralizedCF(tail), c);
        tail.assign(scaled.terms().begin(), scaled.terms().end());
    }

    std::vector<CfTerm> terms;
    terms.reserve(tail.size() + 1);
    terms.push_back({Rational(x_N), Rational(t)});
    terms.push_back({Rational(Integer(pow(h, static_cast<unsigned long>(N)) * x_N)) * tail.front().a, tail.front().b});
    terms.insert(terms.end(), tail.begin() + 1, tail.end());

    GeneralizedCF cf(std::move(terms));
    const bool degenerate = N == 0;
    if (const auto bad = first_non_positive_integer_term(cf, degenerate ? 2 : 1)) {
        throw PreconditionViolated("1/S expansion " + describe_term(cf, *bad) + " is not a positive integer");
    }
    return {ShiftData{N, t, x_N}, std::move(cf), degenerate};
}

GeneralizedCF expand_T_formal(const SeriesSpec& spec, std::size_t bit_budget) {
    require_kind(spec, SeriesKind::T);
    const std::size_t n = spec.truncation;
    const auto seq = generate(spec.rec, n, bit_budget);
    return varona_cf(SumSpec(as_rationals(seq, 1, n), powers(spec.h, n, -1)));
}

GeneralizedCF expand_T(const SeriesSpec& spec, std::size_t bit_budget) {
    require_kind(spec, SeriesKind::T);
    if (spec.rec.x1() < spec.h) {
        throw PreconditionViolated("T expansion needs x_1 >= h (x_1 = " + to_string(spec.rec.x1()) +
                                   ", h = " + to_string(spec.h) + ")");
    }
    auto cf = expand_T_formal(spec, bit_budget);
    for (std::size_t j = 6; j <= cf.size(); j += 3) {
        if (cf.b(j).is_zero()) {
            throw PreconditionViolated("b_" + std::to_string(j) + " = 0 because F_" + std::to_string(j / 3) +
                                       " = X; use the contracted T expansion");
        }
    }
    if (const auto bad = first_non_positive_integer_term(cf)) {
        throw PreconditionViolated("T expansion " + describe_term(cf, *bad) + " is not a positive integer");
    }
    return cf;
}

GeneralizedCF expand_T_contracted(const SeriesSpec& spec, std::size_t bit_budget) {
    require_kind(spec, SeriesKind::T);
    if (spec.rec.x1() < spec.h) {
        throw PreconditionViolated("T expansion needs x_1 >= h (x_1 = " + to_string(spec.rec.x1()) +
                                   ", h = " + to_string(spec.h) + ")");
    }
    const std::size_t n = spec.truncation;
    for (std::size_t k = 2; k + 2 <= n; ++k) {
        if (!spec.rec.F(k).is_x()) {
            throw PreconditionViolated("contracted T expansion needs F_" + std::to_string(k) + " = X, got " +
                                       spec.rec.F(k).to_string());
        }
    }

    auto cf = expand_T_formal(spec, bit_budget);
    // The zero block of index 3k sits at k + 4 once k - 2 earlier blocks are gone.
    for (std::size_t k = 2; k + 2 <= n; ++k) cf = contract_zero_denominator(cf, k + 4);

    std::vector<Rational> c(cf.size(), Rational(1));
    for (std::size_t p = 5; p <= cf.size(); ++p) c[p - 1] = Rational(spec.h) / (c[p - 2] * cf.a(p));
    cf = equivalence_scale(cf, c);

    if (const auto bad = first_non_positive_integer_term(cf)) {
        throw PreconditionViolated("contracted T expansion " + describe_term(cf, *bad) + " is not a positive integer");
    }
    return cf;
}

RegularCF nouv1(std::size_t N, std::size_t bit_budget) {
    if (N < 1) throw InvalidArgument("nouv1 needs N >= 1");
    if (N == 1) return RegularCF{Integer(1), {}};
    // x_1 = 1 lets the sequence restart at x'_n = x_{n+1} (still x'_0 = 1),
    // where x'_1 = x_2 > h = 1, and S = 1/x_1 + S'.
    const Integer x2 = a001697(2, bit_budget)[2];
    const SeriesSpec shifted(PolyRecurrence::stationary(BivarPoly::x(), x2), Integer(1), SeriesKind::S, N - 1);
    const auto tail = expand_S(shifted, bit_budget);
    return to_regular(GeneralizedCF(std::vector<CfTerm>(tail.terms().begin(), tail.terms().end()), Rational(1)));
}

RegularCF nouv2(std::size_t N, std::size_t bit_budget) {
    if (N < 3) throw InvalidArgument("nouv2 needs N >= 3");
    return to_regular(expand_T_contracted(SeriesSpec(a001697_recurrence(), Integer(1), SeriesKind::T, N), bit_budget));
}

}  // namespace cfx
