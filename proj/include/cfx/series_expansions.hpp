#pragma once

#include <cstddef>
#include <optional>

#include "cfx/cf_core.hpp"
#include "cfx/recurrence_sequences.hpp"

namespace cfx {

/*
 * Continued fraction expansions of
 *
 *     S = sum_{n>=0} h^n / x_{n+1},    T = sum_{n>=0} (-1)^n h^n / x_{n+1}
 *
 * over a recurrence sequence (x_n). Everything is a finite truncation: an
 * expansion built for `truncation` = n series terms evaluates exactly to the
 * n-th partial sum, and its shorter prefixes to the shorter partial sums:
 *
 *     expand_S           2m terms      -> sum_{k=1}^m h^{k-1} / x_k
 *     expand_T           3m-4 terms    -> sum_{k=1}^m (-1)^{k-1} h^{k-1} / x_k
 *     expand_inv_S_shifted  2m+1 terms -> 1 / (partial S over N+m terms)
 */

enum class SeriesKind { S, T };

struct SeriesSpec {
    SeriesSpec(PolyRecurrence rec, Integer h, SeriesKind kind, std::size_t truncation);

    PolyRecurrence rec;
    Integer h;
    SeriesKind kind;
    std::size_t truncation;
};

/// N is the least index with x_{N+1} > h; t = x_N * sum_{n<N} h^n / x_{n+1}.
struct ShiftData {
    std::size_t N;
    Integer t;
    Integer x_N;
};

struct ShiftedExpansion {
    ShiftData shift;
    GeneralizedCF cf;
    /// Set when N = 0: the head is (1, 0) and b_1 is not positive.
    bool degenerate_head;
};

/// sum_{k=1}^m sign_k h^{k-1} / x_k with sign_k = +1 for S and (-1)^{k-1} for T.
Rational series_partial_sum(const SequencePrefix& x, const Integer& h, SeriesKind kind, std::size_t m);

enum class ExpansionKind { S, T, InvS };

/*
 * CF depth whose value matches the m-th partial sum of an expansion:
 * 2m (S), 3m-4 (T, m >= 2), 2m+1 (1/S over N+m terms). The contracted T
 * form has no such prefix property: the contraction of block k+1 rewrites
 * the last denominator of block k, so only the full expansion is exact.
 */
std::size_t expansion_depth(ExpansionKind kind, std::size_t m);

/// Index of the first term (from `from` on) whose a_k or b_k is not a positive integer.
std::optional<std::size_t> first_non_positive_integer_term(const GeneralizedCF& cf, std::size_t from = 1);

/// Requires x_1 > h. All terms are positive integers.
GeneralizedCF expand_S(const SeriesSpec& spec, std::size_t bit_budget = kDefaultBitBudget);

/// For any h: the expansion of 1/S after shifting past the terms with x_n <= h.
ShiftedExpansion expand_inv_S_shifted(const SeriesSpec& spec, std::size_t bit_budget = kDefaultBitBudget);

/// The T expansion without positivity checks (b_{3k} may be zero).
GeneralizedCF expand_T_formal(const SeriesSpec& spec, std::size_t bit_budget = kDefaultBitBudget);

/// Requires x_1 >= h and no zero partial denominator; every term is checked
/// to be a positive integer.
GeneralizedCF expand_T(const SeriesSpec& spec, std::size_t bit_budget = kDefaultBitBudget);

/// For F_k = X: removes the zero blocks b_{3k} = 0 by contraction, then
/// rescales so every partial numerator from index 5 on equals h. The value
/// is the partial sum over `truncation` terms; prefixes are not partial sums.
GeneralizedCF expand_T_contracted(const SeriesSpec& spec, std::size_t bit_budget = kDefaultBitBudget);

/// [1; 1, x_1, 1, x_2, ..., 1, x_{N-1}] over A001697; value sum_{n=1}^N 1/x_n.
RegularCF nouv1(std::size_t N, std::size_t bit_budget = kDefaultBitBudget);

/// [0; 1, 1, 1, x_1, x_2, ..., x_{N-2}, x_{N-1} - 1] over A001697 (N >= 3);
/// value sum_{n=1}^N (-1)^{n-1}/x_n.
RegularCF nouv2(std::size_t N, std::size_t bit_budget = kDefaultBitBudget);

}  // namespace cfx
