#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cfx/exact_arith.hpp"

namespace cfx {

/// One partial numerator / partial denominator pair (a_k, b_k).
struct CfTerm {
    Rational a;
    Rational b;

    friend bool operator==(const CfTerm&, const CfTerm&) = default;
};

/*
 * Finite generalized continued fraction
 *
 *     integer_part + a_1/(b_1 + a_2/(b_2 + ... + a_m/b_m)).
 *
 * Terms are addressed with 1-based indices, matching the usual a_k, b_k
 * subscripts. Partial numerators must be nonzero; partial denominators may be
 * zero (formal fractions are allowed, only evaluation can fail).
 */
class GeneralizedCF {
public:
    explicit GeneralizedCF(std::vector<CfTerm> terms, Rational integer_part = Rational());

    std::size_t size() const { return terms_.size(); }

    const CfTerm& term(std::size_t k) const;
    const Rational& a(std::size_t k) const { return term(k).a; }
    const Rational& b(std::size_t k) const { return term(k).b; }

    std::span<const CfTerm> terms() const { return terms_; }
    const Rational& integer_part() const { return integer_part_; }

    /// The first m terms (1 <= m <= size()).
    GeneralizedCF truncated(std::size_t m) const;

    friend bool operator==(const GeneralizedCF&, const GeneralizedCF&) = default;

private:
    std::vector<CfTerm> terms_;
    Rational integer_part_;
};

/// The (P_k, Q_k) numerators and denominators of the convergents, k = 0..m.
/// The integer part of the fraction is not included.
class ConvergentTable {
public:
    ConvergentTable(std::vector<Rational> p, std::vector<Rational> q);

    std::size_t depth() const { return p_.size() - 1; }
    const Rational& P(std::size_t k) const;
    const Rational& Q(std::size_t k) const;

    /// P_k / Q_k, or nullopt when Q_k = 0.
    std::optional<Rational> value(std::size_t k) const;

private:
    std::vector<Rational> p_;
    std::vector<Rational> q_;
};

/*
 * Runs the three-term recurrence
 *
 *     P_0 = 0, Q_0 = 1, P_1 = a_1, Q_1 = b_1,
 *     P_{k+2} = b_{k+2} P_{k+1} + a_{k+2} P_k   (same for Q)
 *
 * up to depth m. Vanishing Q_k are kept in the table.
 */
ConvergentTable convergents(const GeneralizedCF& cf, std::size_t m);
inline ConvergentTable convergents(const GeneralizedCF& cf) { return convergents(cf, cf.size()); }

/// integer_part + P_m / Q_m. Throws ZeroDenominatorConvergent if Q_m = 0.
Rational eval_cf(const GeneralizedCF& cf, std::size_t m);
inline Rational eval_cf(const GeneralizedCF& cf) { return eval_cf(cf, cf.size()); }

/*
 * Equivalence transformation a'_k = c_k c_{k-1} a_k, b'_k = c_k b_k with
 * c_0 = 1. Every defined convergent value is unchanged; P_k and Q_k are both
 * multiplied by c_1 ... c_k.
 */
GeneralizedCF equivalence_scale(const GeneralizedCF& cf, std::span<const Rational> c);

/*
 * Removes a zero partial denominator b_j = 0 by the concatenation identity
 *
 *   a_{j-1}/(b_{j-1} + a_j/(0 + a_{j+1}/(b_{j+1} + A/(B + ...))))
 *     = a_{j-1}/(b_{j-1} + (a_j/a_{j+1}) b_{j+1} + (a_j A/a_{j+1})/(B + ...)).
 *
 * Terms j and j+1 disappear, so the result is two terms shorter.
 * Requires 2 <= j < size().
 */
GeneralizedCF contract_zero_denominator(const GeneralizedCF& cf, std::size_t j);

/// [a0; q_1, q_2, ...] with all partial numerators equal to 1.
struct RegularCF {
    Integer a0;
    std::vector<Integer> quotients;

    friend bool operator==(const RegularCF&, const RegularCF&) = default;
};

/// Reads cf as a regular continued fraction: integer integer_part, every
/// a_k = 1 and every b_k an integer >= 1. Throws NotRegular otherwise.
RegularCF to_regular(const GeneralizedCF& cf);

/// Exact value of a regular continued fraction (backward evaluation).
Rational eval_regular(const RegularCF& rcf);

}  // namespace cfx
