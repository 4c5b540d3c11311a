#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cfx/cf_core.hpp"
#include "cfx/exact_arith.hpp"

namespace cfx {

/*
 * The finite data x_1..x_n, y_1..y_n of the sums
 *
 *     sigma_n = sum_{k=1}^n y_k / x_k,    tau_n = sum_{k=1}^n (-1)^{k-1} y_k / x_k.
 *
 * x_0 = y_0 = 1 is stored in front, so x(k) and y(k) accept 0 <= k <= n.
 * All entries must be nonzero.
 */
class SumSpec {
public:
    SumSpec(std::vector<Rational> x, std::vector<Rational> y);

    std::size_t n() const { return x_.size() - 1; }

    const Rational& x(std::size_t k) const;
    const Rational& y(std::size_t k) const;

    /// (x_0, x_1, ..., x_n) including the leading 1.
    std::span<const Rational> xs() const { return x_; }
    std::span<const Rational> ys() const { return y_; }

private:
    std::vector<Rational> x_;
    std::vector<Rational> y_;
};

/// theta u_k = u_{k+1} / u_k. The view holds u_0..u_n; requires k <= n-1.
Rational theta(std::span<const Rational> u, std::size_t k);

/// theta^2 u_k = u_{k+2} u_k / u_{k+1}^2. Requires k <= n-2.
Rational theta2(std::span<const Rational> u, std::size_t k);

Rational sum_sigma(const SumSpec& s);
Rational sum_tau(const SumSpec& s);

// Sum -> continued fraction. Each result evaluates (at full length) to the
// stated sum whenever its last convergent denominator is nonzero.

/// n terms, value tau_n. a_1 = y_1, b_1 = x_1,
/// a_k = theta y_{k-1} theta x_{k-2}, b_k = theta x_{k-1} - theta y_{k-1}.
GeneralizedCF euler_cf(const SumSpec& s);

/// 2n terms, value sigma_n.
GeneralizedCF hone_cf(const SumSpec& s);

/// 3n-4 terms (n >= 2), value tau_n.
GeneralizedCF varona_cf(const SumSpec& s);

/// The auxiliary form of varona_cf: the two differ only at indices 3 and 4,
/// and scaling index 3 by x_1 maps this one onto varona_cf.
GeneralizedCF varona_aux_cf(const SumSpec& s);

// Continued fraction -> sum. Each returns the individual summands.

/// Terms (-1)^k a_1...a_{k+1} / (Q_{k+1} Q_k), k = 0..n-1.
std::vector<Rational> cf_to_sum_euler(const GeneralizedCF& cf, std::size_t n);

/// Terms a_1...a_{2k+1} b_{2k+2} / (Q_{2k} Q_{2k+2}), k = 0..n-1; they add up
/// to the 2n-th convergent.
std::vector<Rational> cf_to_sum_hone(const GeneralizedCF& cf, std::size_t n);

/// a_1/Q_1, -a_1 a_2/(Q_1 Q_2), then for k = 1..n-1
/// (-1)^{k-1} a_1...a_{3k} (b_{3k+1} b_{3k+2} + a_{3k+2}) / (Q_{3k-1} Q_{3k+2});
/// they add up to the (3n-1)-th convergent.
std::vector<Rational> cf_to_sum_varona(const GeneralizedCF& cf, std::size_t n);

}  // namespace cfx
