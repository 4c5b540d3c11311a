#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cfx/errors.hpp"

namespace cfx {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

Integer parse_integer(std::string_view text);
std::string to_string(const Integer& value);

/// Number of bits in |value| (0 for zero).
std::size_t bit_length(const Integer& value);

Integer pow(const Integer& base, unsigned long exponent);

/// Returns a / b, requiring b | a. Throws NonDivisible otherwise.
Integer exact_div(const Integer& a, const Integer& b);

/*
 * Exact rational number.
 *
 * The value is kept in lowest terms with a positive denominator at all
 * times, so two rationals are equal iff their numerators and denominators
 * are equal. Division by zero throws DivisionByZero instead of reaching GMP.
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const Integer& value) : value_(value) {}
    Rational(const Integer& numerator, const Integer& denominator);

    /// Accepts "p" or "p/q" with optional leading sign.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// The integer value; throws InvalidArgument when the denominator is not 1.
    Integer to_integer() const;

    Rational inverse() const;
    Rational pow(long exponent) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const;
    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// One monomial coeff * X^deg_x * Y^deg_y.
struct Monomial {
    unsigned deg_x = 0;
    unsigned deg_y = 0;
    Integer coeff;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline constexpr unsigned kDefaultMaxDegree = 16;

/*
 * Sparse bivariate polynomial with non-negative integer coefficients and
 * zero constant term, the shape required of the recurrence polynomials
 * F_n(X, Y). Duplicate exponent pairs are merged, zero coefficients dropped,
 * and the remaining terms sorted by (deg_x, deg_y).
 */
class BivarPoly {
public:
    explicit BivarPoly(std::vector<Monomial> terms, unsigned max_degree = kDefaultMaxDegree);

    /// The polynomial X.
    static BivarPoly x();

    /*
     * Parses a sum of monomials such as "X", "X+Y", "X^2*Y + 3*Y" or "2XY".
     * Each monomial is an optional integer coefficient followed by X and Y
     * factors with optional ^exponent.
     */
    static BivarPoly parse(std::string_view text, unsigned max_degree = kDefaultMaxDegree);

    const std::vector<Monomial>& terms() const { return terms_; }

    Integer eval(const Integer& x, const Integer& y) const;

    bool is_x() const;

    std::string to_string() const;

    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

private:
    std::vector<Monomial> terms_;
};

inline Integer poly_eval(const BivarPoly& f, const Integer& x, const Integer& y) { return f.eval(x, y); }

}  // namespace cfx
