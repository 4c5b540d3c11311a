#include "cfx/exact_arith.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <utility>

namespace cfx {

namespace {

bool is_decimal(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    return text;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    text = trim(text);
    if (!is_decimal(text)) throw ParseError("not an integer: '" + std::string(text) + "'");
    if (text.front() == '+') text.remove_prefix(1);
    Integer out;
    mpz_set_str(out.get_mpz_t(), std::string(text).c_str(), 10);
    return out;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::size_t bit_length(const Integer& value) {
    if (sgn(value) == 0) return 0;
    return mpz_sizeinbase(value.get_mpz_t(), 2);
}

Integer pow(const Integer& base, unsigned long exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Integer exact_div(const Integer& a, const Integer& b) {
    if (sgn(b) == 0) throw DivisionByZero();
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        throw NonDivisible(to_string(b) + " does not divide " + to_string(a));
    }
    Integer out;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (sgn(denominator) == 0) throw DivisionByZero();
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-')) {
        throw ParseError("sign not allowed in denominator: '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

Integer Rational::to_integer() const {
    if (!is_integer()) throw InvalidArgument(to_string() + " is not an integer");
    return value_.get_num();
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    mpq_class out;
    mpq_inv(out.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(out));
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(out.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(std::move(out));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str(10);
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

// ---------------------------------------------------------------------------
// BivarPoly

BivarPoly::BivarPoly(std::vector<Monomial> terms, unsigned max_degree) {
    std::map<std::pair<unsigned, unsigned>, Integer> merged;
    for (auto& m : terms) {
        if (sgn(m.coeff) < 0) throw InvalidArgument("polynomial coefficients must be non-negative");
        if (m.deg_x > max_degree || m.deg_y > max_degree) {
            throw InvalidArgument("polynomial degree exceeds bound " + std::to_string(max_degree));
        }
        if (sgn(m.coeff) == 0) continue;
        if (m.deg_x == 0 && m.deg_y == 0) throw InvalidArgument("polynomial must have zero constant term");
        merged[{m.deg_x, m.deg_y}] += m.coeff;
    }
    if (merged.empty()) throw InvalidArgument("polynomial must be nonzero");
    terms_.reserve(merged.size());
    for (auto& [deg, coeff] : merged) terms_.push_back({deg.first, deg.second, std::move(coeff)});
}

BivarPoly BivarPoly::x() { return BivarPoly({{1, 0, Integer(1)}}); }

BivarPoly BivarPoly::parse(std::string_view text, unsigned max_degree) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw ParseError("empty polynomial");

    std::vector<Monomial> terms;
    std::size_t i = 0;
    auto read_digits = [&](std::size_t& pos) {
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    };
    while (i < s.size()) {
        Monomial m{0, 0, Integer(1)};
        bool have_factor = false;
        const std::string digits = read_digits(i);
        if (!digits.empty()) {
            m.coeff = parse_integer(digits);
            have_factor = true;
        }
        while (i < s.size() && s[i] != '+') {
            if (s[i] == '*') {
                ++i;
                continue;
            }
            const char var = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
            if (var != 'X' && var != 'Y') {
                throw ParseError("unexpected character '" + std::string(1, s[i]) + "' in polynomial '" +
                                 std::string(text) + "'");
            }
            ++i;
            unsigned exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                const std::string e = read_digits(i);
                if (e.empty() || e.size() > 6) throw ParseError("bad exponent in polynomial '" + std::string(text) + "'");
                exponent = static_cast<unsigned>(std::stoul(e));
            }
            (var == 'X' ? m.deg_x : m.deg_y) += exponent;
            have_factor = true;
        }
        if (!have_factor) throw ParseError("empty monomial in polynomial '" + std::string(text) + "'");
        terms.push_back(std::move(m));
        if (i < s.size()) {
            ++i;  // '+'
            if (i == s.size()) throw ParseError("trailing '+' in polynomial '" + std::string(text) + "'");
        }
    }
    return BivarPoly(std::move(terms), max_degree);
}

Integer BivarPoly::eval(const Integer& x, const Integer& y) const {
    Integer sum = 0;
    for (const auto& m : terms_) sum += m.coeff * cfx::pow(x, m.deg_x) * cfx::pow(y, m.deg_y);
    return sum;
}

bool BivarPoly::is_x() const { return terms_.size() == 1 && terms_[0].deg_x == 1 && terms_[0].deg_y == 0 && terms_[0].coeff == 1; }

std::string BivarPoly::to_string() const {
    std::string out;
    for (const auto& m : terms_) {
        if (!out.empty()) out += "+";
        std::string mono;
        if (m.coeff != 1) mono += m.coeff.get_str(10);
        auto factor = [&](char var, unsigned deg) {
            if (deg == 0) return;
            if (!mono.empty()) mono += "*";
            mono += var;
            if (deg > 1) mono += "^" + std::to_string(deg);
        };
        factor('X', m.deg_x);
        factor('Y', m.deg_y);
        out += mono;
    }
    return out;
}

}  // namespace cfx
