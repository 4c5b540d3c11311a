#include "cfx/theta_transforms.hpp"

#include <string>
#include <utility>

namespace cfx {

namespace {

std::vector<Rational> with_leading_one(std::vector<Rational> v) {
    v.insert(v.begin(), Rational(1));
    return v;
}

Rational product(const GeneralizedCF& cf, std::size_t last) {
    Rational p = 1;
    for (std::size_t k = 1; k <= last; ++k) p *= cf.a(k);
    return p;
}

void require_length(const GeneralizedCF& cf, std::size_t needed) {
    if (cf.size() < needed) {
        throw IndexOutOfRange("fraction has " + std::to_string(cf.size()) + " terms, " + std::to_string(needed) +
                              " needed");
    }
}

const Rational& nonzero_q(const ConvergentTable& t, std::size_t k) {
    if (t.Q(k).is_zero()) throw ZeroDenominatorConvergent(k);
    return t.Q(k);
}

}  // namespace

SumSpec::SumSpec(std::vector<Rational> x, std::vector<Rational> y) {
    if (x.empty()) throw InvalidArgument("sum needs n >= 1 terms");
    if (x.size() != y.size()) {
        throw InvalidArgument("x has " + std::to_string(x.size()) + " entries, y has " + std::to_string(y.size()));
    }
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].is_zero()) throw InvalidArgument("x_" + std::to_string(k + 1) + " is zero");
        if (y[k].is_zero()) throw InvalidArgument("y_" + std::to_string(k + 1) + " is zero");
    }
    x_ = with_leading_one(std::move(x));
    y_ = with_leading_one(std::move(y));
}

const Rational& SumSpec::x(std::size_t k) const {
    if (k > n()) throw IndexOutOfRange("x_" + std::to_string(k) + " beyond n = " + std::to_string(n()));
    return x_[k];
}

const Rational& SumSpec::y(std::size_t k) const {
    if (k > n()) throw IndexOutOfRange("y_" + std::to_string(k) + " beyond n = " + std::to_string(n()));
    return y_[k];
}

Rational theta(std::span<const Rational> u, std::size_t k) {
    if (k + 1 >= u.size()) throw IndexOutOfRange("theta u_" + std::to_string(k) + " needs u_" + std::to_string(k + 1));
    if (u[k].is_zero()) throw DivisionByZero();
    return u[k + 1] / u[k];
}

Rational theta2(std::span<const Rational> u, std::size_t k) {
    if (k + 2 >= u.size()) throw IndexOutOfRange("theta^2 u_" + std::to_string(k) + " needs u_" + std::to_string(k + 2));
    if (u[k + 1].is_zero()) throw DivisionByZero();
    return u[k + 2] * u[k] / (u[k + 1] * u[k + 1]);
}

Rational sum_sigma(const SumSpec& s) {
    Rational sum;
    for (std::size_t k = 1; k <= s.n(); ++k) sum += s.y(k) / s.x(k);
    return sum;
}

Rational sum_tau(const SumSpec& s) {
    Rational sum;
    for (std::size_t k = 1; k <= s.n(); ++k) {
        const Rational term = s.y(k) / s.x(k);
        if (k % 2 == 1) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

GeneralizedCF euler_cf(const SumSpec& s) {
    const auto x = s.xs();
    const auto y = s.ys();
    std::vector<CfTerm> terms;
    terms.reserve(s.n());
    terms.push_back({s.y(1), s.x(1)});
    for (std::size_t k = 2; k <= s.n(); ++k) {
        terms.push_back({theta(y, k - 1) * theta(x, k - 2), theta(x, k - 1) - theta(y, k - 1)});
    }
    return GeneralizedCF(std::move(terms));
}

GeneralizedCF hone_cf(const SumSpec& s) {
    const auto x = s.xs();
    const auto y = s.ys();
    const std::size_t n = s.n();
    std::vector<CfTerm> terms;
    terms.reserve(2 * n);
    terms.push_back({s.y(1), s.x(1) - s.y(1)});
    for (std::size_t k = 1; k <= n; ++k) {
        // a_{2k}, b_{2k}
        terms.push_back({theta(y, k - 1), s.x(k - 1)});
        if (2 * k + 1 > 2 * n) break;
        // a_{2k+1}, b_{2k+1}
        terms.push_back({theta2(y, k - 1), (theta2(x, k - 1) - theta2(y, k - 1)) / s.x(k - 1)});
    }
    return GeneralizedCF(std::move(terms));
}

namespace {

// Terms shared by varona_cf and varona_aux_cf. `aux` selects the a_3, b_3,
// a_4 entries of the auxiliary form.
GeneralizedCF varona_terms(const SumSpec& s, bool aux) {
    const std::size_t n = s.n();
    if (n < 2) throw PreconditionViolated("Varona transform needs n >= 2");
    const auto x = s.xs();
    const auto y = s.ys();
    const std::size_t length = 3 * n - 4;

    auto term = [&](std::size_t i) -> CfTerm {
        switch (i) {
            case 1:
                return {s.y(1) * s.y(1), s.x(1) * s.y(1)};
            case 2:
                return {s.x(1) * s.y(2), theta(x, 1) - theta(y, 1)};
            case 3:
                if (aux) return {theta(y, 2) / s.x(1), theta(x, 2) / s.x(2) - 1};
                return {theta(y, 2), theta2(x, 1) - s.x(1)};
            case 4:
                return {aux ? Rational(1) : s.x(1), 1};
            default:
                break;
        }
        // i >= 5: i = 3k-1, 3k or 3k+1 with k >= 2.
        const std::size_t k = (i + 1) / 3;
        switch (i % 3) {
            case 2:
                return {s.y(k + 1), s.x(k) * s.y(k) - s.y(k + 1)};
            case 0:
                return {s.y(k) * theta2(y, k), (theta2(x, k) - theta2(y, k)) / s.x(k) - 1};
            default:
                return {1, 1};
        }
    };

    std::vector<CfTerm> terms;
    terms.reserve(length);
    for (std::size_t i = 1; i <= length; ++i) terms.push_back(term(i));
    return GeneralizedCF(std::move(terms));
}

}  // namespace

GeneralizedCF varona_cf(const SumSpec& s) { return varona_terms(s, false); }

GeneralizedCF varona_aux_cf(const SumSpec& s) { return varona_terms(s, true); }

std::vector<Rational> cf_to_sum_euler(const GeneralizedCF& cf, std::size_t n) {
    if (n < 1) throw InvalidArgument("need n >= 1");
    require_length(cf, n);
    const auto t = convergents(cf, n);
    for (std::size_t k = 0; k <= n; ++k) nonzero_q(t, k);

    std::vector<Rational> out;
    out.reserve(n);
    Rational numerators = 1;
    for (std::size_t k = 0; k < n; ++k) {
        numerators *= cf.a(k + 1);
        Rational term = numerators / (t.Q(k + 1) * t.Q(k));
        out.push_back(k % 2 == 0 ? term : -term);
    }
    return out;
}

std::vector<Rational> cf_to_sum_hone(const GeneralizedCF& cf, std::size_t n) {
    if (n < 1) throw InvalidArgument("need n >= 1");
    require_length(cf, 2 * n);
    const auto t = convergents(cf, 2 * n);
    for (std::size_t k = 0; k <= n; ++k) nonzero_q(t, 2 * k);

    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(product(cf, 2 * k + 1) * cf.b(2 * k + 2) / (t.Q(2 * k) * t.Q(2 * k + 2)));
    }
    return out;
}

std::vector<Rational> cf_to_sum_varona(const GeneralizedCF& cf, std::size_t n) {
    if (n < 1) throw InvalidArgument("need n >= 1");
    require_length(cf, 3 * n - 1);
    const auto t = convergents(cf, 3 * n - 1);
    nonzero_q(t, 1);
    nonzero_q(t, 2);
    for (std::size_t k = 1; k < n; ++k) {
        nonzero_q(t, 3 * k - 1);
        nonzero_q(t, 3 * k + 2);
    }

    std::vector<Rational> out;
    out.reserve(n + 1);
    out.push_back(cf.a(1) / t.Q(1));
    out.push_back(-(cf.a(1) * cf.a(2)) / (t.Q(1) * t.Q(2)));
    for (std::size_t k = 1; k < n; ++k) {
        Rational term = product(cf, 3 * k) * (cf.b(3 * k + 1) * cf.b(3 * k + 2) + cf.a(3 * k + 2)) /
                        (t.Q(3 * k - 1) * t.Q(3 * k + 2));
        out.push_back(k % 2 == 1 ? term : -term);
    }
    return out;
}

}  // namespace cfx
