#include "cfx/cf_core.hpp"

#include <string>
#include <utility>

namespace cfx {

GeneralizedCF::GeneralizedCF(std::vector<CfTerm> terms, Rational integer_part)
    : terms_(std::move(terms)), integer_part_(std::move(integer_part)) {
    if (terms_.empty()) throw InvalidArgument("continued fraction needs at least one term");
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (terms_[k].a.is_zero()) {
            throw InvalidArgument("partial numerator a_" + std::to_string(k + 1) + " is zero");
        }
    }
}

const CfTerm& GeneralizedCF::term(std::size_t k) const {
    if (k < 1 || k > terms_.size()) {
        throw IndexOutOfRange("term index " + std::to_string(k) + " outside 1.." + std::to_string(terms_.size()));
    }
    return terms_[k - 1];
}

GeneralizedCF GeneralizedCF::truncated(std::size_t m) const {
    if (m < 1 || m > terms_.size()) {
        throw IndexOutOfRange("truncation " + std::to_string(m) + " outside 1.." + std::to_string(terms_.size()));
    }
    return GeneralizedCF(std::vector<CfTerm>(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(m)),
                         integer_part_);
}

ConvergentTable::ConvergentTable(std::vector<Rational> p, std::vector<Rational> q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_.empty() || p_.size() != q_.size()) throw InvalidArgument("malformed convergent table");
}

const Rational& ConvergentTable::P(std::size_t k) const {
    if (k > depth()) throw IndexOutOfRange("P_" + std::to_string(k) + " beyond depth " + std::to_string(depth()));
    return p_[k];
}

const Rational& ConvergentTable::Q(std::size_t k) const {
    if (k > depth()) throw IndexOutOfRange("Q_" + std::to_string(k) + " beyond depth " + std::to_string(depth()));
    return q_[k];
}

std::optional<Rational> ConvergentTable::value(std::size_t k) const {
    if (Q(k).is_zero()) return std::nullopt;
    return p_[k] / q_[k];
}

ConvergentTable convergents(const GeneralizedCF& cf, std::size_t m) {
    if (m < 1 || m > cf.size()) {
        throw IndexOutOfRange("depth " + std::to_string(m) + " outside 1.." + std::to_string(cf.size()));
    }
    std::vector<Rational> p(m + 1), q(m + 1);
    p[0] = 0;
    q[0] = 1;
    p[1] = cf.a(1);
    q[1] = cf.b(1);
    for (std::size_t k = 2; k <= m; ++k) {
        const auto& [a, b] = cf.term(k);
        p[k] = b * p[k - 1] + a * p[k - 2];
        q[k] = b * q[k - 1] + a * q[k - 2];
    }
    return ConvergentTable(std::move(p), std::move(q));
}

Rational eval_cf(const GeneralizedCF& cf, std::size_t m) {
    const auto table = convergents(cf, m);
    if (table.Q(m).is_zero()) throw ZeroDenominatorConvergent(m);
    return cf.integer_part() + table.P(m) / table.Q(m);
}

GeneralizedCF equivalence_scale(const GeneralizedCF& cf, std::span<const Rational> c) {
    if (c.size() != cf.size()) {
        throw InvalidArgument("scale vector has " + std::to_string(c.size()) + " entries, fraction has " +
                              std::to_string(cf.size()) + " terms");
    }
    std::vector<CfTerm> out;
    out.reserve(cf.size());
    Rational previous = 1;
    for (std::size_t k = 1; k <= cf.size(); ++k) {
        const Rational& ck = c[k - 1];
        if (ck.is_zero()) throw InvalidArgument("scale factor c_" + std::to_string(k) + " is zero");
        out.push_back({ck * previous * cf.a(k), ck * cf.b(k)});
        previous = ck;
    }
    return GeneralizedCF(std::move(out), cf.integer_part());
}

GeneralizedCF contract_zero_denominator(const GeneralizedCF& cf, std::size_t j) {
    if (j < 2 || j + 1 > cf.size()) {
        throw IndexOutOfRange("contraction index " + std::to_string(j) + " needs 2 <= j < " +
                              std::to_string(cf.size()));
    }
    if (!cf.b(j).is_zero()) throw InvalidArgument("b_" + std::to_string(j) + " is not zero");

    const Rational ratio = cf.a(j) / cf.a(j + 1);
    std::vector<CfTerm> out(cf.terms().begin(), cf.terms().begin() + static_cast<std::ptrdiff_t>(j - 1));
    out.back().b += ratio * cf.b(j + 1);
    for (std::size_t k = j + 2; k <= cf.size(); ++k) {
        CfTerm t = cf.term(k);
        if (k == j + 2) t.a *= ratio;
        out.push_back(std::move(t));
    }
    return GeneralizedCF(std::move(out), cf.integer_part());
}

RegularCF to_regular(const GeneralizedCF& cf) {
    if (!cf.integer_part().is_integer()) throw NotRegular(0, "integer part " + cf.integer_part().to_string());
    RegularCF out{cf.integer_part().to_integer(), {}};
    out.quotients.reserve(cf.size());
    for (std::size_t k = 1; k <= cf.size(); ++k) {
        const auto& [a, b] = cf.term(k);
        if (a != 1) throw NotRegular(k, "partial numerator " + a.to_string());
        if (!b.is_integer() || b < 1) throw NotRegular(k, "partial denominator " + b.to_string());
        out.quotients.push_back(b.to_integer());
    }
    return out;
}

Rational eval_regular(const RegularCF& rcf) {
    if (rcf.quotients.empty()) return Rational(rcf.a0);
    Rational tail = rcf.quotients.back();
    for (auto it = rcf.quotients.rbegin() + 1; it != rcf.quotients.rend(); ++it) tail = Rational(*it) + tail.inverse();
    return Rational(rcf.a0) + tail.inverse();
}

}  // namespace cfx
