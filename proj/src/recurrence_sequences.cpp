#include "cfx/recurrence_sequences.hpp"

#include <cstdlib>
#include <limits>
#include <utility>

namespace cfx {

namespace {

void check_budget(const Integer& value, std::size_t n, std::size_t bit_budget) {
    if (bit_length(value) > bit_budget) {
        throw BudgetExceeded("x_" + std::to_string(n) + " needs " + std::to_string(bit_length(value)) +
                             " bits, budget is " + std::to_string(bit_budget));
    }
}

bool divides(const Integer& d, const Integer& v) { return sgn(d) != 0 && mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()); }

}  // namespace

std::size_t bit_budget_from_env() {
    const char* env = std::getenv("CFX_BIT_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultBitBudget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) return kDefaultBitBudget;
    return static_cast<std::size_t>(v);
}

PolyRecurrence::PolyRecurrence(std::vector<BivarPoly> fs, bool stationary, Integer x1, std::string description)
    : fs_(std::move(fs)), stationary_(stationary), x1_(std::move(x1)), description_(std::move(description)) {
    if (fs_.empty()) throw InvalidArgument("recurrence needs at least one polynomial");
    if (sgn(x1_) <= 0) throw InvalidArgument("x_1 must be a positive integer");
}

PolyRecurrence PolyRecurrence::stationary(BivarPoly f, Integer x1, std::string description) {
    if (description.empty()) description = "F = " + f.to_string() + ", x1 = " + to_string(x1);
    return PolyRecurrence({std::move(f)}, true, std::move(x1), std::move(description));
}

PolyRecurrence PolyRecurrence::family(std::vector<BivarPoly> fs, Integer x1, std::string description) {
    if (description.empty()) description = "family of " + std::to_string(fs.size()) + " polynomials, x1 = " + to_string(x1);
    return PolyRecurrence(std::move(fs), false, std::move(x1), std::move(description));
}

const BivarPoly& PolyRecurrence::F(std::size_t n) const {
    if (stationary_) return fs_.front();
    if (n >= fs_.size()) {
        throw IndexOutOfRange("F_" + std::to_string(n) + " not given (family has " + std::to_string(fs_.size()) +
                              " polynomials)");
    }
    return fs_[n];
}

SequencePrefix generate(const PolyRecurrence& rec, std::size_t N, std::size_t bit_budget) {
    if (N < 1) throw InvalidArgument("need N >= 1");
    SequencePrefix seq;
    seq.values.reserve(N + 1);
    seq.values.emplace_back(1);
    seq.values.push_back(rec.x1());
    check_budget(rec.x1(), 1, bit_budget);
    for (std::size_t n = 0; n + 2 <= N; ++n) {
        const Integer& xn = seq.values[n];
        const Integer& xn1 = seq.values[n + 1];
        Integer numerator = xn1 * xn1 * (rec.F(n).eval(xn, xn1) + 1);
        // x_n divides the numerator whenever the F constraints hold, so a
        // NonDivisible here means a bug or a malformed recurrence.
        Integer next = exact_div(numerator, xn);
        check_budget(next, n + 2, bit_budget);
        seq.values.push_back(std::move(next));
    }
    return seq;
}

SequencePrefix a001697(std::size_t N, std::size_t bit_budget) {
    if (N < 1) throw InvalidArgument("need N >= 1");
    SequencePrefix seq;
    seq.values.reserve(N + 1);
    seq.values.emplace_back(1);
    Integer partial = 1;
    for (std::size_t n = 0; n < N; ++n) {
        Integer next = seq.values[n] * partial;
        check_budget(next, n + 1, bit_budget);
        partial += next;
        seq.values.push_back(std::move(next));
    }
    return seq;
}

PolyRecurrence a001697_recurrence() { return PolyRecurrence::stationary(BivarPoly::x(), Integer(1), "A001697"); }

bool InvariantReport::all_passed() const { return first_failure() == nullptr; }

const InvariantCheck* InvariantReport::first_failure() const {
    for (const auto& c : checks) {
        if (!c.passed) return &c;
    }
    return nullptr;
}

InvariantReport check_invariants(const SequencePrefix& seq, const PolyRecurrence& rec) {
    InvariantReport report;
    const auto& x = seq.values;
    const std::size_t N = x.empty() ? 0 : x.size() - 1;
    auto add = [&](const char* name, std::size_t index, bool ok) { report.checks.push_back({name, index, ok}); };

    for (std::size_t n = 0; n <= N && !x.empty(); ++n) add("positive", n, sgn(x[n]) > 0);
    for (std::size_t n = 0; n + 1 <= N; ++n) {
        add("divides_next", n + 1, divides(x[n], x[n + 1]));
        // A finite family may stop at F_{N-2}; there is nothing to check then.
        if (!rec.is_stationary() && n >= rec.polys().size()) continue;
        add("divides_F", n, divides(x[n], rec.F(n).eval(x[n], x[n + 1])));
    }
    for (std::size_t n = 0; n + 2 <= N; ++n) {
        bool rec_ok = false;
        if (rec.is_stationary() || n < rec.polys().size()) {
            rec_ok = x[n + 2] * x[n] == x[n + 1] * x[n + 1] * (rec.F(n).eval(x[n], x[n + 1]) + 1);
        }
        add("recurrence", n + 2, rec_ok);
        add("growth", n + 2, x[n + 2] > x[n + 1] * x[n + 1]);
    }
    for (std::size_t n = 2; n <= N; ++n) {
        // x >= 2^e  <=>  bit_length(x) >= e + 1 for positive x.
        bool ok = false;
        if (sgn(x[n]) > 0 && n - 2 < std::numeric_limits<std::size_t>::digits - 1) {
            const std::size_t e = std::size_t{1} << (n - 2);
            ok = bit_length(x[n]) >= e + 1;
        }
        add("min_bound", n, ok);
    }
    return report;
}

}  // namespace cfx
