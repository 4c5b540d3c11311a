#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cfx/exact_arith.hpp"

namespace cfx {

inline constexpr std::size_t kDefaultBitBudget = std::size_t{1} << 20;

/// The bit budget from CFX_BIT_BUDGET if set and valid, else kDefaultBitBudget.
std::size_t bit_budget_from_env();

/*
 * The recurrence
 *
 *     x_{n+2} x_n = x_{n+1}^2 (F_n(x_n, x_{n+1}) + 1),   x_0 = 1,
 *
 * either with one stationary polynomial F or an explicit list F_0, F_1, ...
 */
class PolyRecurrence {
public:
    static PolyRecurrence stationary(BivarPoly f, Integer x1, std::string description = {});
    static PolyRecurrence family(std::vector<BivarPoly> fs, Integer x1, std::string description = {});

    const BivarPoly& F(std::size_t n) const;
    const Integer& x1() const { return x1_; }
    const std::string& description() const { return description_; }
    bool is_stationary() const { return stationary_; }

    /// Polynomials as given (one entry when stationary).
    const std::vector<BivarPoly>& polys() const { return fs_; }

private:
    PolyRecurrence(std::vector<BivarPoly> fs, bool stationary, Integer x1, std::string description);

    std::vector<BivarPoly> fs_;
    bool stationary_;
    Integer x1_;
    std::string description_;
};

/// x_0 .. x_N.
struct SequencePrefix {
    std::vector<Integer> values;

    std::size_t last_index() const { return values.size() - 1; }
    const Integer& operator[](std::size_t n) const { return values.at(n); }

    friend bool operator==(const SequencePrefix&, const SequencePrefix&) = default;
};

/// x_0 .. x_N of the recurrence. Throws BudgetExceeded when a term needs more
/// than `bit_budget` bits.
SequencePrefix generate(const PolyRecurrence& rec, std::size_t N, std::size_t bit_budget = kDefaultBitBudget);

/// A001697 through x_{n+1} = x_n (x_0 + ... + x_n), x_0 = 1.
SequencePrefix a001697(std::size_t N, std::size_t bit_budget = kDefaultBitBudget);

/// The recurrence that generates A001697: F = X, x_1 = 1.
PolyRecurrence a001697_recurrence();

struct InvariantCheck {
    std::string name;
    std::size_t index;
    bool passed;
};

struct InvariantReport {
    std::vector<InvariantCheck> checks;

    bool all_passed() const;
    /// The first failed check, or nullptr.
    const InvariantCheck* first_failure() const;
};

/*
 * Checks a prefix against its recurrence without throwing. Entries:
 *
 *   "positive"       x_n > 0                               index n
 *   "recurrence"     x_{n+2} x_n = x_{n+1}^2 (F_n + 1)     index n+2
 *   "divides_next"   x_n | x_{n+1}                         index n+1
 *   "divides_F"      x_n | F_n(x_n, x_{n+1})               index n
 *   "growth"         x_{n+2} > x_{n+1}^2                   index n+2
 *   "min_bound"      x_n >= 2^(2^(n-2)), n >= 2            index n
 */
InvariantReport check_invariants(const SequencePrefix& seq, const PolyRecurrence& rec);

}  // namespace cfx
