#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cfx/cf_core.hpp"
#include "cfx/recurrence_sequences.hpp"
#include "cfx/theta_transforms.hpp"

namespace cfx {

/*
 * Seeded property suites. Every suite draws its inputs from one
 * std::mt19937_64 seeded with `seed`, so a (suite, trials, seed) triple
 * always produces the same report.
 */

struct SuiteReport {
    std::string suite;
    std::size_t trials = 0;
    std::size_t passed = 0;
    /// Descriptions of the first few failing trials.
    std::vector<std::string> failures;

    bool ok() const { return passed == trials; }
};

inline constexpr std::size_t kMaxReportedFailures = 10;

const std::vector<std::string>& suite_names();

/// Runs a suite by name: delta, euler, hone, varona, lemmas, sequences, series.
/// Throws InvalidArgument for an unknown name.
SuiteReport run_suite(std::string_view suite, std::size_t trials, std::uint64_t seed);

SuiteReport verify_delta(std::size_t trials, std::uint64_t seed);
SuiteReport verify_euler(std::size_t trials, std::uint64_t seed);
SuiteReport verify_hone(std::size_t trials, std::uint64_t seed);
SuiteReport verify_varona(std::size_t trials, std::uint64_t seed);
SuiteReport verify_lemmas(std::size_t trials, std::uint64_t seed);
SuiteReport verify_sequences(std::size_t trials, std::uint64_t seed);
SuiteReport verify_series(std::size_t trials, std::uint64_t seed);

// Generators shared with the tests.

using Rng = std::mt19937_64;

/// Integer entries drawn uniformly from [lo, hi].
SumSpec random_int_sumspec(Rng& rng, std::size_t n, long lo, long hi);

/// Terms with a_k = p/q, b_k = r/s, p, r in [-range, range], q, s in [1, 4]
/// and a_k != 0. b_k is zero with probability about 1/(2 range + 1).
GeneralizedCF random_cf(Rng& rng, std::size_t length, long range);

/// A small polynomial from a fixed pool of monomial sums with X or Y terms.
BivarPoly random_small_poly(Rng& rng);

// Checks used by the suites; each returns an empty string on success and a
// description of the first mismatch otherwise.

std::string check_determinant(const GeneralizedCF& cf);
std::string check_euler(const SumSpec& s);
std::string check_hone(const SumSpec& s);
std::string check_varona(const SumSpec& s);

}  // namespace cfx
