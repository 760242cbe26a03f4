#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <deque>
#include <vector>

#include "strembed/alignment.hpp"
#include "strembed/random.hpp"
#include "strembed/types.hpp"

// Property suites shared by the CLI `verify` command and the acceptance run.
namespace strembed::verify {

struct Check {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::size_t failures = 0;
    // Worst observed value of the check's ratio or slack, when it has one.
    bool has_worst = false;
    double worst = 0.0;
    std::string note;
    std::string counterexample;

    void fail(std::string example);
    void observe(double value, bool larger_is_worse);
};

struct SuiteReport {
    std::string suite;
    std::deque<Check> checks;  // deque: add() hands out stable references
    double seconds = 0.0;

    [[nodiscard]] bool passed() const;
    Check& add(std::string name);
};

void print_text(std::ostream& os, const SuiteReport& report);
void print_structured(std::ostream& os, const SuiteReport& report);

struct MetricsConfig {
    std::size_t alphabet = 3;
    std::size_t exhaustive_total_length = 8;  // all pairs with |x|+|y| <= this
    std::size_t random_cases = 10000;
    std::size_t random_total_length = 20;
    std::uint64_t seed = 0;
};
[[nodiscard]] SuiteReport run_metrics(const MetricsConfig& config);

struct CodeConfig {
    std::size_t gamma = 256;
    double epsilon = 0.25;
    std::size_t seeds = 100;
    std::uint64_t first_seed = 0;
    double required_success = 0.99;
};
[[nodiscard]] SuiteReport run_code(const CodeConfig& config);

struct AlphaConfig {
    // Sandwich bounds.
    std::size_t gamma = 64;
    double epsilon = 0.25;
    std::size_t pairs = 200;
    std::size_t max_length = 50;
    // Block-structuring on random alignments.
    std::size_t alignments = 1000;
    std::size_t alignment_gamma = 8;
    std::size_t alignment_max_length = 12;
    double alignment_epsilon = 0.25;
    // Lower-bound demonstrators.
    bool demos = true;
    std::uint64_t seed = 0;
};
[[nodiscard]] SuiteReport run_alpha(const AlphaConfig& config);
[[nodiscard]] SuiteReport run_alpha_sandwich(const AlphaConfig& config);
[[nodiscard]] SuiteReport run_block_structuring(const AlphaConfig& config);
[[nodiscard]] SuiteReport run_lower_bound_demos(const AlphaConfig& config);

struct GadgetConfig {
    std::size_t corpus = 200;
    std::size_t max_depth = 3;
    std::size_t max_vars = 3;  // per side
    std::size_t exhaustive_limit = std::size_t{1} << 16;
    std::size_t sampled_assignments = 1000;
    std::size_t depth4_formulas = 4;
    std::size_t depth4_assignments = 50;
    bool binary_recovery = false;
    std::uint64_t seed = 0;
};
[[nodiscard]] SuiteReport run_gadgets(const GadgetConfig& config);
[[nodiscard]] SuiteReport run_binary_recovery();

struct I2eConfig {
    std::size_t cases = 500;
    std::size_t max_n = 12;
    std::size_t max_alphabet = 4;
    std::size_t exact_exhaustive_n = 6;
    std::size_t tiskin_exhaustive_n = 5;
    std::size_t tiskin_random_cases = 1000;
    std::size_t tiskin_random_max_n = 20;
    std::vector<double> epsilons = {1.0, 0.5, 0.25};
    bool exact = true;
    bool approximate = true;
    bool tiskin = true;
    std::uint64_t seed = 0;
};
[[nodiscard]] SuiteReport run_i2e(const I2eConfig& config);

/// A random valid indel alignment of (ex, ey), mixing optimal alignments,
/// thinned block alignments and random monotone walks.
[[nodiscard]] Alignment random_alignment(Rng& rng, const Str& ex, const Str& ey, std::size_t k,
                                         const Alignment& pushed);

/// y derived from x by random insertions, deletions and substitutions.
[[nodiscard]] Str mutate(Rng& rng, const Str& x, std::size_t edits, std::size_t max_length);

[[nodiscard]] std::string render(const Str& s);

}  // namespace strembed::verify
