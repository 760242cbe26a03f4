#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "strembed/types.hpp"

namespace strembed {

/// Parameters of an indel code C ⊆ Σ^k with |C| = gamma_size and pairwise
/// LCS below lcs_budget = ε·k.
struct EmbedParams {
    std::size_t gamma_size = 0;
    double epsilon = 0.0;
    std::size_t sigma_size = 0;
    std::size_t k = 0;
    std::size_t lcs_budget = 0;
    // True when no k in the admissible interval makes ε·k integral and the
    // budget was rounded instead.
    bool snapped = false;

    [[nodiscard]] double effective_epsilon() const noexcept {
        return static_cast<double>(lcs_budget) / static_cast<double>(k);
    }
    friend bool operator==(const EmbedParams&, const EmbedParams&) = default;
};

/// |Σ| = ⌈32/ε²⌉ and the smallest k in [⌈(2/ε)·log₂γ⌉, 1/ε + (2/ε)·log₂γ]
/// with ε·k integral. Requires 0 < ε < 1/2 and γ >= 1.
[[nodiscard]] EmbedParams plan_parameters(std::size_t gamma_size, double epsilon);

struct BinomialBound {
    double binomial = 0.0;  // C(k, ⌊εk⌋)
    double bound = 0.0;     // 2^{(ε·log₂(1/ε) + 2ε)·k}
};

/// Evaluates both sides of C(k, ⌊εk⌋) <= 2^{(ε log(1/ε) + 2ε)k}; throws
/// InconsistencyError if the inequality fails.
[[nodiscard]] BinomialBound binomial_bound(std::size_t k, double epsilon);

struct IndelCode {
    EmbedParams params;
    std::vector<Str> codewords;  // indexed by Γ-symbol id, each over Σ, length k

    friend bool operator==(const IndelCode&, const IndelCode&) = default;
};

struct GenerateOptions {
    // Candidate samples before giving up; 0 means 64·gamma_size.
    std::size_t attempt_budget = 0;
};

/// Greedy random construction: sample uniform words and keep those whose LCS
/// with every kept word is below the budget. Deterministic per seed.
[[nodiscard]] IndelCode generate_code(const EmbedParams& params, std::uint64_t seed, GenerateOptions options = {});

struct CodeReport {
    std::size_t codewords = 0;
    std::size_t max_pairwise_lcs = 0;
    std::size_t min_pairwise_indel = 0;
    std::size_t worst_pair_first = 0;
    std::size_t worst_pair_second = 0;
    bool lengths_ok = true;
    bool pass = false;
};

[[nodiscard]] CodeReport validate_code(const IndelCode& code);

// Code file: header `sigma_size k epsilon gamma_size`, then one codeword per
// line as space-separated symbol ids.
void write_code(std::ostream& os, const IndelCode& code);
[[nodiscard]] IndelCode read_code(std::istream& is);

}  // namespace strembed
