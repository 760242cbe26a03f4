#pragma once

#include <cstddef>
#include <vector>

#include "strembed/alignment.hpp"
#include "strembed/types.hpp"

// Embeddings between the indel and edit metrics. Outputs live over the input
// alphabet plus one sentinel `$` whose id equals the input alphabet size.
namespace strembed {

[[nodiscard]] inline Symbol sentinel_of(std::size_t alphabet_size) noexcept {
    return static_cast<Symbol>(alphabet_size);
}

/// E1(x) = x, re-tagged over the sentinel-extended alphabet.
[[nodiscard]] Str with_sentinel(const Str& x);

/// x_1 $ x_2 $ ... x_n $; indel distance of images equals twice the edit distance.
[[nodiscard]] Str tiskin_embed(const Str& x);

/// E2(y) = $^n y_1 $^n y_2 ... y_n $^n, length n² + 2n.
[[nodiscard]] Str embed_exact(const Str& y);

/// k = 4/ε, rounded up when not integral. Requires 0 < ε <= 1.
[[nodiscard]] std::size_t apx_block_length(double epsilon);

/// E3(y) = $^n y_1 $^k y_2 $^k ... y_n $^k $^n, length n(k+1) + 2n.
[[nodiscard]] Str embed_apx(const Str& y, double epsilon);
[[nodiscard]] Str embed_apx_k(const Str& y, std::size_t k);

/// Edit alignment of (E1(x), E2(y)) built from an optimal indel alignment of
/// (x, y): deleted parts of x are substituted into sentinel runs.
[[nodiscard]] Alignment construct_exact_alignment(const Str& x, const Str& y, const Alignment& a);

enum class Availability { fully, partially, not_available };

[[nodiscard]] const char* to_string(Availability a) noexcept;

struct ApxReport {
    std::size_t k = 0;
    std::size_t embedded_length = 0;  // Ñ
    // Per block i = 0..l; entry 0 describes the leading unmatched block.
    std::vector<Availability> availability;
    std::vector<std::size_t> gap_length;    // |d^X_i|
    std::vector<std::size_t> spill;         // S_i
    std::vector<std::size_t> missed_match;  // characters of m^X_i left unmatched
    std::size_t deletions_x = 0;
    std::size_t substitutions = 0;
    std::size_t matches = 0;
    std::size_t cost = 0;  // Ñ - n + 2·deletions_x + substitutions

    [[nodiscard]] std::size_t total_spill() const noexcept;
    /// S_i <= ⌈|d^X_i| / (k+1)⌉ for every block.
    [[nodiscard]] bool spill_bounds_hold() const noexcept;
};

struct ApxAlignment {
    Alignment alignment;  // edit alignment of (E1(x), E3(y))
    ApxReport report;
};

/// Left-to-right construction of an edit alignment of (x, E3(y)) from an
/// optimal indel alignment of (x, y).
[[nodiscard]] ApxAlignment construct_apx_alignment(const Str& x, const Str& y, double epsilon, const Alignment& a);
[[nodiscard]] ApxAlignment construct_apx_alignment_k(const Str& x, const Str& y, std::size_t k, const Alignment& a);

}  // namespace strembed
