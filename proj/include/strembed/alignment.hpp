#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "strembed/types.hpp"

namespace strembed {

/// One aligned position pair. Indices are 0-based; the text format is 1-based.
struct AlignedPair {
    std::size_t i = 0;
    std::size_t j = 0;
    bool substitution = false;

    friend bool operator==(const AlignedPair&, const AlignedPair&) = default;
};

/// A monotone set of aligned pairs between x and y. Unaligned positions are
/// deletions; indel alignments carry matches only.
struct Alignment {
    MetricKind kind = MetricKind::indel;
    std::vector<AlignedPair> pairs;

    friend bool operator==(const Alignment&, const Alignment&) = default;
};

struct CostBreakdown {
    std::size_t matches = 0;
    std::size_t deletions_x = 0;
    std::size_t deletions_y = 0;
    std::size_t substitutions = 0;
    std::size_t total = 0;
};

struct AlignmentViolation {
    enum class Kind { out_of_range, non_monotone, unequal_match, substitution_in_indel, equal_substitution };
    Kind kind;
    std::size_t pair_index;
    std::string message;
};

[[nodiscard]] const char* to_string(AlignmentViolation::Kind kind) noexcept;

/// Returns the first violated invariant, or nullopt when `a` is valid for (x, y).
[[nodiscard]] std::optional<AlignmentViolation> validate_alignment(const Alignment& a, const Str& x, const Str& y);

/// Throws InvalidAlignment carrying the violation message.
void require_valid(const Alignment& a, const Str& x, const Str& y);

[[nodiscard]] CostBreakdown cost(const Alignment& a, const Str& x, const Str& y);

/// Half-open index range [begin, end).
struct Range {
    std::size_t begin = 0;
    std::size_t end = 0;

    [[nodiscard]] std::size_t size() const noexcept { return end - begin; }
    [[nodiscard]] bool empty() const noexcept { return begin == end; }
    friend bool operator==(const Range&, const Range&) = default;
};

/// Block b_i = m_i . d_i: a contiguous matched run followed by a deleted run.
/// Block 0 has an empty matching part.
struct Block {
    Range match;
    Range gap;
};

struct BlockDecomposition {
    std::vector<Block> blocks_x;
    std::vector<Block> blocks_y;

    /// Number of blocks with a matching part.
    [[nodiscard]] std::size_t matched_blocks() const noexcept { return blocks_x.empty() ? 0 : blocks_x.size() - 1; }
};

/// Splits an indel alignment into maximal contiguous match runs and the gaps
/// following them.
[[nodiscard]] BlockDecomposition block_decompose(const Alignment& a, const Str& x, const Str& y);

/// Checks the BlockDecomposition invariants against x and y; returns a
/// description of the first failure.
[[nodiscard]] std::optional<std::string> check_decomposition(const BlockDecomposition& d, const Str& x, const Str& y);

/// Per-codeword-block accounting for alignments between block-encoded strings.
/// segments[i] is the range of ey charged to x-block i.
struct SegmentProfile {
    std::size_t block_length = 0;
    std::vector<Range> segments;
    std::vector<std::size_t> unmatched_x;  // unmatched coordinates inside x-block i
    std::vector<std::size_t> unmatched_y;  // unmatched coordinates inside segment i
    std::vector<std::size_t> block_cost;   // cost_A(i) = unmatched_x[i] + unmatched_y[i]

    [[nodiscard]] std::size_t total() const noexcept;
};

[[nodiscard]] SegmentProfile segment_profile(const Alignment& a, const Str& ex, const Str& ey, std::size_t k);

// Line-oriented text format: header `kind n m`, then one `i j [S]` line per
// pair with 1-based indices.
void write_alignment(std::ostream& os, const Alignment& a, std::size_t n, std::size_t m);

struct ParsedAlignment {
    Alignment alignment;
    std::size_t n = 0;
    std::size_t m = 0;
};

[[nodiscard]] ParsedAlignment read_alignment(std::istream& is);

}  // namespace strembed
