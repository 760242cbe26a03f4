#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "strembed/alignment.hpp"
#include "strembed/types.hpp"

namespace strembed {

/// Raw distance together with its normalizer: |x|+|y| for indel, max(|x|,|y|)
/// for edit. The normalized value is the exact rational raw/scale.
struct DistanceValue {
    std::uint64_t raw = 0;
    std::uint64_t scale = 1;

    [[nodiscard]] double normalized() const noexcept {
        return static_cast<double>(raw) / static_cast<double>(scale);
    }
};

/// Exact comparison of normalized values.
[[nodiscard]] int compare_normalized(const DistanceValue& a, const DistanceValue& b) noexcept;

enum class LcsKernel {
    automatic,
    dynamic_programming,
    bit_parallel,
    run_length,
};

// Raw kernels over symbol spans; no alphabet checks.
[[nodiscard]] std::size_t lcs_dp(std::span<const Symbol> a, std::span<const Symbol> b);
[[nodiscard]] std::size_t lcs_bit_parallel(std::span<const Symbol> a, std::span<const Symbol> b);
[[nodiscard]] std::size_t lcs_run_length(std::span<const Symbol> a, std::span<const Symbol> b);
[[nodiscard]] std::size_t edit_dp(std::span<const Symbol> a, std::span<const Symbol> b);

/// Kernel `automatic` would pick for inputs of this shape.
[[nodiscard]] LcsKernel select_lcs_kernel(std::span<const Symbol> a, std::span<const Symbol> b);

[[nodiscard]] std::size_t lcs_length(const Str& x, const Str& y, LcsKernel kernel = LcsKernel::automatic);
[[nodiscard]] std::size_t indel_distance(const Str& x, const Str& y, LcsKernel kernel = LcsKernel::automatic);
[[nodiscard]] std::size_t edit_distance(const Str& x, const Str& y);
[[nodiscard]] std::size_t distance(MetricKind kind, const Str& x, const Str& y);

/// Throws PreconditionError when both strings are empty.
[[nodiscard]] DistanceValue normalized_distance(MetricKind kind, const Str& x, const Str& y);

struct TracebackOptions {
    // Subproblems with (|x|+1)(|y|+1) above this many cells are split
    // Hirschberg-style instead of storing the full matrix.
    std::size_t full_matrix_cells = std::size_t{1} << 22;
};

/// Optimal alignment with deterministic tie-breaking: match, then deletion in
/// x, then deletion in y, then substitution.
[[nodiscard]] Alignment optimal_alignment(MetricKind kind, const Str& x, const Str& y, TracebackOptions options = {});

}  // namespace strembed
