#pragma once

#include <cstddef>

#include "strembed/types.hpp"

// Exponential reference implementations for tiny inputs. They share no code
// with the dynamic programs in metrics.hpp: edit cost comes from an
// iterative-deepening search over edit scripts and LCS from subsequence
// enumeration.
namespace strembed::oracle {

struct Bounds {
    std::size_t max_total_length = 22;  // |x| + |y| for brute_edit
    std::size_t max_shorter_length = 20;  // enumerated string for brute_lcs
};

[[nodiscard]] std::size_t brute_edit(const Str& x, const Str& y, Bounds bounds = {});
[[nodiscard]] std::size_t brute_lcs(const Str& x, const Str& y, Bounds bounds = {});
[[nodiscard]] std::size_t brute_best_alignment(MetricKind kind, const Str& x, const Str& y, Bounds bounds = {});

}  // namespace strembed::oracle
