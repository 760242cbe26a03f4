#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "strembed/formula.hpp"
#include "strembed/metrics.hpp"
#include "strembed/types.hpp"

namespace strembed {

/// Thresholds and string length of the gadget for a normalized formula; they
/// depend only on depth and top gate.
struct GadgetShape {
    std::uint64_t t = 0;
    std::uint64_t f = 0;
    std::uint64_t length = 0;
};

[[nodiscard]] GadgetShape gadget_shape(std::size_t depth, Gate top);
[[nodiscard]] GadgetShape thresholds(const NormalizedFormula& phi);

enum class Side { g, h };

struct CompileOptions {
    std::size_t max_depth = 4;
};

/// g(A, φ) when side == g (reads U from `bits`), h(B, φ) otherwise.
[[nodiscard]] Str compile(const NormalizedFormula& phi, Side side, const Bits& bits, CompileOptions options = {});

/// Binary strings g, h with LCS(g, h) in {t, f}; k = |g| = |h|.
struct GadgetPair {
    Str g;
    Str h;
    std::uint64_t t = 0;
    std::uint64_t f = 0;
    std::uint64_t k = 0;
};

[[nodiscard]] GadgetPair compile_pair(const NormalizedFormula& phi, const Bits& a, const Bits& b,
                                      CompileOptions options = {});

/// LCS(g', h') = 9k+T if either child pair reaches T, else 9k+F.
[[nodiscard]] GadgetPair or_gadget(const GadgetPair& left, const GadgetPair& right);
/// LCS(g', h') = 13k+3T+F if both child pairs reach T, else 13k+2T+2F.
[[nodiscard]] GadgetPair and_gadget(const GadgetPair& left, const GadgetPair& right);

[[nodiscard]] bool is_balanced(const Str& s);

struct ConcatReduction {
    Str G;
    Str H;
    std::uint64_t R = 0;
    std::uint64_t S = 0;
    std::uint64_t M = 0;
    std::uint64_t N = 0;  // |G| = |H|
    std::size_t n = 0;
};

/// G = g_1 0^M 1^M g_2 ... g_n and likewise H. M defaults to n·k.
[[nodiscard]] ConcatReduction concat_reduction(const std::vector<GadgetPair>& pairs,
                                               std::optional<std::uint64_t> M = std::nullopt);

struct BinaryReduceOptions {
    std::uint64_t max_length = std::uint64_t{1} << 23;  // guard on |G|
    std::size_t max_synthesis_depth = 8;
    LcsKernel kernel = LcsKernel::run_length;
};

struct BinaryReduction {
    ConcatReduction reduction;
    std::vector<NormalizedFormula> formulas;  // phi_t for t = 1..n
    std::size_t depth = 0;
    Gate top = Gate::and_gate;
    std::uint64_t lcs = 0;  // LCS(G, H)
    std::uint64_t recovered = 0;
};

/// Reduces LCS(x, y) to LCS of two binary strings and recovers it as
/// (LCS(G, H) - R) / S. Needs |x| = |y| and symbols that fit in `bits`.
[[nodiscard]] BinaryReduction binary_reduce_and_recover(const Str& x, const Str& y, std::size_t bits,
                                                        BinaryReduceOptions options = {});

}  // namespace strembed
