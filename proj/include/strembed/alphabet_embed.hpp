#pragma once

#include <cstddef>
#include <functional>

#include "strembed/alignment.hpp"
#include "strembed/indel_code.hpp"
#include "strembed/metrics.hpp"
#include "strembed/types.hpp"

namespace strembed {

/// E(x) = C(x_1) C(x_2) ... C(x_n), a string over Σ of length k·|x|.
[[nodiscard]] Str embed(const IndelCode& code, const Str& x);

/// Lifts an indel alignment of (x, y) to the block alignment of (E(x), E(y))
/// that matches codeword i of x to codeword j of y whenever x_i ~ y_j.
[[nodiscard]] Alignment push_alignment(const Alignment& a, const Str& x, const Str& y, const IndelCode& code);

/// True when every k-block of ex and ey is either perfectly matched to one
/// opposite block (offset t to offset t) or entirely unmatched.
[[nodiscard]] bool is_block_structured(const Alignment& a, const Str& ex, const Str& ey, std::size_t k);

struct BlockStructureResult {
    Alignment stage_one;  // after the significant-match pass
    Alignment output;
    std::size_t perfect_pairs = 0;
};

/// Rewrites an indel alignment of (E(x), E(y)) into a block-structured one.
/// A block pair is significant when more than ⌊ε·k⌋ characters are matched.
[[nodiscard]] BlockStructureResult block_structure_stages(const Alignment& a, const Str& ex, const Str& ey,
                                                          std::size_t k, double epsilon);

[[nodiscard]] Alignment block_structure(const Alignment& a, const Str& ex, const Str& ey, const IndelCode& code,
                                        double epsilon);

/// Inverse of push_alignment on block-structured inputs.
[[nodiscard]] Alignment lift_alignment(const Alignment& a, const Str& x, const Str& y, const IndelCode& code);

/// Black-box embedding Γ^n -> Σ^ℓ(n) used by the lower-bound demonstrators.
using Embedding = std::function<Str(const Str&)>;

struct ContractedPair {
    Str x;
    Str y;
    Str ex;
    Str ey;
    DistanceValue original;  // always 2n / 2n
    DistanceValue embedded;  // strictly below 1
};

/// Scans c^n for c = 0, 1, ... until two embeddings share their first symbol.
[[nodiscard]] ContractedPair find_contracted_pair(const Embedding& e, std::size_t n, std::size_t gamma,
                                                  std::size_t sigma);

struct PluralityCollision {
    Str x;
    Str y;
    Symbol plurality = 0;
    std::size_t embedded_length = 0;  // ℓ(n)
    std::size_t embedded_lcs = 0;
    std::size_t embedded_indel = 0;
    DistanceValue original;
    DistanceValue embedded;
    // σ·Δ_indel(E(X),E(Y)) <= (σ-1)·2ℓ, checked in integers.
    bool certified = false;
};

/// Scans c^n until two embeddings share their plurality symbol (ties go to
/// the smallest symbol).
[[nodiscard]] PluralityCollision find_plurality_collision(const Embedding& e, std::size_t n, std::size_t gamma,
                                                          std::size_t sigma);

}  // namespace strembed
