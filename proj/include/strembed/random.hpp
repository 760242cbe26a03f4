#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "strembed/types.hpp"

namespace strembed {

// mt19937_64 is fully specified by the standard; the distributions are not,
// so bounded draws go through uniform_below to keep outputs identical across
// standard libraries.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound), bound >= 1 (Lemire's rejection method).
[[nodiscard]] inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    auto product = static_cast<unsigned __int128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            product = static_cast<unsigned __int128>(rng()) * bound;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

/// Uniform integer in [lo, hi].
[[nodiscard]] inline std::uint64_t uniform_between(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + uniform_below(rng, hi - lo + 1);
}

[[nodiscard]] inline bool coin(Rng& rng, std::uint64_t numerator, std::uint64_t denominator) {
    return uniform_below(rng, denominator) < numerator;
}

[[nodiscard]] inline Str random_str(Rng& rng, std::size_t alphabet_size, std::size_t length) {
    std::vector<Symbol> symbols(length);
    for (auto& s : symbols) s = static_cast<Symbol>(uniform_below(rng, alphabet_size));
    return {alphabet_size, std::move(symbols)};
}

}  // namespace strembed
