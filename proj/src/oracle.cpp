#include "strembed/oracle.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <string>

namespace strembed::oracle {

namespace {

// Can x[i..] be turned into y[j..] with at most `budget` edit operations?
bool reachable(std::span<const Symbol> x, std::span<const Symbol> y, std::size_t i, std::size_t j,
               std::size_t budget) {
    const std::size_t rest_x = x.size() - i;
    const std::size_t rest_y = y.size() - j;
    if (rest_x == 0) return rest_y <= budget;
    if (rest_y == 0) return rest_x <= budget;
    const std::size_t gap = rest_x > rest_y ? rest_x - rest_y : rest_y - rest_x;
    if (gap > budget) return false;
    // Equal leading symbols can always be kept without loss.
    if (x[i] == y[j]) return reachable(x, y, i + 1, j + 1, budget);
    if (budget == 0) return false;
    return reachable(x, y, i + 1, j + 1, budget - 1) || reachable(x, y, i + 1, j, budget - 1) ||
           reachable(x, y, i, j + 1, budget - 1);
}

bool is_subsequence(std::span<const Symbol> needle, std::span<const Symbol> hay) {
    std::size_t at = 0;
    for (const Symbol s : needle) {
        while (at < hay.size() && hay[at] != s) ++at;
        if (at == hay.size()) return false;
        ++at;
    }
    return true;
}

}  // namespace

std::size_t brute_edit(const Str& x, const Str& y, Bounds bounds) {
    require_same_alphabet(x, y);
    if (x.size() + y.size() > bounds.max_total_length) {
        throw SizeBoundExceeded("brute_edit: |x|+|y| = " + std::to_string(x.size() + y.size()) + " exceeds " +
                                std::to_string(bounds.max_total_length));
    }
    for (std::size_t budget = 0;; ++budget) {
        if (reachable(x.symbols(), y.symbols(), 0, 0, budget)) return budget;
    }
}

std::size_t brute_lcs(const Str& x, const Str& y, Bounds bounds) {
    require_same_alphabet(x, y);
    const Str& shorter = x.size() <= y.size() ? x : y;
    const Str& longer = x.size() <= y.size() ? y : x;
    if (shorter.size() > bounds.max_shorter_length || shorter.size() >= 63) {
        throw SizeBoundExceeded("brute_lcs: shorter string length " + std::to_string(shorter.size()) +
                                " exceeds " + std::to_string(bounds.max_shorter_length));
    }
    std::size_t best = 0;
    std::vector<Symbol> picked;
    const std::uint64_t subsets = std::uint64_t{1} << shorter.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best) continue;
        picked.clear();
        for (std::size_t i = 0; i < shorter.size(); ++i) {
            if ((mask >> i) & 1U) picked.push_back(shorter[i]);
        }
        if (is_subsequence(picked, longer.symbols())) best = size;
    }
    return best;
}

std::size_t brute_best_alignment(MetricKind kind, const Str& x, const Str& y, Bounds bounds) {
    if (kind == MetricKind::edit) return brute_edit(x, y, bounds);
    return x.size() + y.size() - 2 * brute_lcs(x, y, bounds);
}

}  // namespace strembed::oracle
