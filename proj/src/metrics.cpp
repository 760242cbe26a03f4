#include "strembed/metrics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <vector>

namespace strembed {

namespace {

std::size_t count_runs(std::span<const Symbol> s) {
    if (s.empty()) return 0;
    std::size_t runs = 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
        runs += s[i] != s[i - 1] ? 1 : 0;
    }
    return runs;
}

// Maps the distinct symbols of a pattern onto dense row indices.
class SymbolIndex {
public:
    explicit SymbolIndex(std::span<const Symbol> pattern) : distinct_(pattern.begin(), pattern.end()) {
        std::ranges::sort(distinct_);
        const auto [first, last] = std::ranges::unique(distinct_);
        distinct_.erase(first, last);
        if (!distinct_.empty() && distinct_.back() < (Symbol{1} << 20)) {
            dense_.assign(static_cast<std::size_t>(distinct_.back()) + 1, -1);
            for (std::size_t r = 0; r < distinct_.size(); ++r) {
                dense_[distinct_[r]] = static_cast<std::int32_t>(r);
            }
        }
    }

    [[nodiscard]] std::size_t rows() const noexcept { return distinct_.size(); }

    [[nodiscard]] std::int32_t row(Symbol s) const noexcept {
        if (!dense_.empty()) {
            return s < dense_.size() ? dense_[s] : -1;
        }
        const auto it = std::ranges::lower_bound(distinct_, s);
        return (it != distinct_.end() && *it == s) ? static_cast<std::int32_t>(it - distinct_.begin()) : -1;
    }

private:
    std::vector<Symbol> distinct_;
    std::vector<std::int32_t> dense_;
};

// Last row of the DP table for (a, b): row[j] = d(a, b[0..j)).
std::vector<std::uint32_t> last_row(MetricKind kind, std::span<const Symbol> a, std::span<const Symbol> b) {
    const std::size_t m = b.size();
    std::vector<std::uint32_t> prev(m + 1);
    std::vector<std::uint32_t> cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<std::uint32_t>(j);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = static_cast<std::uint32_t>(i);
        for (std::size_t j = 1; j <= m; ++j) {
            std::uint32_t best = std::min(prev[j], cur[j - 1]) + 1;
            if (a[i - 1] == b[j - 1]) {
                best = std::min(best, prev[j - 1]);
            } else if (kind == MetricKind::edit) {
                best = std::min(best, prev[j - 1] + 1);
            }
            cur[j] = best;
        }
        std::swap(prev, cur);
    }
    return prev;
}

void full_traceback(MetricKind kind, std::span<const Symbol> a, std::span<const Symbol> b, std::size_t a_off,
                    std::size_t b_off, std::vector<AlignedPair>& out) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    const std::size_t w = m + 1;
    std::vector<std::uint32_t> d((n + 1) * w);
    for (std::size_t j = 0; j <= m; ++j) d[j] = static_cast<std::uint32_t>(j);
    for (std::size_t i = 1; i <= n; ++i) {
        d[i * w] = static_cast<std::uint32_t>(i);
        for (std::size_t j = 1; j <= m; ++j) {
            std::uint32_t best = std::min(d[(i - 1) * w + j], d[i * w + j - 1]) + 1;
            const std::uint32_t diag = d[(i - 1) * w + j - 1];
            if (a[i - 1] == b[j - 1]) {
                best = std::min(best, diag);
            } else if (kind == MetricKind::edit) {
                best = std::min(best, diag + 1);
            }
            d[i * w + j] = best;
        }
    }

    std::vector<AlignedPair> rev;
    std::size_t i = n;
    std::size_t j = m;
    while (i > 0 || j > 0) {
        const std::uint32_t here = d[i * w + j];
        if (i > 0 && j > 0 && a[i - 1] == b[j - 1] && here == d[(i - 1) * w + j - 1]) {
            rev.push_back({a_off + i - 1, b_off + j - 1, false});
            --i;
            --j;
        } else if (i > 0 && here == d[(i - 1) * w + j] + 1) {
            --i;
        } else if (j > 0 && here == d[i * w + j - 1] + 1) {
            --j;
        } else {
            rev.push_back({a_off + i - 1, b_off + j - 1, true});
            --i;
            --j;
        }
    }
    out.insert(out.end(), rev.rbegin(), rev.rend());
}

void hirschberg(MetricKind kind, std::span<const Symbol> a, std::span<const Symbol> b, std::size_t a_off,
                std::size_t b_off, const TracebackOptions& options, std::vector<AlignedPair>& out) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    if (n == 0 || m == 0) return;
    if (n <= 1 || (n + 1) * (m + 1) <= options.full_matrix_cells) {
        full_traceback(kind, a, b, a_off, b_off, out);
        return;
    }
    const std::size_t mid = n / 2;
    const auto forward = last_row(kind, a.first(mid), b);

    std::vector<Symbol> a_rev(a.begin() + static_cast<std::ptrdiff_t>(mid), a.end());
    std::vector<Symbol> b_rev(b.begin(), b.end());
    std::ranges::reverse(a_rev);
    std::ranges::reverse(b_rev);
    const auto backward = last_row(kind, a_rev, b_rev);

    std::size_t split = 0;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t j = 0; j <= m; ++j) {
        const std::uint64_t total = std::uint64_t{forward[j]} + backward[m - j];
        if (total < best) {
            best = total;
            split = j;
        }
    }
    hirschberg(kind, a.first(mid), b.first(split), a_off, b_off, options, out);
    hirschberg(kind, a.subspan(mid), b.subspan(split), a_off + mid, b_off + split, options, out);
}

}  // namespace

int compare_normalized(const DistanceValue& a, const DistanceValue& b) noexcept {
    const auto lhs = static_cast<unsigned __int128>(a.raw) * b.scale;
    const auto rhs = static_cast<unsigned __int128>(b.raw) * a.scale;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::size_t lcs_dp(std::span<const Symbol> a, std::span<const Symbol> b) {
    if (a.size() < b.size()) std::swap(a, b);
    std::vector<std::uint32_t> prev(b.size() + 1, 0);
    std::vector<std::uint32_t> cur(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

// Word-parallel LCS (Allison-Dix / Hyyro): one bit per pattern position,
// zeros in V mark positions that extend the current LCS.
std::size_t lcs_bit_parallel(std::span<const Symbol> a, std::span<const Symbol> b) {
    if (a.size() > b.size()) std::swap(a, b);
    const std::size_t n = a.size();
    if (n == 0 || b.empty()) return 0;
    const std::size_t words = (n + 63) / 64;

    const SymbolIndex index(a);
    std::vector<std::uint64_t> masks(index.rows() * words, 0);
    for (std::size_t i = 0; i < n; ++i) {
        masks[static_cast<std::size_t>(index.row(a[i])) * words + i / 64] |= std::uint64_t{1} << (i % 64);
    }

    std::vector<std::uint64_t> v(words, ~std::uint64_t{0});
    for (const Symbol c : b) {
        const std::int32_t row = index.row(c);
        if (row < 0) continue;
        const std::uint64_t* mask = masks.data() + static_cast<std::size_t>(row) * words;
        std::uint64_t carry = 0;
        for (std::size_t w = 0; w < words; ++w) {
            const std::uint64_t vw = v[w];
            const std::uint64_t u = vw & mask[w];
            const std::uint64_t t = vw + u;
            const std::uint64_t c1 = t < vw ? 1 : 0;
            const std::uint64_t s = t + carry;
            const std::uint64_t c2 = s < t ? 1 : 0;
            carry = c1 | c2;
            v[w] = s | (vw - u);
        }
    }

    std::size_t ones = 0;
    for (std::size_t w = 0; w + 1 < words; ++w) ones += static_cast<std::size_t>(std::popcount(v[w]));
    const std::size_t tail = n - (words - 1) * 64;
    const std::uint64_t tail_mask = tail == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << tail) - 1);
    ones += static_cast<std::size_t>(std::popcount(v[words - 1] & tail_mask));
    return n - ones;
}

// Run-length LCS. Appending a run c^r to the row string updates the DP row by
//   L'[j] = max_{i<=j} L[i] + min(r, P[j] - P[i]),  P = prefix count of c in b.
// Indices with P[i] <= P[j] - r contribute L[i] + r (L is monotone, so the
// largest such i wins); the rest form a sliding window over L[i] - P[i].
std::size_t lcs_run_length(std::span<const Symbol> a, std::span<const Symbol> b) {
    if (count_runs(a) * b.size() > count_runs(b) * a.size()) std::swap(a, b);
    const std::size_t m = b.size();
    if (a.empty() || m == 0) return 0;

    std::vector<std::int32_t> row(m + 1, 0);
    std::vector<std::int32_t> next(m + 1, 0);
    std::vector<std::int32_t> prefix(m + 1, 0);
    std::vector<std::int32_t> window(m + 1, 0);

    std::size_t start = 0;
    while (start < a.size()) {
        const Symbol c = a[start];
        std::size_t stop = start;
        while (stop < a.size() && a[stop] == c) ++stop;
        const auto r = static_cast<std::int32_t>(stop - start);
        start = stop;

        for (std::size_t j = 1; j <= m; ++j) prefix[j] = prefix[j - 1] + (b[j - 1] == c ? 1 : 0);

        std::size_t head = 0;
        std::size_t tail = 0;
        std::size_t p = 0;
        for (std::size_t j = 0; j <= m; ++j) {
            const std::int32_t wj = row[j] - prefix[j];
            while (tail > head && row[window[tail - 1]] - prefix[window[tail - 1]] <= wj) --tail;
            window[tail++] = static_cast<std::int32_t>(j);

            while (p <= j && prefix[p] + r <= prefix[j]) ++p;
            std::int32_t best = std::numeric_limits<std::int32_t>::min();
            if (p > 0) best = row[p - 1] + r;

            while (static_cast<std::size_t>(window[head]) < p) ++head;
            const auto i = static_cast<std::size_t>(window[head]);
            best = std::max(best, row[i] - prefix[i] + prefix[j]);
            next[j] = best;
        }
        std::swap(row, next);
    }
    return static_cast<std::size_t>(row[m]);
}

std::size_t edit_dp(std::span<const Symbol> a, std::span<const Symbol> b) {
    if (a.size() < b.size()) std::swap(a, b);
    return last_row(MetricKind::edit, a, b)[b.size()];
}

LcsKernel select_lcs_kernel(std::span<const Symbol> a, std::span<const Symbol> b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    if (n == 0 || m == 0 || n * m <= (std::size_t{1} << 14)) return LcsKernel::dynamic_programming;
    const std::size_t shorter = std::min(n, m);
    const std::size_t longer = std::max(n, m);
    const std::size_t bit_parallel_cost = ((shorter + 63) / 64) * longer;
    // The run-length sweep does a few deque operations per cell.
    const std::size_t run_length_cost = 4 * std::min(count_runs(a) * m, count_runs(b) * n);
    return run_length_cost < bit_parallel_cost ? LcsKernel::run_length : LcsKernel::bit_parallel;
}

std::size_t lcs_length(const Str& x, const Str& y, LcsKernel kernel) {
    require_same_alphabet(x, y);
    if (kernel == LcsKernel::automatic) kernel = select_lcs_kernel(x.symbols(), y.symbols());
    switch (kernel) {
        case LcsKernel::dynamic_programming:
            return lcs_dp(x.symbols(), y.symbols());
        case LcsKernel::bit_parallel:
            return lcs_bit_parallel(x.symbols(), y.symbols());
        case LcsKernel::run_length:
            return lcs_run_length(x.symbols(), y.symbols());
        case LcsKernel::automatic:
            break;
    }
    return lcs_dp(x.symbols(), y.symbols());
}

std::size_t indel_distance(const Str& x, const Str& y, LcsKernel kernel) {
    return x.size() + y.size() - 2 * lcs_length(x, y, kernel);
}

std::size_t edit_distance(const Str& x, const Str& y) {
    require_same_alphabet(x, y);
    return edit_dp(x.symbols(), y.symbols());
}

std::size_t distance(MetricKind kind, const Str& x, const Str& y) {
    return kind == MetricKind::edit ? edit_distance(x, y) : indel_distance(x, y);
}

DistanceValue normalized_distance(MetricKind kind, const Str& x, const Str& y) {
    if (x.empty() && y.empty()) {
        throw PreconditionError("normalized distance undefined for two empty strings");
    }
    const std::uint64_t scale = kind == MetricKind::edit ? std::max(x.size(), y.size()) : x.size() + y.size();
    return {distance(kind, x, y), scale};
}

Alignment optimal_alignment(MetricKind kind, const Str& x, const Str& y, TracebackOptions options) {
    require_same_alphabet(x, y);
    Alignment a{kind, {}};
    hirschberg(kind, x.symbols(), y.symbols(), 0, 0, options, a.pairs);
    return a;
}

}  // namespace strembed
