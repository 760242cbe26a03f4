#include "strembed/indel_edit.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "strembed/metrics.hpp"

namespace strembed {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void require_optimal_indel(const Str& x, const Str& y, const Alignment& a) {
    require_same_alphabet(x, y);
    if (x.size() != y.size()) throw PreconditionError("indel-to-edit embeddings need |x| = |y|");
    if (a.kind != MetricKind::indel) throw InvalidAlignment("expected an indel alignment");
    require_valid(a, x, y);
    if (cost(a, x, y).total != indel_distance(x, y)) throw InvalidAlignment("indel alignment is not optimal");
}

}  // namespace

Str with_sentinel(const Str& x) {
    return {x.alphabet_size() + 1, std::vector<Symbol>(x.symbols().begin(), x.symbols().end())};
}

Str tiskin_embed(const Str& x) {
    const Symbol s = sentinel_of(x.alphabet_size());
    std::vector<Symbol> out;
    out.reserve(2 * x.size());
    for (const Symbol c : x.symbols()) {
        out.push_back(c);
        out.push_back(s);
    }
    return {x.alphabet_size() + 1, std::move(out)};
}

Str embed_exact(const Str& y) {
    const std::size_t n = y.size();
    const Symbol s = sentinel_of(y.alphabet_size());
    std::vector<Symbol> out(n * n + 2 * n, s);
    for (std::size_t q = 0; q < n; ++q) out[(q + 1) * (n + 1) - 1] = y[q];
    return {y.alphabet_size() + 1, std::move(out)};
}

std::size_t apx_block_length(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw PreconditionError("epsilon must lie in (0, 1]");
    const double exact = 4.0 / epsilon;
    const double rounded = std::round(exact);
    if (std::fabs(exact - rounded) < 1e-9) return static_cast<std::size_t>(rounded);
    return static_cast<std::size_t>(std::ceil(exact));
}

Str embed_apx_k(const Str& y, std::size_t k) {
    const std::size_t n = y.size();
    const Symbol s = sentinel_of(y.alphabet_size());
    std::vector<Symbol> out(n * (k + 1) + 2 * n, s);
    for (std::size_t q = 0; q < n; ++q) out[n + q * (k + 1)] = y[q];
    return {y.alphabet_size() + 1, std::move(out)};
}

Str embed_apx(const Str& y, double epsilon) { return embed_apx_k(y, apx_block_length(epsilon)); }

Alignment construct_exact_alignment(const Str& x, const Str& y, const Alignment& a) {
    require_optimal_indel(x, y, a);
    const std::size_t n = y.size();
    const BlockDecomposition d = block_decompose(a, x, y);
    auto image = [n](std::size_t q) { return (q + 1) * (n + 1) - 1; };

    Alignment out{MetricKind::edit, {}};
    const Range& d0 = d.blocks_x[0].gap;
    for (std::size_t t = 0; t < d0.size(); ++t) out.pairs.push_back({d0.begin + t, t, true});
    for (std::size_t i = 1; i < d.blocks_x.size(); ++i) {
        const Range& mx = d.blocks_x[i].match;
        const Range& my = d.blocks_y[i].match;
        for (std::size_t t = 0; t < mx.size(); ++t) out.pairs.push_back({mx.begin + t, image(my.begin + t), false});
        // The $^n run right after the last matched character absorbs d^X_i.
        const std::size_t run = image(my.end - 1) + 1;
        const Range& gap = d.blocks_x[i].gap;
        for (std::size_t t = 0; t < gap.size(); ++t) out.pairs.push_back({gap.begin + t, run + t, true});
    }
    return out;
}

const char* to_string(Availability a) noexcept {
    switch (a) {
        case Availability::fully:
            return "fully";
        case Availability::partially:
            return "partially";
        case Availability::not_available:
            return "not";
    }
    return "?";
}

std::size_t ApxReport::total_spill() const noexcept {
    std::size_t total = 0;
    for (const std::size_t s : spill) total += s;
    return total;
}

bool ApxReport::spill_bounds_hold() const noexcept {
    for (std::size_t i = 0; i < spill.size(); ++i) {
        if (spill[i] > (gap_length[i] + k) / (k + 1)) return false;
    }
    return true;
}

ApxAlignment construct_apx_alignment_k(const Str& x, const Str& y, std::size_t k, const Alignment& a) {
    require_optimal_indel(x, y, a);
    if (k == 0) throw PreconditionError("sentinel run length must be positive");
    const std::size_t n = y.size();
    const Str ey = embed_apx_k(y, k);
    const BlockDecomposition d = block_decompose(a, x, y);
    const std::size_t blocks = d.blocks_x.size();
    auto image = [n, k](std::size_t q) { return n + q * (k + 1); };

    // owner[q] = block whose matching part holds y_q.
    std::vector<std::size_t> owner(n, kNone);
    for (std::size_t i = 1; i < blocks; ++i) {
        for (std::size_t q = d.blocks_y[i].match.begin; q < d.blocks_y[i].match.end; ++q) owner[q] = i;
    }

    ApxAlignment out;
    out.alignment.kind = MetricKind::edit;
    ApxReport& r = out.report;
    r.k = k;
    r.embedded_length = ey.size();
    r.availability.assign(blocks, Availability::fully);
    r.gap_length.assign(blocks, 0);
    r.spill.assign(blocks, 0);
    r.missed_match.assign(blocks, 0);

    // Aligns x positions [begin, end) to consecutive positions of ey.
    auto place_gap = [&](std::size_t block, const Range& gap, std::size_t start) {
        for (std::size_t t = 0; t < gap.size(); ++t) {
            const std::size_t pos = start + t;
            if (pos >= ey.size()) throw InconsistencyError("gap placement ran past the embedded string");
            const bool equal = x[gap.begin + t] == ey[pos];
            out.alignment.pairs.push_back({gap.begin + t, pos, !equal});
            if (equal) {
                ++r.matches;
            } else {
                ++r.substitutions;
            }
            if (pos >= n && (pos - n) % (k + 1) == 0) {
                const std::size_t q = (pos - n) / (k + 1);
                if (q < n && owner[q] != kNone && owner[q] > block) ++r.spill[block];
            }
        }
        return start + gap.size();
    };

    // Block 0 sits on the leading $^n.
    r.gap_length[0] = d.blocks_x[0].gap.size();
    std::size_t frontier = place_gap(0, d.blocks_x[0].gap, 0);

    for (std::size_t i = 1; i < blocks; ++i) {
        const Range& mx = d.blocks_x[i].match;
        const Range& my = d.blocks_y[i].match;
        const std::size_t p = image(my.begin);
        const std::size_t q = image(my.end - 1);
        std::size_t keep = mx.size();
        if (frontier <= p) {
            r.availability[i] = Availability::fully;
        } else if (frontier <= q) {
            r.availability[i] = Availability::partially;
            keep = (q - frontier) / (k + 1) + 1;
        } else {
            r.availability[i] = Availability::not_available;
            keep = 0;
        }
        // Match the longest suffix of m^X_i that still fits.
        const std::size_t skip = mx.size() - keep;
        for (std::size_t t = skip; t < mx.size(); ++t) {
            out.alignment.pairs.push_back({mx.begin + t, image(my.begin + t), false});
            ++r.matches;
        }
        r.missed_match[i] = skip;
        r.deletions_x += skip;
        if (keep > 0) frontier = q + 1;

        const Range& gap = d.blocks_x[i].gap;
        r.gap_length[i] = gap.size();
        frontier = place_gap(i, gap, std::max(frontier, q + 1));
    }

    r.cost = ey.size() - n + 2 * r.deletions_x + r.substitutions;
    return out;
}

ApxAlignment construct_apx_alignment(const Str& x, const Str& y, double epsilon, const Alignment& a) {
    return construct_apx_alignment_k(x, y, apx_block_length(epsilon), a);
}

}  // namespace strembed
