#include "strembed/alignment.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace strembed {

const char* to_string(AlignmentViolation::Kind kind) noexcept {
    switch (kind) {
        case AlignmentViolation::Kind::out_of_range: return "out_of_range";
        case AlignmentViolation::Kind::non_monotone: return "non_monotone";
        case AlignmentViolation::Kind::unequal_match: return "unequal_match";
        case AlignmentViolation::Kind::substitution_in_indel: return "substitution_in_indel";
        case AlignmentViolation::Kind::equal_substitution: return "equal_substitution";
    }
    return "unknown";
}

std::optional<AlignmentViolation> validate_alignment(const Alignment& a, const Str& x, const Str& y) {
    using Kind = AlignmentViolation::Kind;
    const auto where = [](std::size_t t, const AlignedPair& p) {
        return "pair #" + std::to_string(t) + " (" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) + ")";
    };
    for (std::size_t t = 0; t < a.pairs.size(); ++t) {
        const AlignedPair& p = a.pairs[t];
        if (p.i >= x.size() || p.j >= y.size()) {
            return AlignmentViolation{Kind::out_of_range, t, where(t, p) + ": index out of range"};
        }
        if (t > 0) {
            const AlignedPair& q = a.pairs[t - 1];
            if (p.i <= q.i || p.j <= q.j) {
                return AlignmentViolation{Kind::non_monotone, t, where(t, p) + ": not strictly increasing (monotonicity)"};
            }
        }
        if (p.substitution) {
            if (a.kind == MetricKind::indel) {
                return AlignmentViolation{Kind::substitution_in_indel, t, where(t, p) + ": substitution in indel alignment"};
            }
            if (x[p.i] == y[p.j]) {
                return AlignmentViolation{Kind::equal_substitution, t, where(t, p) + ": substitution of equal symbols"};
            }
        } else if (x[p.i] != y[p.j]) {
            return AlignmentViolation{Kind::unequal_match, t, where(t, p) + ": unequal matched symbols"};
        }
    }
    return std::nullopt;
}

void require_valid(const Alignment& a, const Str& x, const Str& y) {
    if (auto violation = validate_alignment(a, x, y)) {
        throw InvalidAlignment("invalid alignment: " + violation->message);
    }
}

CostBreakdown cost(const Alignment& a, const Str& x, const Str& y) {
    require_valid(a, x, y);
    CostBreakdown c;
    c.substitutions = static_cast<std::size_t>(std::ranges::count_if(a.pairs, &AlignedPair::substitution));
    c.matches = a.pairs.size() - c.substitutions;
    c.deletions_x = x.size() - a.pairs.size();
    c.deletions_y = y.size() - a.pairs.size();
    c.total = c.deletions_x + c.deletions_y + c.substitutions;
    return c;
}

BlockDecomposition block_decompose(const Alignment& a, const Str& x, const Str& y) {
    require_valid(a, x, y);
    if (a.kind != MetricKind::indel) {
        throw InvalidAlignment("block decomposition requires an indel alignment");
    }

    struct Run {
        Range xs;
        Range ys;
    };
    std::vector<Run> runs;
    for (const AlignedPair& p : a.pairs) {
        if (!runs.empty() && runs.back().xs.end == p.i && runs.back().ys.end == p.j) {
            ++runs.back().xs.end;
            ++runs.back().ys.end;
        } else {
            runs.push_back({{p.i, p.i + 1}, {p.j, p.j + 1}});
        }
    }

    BlockDecomposition d;
    d.blocks_x.push_back({{0, 0}, {0, runs.empty() ? x.size() : runs.front().xs.begin}});
    d.blocks_y.push_back({{0, 0}, {0, runs.empty() ? y.size() : runs.front().ys.begin}});
    for (std::size_t r = 0; r < runs.size(); ++r) {
        const bool last = r + 1 == runs.size();
        d.blocks_x.push_back({runs[r].xs, {runs[r].xs.end, last ? x.size() : runs[r + 1].xs.begin}});
        d.blocks_y.push_back({runs[r].ys, {runs[r].ys.end, last ? y.size() : runs[r + 1].ys.begin}});
    }
    return d;
}

std::optional<std::string> check_decomposition(const BlockDecomposition& d, const Str& x, const Str& y) {
    if (d.blocks_x.size() != d.blocks_y.size()) return "block counts differ";
    if (d.blocks_x.empty()) return "no blocks";
    const auto covers = [](const std::vector<Block>& blocks, std::size_t length) -> std::optional<std::string> {
        std::size_t cursor = 0;
        for (const Block& b : blocks) {
            if (b.match.begin != cursor || b.match.end < b.match.begin) return "match range not contiguous";
            cursor = b.match.end;
            if (b.gap.begin != cursor || b.gap.end < b.gap.begin) return "gap range not contiguous";
            cursor = b.gap.end;
        }
        if (cursor != length) return "ranges do not cover the string";
        return std::nullopt;
    };
    if (auto e = covers(d.blocks_x, x.size())) return "x: " + *e;
    if (auto e = covers(d.blocks_y, y.size())) return "y: " + *e;
    if (!d.blocks_x.front().match.empty() || !d.blocks_y.front().match.empty()) return "block 0 has a matching part";
    for (std::size_t i = 1; i < d.blocks_x.size(); ++i) {
        const Range mx = d.blocks_x[i].match;
        const Range my = d.blocks_y[i].match;
        if (mx.empty()) return "empty matching part in block " + std::to_string(i);
        if (mx.size() != my.size() || x.slice(mx.begin, mx.end) != y.slice(my.begin, my.end)) {
            return "matched parts differ in block " + std::to_string(i);
        }
    }
    return std::nullopt;
}

std::size_t SegmentProfile::total() const noexcept {
    std::size_t sum = 0;
    for (const std::size_t c : block_cost) sum += c;
    return sum;
}

SegmentProfile segment_profile(const Alignment& a, const Str& ex, const Str& ey, std::size_t k) {
    if (k == 0 || ex.size() % k != 0 || ey.size() % k != 0) {
        throw PreconditionError("segment profile needs string lengths divisible by the block length");
    }
    require_valid(a, ex, ey);
    if (a.kind != MetricKind::indel) {
        throw InvalidAlignment("segment profile requires an indel alignment");
    }
    const std::size_t nx = ex.size() / k;
    const std::size_t ny = ey.size() / k;
    if (nx == 0 && !ey.empty()) {
        throw PreconditionError("segment profile needs at least one x-block to charge y-coordinates to");
    }

    std::vector<std::size_t> matches_in_block(nx, 0);
    std::vector<std::size_t> first_y(nx, ey.size());
    std::vector<std::size_t> smallest_owner(ny, nx);
    for (const AlignedPair& p : a.pairs) {
        const std::size_t bx = p.i / k;
        const std::size_t by = p.j / k;
        if (matches_in_block[bx]++ == 0) first_y[bx] = p.j;
        smallest_owner[by] = std::min(smallest_owner[by], bx);
    }

    // A segment starts at its block's first match, or at the start of that
    // y-block when no earlier x-block matches into it. Each non-empty segment
    // runs until the next one starts.
    std::vector<std::size_t> starts(nx, ey.size());
    std::vector<std::size_t> non_empty;
    for (std::size_t i = 0; i < nx; ++i) {
        if (matches_in_block[i] == 0) continue;
        const std::size_t by = first_y[i] / k;
        starts[i] = smallest_owner[by] == i ? by * k : first_y[i];
        non_empty.push_back(i);
    }

    SegmentProfile profile;
    profile.block_length = k;
    profile.segments.assign(nx, Range{});
    if (non_empty.empty()) {
        if (nx > 0) {
            profile.segments[0] = {0, ey.size()};
            for (std::size_t i = 1; i < nx; ++i) profile.segments[i] = {ey.size(), ey.size()};
        }
    } else {
        starts[non_empty.front()] = 0;
        std::size_t t = 0;
        for (std::size_t i = 0; i < nx; ++i) {
            while (t < non_empty.size() && non_empty[t] < i) ++t;
            if (t < non_empty.size() && non_empty[t] == i) {
                const std::size_t end = t + 1 < non_empty.size() ? starts[non_empty[t + 1]] : ey.size();
                profile.segments[i] = {starts[i], end};
            } else {
                const std::size_t at = t < non_empty.size() ? starts[non_empty[t]] : ey.size();
                profile.segments[i] = {at, at};
            }
        }
    }

    std::vector<std::size_t> matched_prefix(ey.size() + 1, 0);
    {
        std::vector<bool> matched(ey.size(), false);
        for (const AlignedPair& p : a.pairs) matched[p.j] = true;
        for (std::size_t j = 0; j < ey.size(); ++j) matched_prefix[j + 1] = matched_prefix[j] + (matched[j] ? 1 : 0);
    }
    for (std::size_t i = 0; i < nx; ++i) {
        const Range s = profile.segments[i];
        const std::size_t ux = k - matches_in_block[i];
        const std::size_t uy = s.size() - (matched_prefix[s.end] - matched_prefix[s.begin]);
        profile.unmatched_x.push_back(ux);
        profile.unmatched_y.push_back(uy);
        profile.block_cost.push_back(ux + uy);
    }
    return profile;
}

void write_alignment(std::ostream& os, const Alignment& a, std::size_t n, std::size_t m) {
    os << to_string(a.kind) << ' ' << n << ' ' << m << '\n';
    for (const AlignedPair& p : a.pairs) {
        os << p.i + 1 << ' ' << p.j + 1;
        if (p.substitution) os << " S";
        os << '\n';
    }
}

ParsedAlignment read_alignment(std::istream& is) {
    ParsedAlignment out;
    std::string line;
    if (!std::getline(is, line)) throw PreconditionError("alignment: missing header");
    {
        std::istringstream header(line);
        std::string kind;
        if (!(header >> kind >> out.n >> out.m)) throw PreconditionError("alignment: malformed header '" + line + "'");
        out.alignment.kind = parse_metric_kind(kind);
    }
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        long long i = 0;
        long long j = 0;
        if (!(row >> i >> j) || i < 1 || j < 1) throw PreconditionError("alignment: malformed pair line '" + line + "'");
        std::string flag;
        bool substitution = false;
        if (row >> flag) {
            if (flag != "S") throw PreconditionError("alignment: unknown pair flag '" + flag + "'");
            substitution = true;
        }
        out.alignment.pairs.push_back(
            {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), substitution});
    }
    return out;
}

}  // namespace strembed
