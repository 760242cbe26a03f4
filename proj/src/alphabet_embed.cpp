#include "strembed/alphabet_embed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

namespace strembed {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Matching stored as two inverse position maps.
struct Matching {
    std::vector<std::size_t> mx;
    std::vector<std::size_t> my;

    Matching(const Alignment& a, std::size_t n, std::size_t m) : mx(n, kNone), my(m, kNone) {
        for (const AlignedPair& p : a.pairs) {
            mx[p.i] = p.j;
            my[p.j] = p.i;
        }
    }

    void unlink_x(std::size_t px) {
        if (mx[px] == kNone) return;
        my[mx[px]] = kNone;
        mx[px] = kNone;
    }
    void unlink_y(std::size_t py) {
        if (my[py] == kNone) return;
        mx[my[py]] = kNone;
        my[py] = kNone;
    }

    [[nodiscard]] Alignment to_alignment() const {
        Alignment a{MetricKind::indel, {}};
        for (std::size_t i = 0; i < mx.size(); ++i) {
            if (mx[i] != kNone) a.pairs.push_back({i, mx[i], false});
        }
        return a;
    }
};

struct BlockCount {
    std::size_t block;
    std::size_t count;
};

// Opposite blocks touched by x-block i, in increasing order.
std::vector<BlockCount> x_block_partners(const Matching& mt, std::size_t i, std::size_t k) {
    std::vector<BlockCount> out;
    for (std::size_t t = 0; t < k; ++t) {
        const std::size_t py = mt.mx[i * k + t];
        if (py == kNone) continue;
        const std::size_t j = py / k;
        if (out.empty() || out.back().block != j) {
            out.push_back({j, 1});
        } else {
            ++out.back().count;
        }
    }
    return out;
}

bool x_block_touches(const Matching& mt, std::size_t i, std::size_t j, std::size_t k) {
    for (std::size_t t = 0; t < k; ++t) {
        const std::size_t py = mt.mx[i * k + t];
        if (py != kNone && py / k == j) return true;
    }
    return false;
}

bool x_block_perfect(const Matching& mt, std::size_t i, std::size_t k) {
    const std::size_t first = mt.mx[i * k];
    if (first == kNone || first % k != 0) return false;
    for (std::size_t t = 1; t < k; ++t) {
        if (mt.mx[i * k + t] != first + t) return false;
    }
    return true;
}

void require_blocked(const Str& ex, const Str& ey, std::size_t k) {
    if (k == 0) throw PreconditionError("block length must be positive");
    if (ex.size() % k != 0 || ey.size() % k != 0) {
        throw PreconditionError("embedded strings are not a whole number of " + std::to_string(k) + "-blocks");
    }
}

void require_indel(const Alignment& a, const Str& x, const Str& y) {
    if (a.kind != MetricKind::indel) throw InvalidAlignment("expected an indel alignment");
    require_valid(a, x, y);
}

Str repeated(std::size_t alphabet, Symbol c, std::size_t n) {
    return {alphabet, std::vector<Symbol>(n, c)};
}

void require_demo_preconditions(std::size_t n, std::size_t gamma, std::size_t sigma) {
    if (gamma <= sigma) {
        throw PreconditionError("need |Gamma| > |Sigma|, got " + std::to_string(gamma) + " <= " + std::to_string(sigma));
    }
    if (n == 0) throw PreconditionError("n must be positive");
}

// Embeds c^n and checks the black box is length preserving over Σ.
Str embed_checked(const Embedding& e, Symbol c, std::size_t n, std::size_t gamma, std::size_t sigma,
                  std::size_t& length) {
    Str out = e(repeated(gamma, c, n));
    if (out.empty()) throw PreconditionError("embedding produced an empty string");
    for (const Symbol s : out.symbols()) {
        if (s >= sigma) throw PreconditionError("embedding produced a symbol outside Sigma");
    }
    if (length == kNone) {
        length = out.size();
    } else if (out.size() != length) {
        throw PreconditionError("embedding is not length preserving");
    }
    return {sigma, std::vector<Symbol>(out.symbols().begin(), out.symbols().end())};
}

}  // namespace

Str embed(const IndelCode& code, const Str& x) {
    if (x.alphabet_size() > code.codewords.size()) {
        throw AlphabetMismatch("input alphabet has " + std::to_string(x.alphabet_size()) + " symbols but the code has " +
                               std::to_string(code.codewords.size()) + " codewords");
    }
    std::vector<Symbol> out;
    out.reserve(x.size() * code.params.k);
    for (const Symbol s : x.symbols()) {
        const auto word = code.codewords[s].symbols();
        out.insert(out.end(), word.begin(), word.end());
    }
    return {code.params.sigma_size, std::move(out)};
}

Alignment push_alignment(const Alignment& a, const Str& x, const Str& y, const IndelCode& code) {
    require_indel(a, x, y);
    const std::size_t k = code.params.k;
    Alignment out{MetricKind::indel, {}};
    out.pairs.reserve(a.pairs.size() * k);
    for (const AlignedPair& p : a.pairs) {
        for (std::size_t t = 0; t < k; ++t) out.pairs.push_back({p.i * k + t, p.j * k + t, false});
    }
    return out;
}

bool is_block_structured(const Alignment& a, const Str& ex, const Str& ey, std::size_t k) {
    if (k == 0 || ex.size() % k != 0 || ey.size() % k != 0) return false;
    if (a.kind != MetricKind::indel || validate_alignment(a, ex, ey)) return false;
    const Matching mt(a, ex.size(), ey.size());
    // Every matched y-position is paired with some x-block, so checking the
    // x side covers both directions.
    for (std::size_t i = 0; i < ex.size() / k; ++i) {
        bool any = false;
        for (std::size_t t = 0; t < k && !any; ++t) any = mt.mx[i * k + t] != kNone;
        if (any && !x_block_perfect(mt, i, k)) return false;
    }
    return true;
}

BlockStructureResult block_structure_stages(const Alignment& a, const Str& ex, const Str& ey, std::size_t k,
                                            double epsilon) {
    require_blocked(ex, ey, k);
    require_indel(a, ex, ey);
    if (!(epsilon > 0.0 && epsilon < 0.5)) throw PreconditionError("epsilon must lie in (0, 1/2)");
    const auto threshold = static_cast<std::size_t>(std::floor(epsilon * static_cast<double>(k) + 1e-9));
    const std::size_t nx = ex.size() / k;

    Matching mt(a, ex.size(), ey.size());
    BlockStructureResult result;

    // Stage I: promote each block's first significant partner to a perfect match.
    for (std::size_t i = 0; i < nx; ++i) {
        const auto partners = x_block_partners(mt, i, k);
        const auto hit = std::find_if(partners.begin(), partners.end(),
                                      [&](const BlockCount& bc) { return bc.count > threshold; });
        if (hit == partners.end()) continue;
        const std::size_t j = hit->block;
        for (std::size_t t = 0; t < k; ++t) {
            if (ex[i * k + t] != ey[j * k + t]) {
                throw InconsistencyError("blocks " + std::to_string(i) + " and " + std::to_string(j) +
                                         " match significantly but carry different codewords");
            }
        }
        for (std::size_t t = 0; t < k; ++t) {
            mt.unlink_x(i * k + t);
            mt.unlink_y(j * k + t);
        }
        for (std::size_t t = 0; t < k; ++t) {
            mt.mx[i * k + t] = j * k + t;
            mt.my[j * k + t] = i * k + t;
        }
        ++result.perfect_pairs;
    }
    result.stage_one = mt.to_alignment();

    // Stage II: drop every remaining partial match.
    std::size_t i = 0;
    while (i < nx) {
        const auto partners = x_block_partners(mt, i, k);
        if (partners.empty() || x_block_perfect(mt, i, k)) {
            ++i;
            continue;
        }
        if (partners.size() > 1) {
            for (std::size_t t = 0; t < k; ++t) mt.unlink_x(i * k + t);
            ++i;
            continue;
        }
        const std::size_t j = partners.front().block;
        std::size_t next = i + 1;
        while (next < nx && x_block_touches(mt, next, j, k)) ++next;
        for (std::size_t t = 0; t < k; ++t) mt.unlink_y(j * k + t);
        // The last block that shared j may still reach further y-blocks.
        if (next - 1 > i && !x_block_partners(mt, next - 1, k).empty()) {
            i = next - 1;
        } else {
            i = next;
        }
    }
    result.output = mt.to_alignment();
    return result;
}

Alignment block_structure(const Alignment& a, const Str& ex, const Str& ey, const IndelCode& code, double epsilon) {
    return block_structure_stages(a, ex, ey, code.params.k, epsilon).output;
}

Alignment lift_alignment(const Alignment& a, const Str& x, const Str& y, const IndelCode& code) {
    const std::size_t k = code.params.k;
    const Str ex = embed(code, x);
    const Str ey = embed(code, y);
    if (!is_block_structured(a, ex, ey, k)) throw InvalidAlignment("alignment is not block-structured");
    Alignment out{MetricKind::indel, {}};
    for (const AlignedPair& p : a.pairs) {
        if (p.i % k != 0) continue;
        const std::size_t i = p.i / k;
        const std::size_t j = p.j / k;
        if (x[i] != y[j]) throw InvalidAlignment("block pair carries equal codewords for different symbols");
        out.pairs.push_back({i, j, false});
    }
    return out;
}

ContractedPair find_contracted_pair(const Embedding& e, std::size_t n, std::size_t gamma, std::size_t sigma) {
    require_demo_preconditions(n, gamma, sigma);
    std::unordered_map<Symbol, Symbol> seen;
    std::size_t length = kNone;
    std::vector<Str> images;
    for (Symbol c = 0; c < gamma; ++c) {
        images.push_back(embed_checked(e, c, n, gamma, sigma, length));
        const auto [it, fresh] = seen.emplace(images.back()[0], c);
        if (fresh) continue;
        ContractedPair out{repeated(gamma, it->second, n), repeated(gamma, c, n), images[it->second], images.back(),
                           {}, {}};
        out.original = normalized_distance(MetricKind::indel, out.x, out.y);
        out.embedded = normalized_distance(MetricKind::indel, out.ex, out.ey);
        if (out.embedded.raw >= out.embedded.scale) {
            throw InconsistencyError("shared first symbol did not contract the pair");
        }
        return out;
    }
    throw InconsistencyError("no first-symbol collision among more candidates than symbols");
}

PluralityCollision find_plurality_collision(const Embedding& e, std::size_t n, std::size_t gamma, std::size_t sigma) {
    require_demo_preconditions(n, gamma, sigma);
    std::unordered_map<Symbol, Symbol> seen;
    std::size_t length = kNone;
    std::vector<Str> images;
    std::vector<std::size_t> histogram(sigma);
    for (Symbol c = 0; c < gamma; ++c) {
        images.push_back(embed_checked(e, c, n, gamma, sigma, length));
        std::fill(histogram.begin(), histogram.end(), 0);
        for (const Symbol s : images.back().symbols()) ++histogram[s];
        const auto plurality =
            static_cast<Symbol>(std::max_element(histogram.begin(), histogram.end()) - histogram.begin());
        const auto [it, fresh] = seen.emplace(plurality, c);
        if (fresh) continue;

        PluralityCollision out;
        out.x = repeated(gamma, it->second, n);
        out.y = repeated(gamma, c, n);
        out.plurality = plurality;
        out.embedded_length = length;
        out.embedded_lcs = lcs_length(images[it->second], images.back());
        out.embedded_indel = 2 * length - 2 * out.embedded_lcs;
        out.original = normalized_distance(MetricKind::indel, out.x, out.y);
        out.embedded = {out.embedded_indel, 2 * length};
        out.certified = sigma * out.embedded_indel <= (sigma - 1) * 2 * length;
        return out;
    }
    throw InconsistencyError("no plurality collision among more candidates than symbols");
}

}  // namespace strembed
