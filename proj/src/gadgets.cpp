#include "strembed/gadgets.hpp"

#include <algorithm>
#include <string>

namespace strembed {

namespace {

using Symbols = std::vector<Symbol>;

void put(Symbols& out, Symbol bit, std::uint64_t count) { out.insert(out.end(), count, bit); }

void put(Symbols& out, const Symbols& part) { out.insert(out.end(), part.begin(), part.end()); }

// Gadget layouts on one side. c0/c1 are the children's strings; k, T, F are
// the children's shape.
Symbols or_layout(Side side, const Symbols& c0, const Symbols& c1, std::uint64_t k) {
    Symbols out;
    out.reserve(19 * k);
    if (side == Side::g) {
        put(out, 1, k / 2 + 4 * k);
        put(out, c0);
        put(out, 1, 4 * k);
        put(out, 0, 4 * k);
        put(out, c1);
        put(out, 0, 4 * k + k / 2);
    } else {
        // The h side visits the children in swapped order.
        put(out, 0, k / 2 + 4 * k);
        put(out, c1);
        put(out, 0, 4 * k);
        put(out, 1, 4 * k);
        put(out, c0);
        put(out, 1, 4 * k + k / 2);
    }
    return out;
}

Symbols and_layout(Side side, const Symbols& c0, const Symbols& c1, std::uint64_t k, std::uint64_t T,
                   std::uint64_t F) {
    Symbols out;
    out.reserve(26 * k + 2 * T + 2 * F);
    put(out, 0, T + F);
    if (side == Side::g) put(out, 1, 11 * k + T + F);
    put(out, 0, 5 * k);
    put(out, c0);
    put(out, 0, k);
    put(out, 1, k);
    put(out, 0, k);
    put(out, c1);
    put(out, 0, 5 * k);
    if (side == Side::h) put(out, 1, 11 * k + T + F);
    return out;
}

Symbols leaf_string(const Formula& f, Side side, const Bits& bits) {
    const bool reads = (side == Side::g && f.kind() == Formula::Kind::lit_u) ||
                       (side == Side::h && f.kind() == Formula::Kind::lit_v);
    if (reads) {
        if (f.index() >= bits.size()) {
            throw PreconditionError("assignment has no bit for variable " + std::to_string(f.index()));
        }
        const Symbol a = bits[f.index()] != 0 ? 1 : 0;
        // Positive literal: ¬a a. Negated: a ¬a.
        return f.negated() ? Symbols{a, 1 - a} : Symbols{1 - a, a};
    }
    if (side == Side::g && f.kind() == Formula::Kind::constant && !f.value()) return {1, 0};
    return {0, 1};
}

Symbols compile_rec(const Formula& f, std::size_t depth, Side side, const Bits& bits,
                    const std::vector<GadgetShape>& shapes) {
    if (depth == 1) return leaf_string(f, side, bits);
    const Symbols c0 = compile_rec(f.left(), depth - 1, side, bits, shapes);
    const Symbols c1 = compile_rec(f.right(), depth - 1, side, bits, shapes);
    const GadgetShape& child = shapes[depth - 1];
    if (f.gate() == Gate::or_gate) return or_layout(side, c0, c1, child.length);
    return and_layout(side, c0, c1, child.length, child.t, child.f);
}

Symbols symbols_of(const Str& s) { return {s.symbols().begin(), s.symbols().end()}; }

void require_gadget_children(const GadgetPair& left, const GadgetPair& right) {
    if (left.k != right.k || left.t != right.t || left.f != right.f) {
        throw PreconditionError("gadget children disagree on (k, t, f)");
    }
    const std::uint64_t k = left.k;
    if (k == 0 || k % 2 != 0 || !(k / 2 <= left.f && left.f < left.t)) {
        throw PreconditionError("gadget children violate k even and k/2 <= F < T");
    }
    for (const GadgetPair* p : {&left, &right}) {
        if (p->g.size() != k || p->h.size() != k) throw PreconditionError("gadget strings must have length k");
        if (p->g.alphabet_size() != 2 || p->h.alphabet_size() != 2) {
            throw AlphabetMismatch("gadget strings must be binary");
        }
    }
}

}  // namespace

GadgetShape gadget_shape(std::size_t depth, Gate top) {
    if (depth == 0) throw PreconditionError("depth must be at least 1");
    if (depth == 1) return {2, 1, 2};
    const GadgetShape c = gadget_shape(depth - 1, other(top));
    if (top == Gate::or_gate) return {9 * c.length + c.t, 9 * c.length + c.f, 19 * c.length};
    return {13 * c.length + 3 * c.t + c.f, 13 * c.length + 2 * c.t + 2 * c.f, 26 * c.length + 2 * c.t + 2 * c.f};
}

GadgetShape thresholds(const NormalizedFormula& phi) {
    (void)require_normalized(phi.formula);
    return gadget_shape(phi.depth, phi.top);
}

Str compile(const NormalizedFormula& phi, Side side, const Bits& bits, CompileOptions options) {
    const NormalizedFormula checked = require_normalized(phi.formula);
    if (checked.depth > options.max_depth) {
        throw SizeBoundExceeded("formula depth " + std::to_string(checked.depth) + " exceeds the compile guard " +
                                std::to_string(options.max_depth));
    }
    std::vector<GadgetShape> shapes(checked.depth + 1);
    Gate g = checked.top;
    for (std::size_t d = checked.depth; d >= 1; --d) {
        shapes[d] = gadget_shape(d, g);
        g = other(g);
    }
    return {2, compile_rec(checked.formula, checked.depth, side, bits, shapes)};
}

GadgetPair compile_pair(const NormalizedFormula& phi, const Bits& a, const Bits& b, CompileOptions options) {
    GadgetPair out;
    out.g = compile(phi, Side::g, a, options);
    out.h = compile(phi, Side::h, b, options);
    const GadgetShape shape = gadget_shape(phi.depth, phi.top);
    out.t = shape.t;
    out.f = shape.f;
    out.k = shape.length;
    return out;
}

GadgetPair or_gadget(const GadgetPair& left, const GadgetPair& right) {
    require_gadget_children(left, right);
    const std::uint64_t k = left.k;
    GadgetPair out;
    out.g = Str(2, or_layout(Side::g, symbols_of(left.g), symbols_of(right.g), k));
    out.h = Str(2, or_layout(Side::h, symbols_of(left.h), symbols_of(right.h), k));
    out.t = 9 * k + left.t;
    out.f = 9 * k + left.f;
    out.k = 19 * k;
    return out;
}

GadgetPair and_gadget(const GadgetPair& left, const GadgetPair& right) {
    require_gadget_children(left, right);
    const std::uint64_t k = left.k;
    const std::uint64_t T = left.t;
    const std::uint64_t F = left.f;
    GadgetPair out;
    out.g = Str(2, and_layout(Side::g, symbols_of(left.g), symbols_of(right.g), k, T, F));
    out.h = Str(2, and_layout(Side::h, symbols_of(left.h), symbols_of(right.h), k, T, F));
    out.t = 13 * k + 3 * T + F;
    out.f = 13 * k + 2 * T + 2 * F;
    out.k = 26 * k + 2 * T + 2 * F;
    return out;
}

bool is_balanced(const Str& s) {
    if (s.alphabet_size() != 2) return false;
    const auto ones = static_cast<std::size_t>(std::count(s.symbols().begin(), s.symbols().end(), Symbol{1}));
    return 2 * ones == s.size();
}

ConcatReduction concat_reduction(const std::vector<GadgetPair>& pairs, std::optional<std::uint64_t> M) {
    if (pairs.empty()) throw PreconditionError("concat_reduction needs at least one gadget pair");
    const GadgetPair& first = pairs.front();
    for (const GadgetPair& p : pairs) {
        if (p.k != first.k || p.t != first.t || p.f != first.f) {
            throw PreconditionError("gadget pairs disagree on (k, t, f)");
        }
        if (p.g.size() != p.k || p.h.size() != p.k) throw PreconditionError("gadget strings must have length k");
    }
    ConcatReduction out;
    out.n = pairs.size();
    const std::uint64_t n = out.n;
    out.M = M.value_or(n * first.k);
    out.R = 2 * out.M * (n - 1) + n * first.f;
    out.S = first.t - first.f;
    out.N = n * first.k + 2 * out.M * (n - 1);

    Symbols g;
    Symbols h;
    g.reserve(out.N);
    h.reserve(out.N);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i > 0) {
            for (Symbols* s : {&g, &h}) {
                put(*s, 0, out.M);
                put(*s, 1, out.M);
            }
        }
        put(g, symbols_of(pairs[i].g));
        put(h, symbols_of(pairs[i].h));
    }
    out.G = Str(2, std::move(g));
    out.H = Str(2, std::move(h));
    return out;
}

BinaryReduction binary_reduce_and_recover(const Str& x, const Str& y, std::size_t bits, BinaryReduceOptions options) {
    require_same_alphabet(x, y);
    const std::size_t n = x.size();
    if (n == 0 || y.size() != n) throw PreconditionError("binary reduction needs |x| = |y| >= 1");
    if (bits == 0 || bits > 8 || x.alphabet_size() > (std::size_t{1} << bits)) {
        throw PreconditionError("alphabet of " + std::to_string(x.alphabet_size()) + " symbols does not fit in " +
                                std::to_string(bits) + " bits");
    }
    const std::size_t vars = n * bits;

    BinaryReduction out;
    if (2 * vars <= 4) {
        // Small enough to search for the shallowest common normalized formulas.
        const std::size_t rows = std::size_t{1} << (2 * vars);
        const std::size_t mask = (std::size_t{1} << bits) - 1;
        std::vector<TruthTable> targets(n, 0);
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<Symbol> xs(n);
            std::vector<Symbol> ys(n);
            for (std::size_t i = 0; i < n; ++i) {
                xs[i] = static_cast<Symbol>((r >> (i * bits)) & mask);
                ys[i] = static_cast<Symbol>((r >> (vars + i * bits)) & mask);
            }
            const std::size_t lcs = lcs_dp(xs, ys);
            for (std::size_t t = 1; t <= lcs; ++t) targets[t - 1] = static_cast<TruthTable>(targets[t - 1] | (1U << r));
        }
        const auto found = synthesize_common(targets, vars, vars, options.max_synthesis_depth);
        if (!found) throw InconsistencyError("no common normalized formula within the synthesis depth");
        out.formulas = found->formulas;
        out.depth = found->depth;
        out.top = found->top;
    } else {
        std::vector<Formula> raw;
        std::size_t depth = 1;
        for (std::size_t t = 1; t <= n; ++t) {
            raw.push_back(build_lcs_formula(n, t, bits));
            depth = std::max(depth, raw.back().depth());
        }
        const Gate top = gadget_shape(depth, Gate::and_gate).length <= gadget_shape(depth, Gate::or_gate).length
                             ? Gate::and_gate
                             : Gate::or_gate;
        const std::uint64_t k = gadget_shape(depth, top).length;
        if (n * k + 2 * n * k * (n - 1) > options.max_length) {
            throw SizeBoundExceeded("binary reduction would produce strings of length " +
                                    std::to_string(n * k + 2 * n * k * (n - 1)));
        }
        for (const Formula& f : raw) out.formulas.push_back(normalize(f, depth, top));
        out.depth = depth;
        out.top = top;
    }

    const GadgetShape shape = gadget_shape(out.depth, out.top);
    const std::uint64_t length = n * shape.length + 2 * n * shape.length * (n - 1);
    if (length > options.max_length) {
        throw SizeBoundExceeded("binary reduction would produce strings of length " + std::to_string(length));
    }

    const std::vector<std::uint32_t> xs(x.symbols().begin(), x.symbols().end());
    const std::vector<std::uint32_t> ys(y.symbols().begin(), y.symbols().end());
    const Bits a = encode_bits(xs, bits);
    const Bits b = encode_bits(ys, bits);
    const CompileOptions compile_options{out.depth};
    std::vector<GadgetPair> pairs;
    for (const NormalizedFormula& phi : out.formulas) pairs.push_back(compile_pair(phi, a, b, compile_options));

    out.reduction = concat_reduction(pairs);
    const ConcatReduction& red = out.reduction;
    out.lcs = lcs_length(red.G, red.H, options.kernel);
    if (out.lcs < red.R || (out.lcs - red.R) % red.S != 0) {
        throw InconsistencyError("non-integral recovery: LCS(G,H)=" + std::to_string(out.lcs) +
                                 " R=" + std::to_string(red.R) + " S=" + std::to_string(red.S));
    }
    out.recovered = (out.lcs - red.R) / red.S;
    return out;
}

}  // namespace strembed
