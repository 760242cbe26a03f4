#include "strembed/formula.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "strembed/gadgets.hpp"
#include "strembed/types.hpp"

namespace strembed {

const char* to_string(Gate g) noexcept { return g == Gate::and_gate ? "and" : "or"; }

Gate other(Gate g) noexcept { return g == Gate::and_gate ? Gate::or_gate : Gate::and_gate; }

Formula Formula::constant(bool value) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::constant;
    node->value = value;
    return Formula(std::move(node));
}

Formula Formula::u(std::size_t index, bool negated) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::lit_u;
    node->index = index;
    node->value = negated;
    return Formula(std::move(node));
}

Formula Formula::v(std::size_t index, bool negated) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::lit_v;
    node->index = index;
    node->value = negated;
    return Formula(std::move(node));
}

Formula Formula::make_gate(Gate g, Formula left, Formula right) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::gate;
    node->gate = g;
    node->depth = 1 + std::max(left.depth(), right.depth());
    const std::uint64_t limit = std::uint64_t{1} << 62;
    node->leaves = std::min(limit, left.leaves() + right.leaves());
    node->left = std::make_shared<const Formula>(std::move(left));
    node->right = std::make_shared<const Formula>(std::move(right));
    return Formula(std::move(node));
}

Formula Formula::make_and(Formula left, Formula right) {
    return make_gate(Gate::and_gate, std::move(left), std::move(right));
}

Formula Formula::make_or(Formula left, Formula right) {
    return make_gate(Gate::or_gate, std::move(left), std::move(right));
}

namespace {

void count_variables(const Formula& f, VariableCounts& out) {
    switch (f.kind()) {
        case Formula::Kind::constant:
            return;
        case Formula::Kind::lit_u:
            out.u = std::max(out.u, f.index() + 1);
            return;
        case Formula::Kind::lit_v:
            out.v = std::max(out.v, f.index() + 1);
            return;
        case Formula::Kind::gate:
            count_variables(f.left(), out);
            count_variables(f.right(), out);
            return;
    }
}

bool eval_leaf(const Formula& f, const Bits& a, const Bits& b) {
    switch (f.kind()) {
        case Formula::Kind::constant:
            return f.value();
        case Formula::Kind::lit_u:
            if (f.index() >= a.size()) throw PreconditionError("U index " + std::to_string(f.index()) + " unassigned");
            return (a[f.index()] != 0) != f.negated();
        case Formula::Kind::lit_v:
            if (f.index() >= b.size()) throw PreconditionError("V index " + std::to_string(f.index()) + " unassigned");
            return (b[f.index()] != 0) != f.negated();
        case Formula::Kind::gate:
            break;
    }
    return false;
}

bool eval_tree(const Formula& f, const Bits& a, const Bits& b) {
    if (f.is_leaf()) return eval_leaf(f, a, b);
    const bool l = eval_tree(f.left(), a, b);
    if (f.gate() == Gate::and_gate ? !l : l) return l;
    return eval_tree(f.right(), a, b);
}

// Shared subtrees make the expanded tree exponential; memoize by node.
bool eval_dag(const Formula& f, const Bits& a, const Bits& b, std::unordered_map<const Formula*, bool>& memo) {
    if (f.is_leaf()) return eval_leaf(f, a, b);
    if (const auto it = memo.find(&f); it != memo.end()) return it->second;
    const bool l = eval_dag(f.left(), a, b, memo);
    bool r = l;
    if (f.gate() == Gate::and_gate ? l : !l) r = eval_dag(f.right(), a, b, memo);
    memo.emplace(&f, r);
    return r;
}

bool normalized_at(const Formula& f, std::size_t depth, Gate g) {
    if (depth == 1) return f.is_leaf();
    if (f.is_leaf() || f.gate() != g) return false;
    return normalized_at(f.left(), depth - 1, other(g)) && normalized_at(f.right(), depth - 1, other(g));
}

using NormalizeMemo = std::map<std::tuple<const Formula*, std::size_t, Gate>, Formula>;

Formula pad_constant(bool value, std::size_t depth, Gate g) {
    if (depth == 1) return Formula::constant(value);
    Formula child = pad_constant(value, depth - 1, other(g));
    return Formula::make_gate(g, child, child);
}

Formula normalize_at(const Formula& f, std::size_t depth, Gate g, NormalizeMemo& memo) {
    if (depth == 1) {
        if (!f.is_leaf()) throw PreconditionError("target depth too small for formula");
        return f;
    }
    const auto key = std::make_tuple(&f, depth, g);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    Formula out = Formula::constant(false);
    if (!f.is_leaf() && f.gate() == g) {
        out = Formula::make_gate(g, normalize_at(f.left(), depth - 1, other(g), memo),
                                 normalize_at(f.right(), depth - 1, other(g), memo));
    } else {
        // Identity padding: f AND 1, f OR 0.
        const bool identity = g == Gate::and_gate;
        out = Formula::make_gate(g, normalize_at(f, depth - 1, other(g), memo),
                                 pad_constant(identity, depth - 1, other(g)));
    }
    memo.emplace(key, out);
    return out;
}

void write_prefix(std::ostream& os, const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::constant:
            os << (f.value() ? '1' : '0');
            return;
        case Formula::Kind::lit_u:
            os << (f.negated() ? "!u" : "u") << f.index();
            return;
        case Formula::Kind::lit_v:
            os << (f.negated() ? "!v" : "v") << f.index();
            return;
        case Formula::Kind::gate:
            os << '(' << to_string(f.gate()) << ' ';
            write_prefix(os, f.left());
            os << ' ';
            write_prefix(os, f.right());
            os << ')';
            return;
    }
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Formula parse() {
        Formula f = expr();
        skip_space();
        if (pos_ != text_.size()) fail("trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw PreconditionError("formula parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
               text_[pos_] != ')') {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    Formula expr() {
        skip_space();
        if (pos_ == text_.size()) fail("unexpected end of input");
        if (text_[pos_] == '(') {
            ++pos_;
            const std::string op = word();
            Gate g = Gate::and_gate;
            if (op == "and") {
                g = Gate::and_gate;
            } else if (op == "or") {
                g = Gate::or_gate;
            } else {
                fail("unknown gate '" + op + "'");
            }
            Formula left = expr();
            Formula right = expr();
            skip_space();
            if (pos_ == text_.size() || text_[pos_] != ')') fail("gates take exactly two operands");
            ++pos_;
            return Formula::make_gate(g, std::move(left), std::move(right));
        }
        return leaf(word());
    }

    Formula leaf(const std::string& token) {
        if (token == "0" || token == "1") return Formula::constant(token == "1");
        std::size_t at = 0;
        const bool negated = !token.empty() && token[0] == '!';
        if (negated) ++at;
        if (at >= token.size() || (token[at] != 'u' && token[at] != 'v')) fail("bad literal '" + token + "'");
        const char family = token[at++];
        if (at == token.size()) fail("literal without index '" + token + "'");
        std::size_t index = 0;
        for (; at < token.size(); ++at) {
            if (!std::isdigit(static_cast<unsigned char>(token[at]))) fail("bad literal '" + token + "'");
            index = index * 10 + static_cast<std::size_t>(token[at] - '0');
        }
        return family == 'u' ? Formula::u(index, negated) : Formula::v(index, negated);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

Formula random_leaf(Rng& rng, std::size_t u_vars, std::size_t v_vars) {
    const std::uint64_t roll = uniform_below(rng, 8);
    const bool negated = coin(rng, 1, 2);
    if (roll < 1 || (u_vars == 0 && v_vars == 0)) return Formula::constant(coin(rng, 1, 2));
    const bool pick_u = v_vars == 0 || (u_vars > 0 && roll < 5);
    if (pick_u) return Formula::u(uniform_below(rng, u_vars), negated);
    return Formula::v(uniform_below(rng, v_vars), negated);
}

Formula fold_and(const Formula& a, const Formula& b) {
    if (a.kind() == Formula::Kind::constant) return a.value() ? b : a;
    if (b.kind() == Formula::Kind::constant) return b.value() ? a : b;
    return Formula::make_and(a, b);
}

Formula fold_or(const Formula& a, const Formula& b) {
    if (a.kind() == Formula::Kind::constant) return a.value() ? a : b;
    if (b.kind() == Formula::Kind::constant) return b.value() ? b : a;
    return Formula::make_or(a, b);
}

// ---- synthesis over <= 4 variables ----

constexpr std::size_t kTables = std::size_t{1} << 16;
constexpr std::uint64_t kPairBudget = 200'000'000;

struct Level {
    bool complete = false;
    std::vector<TruthTable> members;
    // witness[t] = (left, right) children at the previous level; absent if left < 0.
    std::vector<std::int32_t> left;
    std::vector<std::int32_t> right;

    [[nodiscard]] bool contains(TruthTable t) const { return left[t] >= 0; }
};

TruthTable apply(Gate g, TruthTable a, TruthTable b) {
    return static_cast<TruthTable>(g == Gate::and_gate ? (a & b) : (a | b));
}

Level build_level(const std::vector<TruthTable>& below, Gate g) {
    Level level;
    const auto count = static_cast<std::uint64_t>(below.size());
    if (count * (count + 1) / 2 > kPairBudget) return level;
    level.left.assign(kTables, -1);
    level.right.assign(kTables, -1);
    for (std::size_t x = 0; x < below.size(); ++x) {
        for (std::size_t y = x; y < below.size(); ++y) {
            const TruthTable t = apply(g, below[x], below[y]);
            if (level.left[t] >= 0) continue;
            level.left[t] = below[x];
            level.right[t] = below[y];
            level.members.push_back(t);
        }
    }
    std::sort(level.members.begin(), level.members.end());
    level.complete = true;
    return level;
}

// Looks for a, b in `below` with a g b == target without materializing the level.
std::optional<std::pair<TruthTable, TruthTable>> find_pair(const std::vector<TruthTable>& below, Gate g,
                                                           TruthTable target) {
    std::vector<TruthTable> candidates;
    for (const TruthTable t : below) {
        const bool fits = g == Gate::and_gate ? (t & target) == target : (t | target) == target;
        if (fits) candidates.push_back(t);
    }
    const auto count = static_cast<std::uint64_t>(candidates.size());
    if (count * (count + 1) / 2 > kPairBudget) return std::nullopt;
    for (std::size_t x = 0; x < candidates.size(); ++x) {
        for (std::size_t y = x; y < candidates.size(); ++y) {
            if (apply(g, candidates[x], candidates[y]) == target) return std::make_pair(candidates[x], candidates[y]);
        }
    }
    return std::nullopt;
}

}  // namespace

VariableCounts variable_counts(const Formula& f) {
    VariableCounts out;
    count_variables(f, out);
    return out;
}

bool eval(const Formula& f, const Bits& a, const Bits& b) {
    if (f.leaves() <= 4096) return eval_tree(f, a, b);
    std::unordered_map<const Formula*, bool> memo;
    return eval_dag(f, a, b, memo);
}

std::optional<NormalizedFormula> certify(const Formula& f) {
    const Gate g = f.is_leaf() ? Gate::and_gate : f.gate();
    if (!normalized_at(f, f.depth(), g)) return std::nullopt;
    return NormalizedFormula{f, f.depth(), g};
}

NormalizedFormula require_normalized(const Formula& f) {
    auto n = certify(f);
    if (!n) throw PreconditionError("formula is not normalized: " + to_prefix(f));
    return *n;
}

NormalizedFormula normalize(const Formula& f, std::size_t depth, Gate top) {
    if (depth == 0) throw PreconditionError("target depth must be at least 1");
    if (depth < f.depth()) {
        throw PreconditionError("target depth " + std::to_string(depth) + " below natural depth " +
                                std::to_string(f.depth()));
    }
    NormalizeMemo memo;
    Formula out = normalize_at(f, depth, top, memo);
    return NormalizedFormula{out, depth, top};
}

NormalizedFormula normalize(const Formula& f, std::size_t depth) {
    return normalize(f, depth, f.is_leaf() ? Gate::and_gate : f.gate());
}

std::string to_prefix(const Formula& f) {
    std::ostringstream os;
    write_prefix(os, f);
    return os.str();
}

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

Formula random_normalized_formula(Rng& rng, std::size_t depth, Gate top, std::size_t u_vars, std::size_t v_vars) {
    if (depth == 0) throw PreconditionError("depth must be at least 1");
    if (depth == 1) return random_leaf(rng, u_vars, v_vars);
    Formula left = random_normalized_formula(rng, depth - 1, other(top), u_vars, v_vars);
    Formula right = random_normalized_formula(rng, depth - 1, other(top), u_vars, v_vars);
    return Formula::make_gate(top, std::move(left), std::move(right));
}

Bits encode_bits(const std::vector<std::uint32_t>& symbols, std::size_t bits) {
    Bits out;
    out.reserve(symbols.size() * bits);
    for (const std::uint32_t s : symbols) {
        if (bits < 32 && (s >> bits) != 0) {
            throw PreconditionError("symbol " + std::to_string(s) + " does not fit in " + std::to_string(bits) + " bits");
        }
        for (std::size_t b = 0; b < bits; ++b) out.push_back(static_cast<std::uint8_t>((s >> b) & 1U));
    }
    return out;
}

Formula build_lcs_formula(std::size_t n, std::size_t threshold, std::size_t bits) {
    if (n > 3) throw SizeBoundExceeded("build_lcs_formula supports n <= 3, got " + std::to_string(n));
    if (bits == 0 || bits > 8) throw PreconditionError("bits per symbol must lie in [1, 8]");
    if (threshold == 0) return Formula::constant(true);
    if (threshold > n) return Formula::constant(false);

    auto equal = [&](std::size_t i, std::size_t j) {
        Formula acc = Formula::constant(true);
        for (std::size_t b = 0; b < bits; ++b) {
            const Formula u = Formula::u(i * bits + b);
            const Formula v = Formula::v(j * bits + b);
            const Formula xnor = Formula::make_or(Formula::make_and(u, v),
                                                  Formula::make_and(Formula::u(i * bits + b, true),
                                                                    Formula::v(j * bits + b, true)));
            acc = fold_and(acc, xnor);
        }
        return acc;
    };

    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Formula> memo;
    auto rec = [&](auto&& self, std::size_t i, std::size_t j, std::size_t m) -> Formula {
        if (m == 0) return Formula::constant(true);
        if (n - i < m || n - j < m) return Formula::constant(false);
        const auto key = std::make_tuple(i, j, m);
        if (const auto it = memo.find(key); it != memo.end()) return it->second;
        Formula take = fold_and(equal(i, j), self(self, i + 1, j + 1, m - 1));
        Formula out = fold_or(fold_or(take, self(self, i + 1, j, m)), self(self, i, j + 1, m));
        memo.emplace(key, out);
        return out;
    };
    return rec(rec, 0, 0, threshold);
}

TruthTable truth_table(const Formula& f, std::size_t u_vars, std::size_t v_vars) {
    if (u_vars + v_vars > 4) throw PreconditionError("truth tables cover at most 4 variables");
    const std::size_t rows = std::size_t{1} << (u_vars + v_vars);
    TruthTable t = 0;
    Bits a(u_vars);
    Bits b(v_vars);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < u_vars; ++i) a[i] = static_cast<std::uint8_t>((r >> i) & 1U);
        for (std::size_t j = 0; j < v_vars; ++j) b[j] = static_cast<std::uint8_t>((r >> (u_vars + j)) & 1U);
        if (eval(f, a, b)) t = static_cast<TruthTable>(t | (1U << r));
    }
    return t;
}

std::optional<Synthesis> synthesize_common(const std::vector<TruthTable>& targets, std::size_t u_vars,
                                           std::size_t v_vars, std::size_t max_depth) {
    if (u_vars + v_vars > 4) throw PreconditionError("synthesis covers at most 4 variables");
    const std::size_t rows = std::size_t{1} << (u_vars + v_vars);
    const auto full = static_cast<TruthTable>(rows == 16 ? 0xFFFFU : ((1U << rows) - 1U));
    for (const TruthTable t : targets) {
        if ((t & ~full) != 0) throw PreconditionError("target table uses rows beyond the variable count");
    }

    std::map<TruthTable, Formula> literals;
    literals.emplace(TruthTable{0}, Formula::constant(false));
    literals.emplace(full, Formula::constant(true));
    for (std::size_t var = 0; var < u_vars + v_vars; ++var) {
        TruthTable t = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            if ((r >> var) & 1U) t = static_cast<TruthTable>(t | (1U << r));
        }
        const bool is_u = var < u_vars;
        const std::size_t index = is_u ? var : var - u_vars;
        literals.emplace(t, is_u ? Formula::u(index) : Formula::v(index));
        literals.emplace(static_cast<TruthTable>(~t & full), is_u ? Formula::u(index, true) : Formula::v(index, true));
    }
    std::vector<TruthTable> base;
    for (const auto& [t, f] : literals) base.push_back(t);

    const bool all_literal =
        std::all_of(targets.begin(), targets.end(), [&](TruthTable t) { return literals.count(t) != 0; });
    if (all_literal) {
        Synthesis s{{}, 1, Gate::and_gate};
        for (const TruthTable t : targets) s.formulas.push_back({literals.at(t), 1, Gate::and_gate});
        return s;
    }

    // levels[d][g]: tables realizable by a normalized formula of depth d with top gate g.
    std::vector<std::array<Level, 2>> levels(max_depth + 1);
    auto below_members = [&](std::size_t d, Gate g) -> const std::vector<TruthTable>* {
        if (d == 1) return &base;
        const Level& l = levels[d][static_cast<int>(g)];
        return l.complete ? &l.members : nullptr;
    };

    auto rebuild = [&](auto&& self, std::size_t d, Gate g, TruthTable t) -> Formula {
        if (d == 1) return literals.at(t);
        const Level& l = levels[d][static_cast<int>(g)];
        const auto a = static_cast<TruthTable>(l.left[t]);
        const auto b = static_cast<TruthTable>(l.right[t]);
        return Formula::make_gate(g, self(self, d - 1, other(g), a), self(self, d - 1, other(g), b));
    };

    for (std::size_t d = 2; d <= max_depth; ++d) {
        std::optional<Synthesis> best;
        std::uint64_t best_length = 0;
        for (const Gate g : {Gate::and_gate, Gate::or_gate}) {
            const std::vector<TruthTable>* below = below_members(d - 1, other(g));
            if (below == nullptr) continue;
            Level& level = levels[d][static_cast<int>(g)];
            level = build_level(*below, g);

            Synthesis s{{}, d, g};
            bool ok = true;
            for (const TruthTable t : targets) {
                if (level.complete) {
                    if (!level.contains(t)) {
                        ok = false;
                        break;
                    }
                    s.formulas.push_back({rebuild(rebuild, d, g, t), d, g});
                    continue;
                }
                const auto pair = find_pair(*below, g, t);
                if (!pair) {
                    ok = false;
                    break;
                }
                Formula f = Formula::make_gate(g, rebuild(rebuild, d - 1, other(g), pair->first),
                                               rebuild(rebuild, d - 1, other(g), pair->second));
                s.formulas.push_back({f, d, g});
            }
            if (!ok) continue;
            const std::uint64_t length = gadget_shape(d, g).length;
            if (!best || length < best_length) {
                best = std::move(s);
                best_length = length;
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

}  // namespace strembed
