#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "strembed/random.hpp"

namespace strembed {

/// Variable assignment, one 0/1 entry per variable.
using Bits = std::vector<std::uint8_t>;

enum class Gate { and_gate, or_gate };

[[nodiscard]] const char* to_string(Gate g) noexcept;
[[nodiscard]] Gate other(Gate g) noexcept;

/// Immutable boolean formula over two variable families U (read by g) and V
/// (read by h). Subtrees are shared, so copies are cheap.
class Formula {
public:
    enum class Kind { constant, lit_u, lit_v, gate };

    static Formula constant(bool value);
    static Formula u(std::size_t index, bool negated = false);
    static Formula v(std::size_t index, bool negated = false);
    static Formula make_and(Formula left, Formula right);
    static Formula make_or(Formula left, Formula right);
    static Formula make_gate(Gate g, Formula left, Formula right);

    [[nodiscard]] Kind kind() const noexcept { return node_->kind; }
    [[nodiscard]] bool is_leaf() const noexcept { return node_->kind != Kind::gate; }
    [[nodiscard]] bool value() const noexcept { return node_->value; }
    [[nodiscard]] bool negated() const noexcept { return node_->value; }
    [[nodiscard]] std::size_t index() const noexcept { return node_->index; }
    [[nodiscard]] Gate gate() const noexcept { return node_->gate; }
    [[nodiscard]] const Formula& left() const noexcept { return *node_->left; }
    [[nodiscard]] const Formula& right() const noexcept { return *node_->right; }

    /// Leaves have depth 1.
    [[nodiscard]] std::size_t depth() const noexcept { return node_->depth; }
    /// Number of leaves of the expanded tree.
    [[nodiscard]] std::uint64_t leaves() const noexcept { return node_->leaves; }

private:
    struct Node {
        Kind kind = Kind::constant;
        bool value = false;  // constant value, or negation flag for literals
        std::size_t index = 0;
        Gate gate = Gate::and_gate;
        std::shared_ptr<const Formula> left;
        std::shared_ptr<const Formula> right;
        std::size_t depth = 1;
        std::uint64_t leaves = 1;
    };
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct VariableCounts {
    std::size_t u = 0;  // 1 + largest U index, 0 if none
    std::size_t v = 0;
};

[[nodiscard]] VariableCounts variable_counts(const Formula& f);

/// Throws PreconditionError when an index is outside its assignment.
[[nodiscard]] bool eval(const Formula& f, const Bits& a, const Bits& b);

/// A formula certified to consist of alternating AND/OR layers with every
/// leaf at depth `depth`. `top` is meaningless when depth == 1.
struct NormalizedFormula {
    Formula formula;
    std::size_t depth = 1;
    Gate top = Gate::and_gate;
};

/// Returns the certificate, or nullopt when f is not normalized.
[[nodiscard]] std::optional<NormalizedFormula> certify(const Formula& f);
[[nodiscard]] NormalizedFormula require_normalized(const Formula& f);

/// Pads f with identity gates (x AND 1, x OR 0) until it is normalized with
/// the requested depth and top gate.
[[nodiscard]] NormalizedFormula normalize(const Formula& f, std::size_t depth, Gate top);
/// Top gate defaults to f's root gate, or AND for a leaf.
[[nodiscard]] NormalizedFormula normalize(const Formula& f, std::size_t depth);

// Prefix text form, e.g. `(and (or u0 !v1) 1)`.
[[nodiscard]] std::string to_prefix(const Formula& f);
[[nodiscard]] Formula parse_formula(const std::string& text);

[[nodiscard]] Formula random_normalized_formula(Rng& rng, std::size_t depth, Gate top, std::size_t u_vars,
                                                std::size_t v_vars);

/// Symbol s of x occupies U variables i·bits .. i·bits+bits-1, little endian.
[[nodiscard]] Bits encode_bits(const std::vector<std::uint32_t>& symbols, std::size_t bits);

/// Formula true iff LCS(X, Y) >= threshold, by expanding the LCS recurrence
/// with constant folding. Guarded to n <= 3.
[[nodiscard]] Formula build_lcs_formula(std::size_t n, std::size_t threshold, std::size_t bits);

/// Truth table over at most 4 variables: bit (a | b << u_vars) holds the value
/// for U-assignment a and V-assignment b.
using TruthTable = std::uint16_t;

[[nodiscard]] TruthTable truth_table(const Formula& f, std::size_t u_vars, std::size_t v_vars);

struct Synthesis {
    std::vector<NormalizedFormula> formulas;  // one per target, common depth and top
    std::size_t depth = 0;
    Gate top = Gate::and_gate;
};

/// Finds normalized formulas of the smallest common depth and top gate that
/// realize every target table. Requires u_vars + v_vars <= 4. Ties between
/// gates go to the one with the shorter compiled gadget.
[[nodiscard]] std::optional<Synthesis> synthesize_common(const std::vector<TruthTable>& targets, std::size_t u_vars,
                                                         std::size_t v_vars, std::size_t max_depth);

}  // namespace strembed
