#include <doctest.h>

#include "strembed/formula.hpp"
#include "strembed/metrics.hpp"
#include "strembed/random.hpp"

using namespace strembed;

namespace {

bool all_or_children_are_and(const Formula& f) {
    if (f.is_leaf()) return true;
    if (f.gate() == Gate::or_gate) {
        for (const Formula* c : {&f.left(), &f.right()}) {
            if (c->is_leaf() || c->gate() != Gate::and_gate) return false;
        }
    }
    return all_or_children_are_and(f.left()) && all_or_children_are_and(f.right());
}

}  // namespace

TEST_CASE("eval examples") {
    CHECK(eval(Formula::constant(true), {}, {}));
    CHECK_FALSE(eval(Formula::u(0), {0}, {}));
    CHECK(eval(Formula::u(0, true), {0}, {}));
    const Formula f = Formula::make_and(Formula::u(0), Formula::make_or(Formula::v(0), Formula::constant(false)));
    CHECK(eval(f, {1}, {1}));
    CHECK_FALSE(eval(f, {1}, {0}));
    CHECK_THROWS_AS((void)eval(Formula::v(2), {}, {1}), PreconditionError);
}

TEST_CASE("prefix text round trip") {
    const Formula f = parse_formula("(and (or u0 !v1) 1)");
    CHECK(to_prefix(f) == "(and (or u0 !v1) 1)");
    CHECK(f.depth() == 3);
    CHECK(variable_counts(f).u == 1);
    CHECK(variable_counts(f).v == 2);
    CHECK_THROWS_AS((void)parse_formula("(xor u0 v0)"), PreconditionError);
    CHECK_THROWS_AS((void)parse_formula("(and u0"), PreconditionError);
}

TEST_CASE("certify") {
    CHECK(certify(Formula::u(0)));
    CHECK(certify(parse_formula("(and u0 v0)")));
    CHECK_FALSE(certify(parse_formula("(and u0 (or u1 v0))")));
    CHECK_FALSE(certify(parse_formula("(and (and u0 v0) (and u1 v1))")));
    const auto ok = certify(parse_formula("(or (and u0 v0) (and u1 1))"));
    REQUIRE(ok);
    CHECK(ok->depth == 3);
    CHECK(ok->top == Gate::or_gate);
}

TEST_CASE("normalize") {
    const NormalizedFormula leaf = normalize(Formula::u(0), 1);
    CHECK(to_prefix(leaf.formula) == "u0");
    CHECK(leaf.depth == 1);

    const NormalizedFormula padded = normalize(Formula::u(0), 3, Gate::and_gate);
    CHECK(padded.depth == 3);
    CHECK(padded.top == Gate::and_gate);
    CHECK(certify(padded.formula));
    for (std::uint8_t a = 0; a < 2; ++a) CHECK(eval(padded.formula, {a}, {}) == (a == 1));

    const Formula uneven = parse_formula("(or u0 (and u1 v0))");
    const NormalizedFormula n = normalize(uneven, 3, Gate::or_gate);
    CHECK(all_or_children_are_and(n.formula));
    CHECK(certify(n.formula));
    for (std::uint8_t row = 0; row < 8; ++row) {
        const Bits a{static_cast<std::uint8_t>(row & 1), static_cast<std::uint8_t>((row >> 1) & 1)};
        const Bits b{static_cast<std::uint8_t>((row >> 2) & 1)};
        CHECK(eval(n.formula, a, b) == eval(uneven, a, b));
    }
    CHECK(certify(normalize(uneven, 5, Gate::or_gate).formula)->depth == 5);
    CHECK_THROWS_AS((void)normalize(uneven, 2, Gate::or_gate), PreconditionError);
}

TEST_CASE("random normalized formulas are certified") {
    Rng rng(5);
    for (std::size_t depth = 1; depth <= 5; ++depth) {
        for (const Gate top : {Gate::and_gate, Gate::or_gate}) {
            const auto c = certify(random_normalized_formula(rng, depth, top, 2, 3));
            REQUIRE(c);
            CHECK(c->depth == depth);
            if (depth > 1) CHECK(c->top == top);
        }
    }
}

TEST_CASE("lcs formulas agree with lcs_length") {
    SUBCASE("n = 1, one bit") {
        const Formula f = build_lcs_formula(1, 1, 1);
        for (std::uint32_t a = 0; a < 2; ++a) {
            for (std::uint32_t b = 0; b < 2; ++b) {
                const bool lcs = lcs_length(Str(2, {a}), Str(2, {b})) >= 1;
                CHECK(eval(f, encode_bits({a}, 1), encode_bits({b}, 1)) == lcs);
            }
        }
        CHECK(to_prefix(build_lcs_formula(1, 0, 1)) == "1");
    }
    SUBCASE("n = 2, one bit, every threshold") {
        for (std::size_t t = 0; t <= 3; ++t) {
            const Formula f = build_lcs_formula(2, t, 1);
            for (std::uint32_t xs = 0; xs < 4; ++xs) {
                for (std::uint32_t ys = 0; ys < 4; ++ys) {
                    const std::vector<std::uint32_t> x{xs & 1U, xs >> 1};
                    const std::vector<std::uint32_t> y{ys & 1U, ys >> 1};
                    const bool lcs = lcs_length(Str(2, x), Str(2, y)) >= t;
                    CHECK(eval(f, encode_bits(x, 1), encode_bits(y, 1)) == lcs);
                }
            }
        }
    }
    SUBCASE("n = 3, two bits, sampled") {
        Rng rng(9);
        const Formula f = build_lcs_formula(3, 2, 2);
        for (int c = 0; c < 200; ++c) {
            const Str x = random_str(rng, 4, 3);
            const Str y = random_str(rng, 4, 3);
            const std::vector<std::uint32_t> xs(x.symbols().begin(), x.symbols().end());
            const std::vector<std::uint32_t> ys(y.symbols().begin(), y.symbols().end());
            CHECK(eval(f, encode_bits(xs, 2), encode_bits(ys, 2)) == (lcs_length(x, y) >= 2));
        }
    }
    CHECK_THROWS_AS((void)build_lcs_formula(4, 1, 1), SizeBoundExceeded);
}

TEST_CASE("encode bits is little endian per symbol") {
    CHECK(encode_bits({1, 2}, 2) == Bits{1, 0, 0, 1});
    CHECK_THROWS_AS((void)encode_bits({4}, 2), PreconditionError);
}

TEST_CASE("truth tables and common synthesis") {
    const Formula eq = build_lcs_formula(1, 1, 1);
    const TruthTable t = truth_table(eq, 1, 1);
    CHECK(t == 0b1001);
    const auto s = synthesize_common({t, 0b1111}, 1, 1, 6);
    REQUIRE(s);
    REQUIRE(s->formulas.size() == 2);
    CHECK(truth_table(s->formulas[0].formula, 1, 1) == t);
    CHECK(truth_table(s->formulas[1].formula, 1, 1) == 0b1111);
    CHECK(s->formulas[0].depth == s->depth);
    CHECK(s->formulas[1].depth == s->depth);
    CHECK(s->formulas[0].top == s->formulas[1].top);
}
