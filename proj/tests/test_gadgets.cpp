#include <doctest.h>

#include "strembed/gadgets.hpp"
#include "strembed/metrics.hpp"
#include "strembed/oracle.hpp"
#include "strembed/random.hpp"
#include "support.hpp"

using namespace strembed;
using testing::bin;
using testing::digits;

namespace {

const GadgetPair kTrue{bin("01"), bin("01"), 2, 1, 2};
const GadgetPair kFalse{bin("10"), bin("01"), 2, 1, 2};

NormalizedFormula nf(const std::string& text) { return require_normalized(parse_formula(text)); }

}  // namespace

TEST_CASE("base gadgets") {
    const NormalizedFormula u0 = nf("u0");
    CHECK(digits(compile(u0, Side::g, {1})) == "01");
    CHECK(digits(compile(u0, Side::g, {0})) == "10");
    CHECK(digits(compile(u0, Side::h, {0})) == "01");
    CHECK(digits(compile(u0, Side::h, {1})) == "01");
    CHECK(digits(compile(nf("0"), Side::g, {})) == "10");
    CHECK(digits(compile(nf("0"), Side::h, {})) == "01");
    CHECK(digits(compile(nf("1"), Side::g, {})) == "01");
    CHECK(digits(compile(nf("v0"), Side::h, {1})) == "01");
    CHECK(digits(compile(nf("!v0"), Side::h, {1})) == "10");
    CHECK(digits(compile(nf("!u0"), Side::g, {1})) == "10");
    // Base gadget: LCS is 2 exactly when the literal holds.
    for (std::uint8_t a = 0; a < 2; ++a) {
        for (std::uint8_t b = 0; b < 2; ++b) {
            const GadgetPair p = compile_pair(nf("v0"), {a}, {b});
            CHECK(oracle::brute_lcs(p.g, p.h) == (b == 1 ? 2U : 1U));
        }
    }
}

TEST_CASE("gadget shapes") {
    const GadgetShape leaf = thresholds(nf("u0"));
    CHECK(leaf.t == 2);
    CHECK(leaf.f == 1);
    CHECK(leaf.length == 2);
    const GadgetShape o = thresholds(nf("(or u0 v0)"));
    CHECK(o.t == 20);
    CHECK(o.f == 19);
    CHECK(o.length == 38);
    const GadgetShape a = thresholds(nf("(and u0 v0)"));
    CHECK(a.t == 33);
    CHECK(a.f == 32);
    CHECK(a.length == 58);
    CHECK(gadget_shape(3, Gate::and_gate).length == compile(nf("(and (or u0 v0) (or 1 0))"), Side::g, {0}).size());
}

TEST_CASE("or gadget") {
    for (const bool l : {false, true}) {
        for (const bool r : {false, true}) {
            const GadgetPair out = or_gadget(l ? kTrue : kFalse, r ? kTrue : kFalse);
            CHECK(out.k == 38);
            CHECK(lcs_dp(out.g.symbols(), out.h.symbols()) == ((l || r) ? 9 * 2 + 2U : 9 * 2 + 1U));
            CHECK(lcs_bit_parallel(out.g.symbols(), out.h.symbols()) == ((l || r) ? out.t : out.f));
            CHECK(is_balanced(out.g));
            CHECK(is_balanced(out.h));
        }
    }
}

TEST_CASE("and gadget") {
    for (const bool l : {false, true}) {
        for (const bool r : {false, true}) {
            const GadgetPair out = and_gadget(l ? kTrue : kFalse, r ? kTrue : kFalse);
            const std::size_t expected = (l && r) ? 13 * 2 + 3 * 2 + 1 : 13 * 2 + 2 * 2 + 2 * 1;
            CHECK(lcs_dp(out.g.symbols(), out.h.symbols()) == expected);
            CHECK(out.g.size() == 58);
        }
    }
}

TEST_CASE("gadget children are validated") {
    const GadgetPair odd{bin("011"), bin("011"), 3, 2, 3};
    CHECK_THROWS_AS((void)or_gadget(odd, odd), PreconditionError);
    CHECK_THROWS_AS((void)and_gadget(kTrue, or_gadget(kTrue, kTrue)), PreconditionError);
    const GadgetPair wide{Str(3, {0, 2}), Str(3, {0, 1}), 2, 1, 2};
    CHECK_THROWS_AS((void)or_gadget(wide, wide), AlphabetMismatch);
}

TEST_CASE("compiled formulas hit their thresholds") {
    Rng rng(21);
    for (int c = 0; c < 30; ++c) {
        const std::size_t depth = uniform_between(rng, 1, 3);
        const Gate top = coin(rng, 1, 2) ? Gate::and_gate : Gate::or_gate;
        const NormalizedFormula phi = require_normalized(random_normalized_formula(rng, depth, top, 2, 2));
        const GadgetShape s = thresholds(phi);
        for (std::uint8_t row = 0; row < 16; ++row) {
            const Bits a{static_cast<std::uint8_t>(row & 1), static_cast<std::uint8_t>((row >> 1) & 1)};
            const Bits b{static_cast<std::uint8_t>((row >> 2) & 1), static_cast<std::uint8_t>((row >> 3) & 1)};
            const GadgetPair p = compile_pair(phi, a, b);
            CHECK(lcs_length(p.g, p.h) == (eval(phi.formula, a, b) ? s.t : s.f));
            CHECK(p.g.size() == s.length);
        }
    }
}

TEST_CASE("compile depth guard") {
    Rng rng(1);
    const NormalizedFormula deep = require_normalized(random_normalized_formula(rng, 5, Gate::and_gate, 1, 1));
    CHECK_THROWS_AS((void)compile(deep, Side::g, {0}), SizeBoundExceeded);
    CompileOptions loose;
    loose.max_depth = 5;
    CHECK(compile(deep, Side::g, {0}, loose).size() == thresholds(deep).length);
}

TEST_CASE("concatenation") {
    const GadgetPair yes = compile_pair(nf("(and u0 v0)"), {1}, {1});
    const GadgetPair no = compile_pair(nf("(and u0 v0)"), {0}, {1});
    const std::uint64_t T = yes.t;
    const std::uint64_t F = yes.f;

    const ConcatReduction one = concat_reduction({yes});
    CHECK(one.G == yes.g);
    CHECK(one.H == yes.h);
    CHECK(one.R == F);
    CHECK(one.S == T - F);
    CHECK(one.N == one.M);

    const ConcatReduction both_false = concat_reduction({no, no});
    const std::uint64_t M = both_false.M;
    CHECK(M == 2 * yes.k);
    CHECK(both_false.N == 2 * yes.k + 2 * M);
    CHECK(lcs_length(both_false.G, both_false.H) == 2 * M + 2 * F);
    const ConcatReduction one_true = concat_reduction({yes, no});
    CHECK(lcs_length(one_true.G, one_true.H) == 2 * M + 2 * F + (T - F));
    const ConcatReduction both_true = concat_reduction({yes, yes});
    CHECK(lcs_length(both_true.G, both_true.H) == both_true.R + 2 * both_true.S);
}

TEST_CASE("binary reduction end to end") {
    const BinaryReduction same = binary_reduce_and_recover(Str(2, {0}), Str(2, {0}), 1);
    CHECK(same.recovered == 1);
    const BinaryReduction diff = binary_reduce_and_recover(Str(2, {0}), Str(2, {1}), 1);
    CHECK(diff.recovered == 0);
    CHECK(diff.lcs == diff.reduction.R);
    for (Symbol a = 0; a < 4; a += 3) {
        for (Symbol b = 0; b < 4; ++b) {
            const BinaryReduction r = binary_reduce_and_recover(Str(4, {a}), Str(4, {b}), 2);
            CHECK(r.recovered == (a == b ? 1U : 0U));
            CHECK(is_balanced(r.reduction.G));
        }
    }
    CHECK_THROWS_AS((void)binary_reduce_and_recover(Str(2, {0}), Str(2, {0, 1}), 1), PreconditionError);
    CHECK_THROWS_AS((void)binary_reduce_and_recover(Str(4, {3}), Str(4, {0}), 1), PreconditionError);
    BinaryReduceOptions tight;
    tight.max_length = 100;
    CHECK_THROWS_AS((void)binary_reduce_and_recover(Str(2, {0, 1}), Str(2, {1, 1}), 1, tight), SizeBoundExceeded);
}
