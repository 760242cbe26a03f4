#include <doctest.h>

#include "strembed/alphabet_embed.hpp"
#include "strembed/random.hpp"
#include "strembed/verify.hpp"
#include "support.hpp"

using namespace strembed;
using testing::str;

namespace {

const IndelCode& small_code() {
    static const IndelCode code = generate_code(plan_parameters(4, 0.25), 0);
    return code;
}

// Pushed identity alignment of x with itself, keeping `keep` matches per block.
Alignment thinned_identity(const Str& ex, std::size_t k, std::size_t keep) {
    Alignment a{MetricKind::indel, {}};
    for (std::size_t i = 0; i < ex.size(); ++i) {
        if (i % k < keep) a.pairs.push_back({i, i, false});
    }
    return a;
}

}  // namespace

TEST_CASE("embed concatenates codewords") {
    const IndelCode& code = small_code();
    const std::size_t k = code.params.k;
    CHECK(embed(code, str("", 4)).empty());
    CHECK(embed(code, str("b", 4)) == code.codewords[1]);
    const Str aa = embed(code, str("aa", 4));
    CHECK(aa.size() == 2 * k);
    CHECK(aa == code.codewords[0] + code.codewords[0]);
    CHECK(indel_distance(aa, aa) == 0);
    CHECK_THROWS_AS((void)embed(code, str("a", 5)), AlphabetMismatch);
}

TEST_CASE("push alignment") {
    const IndelCode& code = small_code();
    const std::size_t k = code.params.k;
    const Str x = str("abca", 4);
    const Str ex = embed(code, x);
    const Alignment id = push_alignment(optimal_alignment(MetricKind::indel, x, x), x, x, code);
    CHECK(cost(id, ex, ex).total == 0);
    CHECK(is_block_structured(id, ex, ex, k));

    const Str y = str("dd", 4);
    const Alignment none = push_alignment(Alignment{MetricKind::indel, {}}, x, y, code);
    CHECK(none.pairs.empty());
    CHECK(cost(none, ex, embed(code, y)).total == k * (x.size() + y.size()));

    const Str ab = str("ab", 4);
    const Str ba = str("ba", 4);
    const Alignment swap = push_alignment(optimal_alignment(MetricKind::indel, ab, ba), ab, ba, code);
    CHECK(cost(swap, embed(code, ab), embed(code, ba)).total == 2 * k);
}

TEST_CASE("block structure keeps significant matches and drops the rest") {
    const IndelCode& code = small_code();
    const std::size_t k = code.params.k;
    const std::size_t threshold = code.params.lcs_budget;  // ⌊εk⌋
    const Str x = str("ab", 4);
    const Str ex = embed(code, x);

    const Alignment strong = thinned_identity(ex, k, threshold + 1);
    CHECK_FALSE(is_block_structured(strong, ex, ex, k));
    const BlockStructureResult up = block_structure_stages(strong, ex, ex, k, 0.25);
    CHECK(is_block_structured(up.output, ex, ex, k));
    CHECK(cost(up.output, ex, ex).total == 0);
    CHECK(up.perfect_pairs == 2);

    const Alignment weak = thinned_identity(ex, k, threshold);
    const BlockStructureResult down = block_structure_stages(weak, ex, ex, k, 0.25);
    CHECK(down.output.pairs.empty());
    const double bound = 4.0 * static_cast<double>(cost(weak, ex, ex).total);
    CHECK(static_cast<double>(cost(down.output, ex, ex).total) <= bound);
}

TEST_CASE("block structure is idempotent on block-structured input") {
    const IndelCode& code = small_code();
    const Str x = str("abcadb", 4);
    const Str y = str("bcdab", 4);
    const Str ex = embed(code, x);
    const Str ey = embed(code, y);
    const Alignment pushed = push_alignment(optimal_alignment(MetricKind::indel, x, y), x, y, code);
    const Alignment out = block_structure(pushed, ex, ey, code, 0.25);
    CHECK(cost(out, ex, ey).total == cost(pushed, ex, ey).total);
    CHECK(block_structure(out, ex, ey, code, 0.25) == out);
}

TEST_CASE("significant match between different codewords is an inconsistency") {
    const IndelCode& code = small_code();
    const std::size_t k = code.params.k;
    const Str w = code.codewords[0];
    std::vector<Symbol> changed(w.symbols().begin(), w.symbols().end());
    changed.back() = (changed.back() + 1) % static_cast<Symbol>(code.params.sigma_size);
    const Str w2(code.params.sigma_size, changed);
    const Alignment a = thinned_identity(w, k, k - 1);
    CHECK_THROWS_AS((void)block_structure_stages(a, w, w2, k, 0.25), InconsistencyError);
}

TEST_CASE("random alignments stay within the squared bound") {
    const IndelCode& code = small_code();
    const std::size_t k = code.params.k;
    Rng rng(3);
    for (int c = 0; c < 150; ++c) {
        const Str x = random_str(rng, 4, uniform_between(rng, 1, 8));
        const Str y = verify::mutate(rng, x, uniform_between(rng, 0, 4), 10);
        if (y.empty()) continue;
        const Str ex = embed(code, x);
        const Str ey = embed(code, y);
        const Alignment pushed = push_alignment(optimal_alignment(MetricKind::indel, x, y), x, y, code);
        const Alignment in = verify::random_alignment(rng, ex, ey, k, pushed);
        const Alignment out = block_structure(in, ex, ey, code, 0.25);
        CHECK(is_block_structured(out, ex, ey, k));
        CHECK(static_cast<double>(cost(out, ex, ey).total) <= 4.0 * static_cast<double>(cost(in, ex, ey).total));
        const Alignment lifted = lift_alignment(out, x, y, code);
        CHECK(k * cost(lifted, x, y).total == cost(out, ex, ey).total);
    }
}

TEST_CASE("lift alignment") {
    const IndelCode& code = small_code();
    const Str x = str("cab", 4);
    const Str ex = embed(code, x);
    const Alignment id = push_alignment(optimal_alignment(MetricKind::indel, x, x), x, x, code);
    CHECK(lift_alignment(id, x, x, code) == optimal_alignment(MetricKind::indel, x, x));

    const Str y = str("dd", 4);
    const Alignment none = lift_alignment(Alignment{MetricKind::indel, {}}, x, y, code);
    CHECK(none.pairs.empty());
    CHECK(cost(none, x, y).total == x.size() + y.size());

    CHECK_THROWS_AS((void)lift_alignment(thinned_identity(ex, code.params.k, 2), x, x, code), InvalidAlignment);
}

TEST_CASE("contracted pair") {
    const IndelCode code = generate_code(plan_parameters(513, 0.25), 0);
    const Embedding e = [&code](const Str& s) { return embed(code, s); };
    const ContractedPair p = find_contracted_pair(e, 2, 513, 512);
    CHECK(p.original.raw == p.original.scale);
    CHECK(compare_normalized(p.embedded, p.original) < 0);
    CHECK(p.ex[0] == p.ey[0]);

    CHECK_THROWS_AS((void)find_contracted_pair(e, 2, 512, 512), PreconditionError);

    const Embedding constant = [](const Str& s) { return Str(2, std::vector<Symbol>(s.size(), 0)); };
    const ContractedPair c = find_contracted_pair(constant, 3, 3, 2);
    CHECK(c.x == Str(3, {0, 0, 0}));
    CHECK(c.y == Str(3, {1, 1, 1}));
    CHECK(c.embedded.raw == 0);
}

TEST_CASE("plurality collision") {
    const IndelCode code = generate_code(plan_parameters(513, 0.25), 0);
    const Embedding e = [&code](const Str& s) { return embed(code, s); };
    const PluralityCollision p = find_plurality_collision(e, 1, 513, 512);
    CHECK(p.certified);
    CHECK(p.embedded_lcs * 512 >= p.embedded_length);
    CHECK_FALSE(p.x == p.y);

    const Embedding clamp = [](const Str& s) {
        std::vector<Symbol> out;
        for (const Symbol c : s.symbols()) out.push_back(std::min<Symbol>(c, 1));
        return Str(2, out);
    };
    const PluralityCollision q = find_plurality_collision(clamp, 4, 3, 2);
    CHECK(q.certified);
    CHECK(q.plurality == 1);
    CHECK(q.x == Str(3, {1, 1, 1, 1}));
    CHECK(q.y == Str(3, {2, 2, 2, 2}));
    CHECK_THROWS_AS((void)find_plurality_collision(clamp, 4, 2, 2), PreconditionError);
}
