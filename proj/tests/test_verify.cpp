#include <doctest.h>

#include <sstream>

#include "strembed/alphabet_embed.hpp"
#include "strembed/verify.hpp"

using namespace strembed;

TEST_CASE("small suites pass") {
    verify::MetricsConfig m;
    m.exhaustive_total_length = 5;
    m.random_cases = 200;
    CHECK(verify::run_metrics(m).passed());

    verify::CodeConfig c;
    c.gamma = 32;
    c.seeds = 5;
    CHECK(verify::run_code(c).passed());

    verify::AlphaConfig a;
    a.pairs = 20;
    a.alignments = 50;
    a.demos = false;
    CHECK(verify::run_alpha(a).passed());

    verify::GadgetConfig g;
    g.corpus = 10;
    g.max_depth = 2;
    g.depth4_formulas = 0;
    CHECK(verify::run_gadgets(g).passed());

    verify::I2eConfig i;
    i.cases = 30;
    i.exact_exhaustive_n = 3;
    i.tiskin_exhaustive_n = 3;
    i.tiskin_random_cases = 30;
    CHECK(verify::run_i2e(i).passed());
}

TEST_CASE("failing checks keep the first counterexample") {
    verify::SuiteReport r;
    r.suite = "demo";
    verify::Check& c = r.add("always");
    c.cases = 2;
    c.fail("first");
    c.fail("second");
    c.observe(3.0, true);
    c.observe(2.0, true);
    CHECK_FALSE(r.passed());
    CHECK(c.failures == 2);
    CHECK(c.counterexample == "first");
    CHECK(c.worst == 3.0);
    std::ostringstream text;
    verify::print_text(text, r);
    CHECK(text.str().find("counterexample: first") != std::string::npos);
    std::ostringstream kv;
    verify::print_structured(kv, r);
    CHECK(kv.str().find("check.always.passed = false\n") != std::string::npos);
}

TEST_CASE("random alignments are valid") {
    const IndelCode code = generate_code(plan_parameters(8, 0.25), 0);
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        const Str x = random_str(rng, 8, uniform_between(rng, 1, 6));
        const Str y = verify::mutate(rng, x, 3, 8);
        const Str ex = embed(code, x);
        const Str ey = embed(code, y);
        const Alignment pushed = push_alignment(optimal_alignment(MetricKind::indel, x, y), x, y, code);
        CHECK_FALSE(validate_alignment(verify::random_alignment(rng, ex, ey, code.params.k, pushed), ex, ey));
    }
}
