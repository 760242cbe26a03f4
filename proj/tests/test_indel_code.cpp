#include <doctest.h>

#include <cmath>
#include <sstream>

#include "strembed/indel_code.hpp"
#include "strembed/metrics.hpp"

using namespace strembed;

TEST_CASE("parameter planning") {
    const EmbedParams p = plan_parameters(256, 0.25);
    CHECK(p.sigma_size == 512);
    CHECK(p.k == 64);
    CHECK(p.lcs_budget == 16);
    CHECK_FALSE(p.snapped);

    const EmbedParams big = plan_parameters(4096, 0.25);
    CHECK(big.k >= 96);
    CHECK(static_cast<double>(big.k) <= 4.0 + 8.0 * 12.0);

    CHECK(plan_parameters(2, 0.25).k == 8);
    CHECK(plan_parameters(64, 0.25).k == 48);
    CHECK(plan_parameters(513, 0.25).k == 76);
    CHECK(plan_parameters(1, 0.25).sigma_size == 512);
    CHECK(plan_parameters(8, 0.1).sigma_size == 3200);

    CHECK_THROWS_AS((void)plan_parameters(2, 0.6), PreconditionError);
    CHECK_THROWS_AS((void)plan_parameters(2, 0.5), PreconditionError);
    CHECK_THROWS_AS((void)plan_parameters(0, 0.25), PreconditionError);
}

TEST_CASE("binomial bound") {
    const BinomialBound small = binomial_bound(4, 0.25);
    CHECK(small.binomial == 4.0);
    CHECK(small.bound == doctest::Approx(16.0));
    CHECK(binomial_bound(1, 0.49).binomial == 1.0);
    const BinomialBound mid = binomial_bound(20, 0.1);
    CHECK(mid.binomial == 190.0);
    CHECK(mid.bound == doctest::Approx(std::pow(2.0, (0.1 * std::log2(10.0) + 0.2) * 20.0)));
}

TEST_CASE("generated codes validate") {
    const IndelCode two = generate_code(plan_parameters(2, 0.25), 0);
    REQUIRE(two.codewords.size() == 2);
    CHECK(two.codewords[0].size() == 8);
    CHECK(lcs_length(two.codewords[0], two.codewords[1]) <= 1);
    CHECK(validate_code(two).pass);

    const IndelCode one = generate_code(plan_parameters(1, 0.25), 3);
    CHECK(one.codewords.size() == 1);
    CHECK(validate_code(one).pass);

    const EmbedParams p = plan_parameters(64, 0.25);
    CHECK(generate_code(p, 5) == generate_code(p, 5));
    CHECK_FALSE(generate_code(p, 5) == generate_code(p, 6));
    const CodeReport r = validate_code(generate_code(p, 5));
    CHECK(r.pass);
    CHECK(r.max_pairwise_lcs < p.lcs_budget);
    CHECK(r.min_pairwise_indel == 2 * p.k - 2 * r.max_pairwise_lcs);
}

TEST_CASE("generation gives up when the budget is exhausted") {
    GenerateOptions tiny;
    tiny.attempt_budget = 3;
    CHECK_THROWS_AS((void)generate_code(plan_parameters(64, 0.25), 0, tiny), GenerationBudgetExhausted);
}

TEST_CASE("validation catches duplicates and ragged lengths") {
    IndelCode code = generate_code(plan_parameters(4, 0.25), 1);
    code.codewords[2] = code.codewords[1];
    const CodeReport dup = validate_code(code);
    CHECK_FALSE(dup.pass);
    CHECK(dup.max_pairwise_lcs == code.params.k);

    IndelCode ragged = generate_code(plan_parameters(4, 0.25), 1);
    ragged.codewords[0] = ragged.codewords[0].slice(0, 3);
    CHECK_FALSE(validate_code(ragged).lengths_ok);
    CHECK_FALSE(validate_code(ragged).pass);
}

TEST_CASE("more codewords than symbols force a close pair") {
    // Pigeonhole: with |C| > |Sigma| two words share a plurality symbol.
    EmbedParams p = plan_parameters(4, 0.25);
    p.sigma_size = 3;
    p.gamma_size = 4;
    IndelCode code;
    code.params = p;
    for (Symbol s = 0; s < 4; ++s) {
        std::vector<Symbol> w(p.k);
        for (std::size_t i = 0; i < p.k; ++i) w[i] = static_cast<Symbol>((s + i) % 3);
        code.codewords.emplace_back(3, w);
    }
    const CodeReport r = validate_code(code);
    CHECK(static_cast<double>(r.min_pairwise_indel) < (1.0 - 1.0 / 3.0) * 2.0 * static_cast<double>(p.k));
}

TEST_CASE("code file round trip") {
    const IndelCode code = generate_code(plan_parameters(16, 0.25), 0);
    std::stringstream ss;
    write_code(ss, code);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "512 32 0.25 16");
    ss.seekg(0);
    CHECK(read_code(ss) == code);

    std::istringstream bad("512 32 0.25 2\n1 2 3\n");
    CHECK_THROWS_AS((void)read_code(bad), PreconditionError);
}
