#include <doctest.h>

#include "strembed/metrics.hpp"
#include "strembed/oracle.hpp"
#include "support.hpp"

using namespace strembed;
using testing::str;

TEST_CASE("brute edit examples") {
    CHECK(oracle::brute_edit(str("a"), str("a")) == 0);
    CHECK(oracle::brute_edit(str("a"), str("")) == 1);
    // Hand enumeration: no single operation turns ab into ba, two substitutions do.
    CHECK(oracle::brute_edit(str("ab"), str("ba")) == 2);
}

TEST_CASE("brute lcs examples") {
    CHECK(oracle::brute_lcs(str(""), str("abc")) == 0);
    CHECK(oracle::brute_lcs(str("ab"), str("ab")) == 2);
    CHECK(oracle::brute_lcs(str("abcab"), str("bac")) == 2);
}

TEST_CASE("brute best alignment examples") {
    CHECK(oracle::brute_best_alignment(MetricKind::indel, str("a"), str("b")) == 2);
    CHECK(oracle::brute_best_alignment(MetricKind::edit, str("a"), str("b")) == 1);
    CHECK(oracle::brute_best_alignment(MetricKind::indel, str("abc"), str("acb")) == 2);
}

TEST_CASE("oracles refuse inputs beyond their bounds") {
    const Str big(2, std::vector<Symbol>(12, 0));
    CHECK_THROWS_AS((void)oracle::brute_edit(big, big), SizeBoundExceeded);
    const Str long_one(2, std::vector<Symbol>(21, 1));
    CHECK_THROWS_AS((void)oracle::brute_lcs(long_one, long_one), SizeBoundExceeded);
    CHECK(oracle::brute_edit(big, big, {24, 20}) == 0);
}
