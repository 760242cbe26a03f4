// Acceptance run: one PASS/FAIL line per criterion. Tolerances and runtime
// limits are fixed below; pass criterion numbers to run a subset.
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "strembed/verify.hpp"

using namespace strembed;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

// All listed checks must pass; the detail carries each check's worst value.
Outcome require(const verify::SuiteReport& r, const std::vector<std::string>& names) {
    Outcome o;
    std::ostringstream detail;
    for (const std::string& name : names) {
        bool found = false;
        for (const verify::Check& c : r.checks) {
            if (c.name != name) continue;
            found = true;
            o.passed = o.passed && c.passed;
            detail << name << ": " << c.cases << " cases";
            if (c.failures > 0) detail << ", " << c.failures << " failed, e.g. " << c.counterexample;
            if (c.has_worst) detail << ", worst " << c.worst;
            if (!c.note.empty()) detail << " [" << c.note << "]";
            detail << "; ";
        }
        if (!found) {
            o.passed = false;
            detail << name << ": missing; ";
        }
    }
    o.detail = detail.str();
    if (o.detail.size() >= 2) o.detail.resize(o.detail.size() - 2);
    return o;
}

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<std::pair<verify::SuiteReport, std::vector<std::string>>()> run;
};

std::vector<Criterion> criteria() {
    std::vector<Criterion> out;
    out.push_back({1, "metric correctness vs oracle (exhaustive |x|+|y|<=8, 10^4 random up to 20)", 120.0, [] {
                       verify::MetricsConfig c;  // alphabet 3, exhaustive 8, 10^4 random, total length 20
                       return std::pair{verify::run_metrics(c),
                                        std::vector<std::string>{"edit_matches_oracle", "lcs_kernels_match_oracle",
                                                                 "optimal_alignment_cost",
                                                                 "normalized_in_unit_interval"}};
                   }});
    out.push_back({2, "code construction, eps=1/4 sigma=512 gamma=256, >=99/100 seeds, max LCS < eps*k", 300.0, [] {
                       verify::CodeConfig c;
                       c.gamma = 256;
                       c.epsilon = 0.25;
                       c.seeds = 100;
                       c.required_success = 0.99;
                       return std::pair{verify::run_code(c),
                                        std::vector<std::string>{"generation_success_rate", "generated_codes_valid"}};
                   }});
    out.push_back({3, "alphabet reduction sandwich, 200 pairs len<=50 over gamma=64", 600.0, [] {
                       verify::AlphaConfig c;
                       c.gamma = 64;
                       c.epsilon = 0.25;
                       c.pairs = 200;
                       c.max_length = 50;
                       return std::pair{verify::run_alpha_sandwich(c),
                                        std::vector<std::string>{"upper_bound", "lower_bound_48eps"}};
                   }});
    out.push_back({4, "block structuring of 10^3 random alignments, cost <= (1+4eps)^2", 300.0, [] {
                       verify::AlphaConfig c;
                       c.alignments = 1000;
                       c.alignment_epsilon = 0.25;
                       return std::pair{verify::run_block_structuring(c),
                                        std::vector<std::string>{"output_block_structured", "cost_bound_squared"}};
                   }});
    out.push_back({5, "gadget exactness, 200-formula corpus depth<=3, depth-4 spot checks", 900.0, [] {
                       verify::GadgetConfig c;
                       c.corpus = 200;
                       c.max_depth = 3;
                       c.exhaustive_limit = std::size_t{1} << 16;
                       c.sampled_assignments = 1000;
                       c.depth4_formulas = 1;
                       c.depth4_assignments = 50;
                       return std::pair{verify::run_gadgets(c),
                                        std::vector<std::string>{"lcs_equals_threshold", "depth4_spot_checks"}};
                   }});
    out.push_back({6, "binary LCS recovery, n=1 two-bit (16 pairs) and n=2 binary (16 pairs)", 1800.0, [] {
                       return std::pair{verify::run_binary_recovery(),
                                        std::vector<std::string>{"recover_n1_two_bits", "recover_n2_binary"}};
                   }});
    out.push_back({7, "exact indel-to-edit identity, exhaustive binary n<=6 plus 500 random n<=12", 300.0, [] {
                       verify::I2eConfig c;
                       c.approximate = false;
                       c.tiskin = false;
                       c.exact_exhaustive_n = 6;
                       c.cases = 500;
                       c.max_n = 12;
                       c.max_alphabet = 4;
                       return std::pair{verify::run_i2e(c), std::vector<std::string>{"exact_identity"}};
                   }});
    out.push_back({8, "approximate indel-to-edit sandwich and spill bounds, eps in {1,1/2,1/4}", 300.0, [] {
                       verify::I2eConfig c;
                       c.exact = false;
                       c.tiskin = false;
                       c.epsilons = {1.0, 0.5, 0.25};
                       c.cases = 500;
                       return std::pair{verify::run_i2e(c),
                                        std::vector<std::string>{"apx_sandwich_eps_1", "apx_spill_bounds_eps_1",
                                                                 "apx_sandwich_eps_0.5", "apx_spill_bounds_eps_0.5",
                                                                 "apx_sandwich_eps_0.25",
                                                                 "apx_spill_bounds_eps_0.25"}};
                   }});
    out.push_back({9, "edit-to-indel identity, exhaustive binary n<=5 plus 10^3 random", 120.0, [] {
                       verify::I2eConfig c;
                       c.exact = false;
                       c.approximate = false;
                       c.tiskin_exhaustive_n = 5;
                       c.tiskin_random_cases = 1000;
                       return std::pair{verify::run_i2e(c), std::vector<std::string>{"tiskin_identity"}};
                   }});
    out.push_back({10, "lower-bound demonstrators with |Gamma| = |Sigma|+1", 120.0, [] {
                       verify::AlphaConfig c;
                       c.epsilon = 0.25;
                       return std::pair{verify::run_lower_bound_demos(c),
                                        std::vector<std::string>{"contracted_pair", "plurality_collision",
                                                                 "requires_larger_source_alphabet"}};
                   }});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "-v") {
            verbose = true;
        } else {
            only.insert(std::atoi(arg.c_str()));
        }
    }
    int failed = 0;
    for (const Criterion& c : criteria()) {
        if (!only.empty() && only.count(c.id) == 0) continue;
        Outcome o;
        verify::SuiteReport report;
        try {
            auto [r, names] = c.run();
            report = std::move(r);
            o = require(report, names);
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("threw: ") + e.what();
        }
        const bool in_time = report.seconds <= c.limit_seconds;
        const bool pass = o.passed && in_time;
        failed += pass ? 0 : 1;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.1fs of %.0fs", report.seconds, c.limit_seconds);
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << timing
                  << (in_time ? "" : ", over time limit") << ") -- " << o.detail << std::endl;
        if (verbose) verify::print_text(std::cout, report);
    }
    return failed == 0 ? 0 : 1;
}
