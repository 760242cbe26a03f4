#include "strembed/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "strembed/alphabet_embed.hpp"
#include "strembed/gadgets.hpp"
#include "strembed/indel_code.hpp"
#include "strembed/indel_edit.hpp"
#include "strembed/metrics.hpp"
#include "strembed/oracle.hpp"

namespace strembed::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Str string_from_index(std::size_t alphabet, std::size_t length, std::uint64_t index) {
    std::vector<Symbol> s(length);
    for (std::size_t i = 0; i < length; ++i) {
        s[i] = static_cast<Symbol>(index % alphabet);
        index /= alphabet;
    }
    return {alphabet, std::move(s)};
}

std::uint64_t power(std::size_t base, std::size_t exponent) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) out *= base;
    return out;
}

// Calls fn on every string of the given length.
void for_each_string(std::size_t alphabet, std::size_t length, const std::function<void(const Str&)>& fn) {
    const std::uint64_t count = power(alphabet, length);
    for (std::uint64_t idx = 0; idx < count; ++idx) fn(string_from_index(alphabet, length, idx));
}

std::string pair_text(const Str& x, const Str& y) { return "x=" + render(x) + " y=" + render(y); }

double ratio(std::uint64_t num, std::uint64_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

// ---- metrics ----

void check_metric_pair(SuiteReport& r, const Str& x, const Str& y) {
    Check& edit = r.checks[0];
    Check& lcs = r.checks[1];
    Check& align = r.checks[2];
    Check& norm = r.checks[3];

    const std::size_t brute_e = oracle::brute_edit(x, y);
    const std::size_t brute_l = oracle::brute_lcs(x, y);
    ++edit.cases;
    if (edit_distance(x, y) != brute_e) edit.fail(pair_text(x, y) + " edit=" + std::to_string(edit_distance(x, y)) +
                                                  " oracle=" + std::to_string(brute_e));
    ++lcs.cases;
    for (const LcsKernel kernel : {LcsKernel::automatic, LcsKernel::dynamic_programming, LcsKernel::bit_parallel,
                                   LcsKernel::run_length}) {
        const std::size_t got = lcs_length(x, y, kernel);
        if (got != brute_l) {
            lcs.fail(pair_text(x, y) + " kernel=" + std::to_string(static_cast<int>(kernel)) +
                     " lcs=" + std::to_string(got) + " oracle=" + std::to_string(brute_l));
            break;
        }
    }
    ++align.cases;
    for (const MetricKind kind : {MetricKind::edit, MetricKind::indel}) {
        const Alignment a = optimal_alignment(kind, x, y);
        const std::size_t expected = kind == MetricKind::edit ? brute_e : x.size() + y.size() - 2 * brute_l;
        if (validate_alignment(a, x, y) || cost(a, x, y).total != expected) {
            align.fail(pair_text(x, y) + " kind=" + to_string(kind));
            break;
        }
    }
    if (!x.empty() || !y.empty()) {
        ++norm.cases;
        for (const MetricKind kind : {MetricKind::edit, MetricKind::indel}) {
            const DistanceValue d = normalized_distance(kind, x, y);
            if (d.raw > d.scale) norm.fail(pair_text(x, y) + " normalized above 1");
        }
    }
}

// ---- alphabet embedding ----

IndelCode code_for(std::size_t gamma, double epsilon, std::uint64_t seed) {
    const EmbedParams p = plan_parameters(gamma, epsilon);
    for (std::uint64_t s = seed;; ++s) {
        try {
            return generate_code(p, s);
        } catch (const GenerationBudgetExhausted&) {
            if (s > seed + 16) throw;
        }
    }
}

Str random_word(Rng& rng, std::size_t alphabet, std::size_t min_length, std::size_t max_length) {
    return random_str(rng, alphabet, uniform_between(rng, min_length, max_length));
}

// Equal-length partner: half the time unrelated, otherwise a perturbed copy.
Str equal_length_partner(Rng& rng, const Str& x) {
    if (coin(rng, 1, 2)) return random_str(rng, x.alphabet_size(), x.size());
    std::vector<Symbol> s(x.symbols().begin(), x.symbols().end());
    if (!s.empty()) {
        const std::size_t edits = uniform_below(rng, s.size() / 2 + 1);
        for (std::size_t e = 0; e < edits; ++e) {
            const std::size_t i = uniform_below(rng, s.size());
            if (coin(rng, 1, 2)) {
                s[i] = static_cast<Symbol>(uniform_below(rng, x.alphabet_size()));
            } else {
                // Move one symbol elsewhere: an insertion plus a deletion.
                const Symbol c = s[i];
                s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
                s.insert(s.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, s.size() + 1)), c);
            }
        }
    }
    return {x.alphabet_size(), std::move(s)};
}

}  // namespace

void Check::fail(std::string example) {
    passed = false;
    ++failures;
    if (counterexample.empty()) counterexample = std::move(example);
}

void Check::observe(double value, bool larger_is_worse) {
    if (!has_worst || (larger_is_worse ? value > worst : value < worst)) worst = value;
    has_worst = true;
}

bool SuiteReport::passed() const {
    for (const Check& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

Check& SuiteReport::add(std::string name) {
    checks.push_back(Check{});
    checks.back().name = std::move(name);
    return checks.back();
}

void print_text(std::ostream& os, const SuiteReport& report) {
    os << "suite " << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << std::fixed
       << std::setprecision(2) << report.seconds << "s)\n";
    for (const Check& c : report.checks) {
        os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << " cases=" << c.cases;
        if (c.failures > 0) os << " failures=" << c.failures;
        if (c.has_worst) os << " worst=" << std::setprecision(6) << c.worst;
        if (!c.note.empty()) os << " (" << c.note << ")";
        os << '\n';
        if (!c.counterexample.empty()) os << "      counterexample: " << c.counterexample << '\n';
    }
    os.unsetf(std::ios::floatfield);
}

void print_structured(std::ostream& os, const SuiteReport& report) {
    os << "suite = " << report.suite << '\n';
    os << "passed = " << (report.passed() ? "true" : "false") << '\n';
    os << "seconds = " << std::fixed << std::setprecision(3) << report.seconds << '\n';
    os.unsetf(std::ios::floatfield);
    for (const Check& c : report.checks) {
        const std::string key = "check." + c.name + ".";
        os << key << "passed = " << (c.passed ? "true" : "false") << '\n';
        os << key << "cases = " << c.cases << '\n';
        os << key << "failures = " << c.failures << '\n';
        if (c.has_worst) os << key << "worst = " << std::setprecision(9) << c.worst << '\n';
        if (!c.note.empty()) os << key << "note = " << c.note << '\n';
        if (!c.counterexample.empty()) os << key << "counterexample = " << c.counterexample << '\n';
    }
}

std::string render(const Str& s) {
    std::string out;
    if (s.alphabet_size() <= 26) {
        for (const Symbol c : s.symbols()) out.push_back(static_cast<char>('a' + c));
        return "\"" + out + "\"";
    }
    out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s[i]);
    }
    return out + "]";
}

Str mutate(Rng& rng, const Str& x, std::size_t edits, std::size_t max_length) {
    std::vector<Symbol> s(x.symbols().begin(), x.symbols().end());
    for (std::size_t e = 0; e < edits; ++e) {
        const std::uint64_t op = uniform_below(rng, 3);
        if (op == 0 && !s.empty()) {
            s[uniform_below(rng, s.size())] = static_cast<Symbol>(uniform_below(rng, x.alphabet_size()));
        } else if (op == 1 && s.size() < max_length) {
            s.insert(s.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, s.size() + 1)),
                     static_cast<Symbol>(uniform_below(rng, x.alphabet_size())));
        } else if (!s.empty()) {
            s.erase(s.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, s.size())));
        }
    }
    return {x.alphabet_size(), std::move(s)};
}

Alignment random_alignment(Rng& rng, const Str& ex, const Str& ey, std::size_t k, const Alignment& pushed) {
    switch (uniform_below(rng, 4)) {
        case 0:
            return optimal_alignment(MetricKind::indel, ex, ey);
        case 1: {
            // Thin the block alignment so blocks become partially matched.
            Alignment a{MetricKind::indel, {}};
            const std::uint64_t keep = uniform_between(rng, 1, 9);
            for (const AlignedPair& p : pushed.pairs) {
                if (coin(rng, keep, 10)) a.pairs.push_back(p);
            }
            return a;
        }
        case 2: {
            // Optimal alignment with random runs knocked out.
            Alignment opt = optimal_alignment(MetricKind::indel, ex, ey);
            Alignment a{MetricKind::indel, {}};
            const std::size_t run = 1 + uniform_below(rng, k);
            bool dropping = false;
            for (std::size_t t = 0; t < opt.pairs.size(); ++t) {
                if (t % run == 0) dropping = coin(rng, 1, 3);
                if (!dropping) a.pairs.push_back(opt.pairs[t]);
            }
            return a;
        }
        default: {
            // Monotone walk that grabs equal symbols when it meets them.
            Alignment a{MetricKind::indel, {}};
            std::size_t i = 0;
            std::size_t j = 0;
            while (i < ex.size() && j < ey.size()) {
                if (ex[i] == ey[j] && coin(rng, 7, 8)) {
                    a.pairs.push_back({i++, j++, false});
                } else if (coin(rng, 1, 2)) {
                    ++i;
                } else {
                    ++j;
                }
            }
            return a;
        }
    }
}

SuiteReport run_metrics(const MetricsConfig& config) {
    SuiteReport r;
    r.suite = "metrics";
    const auto start = Clock::now();
    r.add("edit_matches_oracle");
    r.add("lcs_kernels_match_oracle");
    r.add("optimal_alignment_cost");
    r.add("normalized_in_unit_interval");

    for (std::size_t total = 0; total <= config.exhaustive_total_length; ++total) {
        for (std::size_t a = 0; a <= total; ++a) {
            for_each_string(config.alphabet, a, [&](const Str& x) {
                for_each_string(config.alphabet, total - a, [&](const Str& y) { check_metric_pair(r, x, y); });
            });
        }
    }
    Rng rng(config.seed);
    for (std::size_t c = 0; c < config.random_cases; ++c) {
        const std::size_t a = uniform_between(rng, 0, config.random_total_length);
        const std::size_t b = uniform_between(rng, 0, config.random_total_length - a);
        const Str x = random_str(rng, config.alphabet, a);
        // Either unrelated, or a perturbed prefix of x that respects the length cap.
        const Str y = coin(rng, 1, 2) ? random_str(rng, config.alphabet, b)
                                      : mutate(rng, x.slice(0, std::min(a, b)), b / 2 + 1, b);
        check_metric_pair(r, x, y);
    }
    r.checks[0].note = "exhaustive |x|+|y|<=" + std::to_string(config.exhaustive_total_length) + " plus random";
    r.seconds = seconds_since(start);
    return r;
}

SuiteReport run_code(const CodeConfig& config) {
    SuiteReport r;
    r.suite = "code";
    const auto start = Clock::now();
    const EmbedParams p = plan_parameters(config.gamma, config.epsilon);
    Check& success = r.add("generation_success_rate");
    Check& valid = r.add("generated_codes_valid");
    Check& determinism = r.add("same_seed_same_code");
    Check& binom = r.add("binomial_bound");

    std::size_t ok = 0;
    std::size_t worst_lcs = 0;
    for (std::size_t s = 0; s < config.seeds; ++s) {
        ++success.cases;
        IndelCode code;
        try {
            code = generate_code(p, config.first_seed + s);
        } catch (const GenerationBudgetExhausted& e) {
            ++success.failures;
            if (success.counterexample.empty()) success.counterexample = e.what();
            continue;
        }
        ++ok;
        ++valid.cases;
        const CodeReport rep = validate_code(code);
        worst_lcs = std::max(worst_lcs, rep.max_pairwise_lcs);
        if (!rep.pass || code.codewords.size() != p.gamma_size) {
            valid.fail("seed " + std::to_string(config.first_seed + s) +
                       " max_lcs=" + std::to_string(rep.max_pairwise_lcs));
        }
    }
    const double rate = config.seeds == 0 ? 1.0 : ratio(ok, config.seeds);
    success.observe(rate, false);
    success.passed = rate >= config.required_success;
    std::ostringstream note;
    note << "sigma=" << p.sigma_size << " k=" << p.k << " budget=" << p.lcs_budget << " max_lcs=" << worst_lcs;
    success.note = note.str();
    valid.observe(ratio(worst_lcs, p.lcs_budget), true);

    ++determinism.cases;
    try {
        if (!(generate_code(p, config.first_seed) == generate_code(p, config.first_seed))) {
            determinism.fail("seed " + std::to_string(config.first_seed));
        }
    } catch (const GenerationBudgetExhausted&) {
        determinism.note = "first seed exhausted its budget";
    }

    for (std::size_t k = 1; k <= 256; ++k) {
        ++binom.cases;
        try {
            (void)binomial_bound(k, config.epsilon);
        } catch (const InconsistencyError& e) {
            binom.fail(e.what());
        }
    }
    r.seconds = seconds_since(start);
    return r;
}

SuiteReport run_alpha_sandwich(const AlphaConfig& config) {
    SuiteReport r;
    r.suite = "alpha-sandwich";
    const auto start = Clock::now();
    const IndelCode code = code_for(config.gamma, config.epsilon, config.seed);
    const std::size_t k = code.params.k;
    Check& upper = r.add("upper_bound");
    Check& lower = r.add("lower_bound_48eps");
    Check& push = r.add("push_alignment_scales_cost");

    Rng rng(config.seed);
    const long double factor = 1.0L - 48.0L * static_cast<long double>(config.epsilon);
    for (std::size_t c = 0; c < config.pairs; ++c) {
        const Str x = random_word(rng, config.gamma, 1, config.max_length);
        const Str y = coin(rng, 1, 2) ? random_word(rng, config.gamma, 1, config.max_length)
                                      : mutate(rng, x, uniform_below(rng, x.size() + 1), config.max_length);
        if (y.empty()) continue;
        const Str ex = embed(code, x);
        const Str ey = embed(code, y);
        const DistanceValue orig = normalized_distance(MetricKind::indel, x, y);
        const DistanceValue emb = normalized_distance(MetricKind::indel, ex, ey);

        ++upper.cases;
        if (compare_normalized(emb, orig) > 0) upper.fail(pair_text(x, y));
        ++lower.cases;
        const long double lhs = static_cast<long double>(emb.raw) * static_cast<long double>(orig.scale);
        const long double rhs = factor * static_cast<long double>(orig.raw) * static_cast<long double>(emb.scale);
        if (lhs < rhs) lower.fail(pair_text(x, y));
        if (orig.raw > 0) lower.observe(emb.normalized() / orig.normalized(), false);

        ++push.cases;
        const Alignment a = optimal_alignment(MetricKind::indel, x, y);
        const Alignment pushed = push_alignment(a, x, y, code);
        if (validate_alignment(pushed, ex, ey) || cost(pushed, ex, ey).total != k * cost(a, x, y).total) {
            push.fail(pair_text(x, y));
        }
    }
    std::ostringstream note;
    note << "k=" << k << " sigma=" << code.params.sigma_size << " factor=" << static_cast<double>(factor)
         << ", worst = min embedded/original ratio";
    lower.note = note.str();
    r.seconds = seconds_since(start);
    return r;
}

SuiteReport run_block_structuring(const AlphaConfig& config) {
    SuiteReport r;
    r.suite = "alpha-block-structure";
    const auto start = Clock::now();
    const IndelCode code = code_for(config.alignment_gamma, config.alignment_epsilon, config.seed);
    const std::size_t k = code.params.k;
    const double eps = config.alignment_epsilon;
    Check& structured = r.add("output_block_structured");
    Check& stage_one = r.add("stage_one_cost_bound");
    Check& bound = r.add("cost_bound_squared");
    Check& lift = r.add("lift_round_trip");
    Check& idempotent = r.add("block_structured_input_unchanged");

    Rng rng(config.seed + 1);
    const long double one = 1.0L + 4.0L * static_cast<long double>(eps);
    for (std::size_t c = 0; c < config.alignments; ++c) {
        const Str x = random_word(rng, config.alignment_gamma, 1, config.alignment_max_length);
        Str y = coin(rng, 3, 4) ? mutate(rng, x, uniform_below(rng, x.size() / 2 + 2), config.alignment_max_length)
                                : random_word(rng, config.alignment_gamma, 1, config.alignment_max_length);
        if (y.empty()) y = x;
        const Str ex = embed(code, x);
        const Str ey = embed(code, y);
        const Alignment pushed = push_alignment(optimal_alignment(MetricKind::indel, x, y), x, y, code);
        const Alignment input = random_alignment(rng, ex, ey, k, pushed);
        const std::string label = pair_text(x, y) + " case=" + std::to_string(c);

        BlockStructureResult out;
        try {
            out = block_structure_stages(input, ex, ey, k, eps);
        } catch (const Error& e) {
            structured.fail(label + " threw: " + e.what());
            continue;
        }
        const std::size_t cin = cost(input, ex, ey).total;
        const std::size_t c1 = cost(out.stage_one, ex, ey).total;
        const std::size_t cout = cost(out.output, ex, ey).total;

        ++structured.cases;
        if (!is_block_structured(out.output, ex, ey, k)) structured.fail(label);
        ++stage_one.cases;
        if (static_cast<long double>(c1) > one * static_cast<long double>(cin)) stage_one.fail(label);
        ++bound.cases;
        if (static_cast<long double>(cout) > one * one * static_cast<long double>(cin)) {
            bound.fail(label + " in=" + std::to_string(cin) + " out=" + std::to_string(cout));
        }
        if (cin > 0) {
            stage_one.observe(ratio(c1, cin), true);
            bound.observe(ratio(cout, cin), true);
        }

        if (is_block_structured(out.output, ex, ey, k)) {
            ++lift.cases;
            const Alignment lifted = lift_alignment(out.output, x, y, code);
            const Alignment again = push_alignment(lifted, x, y, code);
            if (k * cost(lifted, x, y).total != cout || cost(again, ex, ey).total != cout) lift.fail(label);
        }
        ++idempotent.cases;
        if (cost(block_structure(pushed, ex, ey, code, eps), ex, ey).total != cost(pushed, ex, ey).total) {
            idempotent.fail(label);
        }
    }
    std::ostringstream note;
    note << "k=" << k << " eps=" << eps << " factor=" << static_cast<double>(one * one)
         << ", worst = max out/in cost ratio";
    bound.note = note.str();
    r.seconds = seconds_since(start);
    return r;
}

SuiteReport run_lower_bound_demos(const AlphaConfig& config) {
    SuiteReport r;
    r.suite = "alpha-lower-bounds";
    const auto start = Clock::now();
    const std::size_t sigma = plan_parameters(2, config.epsilon).sigma_size;
    const std::size_t gamma = sigma + 1;
    const IndelCode code = code_for(gamma, config.epsilon, config.seed);
    const Embedding e = [&code](const Str& s) { return embed(code, s); };

    Check& contracted = r.add("contracted_pair");
    Check& plurality = r.add("plurality_collision");
    Check& guard = r.add("requires_larger_source_alphabet");
    Check& empty = r.add("empty_string_limit");

    for (const std::size_t n : {1, 2, 3, 5, 8}) {
        ++contracted.cases;
        const ContractedPair cp = find_contracted_pair(e, n, gamma, sigma);
        const bool ok = cp.original.raw == cp.original.scale && compare_normalized(cp.embedded, cp.original) < 0 &&
                        cp.ex[0] == cp.ey[0] && !(cp.x == cp.y);
        if (!ok) contracted.fail("n=" + std::to_string(n));
        contracted.observe(cp.embedded.normalized(), true);

        ++plurality.cases;
        const PluralityCollision pc = find_plurality_collision(e, n, gamma, sigma);
        const std::size_t ell = pc.embedded_length;
        // LCS(E(X), E(Y)) >= ℓ/|Σ| and the resulting distance bound.
        const bool lcs_ok = pc.embedded_lcs * sigma >= ell;
        if (!pc.certified || !lcs_ok || pc.x == pc.y || pc.original.raw != pc.original.scale) plurality.fail("n=" + std::to_string(n));
        plurality.observe(pc.embedded.normalized(), true);
    }

    ++guard.cases;
    try {
        (void)find_contracted_pair(e, 1, sigma, sigma);
        guard.fail("accepted |Gamma| = |Sigma|");
    } catch (const PreconditionError&) {
    }
    ++guard.cases;
    try {
        (void)find_plurality_collision(e, 1, sigma, sigma);
        guard.fail("accepted |Gamma| = |Sigma|");
    } catch (const PreconditionError&) {
    }

    Rng rng(config.seed + 2);
    for (const std::size_t n : {1, 4, 16, 64}) {
        ++empty.cases;
        const Str z = random_str(rng, gamma, n);
        const DistanceValue d = normalized_distance(MetricKind::indel, embed(code, z), Str(sigma, {}));
        // Δ̃(E(Z), E(Λ)) >= 1 - |E(Λ)|/ℓ(n), with E(Λ) = Λ here.
        const std::size_t empty_image = embed(code, Str(gamma, {})).size();
        if (d.raw * code.params.k * n < d.scale * (code.params.k * n - empty_image)) {
            empty.fail("n=" + std::to_string(n));
        }
    }
    contracted.note = "gamma=" + std::to_string(gamma) + " sigma=" + std::to_string(sigma);
    r.seconds = seconds_since(start);
    return r;
}

SuiteReport run_alpha(const AlphaConfig& config) {
    SuiteReport r;
    r.suite = "alpha";
    const auto start = Clock::now();
    for (const SuiteReport& part : {run_alpha_sandwich(config), run_block_structuring(config)}) {
        for (const Check& c : part.checks) r.checks.push_back(c);
    }
    if (config.demos) {
        for (const Check& c : run_lower_bound_demos(config).checks) r.checks.push_back(c);
    }
    r.seconds = seconds_since(start);
    return r;
}

SuiteReport run_gadgets(const GadgetConfig& config) {
    SuiteReport r;
    r.suite = "gadgets";
    const auto start = Clock::now();
    Check& exact = r.add("lcs_equals_threshold");
    Check& balanced = r.add("balanced_and_fixed_length");
    Check& gadgets = r.add("or_and_gadget_truth_combinations");
    Check& deep = r.add("depth4_spot_checks");

    Rng rng(config.seed);
    auto run_assignment = [&](Check& check, const NormalizedFormula& phi, const Bits& a, const Bits& b,
                              const GadgetShape& shape, LcsKernel kernel) {
        const GadgetPair gp = compile_pair(phi, a, b);
        const bool truth = eval(phi.formula, a, b);
        const std::size_t lcs = lcs_length(gp.g, gp.h, kernel);
        ++check.cases;
        if (lcs != (truth ? shape.t : shape.f)) {
            check.fail(to_prefix(phi.formula) + " lcs=" + std::to_string(lcs) + " t=" + std::to_string(shape.t) +
                       " f=" + std::to_string(shape.f));
        }
        ++balanced.cases;
        if (!is_balanced(gp.g) || !is_balanced(gp.h) || gp.g.size() != shape.length || gp.h.size() != shape.length) {
            balanced.fail(to_prefix(phi.formula));
        }
    };
    auto random_bits = [&](std::size_t count) {
        Bits out(count);
        for (auto& bit : out) bit = static_cast<std::uint8_t>(uniform_below(rng, 2));
        return out;
    };

    for (std::size_t c = 0; c < config.corpus; ++c) {
        const std::size_t depth = uniform_between(rng, 1, config.max_depth);
        const Gate top = coin(rng, 1, 2) ? Gate::and_gate : Gate::or_gate;
        const std::size_t p = uniform_between(rng, 1, config.max_vars);
        const std::size_t q = uniform_between(rng, 1, config.max_vars);
        const NormalizedFormula phi = require_normalized(random_normalized_formula(rng, depth, top, p, q));
        const GadgetShape shape = thresholds(phi);
        if (!(shape.f < shape.t) || static_cast<double>(shape.length) > std::pow(30.0, static_cast<double>(depth))) {
            balanced.fail("shape bound " + to_prefix(phi.formula));
        }
        const std::size_t rows = std::size_t{1} << (p + q);
        if (rows <= config.exhaustive_limit) {
            for (std::size_t row = 0; row < rows; ++row) {
                Bits a(p);
                Bits b(q);
                for (std::size_t i = 0; i < p; ++i) a[i] = static_cast<std::uint8_t>((row >> i) & 1U);
                for (std::size_t j = 0; j < q; ++j) b[j] = static_cast<std::uint8_t>((row >> (p + j)) & 1U);
                run_assignment(exact, phi, a, b, shape, LcsKernel::automatic);
            }
        } else {
            for (std::size_t s = 0; s < config.sampled_assignments; ++s) {
                run_assignment(exact, phi, random_bits(p), random_bits(q), shape, LcsKernel::automatic);
            }
        }
    }

    // Base gadget pairs: (01, 01) reaches t = 2, (10, 01) only f = 1.
    const GadgetPair hi{Str(2, {0, 1}), Str(2, {0, 1}), 2, 1, 2};
    const GadgetPair lo{Str(2, {1, 0}), Str(2, {0, 1}), 2, 1, 2};
    for (const bool left : {false, true}) {
        for (const bool right : {false, true}) {
            const GadgetPair& l = left ? hi : lo;
            const GadgetPair& rr = right ? hi : lo;
            const GadgetPair o = or_gadget(l, rr);
            const GadgetPair a = and_gadget(l, rr);
            gadgets.cases += 2;
            if (lcs_length(o.g, o.h) != ((left || right) ? o.t : o.f)) gadgets.fail("or " + render(o.g));
            if (lcs_length(a.g, a.h) != ((left && right) ? a.t : a.f)) gadgets.fail("and " + render(a.g));
        }
    }

    for (std::size_t c = 0; c < config.depth4_formulas; ++c) {
        const Gate top = c % 2 == 0 ? Gate::and_gate : Gate::or_gate;
        const std::size_t p = uniform_between(rng, 2, 4);
        const std::size_t q = uniform_between(rng, 2, 4);
        const NormalizedFormula phi = require_normalized(random_normalized_formula(rng, 4, top, p, q));
        const GadgetShape shape = thresholds(phi);
        for (std::size_t s = 0; s < config.depth4_assignments; ++s) {
            run_assignment(deep, phi, random_bits(p), random_bits(q), shape, LcsKernel::bit_parallel);
        }
    }

    if (config.binary_recovery) {
        for (const Check& c : run_binary_recovery().checks) r.checks.push_back(c);
    }
    r.seconds = seconds_since(start);
    return r;
}

SuiteReport run_binary_recovery() {
    SuiteReport r;
    r.suite = "binary-recovery";
    const auto start = Clock::now();
    Check& one = r.add("recover_n1_two_bits");
    Check& two = r.add("recover_n2_binary");
    Check& kernels = r.add("kernel_cross_check");

    for (Symbol a = 0; a < 4; ++a) {
        for (Symbol b = 0; b < 4; ++b) {
            const Str x(4, {a});
            const Str y(4, {b});
            const BinaryReduction red = binary_reduce_and_recover(x, y, 2);
            ++one.cases;
            if (red.recovered != lcs_length(x, y)) one.fail(pair_text(x, y));
            if (a == 0 && b < 2) {
                ++kernels.cases;
                if (lcs_length(red.reduction.G, red.reduction.H, LcsKernel::bit_parallel) != red.lcs) {
                    kernels.fail(pair_text(x, y));
                }
            }
            one.note = "depth=" + std::to_string(red.depth) + " top=" + to_string(red.top) +
                       " N=" + std::to_string(red.reduction.N);
        }
    }
    for (std::uint32_t xs = 0; xs < 4; ++xs) {
        for (std::uint32_t ys = 0; ys < 4; ++ys) {
            const Str x(2, {xs & 1U, xs >> 1});
            const Str y(2, {ys & 1U, ys >> 1});
            const BinaryReduction red = binary_reduce_and_recover(x, y, 1);
            ++two.cases;
            if (red.recovered != lcs_length(x, y)) two.fail(pair_text(x, y));
            two.note = "depth=" + std::to_string(red.depth) + " top=" + to_string(red.top) +
                       " N=" + std::to_string(red.reduction.N);
        }
    }
    r.seconds = seconds_since(start);
    return r;
}

SuiteReport run_i2e(const I2eConfig& config) {
    SuiteReport r;
    r.suite = "i2e";
    const auto start = Clock::now();
    Rng rng(config.seed);

    if (config.tiskin) {
        Check& tiskin = r.add("tiskin_identity");
        auto check = [&](const Str& x, const Str& y) {
            ++tiskin.cases;
            if (indel_distance(tiskin_embed(x), tiskin_embed(y)) != 2 * edit_distance(x, y)) {
                tiskin.fail(pair_text(x, y));
            }
        };
        for (std::size_t a = 0; a <= config.tiskin_exhaustive_n; ++a) {
            for (std::size_t b = 0; b <= config.tiskin_exhaustive_n; ++b) {
                for_each_string(2, a, [&](const Str& x) { for_each_string(2, b, [&](const Str& y) { check(x, y); }); });
            }
        }
        for (std::size_t c = 0; c < config.tiskin_random_cases; ++c) {
            const std::size_t alphabet = uniform_between(rng, 2, config.max_alphabet);
            const Str x = random_word(rng, alphabet, 0, config.tiskin_random_max_n);
            const Str y = coin(rng, 1, 2) ? random_word(rng, alphabet, 0, config.tiskin_random_max_n)
                                          : mutate(rng, x, uniform_below(rng, 6), config.tiskin_random_max_n);
            check(x, y);
        }
    }

    if (config.exact) {
        Check& identity = r.add("exact_identity");
        Check& construct = r.add("exact_construction_cost");
        Check& balanced = r.add("equal_length_deletions_balanced");
        Check& lower = r.add("sentinel_insertion_lower_bound");
        auto check = [&](const Str& x, const Str& y) {
            const std::size_t n = x.size();
            const std::size_t delta = indel_distance(x, y);
            const Str ey = embed_exact(y);
            const Str ex = with_sentinel(x);
            const std::size_t expected = ey.size() - n + delta / 2;
            ++identity.cases;
            if (edit_distance(ex, ey) != expected) identity.fail(pair_text(x, y));
            ++construct.cases;
            const Alignment a = construct_exact_alignment(x, y, optimal_alignment(MetricKind::indel, x, y));
            if (validate_alignment(a, ex, ey) || cost(a, ex, ey).total != expected) construct.fail(pair_text(x, y));

            ++balanced.cases;
            const CostBreakdown cb = cost(optimal_alignment(MetricKind::indel, x, y), x, y);
            if (cb.deletions_x != cb.deletions_y || 2 * cb.deletions_x != delta) balanced.fail(pair_text(x, y));

            // Any string obtained from y by inserting sentinels.
            ++lower.cases;
            std::vector<Symbol> padded;
            const Symbol dollar = sentinel_of(y.alphabet_size());
            for (std::size_t q = 0; q <= n; ++q) {
                const std::size_t run = uniform_below(rng, n + 2);
                padded.insert(padded.end(), run, dollar);
                if (q < n) padded.push_back(y[q]);
            }
            const Str yt(y.alphabet_size() + 1, padded);
            if (edit_distance(ex, yt) < yt.size() - n + delta / 2) lower.fail(pair_text(x, y));
        };
        for (std::size_t n = 0; n <= config.exact_exhaustive_n; ++n) {
            for_each_string(2, n, [&](const Str& x) { for_each_string(2, n, [&](const Str& y) { check(x, y); }); });
        }
        for (std::size_t c = 0; c < config.cases; ++c) {
            const std::size_t alphabet = uniform_between(rng, 2, config.max_alphabet);
            const Str x = random_word(rng, alphabet, 1, config.max_n);
            check(x, equal_length_partner(rng, x));
        }
    }

    if (config.approximate) {
        for (const double eps : config.epsilons) {
            std::ostringstream tag;
            tag << eps;
            Check& sandwich = r.add("apx_sandwich_eps_" + tag.str());
            Check& spill = r.add("apx_spill_bounds_eps_" + tag.str());
            Check& construct = r.add("apx_construction_eps_" + tag.str());
            Check& construct_bound = r.add("apx_construction_bound_eps_" + tag.str());
            const std::size_t k = apx_block_length(eps);
            for (std::size_t c = 0; c < config.cases; ++c) {
                const std::size_t alphabet = uniform_between(rng, 2, config.max_alphabet);
                const Str x = random_word(rng, alphabet, 1, config.max_n);
                const Str y = equal_length_partner(rng, x);
                const std::size_t n = x.size();
                const std::size_t delta = indel_distance(x, y);
                const Str ey = embed_apx(y, eps);
                const Str ex = with_sentinel(x);
                const std::size_t base = ey.size() - n;
                const std::size_t measured = edit_distance(ex, ey);
                const std::string label = pair_text(x, y);

                ++sandwich.cases;
                if (measured < base) {
                    sandwich.fail(label + " below N-n");
                    continue;
                }
                const std::size_t khat = measured - base;
                if (delta == 0) {
                    if (khat != 0) sandwich.fail(label + " khat=" + std::to_string(khat));
                } else {
                    const bool low = 2 * khat >= delta;
                    const bool high = static_cast<long double>(2 * khat) <
                                      (1.0L + static_cast<long double>(eps)) * static_cast<long double>(delta);
                    if (!low || !high) {
                        sandwich.fail(label + " khat=" + std::to_string(khat) + " delta=" + std::to_string(delta));
                    }
                    sandwich.observe(ratio(2 * khat, delta), true);
                }

                const ApxAlignment apx = construct_apx_alignment(x, y, eps, optimal_alignment(MetricKind::indel, x, y));
                ++spill.cases;
                if (!apx.report.spill_bounds_hold() || apx.report.total_spill() != apx.report.deletions_x) {
                    spill.fail(label);
                }
                ++construct.cases;
                const CostBreakdown cb = cost(apx.alignment, ex, ey);
                if (validate_alignment(apx.alignment, ex, ey) || cb.total != apx.report.cost ||
                    measured > apx.report.cost) {
                    construct.fail(label);
                }
                // Σ S_i < Δ/k, so cost < Ñ - n + (1+ε)Δ/2.
                ++construct_bound.cases;
                if (delta > 0) {
                    const long double limit = static_cast<long double>(base) +
                                              (1.0L + static_cast<long double>(eps)) * static_cast<long double>(delta) / 2;
                    if (apx.report.deletions_x * k >= delta || static_cast<long double>(apx.report.cost) >= limit) {
                        construct_bound.fail(label + " deletions=" + std::to_string(apx.report.deletions_x) +
                                             " cost=" + std::to_string(apx.report.cost));
                    }
                } else if (apx.report.cost != base || apx.report.substitutions != 0 || apx.report.total_spill() != 0) {
                    construct_bound.fail(label);
                }
            }
            sandwich.note = "k=" + std::to_string(k) + ", worst = max 2*khat/delta";
        }
    }
    r.seconds = seconds_since(start);
    return r;
}

}  // namespace strembed::verify
