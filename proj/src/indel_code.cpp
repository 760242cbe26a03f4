#include "strembed/indel_code.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "strembed/metrics.hpp"
#include "strembed/random.hpp"

namespace strembed {

namespace {

constexpr double kSlack = 1e-9;

void require_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 0.5)) {
        throw PreconditionError("epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));
    }
}

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return {buffer, result.ptr};
}

std::size_t budget_for(double epsilon, std::size_t k, bool& snapped) {
    const double exact = epsilon * static_cast<double>(k);
    const double rounded = std::round(exact);
    snapped = std::fabs(exact - rounded) > kSlack;
    return static_cast<std::size_t>(std::max(1.0, rounded));
}

}  // namespace

EmbedParams plan_parameters(std::size_t gamma_size, double epsilon) {
    require_epsilon(epsilon);
    if (gamma_size == 0) throw PreconditionError("gamma_size must be at least 1");

    EmbedParams p;
    p.gamma_size = gamma_size;
    p.epsilon = epsilon;
    p.sigma_size = static_cast<std::size_t>(std::ceil(32.0 / (epsilon * epsilon) - kSlack));

    const double log_gamma = std::log2(static_cast<double>(gamma_size));
    const auto lo = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(2.0 / epsilon * log_gamma - kSlack)));
    const auto hi = static_cast<std::size_t>(std::floor(1.0 / epsilon + 2.0 / epsilon * log_gamma + kSlack));
    for (std::size_t k = lo; k <= std::max(lo, hi); ++k) {
        bool snapped = false;
        const std::size_t budget = budget_for(epsilon, k, snapped);
        if (!snapped && epsilon * static_cast<double>(k) >= 1.0 - kSlack) {
            p.k = k;
            p.lcs_budget = budget;
            return p;
        }
    }
    p.k = lo;
    p.lcs_budget = budget_for(epsilon, lo, p.snapped);
    p.snapped = true;
    return p;
}

BinomialBound binomial_bound(std::size_t k, double epsilon) {
    require_epsilon(epsilon);
    if (k == 0) throw PreconditionError("binomial_bound needs k >= 1");
    const auto r = static_cast<std::size_t>(std::floor(epsilon * static_cast<double>(k) + kSlack));
    long double binom = 1.0L;
    for (std::size_t t = 1; t <= r; ++t) {
        binom = binom * static_cast<long double>(k - r + t) / static_cast<long double>(t);
    }
    const double exponent = (epsilon * std::log2(1.0 / epsilon) + 2.0 * epsilon) * static_cast<double>(k);
    BinomialBound out{static_cast<double>(binom), std::exp2(exponent)};
    if (out.binomial > out.bound * (1.0 + 1e-12)) {
        throw InconsistencyError("binomial bound violated for k=" + std::to_string(k));
    }
    return out;
}

IndelCode generate_code(const EmbedParams& params, std::uint64_t seed, GenerateOptions options) {
    if (params.k == 0 || params.sigma_size == 0 || params.lcs_budget == 0) {
        throw PreconditionError("generate_code: parameters not planned");
    }
    const std::size_t budget = options.attempt_budget != 0 ? options.attempt_budget : 64 * params.gamma_size;

    IndelCode code{params, {}};
    code.codewords.reserve(params.gamma_size);
    Rng rng(seed);
    std::size_t attempts = 0;
    while (code.codewords.size() < params.gamma_size) {
        if (attempts == budget) {
            throw GenerationBudgetExhausted("code generation kept " + std::to_string(code.codewords.size()) + " of " +
                                            std::to_string(params.gamma_size) + " words after " +
                                            std::to_string(attempts) + " samples");
        }
        ++attempts;
        Str candidate = random_str(rng, params.sigma_size, params.k);
        bool accepted = true;
        for (const Str& kept : code.codewords) {
            if (lcs_bit_parallel(candidate.symbols(), kept.symbols()) >= params.lcs_budget) {
                accepted = false;
                break;
            }
        }
        if (accepted) code.codewords.push_back(std::move(candidate));
    }
    return code;
}

CodeReport validate_code(const IndelCode& code) {
    const std::size_t k = code.params.k;
    CodeReport report;
    report.codewords = code.codewords.size();
    report.min_pairwise_indel = 2 * k;
    for (const Str& w : code.codewords) {
        if (w.size() != k) report.lengths_ok = false;
    }
    for (std::size_t a = 0; a < code.codewords.size(); ++a) {
        for (std::size_t b = a + 1; b < code.codewords.size(); ++b) {
            const Str& u = code.codewords[a];
            const Str& v = code.codewords[b];
            const std::size_t lcs = lcs_bit_parallel(u.symbols(), v.symbols());
            const std::size_t indel = u.size() + v.size() - 2 * lcs;
            if (lcs > report.max_pairwise_lcs || (a == 0 && b == 1)) {
                report.max_pairwise_lcs = std::max(report.max_pairwise_lcs, lcs);
                report.worst_pair_first = a;
                report.worst_pair_second = b;
            }
            report.min_pairwise_indel = std::min(report.min_pairwise_indel, indel);
        }
    }
    report.pass = report.lengths_ok && report.max_pairwise_lcs < code.params.lcs_budget;
    return report;
}

void write_code(std::ostream& os, const IndelCode& code) {
    const EmbedParams& p = code.params;
    os << p.sigma_size << ' ' << p.k << ' ' << format_double(p.epsilon) << ' ' << p.gamma_size << '\n';
    for (const Str& w : code.codewords) {
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (t > 0) os << ' ';
            os << w[t];
        }
        os << '\n';
    }
}

IndelCode read_code(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw PreconditionError("code file: missing header");
    IndelCode code;
    EmbedParams& p = code.params;
    {
        std::istringstream header(line);
        std::string eps_text;
        if (!(header >> p.sigma_size >> p.k >> eps_text >> p.gamma_size)) {
            throw PreconditionError("code file: malformed header '" + line + "'");
        }
        const auto parsed = std::from_chars(eps_text.data(), eps_text.data() + eps_text.size(), p.epsilon);
        if (parsed.ec != std::errc{} || parsed.ptr != eps_text.data() + eps_text.size()) {
            throw PreconditionError("code file: malformed epsilon '" + eps_text + "'");
        }
    }
    require_epsilon(p.epsilon);
    if (p.sigma_size == 0 || p.k == 0) throw PreconditionError("code file: sigma_size and k must be positive");
    p.lcs_budget = budget_for(p.epsilon, p.k, p.snapped);

    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        std::vector<Symbol> symbols;
        long long id = 0;
        while (row >> id) {
            if (id < 0 || static_cast<unsigned long long>(id) >= p.sigma_size) {
                throw PreconditionError("code file: symbol " + std::to_string(id) + " outside alphabet");
            }
            symbols.push_back(static_cast<Symbol>(id));
        }
        if (!row.eof()) throw PreconditionError("code file: malformed codeword line '" + line + "'");
        if (symbols.size() != p.k) {
            throw PreconditionError("code file: codeword of length " + std::to_string(symbols.size()) +
                                    ", expected " + std::to_string(p.k));
        }
        code.codewords.emplace_back(p.sigma_size, std::move(symbols));
    }
    if (code.codewords.size() != p.gamma_size) {
        throw PreconditionError("code file: " + std::to_string(code.codewords.size()) + " codewords, header says " +
                                std::to_string(p.gamma_size));
    }
    return code;
}

}  // namespace strembed
