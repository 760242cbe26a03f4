#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "strembed/alphabet_embed.hpp"
#include "strembed/gadgets.hpp"
#include "strembed/indel_code.hpp"
#include "strembed/indel_edit.hpp"
#include "strembed/metrics.hpp"
#include "strembed/verify.hpp"

namespace strembed::cli {

namespace {

// Thrown for bad command-line input that CLI11 itself cannot see.
struct UsageError : Error {
    using Error::Error;
};

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return {buffer, result.ptr};
}

std::uint64_t default_seed() {
    const char* env = std::getenv("STREMBED_SEED");
    if (env == nullptr || *env == '\0') return 0;
    std::uint64_t seed = 0;
    const std::string text(env);
    const auto parsed = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (parsed.ec != std::errc{} || parsed.ptr != text.data() + text.size()) {
        throw UsageError("STREMBED_SEED must be a non-negative integer, got '" + text + "'");
    }
    return seed;
}

// Output sink: text mode prints what each command chooses, structured mode
// prints `key = value` lines.
class Printer {
public:
    Printer(std::ostream& os, bool structured) : os_(os), structured_(structured) {}
    [[nodiscard]] bool structured() const { return structured_; }
    std::ostream& stream() { return os_; }

    template <class T>
    void kv(const std::string& key, const T& value) {
        os_ << key << " = " << value << '\n';
    }

private:
    std::ostream& os_;
    bool structured_;
};

// Strings as read from the command line, either ASCII over their sorted joint
// character set or comma-separated symbol ids.
struct Inputs {
    std::vector<Str> strings;
    std::string names;  // names[id] for ASCII input; empty for ids
    std::size_t alphabet = 1;
};

std::string load(const std::string& raw) {
    if (raw.empty() || raw[0] != '@') return raw;
    std::ifstream in(raw.substr(1));
    if (!in) throw UsageError("cannot read '" + raw.substr(1) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    return text;
}

std::vector<Symbol> parse_ids(const std::string& text) {
    std::vector<Symbol> out;
    if (text.empty()) return out;
    std::size_t at = 0;
    while (true) {
        const std::size_t comma = text.find(',', at);
        const std::string piece = text.substr(at, comma == std::string::npos ? std::string::npos : comma - at);
        Symbol id = 0;
        const auto parsed = std::from_chars(piece.data(), piece.data() + piece.size(), id);
        if (piece.empty() || parsed.ec != std::errc{} || parsed.ptr != piece.data() + piece.size()) {
            throw UsageError("malformed symbol id '" + piece + "' in '" + text + "'");
        }
        out.push_back(id);
        if (comma == std::string::npos) break;
        at = comma + 1;
    }
    return out;
}

Inputs parse_inputs(const std::vector<std::string>& raw, bool ids, std::size_t min_alphabet, bool sentinel_output) {
    Inputs in;
    std::vector<std::string> texts;
    for (const std::string& r : raw) texts.push_back(load(r));
    if (ids) {
        std::vector<std::vector<Symbol>> parsed;
        std::size_t alphabet = std::max<std::size_t>(min_alphabet, 1);
        for (const std::string& t : texts) {
            parsed.push_back(parse_ids(t));
            for (const Symbol s : parsed.back()) alphabet = std::max<std::size_t>(alphabet, std::size_t{s} + 1);
        }
        in.alphabet = alphabet;
        for (auto& p : parsed) in.strings.emplace_back(alphabet, std::move(p));
        return in;
    }
    std::set<char> chars;
    for (const std::string& t : texts) {
        for (const char c : t) {
            if (c < 0x21 || c > 0x7e) throw UsageError("inputs must be printable ASCII without spaces; use --ids");
            if (sentinel_output && c == '$') throw UsageError("'$' is reserved for the sentinel in this command");
            chars.insert(c);
        }
    }
    in.names.assign(chars.begin(), chars.end());
    in.alphabet = std::max<std::size_t>({in.names.size(), min_alphabet, 1});
    for (const std::string& t : texts) {
        std::vector<Symbol> s;
        for (const char c : t) s.push_back(static_cast<Symbol>(in.names.find(c)));
        in.strings.emplace_back(in.alphabet, std::move(s));
    }
    return in;
}

// Renders with the input names; the id just past the input alphabet is `$`.
std::string render(const Str& s, const Inputs& in) {
    std::string out;
    if (!in.names.empty() && s.alphabet_size() <= in.alphabet + 1) {
        for (const Symbol c : s.symbols()) out.push_back(c < in.names.size() ? in.names[c] : '$');
        return out;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

std::string render_binary(const Str& s) {
    std::string out;
    out.reserve(s.size());
    for (const Symbol c : s.symbols()) out.push_back(static_cast<char>('0' + c));
    return out;
}

void write_file_atomically(const std::string& path, const std::function<void(std::ostream&)>& body) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw UsageError("cannot write '" + path + "'");
        body(os);
        os.flush();
        if (!os) {
            std::filesystem::remove(tmp);
            throw UsageError("failed writing '" + path + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

IndelCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read code file '" + path + "'");
    return read_code(in);
}

std::string distance_text(const DistanceValue& d) { return format_double(d.normalized()); }

struct Settings {
    std::string format = "text";
    std::uint64_t seed = 0;
};

// ---- dist ----

struct DistArgs {
    std::string kind;
    std::string x;
    std::string y;
    bool normalized = false;
    bool ids = false;
    std::size_t alphabet = 0;
};

int cmd_dist(const DistArgs& a, Printer& p) {
    const MetricKind kind = parse_metric_kind(a.kind);
    const Inputs in = parse_inputs({a.x, a.y}, a.ids, a.alphabet, false);
    const Str& x = in.strings[0];
    const Str& y = in.strings[1];
    const std::size_t raw = kind == MetricKind::edit ? edit_distance(x, y) : indel_distance(x, y);
    if (p.structured()) {
        p.kv("kind", to_string(kind));
        p.kv("distance", raw);
        if (a.normalized) {
            const DistanceValue d = normalized_distance(kind, x, y);
            p.kv("scale", d.scale);
            p.kv("normalized", distance_text(d));
        }
    } else if (a.normalized) {
        p.stream() << distance_text(normalized_distance(kind, x, y)) << '\n';
    } else {
        p.stream() << raw << '\n';
    }
    return ok;
}

// ---- code ----

struct CodeGenArgs {
    std::size_t gamma = 0;
    double eps = 0.0;
    std::optional<std::uint64_t> seed;
    std::size_t budget = 0;
    std::string file;
};

void print_params(Printer& p, const EmbedParams& params) {
    if (p.structured()) {
        p.kv("gamma", params.gamma_size);
        p.kv("sigma", params.sigma_size);
        p.kv("k", params.k);
        p.kv("epsilon", format_double(params.epsilon));
        p.kv("lcs_budget", params.lcs_budget);
        p.kv("snapped", params.snapped ? "true" : "false");
    } else {
        p.stream() << "gamma=" << params.gamma_size << " sigma=" << params.sigma_size << " k=" << params.k
                   << " epsilon=" << format_double(params.epsilon) << " lcs_budget=" << params.lcs_budget
                   << (params.snapped ? " (budget snapped)" : "") << '\n';
    }
}

int cmd_code_gen(const CodeGenArgs& a, const Settings& s, Printer& p) {
    const EmbedParams params = plan_parameters(a.gamma, a.eps);
    GenerateOptions options;
    options.attempt_budget = a.budget;
    const IndelCode code = generate_code(params, a.seed.value_or(s.seed), options);
    write_file_atomically(a.file, [&](std::ostream& os) { write_code(os, code); });
    if (p.structured()) p.kv("file", a.file);
    print_params(p, params);
    if (!p.structured()) p.stream() << "wrote " << code.codewords.size() << " codewords to " << a.file << '\n';
    return ok;
}

int cmd_code_check(const std::string& file, Printer& p) {
    const IndelCode code = load_code(file);
    const CodeReport r = validate_code(code);
    if (p.structured()) {
        print_params(p, code.params);
        p.kv("codewords", r.codewords);
        p.kv("max_pairwise_lcs", r.max_pairwise_lcs);
        p.kv("min_pairwise_indel", r.min_pairwise_indel);
        p.kv("worst_pair", std::to_string(r.worst_pair_first) + "," + std::to_string(r.worst_pair_second));
        p.kv("lengths_ok", r.lengths_ok ? "true" : "false");
        p.kv("pass", r.pass ? "true" : "false");
    } else {
        print_params(p, code.params);
        p.stream() << "codewords=" << r.codewords << " max_pairwise_lcs=" << r.max_pairwise_lcs
                   << " min_pairwise_indel=" << r.min_pairwise_indel << " worst_pair=" << r.worst_pair_first << ","
                   << r.worst_pair_second << (r.lengths_ok ? "" : " (ragged lengths)") << '\n';
        p.stream() << (r.pass ? "pass" : "FAIL") << '\n';
    }
    return r.pass ? ok : verification_failed;
}

// ---- embed ----

struct EmbedArgs {
    std::vector<std::string> strings;
    std::string x;
    std::string y;
    bool ids = false;
    std::size_t alphabet = 0;
    double eps = 0.25;
    std::string code_file;
    std::size_t gamma = 0;
    std::optional<std::uint64_t> seed;
    std::size_t bits = 0;
    std::uint64_t max_length = std::uint64_t{1} << 23;
    bool summary = false;
};

int cmd_embed_tiskin(const EmbedArgs& a, Printer& p) {
    if (a.strings.empty()) throw UsageError("embed tiskin needs at least one string");
    const Inputs in = parse_inputs(a.strings, a.ids, a.alphabet, true);
    for (std::size_t i = 0; i < in.strings.size(); ++i) {
        const std::string e = render(tiskin_embed(in.strings[i]), in);
        if (p.structured()) {
            p.kv("embedded." + std::to_string(i), e);
        } else {
            p.stream() << e << '\n';
        }
    }
    if (in.strings.size() == 2) {
        const std::size_t edit = edit_distance(in.strings[0], in.strings[1]);
        const std::size_t indel = indel_distance(tiskin_embed(in.strings[0]), tiskin_embed(in.strings[1]));
        if (p.structured()) {
            p.kv("edit", edit);
            p.kv("embedded_indel", indel);
        } else {
            p.stream() << "edit=" << edit << " embedded_indel=" << indel << '\n';
        }
    }
    return ok;
}

int cmd_embed_i2e(const EmbedArgs& a, bool exact, Printer& p) {
    if (a.y.empty() && !a.ids) throw UsageError("--y is required");
    std::vector<std::string> raw{a.y};
    const bool with_x = !a.x.empty();
    if (with_x) raw.push_back(a.x);
    const Inputs in = parse_inputs(raw, a.ids, a.alphabet, true);
    const Str& y = in.strings[0];
    const std::size_t k = exact ? 0 : apx_block_length(a.eps);
    const Str ey = exact ? embed_exact(y) : embed_apx_k(y, k);
    const std::size_t n = y.size();
    if (p.structured()) {
        p.kv("embedded", render(ey, in));
        p.kv("N", ey.size());
        p.kv("n", n);
        if (!exact) p.kv("k", k);
    } else {
        p.stream() << render(ey, in) << '\n' << "N=" << ey.size() << " n=" << n;
        if (!exact) p.stream() << " k=" << k;
        p.stream() << '\n';
    }
    if (with_x) {
        const Str& x = in.strings[1];
        if (x.size() != n) throw UsageError("--x and --y must have equal length");
        const std::size_t indel = indel_distance(x, y);
        const std::size_t edit = edit_distance(with_sentinel(x), ey);
        const std::size_t khat = edit - (ey.size() - n);
        if (p.structured()) {
            p.kv("indel", indel);
            p.kv("embedded_edit", edit);
            p.kv("k_hat", khat);
        } else {
            p.stream() << "indel=" << indel << " embedded_edit=" << edit << " k_hat=" << khat << '\n';
        }
    }
    return ok;
}

int cmd_embed_alpha(const EmbedArgs& a, const Settings& s, Printer& p) {
    if (a.strings.empty() || a.strings.size() > 2) throw UsageError("embed alpha takes one or two strings");
    const Inputs in = parse_inputs(a.strings, a.ids, a.alphabet, false);
    IndelCode code;
    if (!a.code_file.empty()) {
        code = load_code(a.code_file);
    } else {
        const std::size_t gamma = a.gamma == 0 ? in.alphabet : a.gamma;
        code = generate_code(plan_parameters(gamma, a.eps), a.seed.value_or(s.seed));
    }
    std::vector<Str> embedded;
    for (const Str& x : in.strings) embedded.push_back(embed(code, x));
    if (p.structured()) {
        print_params(p, code.params);
        for (std::size_t i = 0; i < embedded.size(); ++i) p.kv("embedded." + std::to_string(i), verify::render(embedded[i]));
    } else {
        print_params(p, code.params);
        for (const Str& e : embedded) p.stream() << verify::render(e) << '\n';
    }
    if (embedded.size() == 2) {
        const DistanceValue orig = normalized_distance(MetricKind::indel, in.strings[0], in.strings[1]);
        const DistanceValue emb = normalized_distance(MetricKind::indel, embedded[0], embedded[1]);
        if (p.structured()) {
            p.kv("normalized_original", distance_text(orig));
            p.kv("normalized_embedded", distance_text(emb));
        } else {
            p.stream() << "normalized_original=" << distance_text(orig)
                       << " normalized_embedded=" << distance_text(emb) << '\n';
        }
    }
    return ok;
}

std::size_t bits_for(std::size_t alphabet) {
    std::size_t bits = 1;
    while ((std::size_t{1} << bits) < alphabet) ++bits;
    return bits;
}

int cmd_embed_binary(const EmbedArgs& a, Printer& p) {
    if (a.x.empty() || a.y.empty()) throw UsageError("--x and --y are required");
    const Inputs in = parse_inputs({a.x, a.y}, a.ids, a.alphabet, false);
    const std::size_t bits = a.bits == 0 ? bits_for(in.alphabet) : a.bits;
    BinaryReduceOptions options;
    options.max_length = a.max_length;
    const BinaryReduction r = binary_reduce_and_recover(in.strings[0], in.strings[1], bits, options);
    const ConcatReduction& c = r.reduction;
    if (p.structured()) {
        if (!a.summary) {
            p.kv("G", render_binary(c.G));
            p.kv("H", render_binary(c.H));
        }
        p.kv("R", c.R);
        p.kv("S", c.S);
        p.kv("M", c.M);
        p.kv("N", c.N);
        p.kv("depth", r.depth);
        p.kv("top", to_string(r.top));
        p.kv("lcs", r.lcs);
        p.kv("recovered", r.recovered);
    } else {
        if (!a.summary) p.stream() << "G=" << render_binary(c.G) << '\n' << "H=" << render_binary(c.H) << '\n';
        p.stream() << "R=" << c.R << " S=" << c.S << " M=" << c.M << " N=" << c.N << " depth=" << r.depth
                   << " top=" << to_string(r.top) << '\n'
                   << "lcs=" << r.lcs << " recovered=" << r.recovered << '\n';
    }
    return ok;
}

// ---- verify ----

struct VerifyArgs {
    std::string suite;
    std::optional<std::size_t> cases;
    std::optional<std::uint64_t> seed;
    std::optional<double> eps;
    std::optional<std::size_t> gamma;
    std::optional<std::size_t> depth;
    bool binary = false;
};

int cmd_verify(const VerifyArgs& a, const Settings& s, Printer& p) {
    const std::uint64_t seed = a.seed.value_or(s.seed);
    verify::SuiteReport report;
    if (a.suite == "metrics") {
        verify::MetricsConfig c;
        c.seed = seed;
        if (a.cases) c.random_cases = *a.cases;
        report = verify::run_metrics(c);
    } else if (a.suite == "code") {
        verify::CodeConfig c;
        c.first_seed = seed;
        if (a.cases) c.seeds = *a.cases;
        if (a.eps) c.epsilon = *a.eps;
        if (a.gamma) c.gamma = *a.gamma;
        report = verify::run_code(c);
    } else if (a.suite == "alpha") {
        verify::AlphaConfig c;
        c.seed = seed;
        if (a.cases) {
            c.pairs = *a.cases;
            c.alignments = *a.cases;
        }
        if (a.eps) {
            c.epsilon = *a.eps;
            c.alignment_epsilon = *a.eps;
        }
        if (a.gamma) c.gamma = *a.gamma;
        report = verify::run_alpha(c);
    } else if (a.suite == "gadgets") {
        verify::GadgetConfig c;
        c.seed = seed;
        if (a.cases) c.corpus = *a.cases;
        if (a.depth) c.max_depth = *a.depth;
        c.binary_recovery = a.binary;
        report = verify::run_gadgets(c);
    } else if (a.suite == "i2e") {
        verify::I2eConfig c;
        c.seed = seed;
        if (a.cases) c.cases = *a.cases;
        if (a.eps) c.epsilons = {*a.eps};
        report = verify::run_i2e(c);
    } else {
        throw UsageError("unknown suite '" + a.suite + "'");
    }
    if (p.structured()) {
        verify::print_structured(p.stream(), report);
    } else {
        verify::print_text(p.stream(), report);
    }
    return report.passed() ? ok : verification_failed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"String embeddings between edit, indel and binary LCS metrics", "strembed"};
    app.require_subcommand(1);
    Settings settings;
    app.add_option("--format", settings.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    std::function<int(Printer&)> action;

    DistArgs dist;
    auto* dist_cmd = app.add_subcommand("dist", "Edit or indel distance of two strings");
    dist_cmd->add_option("kind", dist.kind, "edit or indel")->required()->check(CLI::IsMember({"edit", "indel"}));
    dist_cmd->add_option("x", dist.x)->required();
    dist_cmd->add_option("y", dist.y)->required();
    dist_cmd->add_flag("--normalized", dist.normalized, "Print the normalized distance");
    dist_cmd->add_flag("--ids", dist.ids, "Read inputs as comma-separated symbol ids");
    dist_cmd->add_option("--alphabet", dist.alphabet, "Minimum alphabet size");
    dist_cmd->callback([&] { action = [&](Printer& p) { return cmd_dist(dist, p); }; });

    auto* code_cmd = app.add_subcommand("code", "Generate or check an indel code");
    code_cmd->require_subcommand(1);
    CodeGenArgs gen;
    auto* gen_cmd = code_cmd->add_subcommand("gen", "Generate a code file");
    gen_cmd->add_option("--gamma", gen.gamma, "Number of codewords")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--eps", gen.eps, "Epsilon in (0, 1/2)")->required();
    gen_cmd->add_option("--seed", gen.seed);
    gen_cmd->add_option("--budget", gen.budget, "Candidate samples before giving up (default 64*gamma)");
    gen_cmd->add_option("file", gen.file)->required();
    gen_cmd->callback([&] { action = [&](Printer& p) { return cmd_code_gen(gen, settings, p); }; });
    std::string check_file;
    auto* check_cmd = code_cmd->add_subcommand("check", "Validate a code file");
    check_cmd->add_option("file", check_file)->required();
    check_cmd->callback([&] { action = [&](Printer& p) { return cmd_code_check(check_file, p); }; });

    auto* embed_cmd = app.add_subcommand("embed", "Apply an embedding");
    embed_cmd->require_subcommand(1);
    EmbedArgs emb;
    auto common = [&](CLI::App* c) {
        c->add_flag("--ids", emb.ids, "Read inputs as comma-separated symbol ids");
        c->add_option("--alphabet", emb.alphabet, "Minimum alphabet size");
    };
    auto* alpha_cmd = embed_cmd->add_subcommand("alpha", "Codeword substitution into a larger-alphabet code");
    alpha_cmd->add_option("strings", emb.strings)->required();
    alpha_cmd->add_option("--code", emb.code_file, "Code file (otherwise one is generated)");
    alpha_cmd->add_option("--gamma", emb.gamma, "Codewords to generate (default: input alphabet size)");
    alpha_cmd->add_option("--eps", emb.eps)->capture_default_str();
    alpha_cmd->add_option("--seed", emb.seed);
    common(alpha_cmd);
    alpha_cmd->callback([&] { action = [&](Printer& p) { return cmd_embed_alpha(emb, settings, p); }; });

    auto* exact_cmd = embed_cmd->add_subcommand("i2e-exact", "Exact indel-to-edit embedding of y");
    exact_cmd->add_option("--y", emb.y)->required();
    exact_cmd->add_option("--x", emb.x, "Also report distances against x");
    common(exact_cmd);
    exact_cmd->callback([&] { action = [&](Printer& p) { return cmd_embed_i2e(emb, true, p); }; });

    auto* apx_cmd = embed_cmd->add_subcommand("i2e-apx", "Approximate indel-to-edit embedding of y");
    apx_cmd->add_option("--y", emb.y)->required();
    apx_cmd->add_option("--x", emb.x, "Also report distances against x");
    apx_cmd->add_option("--eps", emb.eps, "Epsilon in (0, 1]")->capture_default_str();
    common(apx_cmd);
    apx_cmd->callback([&] { action = [&](Printer& p) { return cmd_embed_i2e(emb, false, p); }; });

    auto* tiskin_cmd = embed_cmd->add_subcommand("tiskin", "Edit-to-indel embedding x1$x2$...");
    tiskin_cmd->add_option("strings", emb.strings)->required();
    common(tiskin_cmd);
    tiskin_cmd->callback([&] { action = [&](Printer& p) { return cmd_embed_tiskin(emb, p); }; });

    auto* binary_cmd = embed_cmd->add_subcommand("binary", "LCS reduction to binary strings");
    binary_cmd->add_option("--x", emb.x)->required();
    binary_cmd->add_option("--y", emb.y)->required();
    binary_cmd->add_option("--bits", emb.bits, "Bits per symbol (default: smallest that fits)");
    binary_cmd->add_option("--max-length", emb.max_length, "Guard on |G|")->capture_default_str();
    binary_cmd->add_flag("--summary", emb.summary, "Omit G and H");
    common(binary_cmd);
    binary_cmd->callback([&] { action = [&](Printer& p) { return cmd_embed_binary(emb, p); }; });

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
    verify_cmd->add_option("suite", ver.suite)
        ->required()
        ->check(CLI::IsMember({"metrics", "code", "alpha", "gadgets", "i2e"}));
    verify_cmd->add_option("--cases", ver.cases, "Random cases (suite-specific meaning)");
    verify_cmd->add_option("--seed", ver.seed);
    verify_cmd->add_option("--eps", ver.eps);
    verify_cmd->add_option("--gamma", ver.gamma);
    verify_cmd->add_option("--depth", ver.depth, "Gadget corpus depth");
    verify_cmd->add_flag("--binary", ver.binary, "Gadgets: also run the binary recovery checks");
    verify_cmd->callback([&] { action = [&](Printer& p) { return cmd_verify(ver, settings, p); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        settings.seed = default_seed();
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    // Buffer so a failing command leaves no partial output behind.
    std::ostringstream buffer;
    Printer printer(buffer, settings.format == "structured");
    try {
        const int code = action(printer);
        out << buffer.str();
        return code;
    } catch (const InconsistencyError& e) {
        err << "verification failure: " << e.what() << '\n';
        return verification_failed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

}  // namespace strembed::cli
