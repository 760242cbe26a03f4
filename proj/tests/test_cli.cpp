#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using strembed::cli::run_cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "strembed_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::filesystem::remove(path);
    return path;
}

}  // namespace

TEST_CASE("dist") {
    CHECK(run({"dist", "edit", "kitten", "sitting"}).out == "3\n");
    CHECK(run({"dist", "indel", "ab", "ba"}).out == "2\n");
    CHECK(run({"dist", "indel", "--normalized", "ab", "ba"}).out == "0.5\n");
    CHECK(run({"dist", "edit", "--ids", "0,3,2", "0,2"}).out == "1\n");
    const Result s = run({"--format", "structured", "dist", "indel", "--normalized", "ab", "ba"});
    CHECK(s.out == "kind = indel\ndistance = 2\nscale = 4\nnormalized = 0.5\n");
    CHECK(run({"dist", "hamming", "a", "b"}).code == 2);
    CHECK(run({"dist", "edit", "--ids", "0,x", "1"}).code == 2);
    CHECK(run({"dist", "edit", "a b", "b"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("dist reads files") {
    const auto path = scratch("x.txt");
    std::ofstream(path) << "kitten\n";
    CHECK(run({"dist", "edit", "@" + path.string(), "sitting"}).out == "3\n");
    CHECK(run({"dist", "edit", "@/nonexistent/file", "a"}).code == 2);
}

TEST_CASE("code gen and check") {
    const auto path = scratch("out.code");
    const Result gen = run({"code", "gen", "--gamma", "16", "--eps", "0.25", "--seed", "0", path.string()});
    CHECK(gen.code == 0);
    REQUIRE(std::filesystem::exists(path));
    const Result check = run({"code", "check", path.string()});
    CHECK(check.code == 0);
    CHECK(check.out.find("pass") != std::string::npos);

    // Duplicate the first codeword over the second.
    std::ifstream in(path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    in.close();
    lines[2] = lines[1];
    const auto dup = scratch("dup.code");
    std::ofstream os(dup);
    for (const auto& l : lines) os << l << '\n';
    os.close();
    const Result bad = run({"code", "check", dup.string()});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);

    const auto never = scratch("never.code");
    CHECK(run({"code", "gen", "--gamma", "16", "--eps", "0.6", never.string()}).code == 2);
    CHECK_FALSE(std::filesystem::exists(never));
    CHECK(run({"code", "gen", "--gamma", "64", "--eps", "0.25", "--budget", "2", never.string()}).code == 2);
    CHECK_FALSE(std::filesystem::exists(never));
    CHECK(run({"code", "check", "/nonexistent.code"}).code == 2);
}

TEST_CASE("same seed, same bytes") {
    const auto a = scratch("a.code");
    const auto b = scratch("b.code");
    REQUIRE(run({"code", "gen", "--gamma", "8", "--eps", "0.25", a.string()}).code == 0);
    setenv("STREMBED_SEED", "0", 1);
    REQUIRE(run({"code", "gen", "--gamma", "8", "--eps", "0.25", b.string()}).code == 0);
    std::ifstream fa(a);
    std::ifstream fb(b);
    std::stringstream sa;
    std::stringstream sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    setenv("STREMBED_SEED", "nope", 1);
    CHECK(run({"dist", "edit", "a", "b"}).code == 2);
    unsetenv("STREMBED_SEED");
}

TEST_CASE("embed") {
    CHECK(run({"embed", "tiskin", "ab"}).out == "a$b$\n");
    CHECK(run({"embed", "i2e-exact", "--y", "ab"}).out == "$$a$$b$$\nN=8 n=2\n");
    CHECK(run({"embed", "i2e-apx", "--y", "ab", "--eps", "1"}).out == "$$a$$$$b$$$$$$\nN=14 n=2 k=4\n");
    CHECK(run({"embed", "tiskin", "a$"}).code == 2);
    CHECK(run({"embed", "i2e-exact", "--y", "ab", "--x", "abc"}).code == 2);

    const Result binary = run({"--format", "structured", "embed", "binary", "--x", "a", "--y", "b", "--bits", "1"});
    CHECK(binary.code == 0);
    CHECK(binary.out.find("G = ") != std::string::npos);
    CHECK(binary.out.find("H = ") != std::string::npos);
    CHECK(binary.out.find("R = ") != std::string::npos);
    CHECK(binary.out.find("S = ") != std::string::npos);
    CHECK(binary.out.find("recovered = 0\n") != std::string::npos);
    CHECK(run({"embed", "binary", "--x", "ab", "--y", "ba", "--max-length", "10"}).code == 2);

    const Result alpha = run({"--format", "structured", "embed", "alpha", "ab", "ba", "--gamma", "4"});
    CHECK(alpha.code == 0);
    CHECK(alpha.out.find("k = 16") != std::string::npos);
    CHECK(alpha.out.find("normalized_original = 0.5") != std::string::npos);
    CHECK(run({"embed", "alpha", "abc", "--gamma", "2"}).code == 2);
}

TEST_CASE("verify") {
    const Result i2e = run({"verify", "i2e", "--cases", "50", "--seed", "1"});
    CHECK(i2e.code == 0);
    CHECK(i2e.out.find("suite i2e: PASS") != std::string::npos);
    const Result s = run({"--format", "structured", "verify", "code", "--cases", "3", "--gamma", "16"});
    CHECK(s.code == 0);
    CHECK(s.out.find("passed = true") != std::string::npos);
    CHECK(run({"verify", "nothing"}).code == 2);
}
