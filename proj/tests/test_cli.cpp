#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "waring/decompose.hpp"
#include "waring/io.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

std::string shell_quote(const std::string& s) {
    std::string quoted = "'";
    for (char c : s) {
        if (c == '\'') {
            quoted += "'\\''";
        } else {
            quoted += c;
        }
    }
    quoted += "'";
    return quoted;
}

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    std::string command;
    if (!stdin_text.empty()) {
        command = "printf %s " + shell_quote(stdin_text) + " | ";
    }
    command += std::string(WARING_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("rank verb") {
    const RunResult r = run_cli("rank x1*x2^2*x3^2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "9\n");
}

TEST_CASE("table verb reproduces the degree rows") {
    const RunResult r = run_cli("table --dmax 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "3 4 4\n4 5 6\n5 7 9\n6 10 12\n7 12 16\n");
    CHECK(run_cli("table --dmax 2").exit_code == 2);
}

TEST_CASE("decompose plain output is the four-cubes identity") {
    const RunResult r = run_cli("decompose x1*x2*x3");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "input: x1*x2*x3\n"
          "degree: 3\n"
          "rank: 4\n"
          "order: 2\n"
          "term: (1/24) * (x1 + x2 + x3)^3\n"
          "term: (-1/24) * (x1 + x2 - x3)^3\n"
          "term: (-1/24) * (x1 - x2 + x3)^3\n"
          "term: (1/24) * (x1 - x2 - x3)^3\n");
}

TEST_CASE("decompose latex output") {
    const RunResult r = run_cli("decompose x1*x2*x3 --format latex");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "\\[\n"
          "x_{1}x_{2}x_{3} = "
          "\\tfrac{1}{24}\\left(x_{1}+x_{2}+x_{3}\\right)^{3}"
          " - \\tfrac{1}{24}\\left(x_{1}+x_{2}-x_{3}\\right)^{3}"
          " - \\tfrac{1}{24}\\left(x_{1}-x_{2}+x_{3}\\right)^{3}"
          " + \\tfrac{1}{24}\\left(x_{1}-x_{2}-x_{3}\\right)^{3}\n"
          "\\]\n");
}

TEST_CASE("decompose json pipes into verify") {
    const RunResult decomposed = run_cli("decompose x1*x2^2*x3^3 --format json");
    CHECK(decomposed.exit_code == 0);
    const RunResult verified = run_cli("verify -", decomposed.output);
    CHECK(verified.exit_code == 0);
    CHECK(verified.output == "verification: ok\n");
}

TEST_CASE("pure power json") {
    const RunResult r = run_cli("decompose x1^4 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "{\"input\":\"x1^4\",\"canonical_exponents\":[4],\"variable_map\":[1],"
          "\"degree\":4,\"rank\":\"1\",\"cyclotomic_order\":1,"
          "\"terms\":[{\"gamma\":{\"rational\":\"1/1\",\"zeta_exp\":0},\"form\":[0]}]}\n");
}

TEST_CASE("verify reads from a file path") {
    const RunResult decomposed = run_cli("decompose x2^2*x3 --format json");
    REQUIRE(decomposed.exit_code == 0);
    const std::string path = "cli_roundtrip.json";
    {
        FILE* f = fopen(path.c_str(), "wb");
        REQUIRE(f != nullptr);
        fwrite(decomposed.output.data(), 1, decomposed.output.size(), f);
        fclose(f);
    }
    CHECK(run_cli("verify " + path).exit_code == 0);
    remove(path.c_str());
}

TEST_CASE("round trip holds across the full acceptance sweep") {
    // every partition of d <= 10 into at most 4 positive parts
    std::vector<std::string> expressions;
    std::function<void(unsigned, unsigned, unsigned, std::vector<unsigned>&)> walk =
        [&](unsigned remaining, unsigned parts_left, unsigned min_part,
            std::vector<unsigned>& prefix) {
            if (remaining == 0) {
                std::string expr;
                for (std::size_t i = 0; i < prefix.size(); ++i) {
                    if (i) expr += "*";
                    expr += "x" + std::to_string(i + 1);
                    if (prefix[i] > 1) expr += "^" + std::to_string(prefix[i]);
                }
                if (!expr.empty()) expressions.push_back(std::move(expr));
                return;
            }
            if (parts_left == 0) return;
            for (unsigned p = min_part; p <= remaining; ++p) {
                prefix.push_back(p);
                walk(remaining - p, parts_left - 1, p, prefix);
                prefix.pop_back();
            }
        };
    for (unsigned d = 1; d <= 10; ++d) {
        std::vector<unsigned> prefix;
        walk(d, 4, 1, prefix);
    }
    REQUIRE(expressions.size() == 93);
    for (const std::string& expr : expressions) {
        const RunResult decomposed = run_cli("decompose " + expr + " --format json");
        REQUIRE(decomposed.exit_code == 0);
        CHECK(run_cli("verify -", decomposed.output).exit_code == 0);
    }
}

TEST_CASE("verify rejects a tampered certificate") {
    const waring::Decomposition dec = waring::decompose(waring::parse_monomial("x1*x2^2"));
    std::string json = waring::decomposition_to_json(dec, "x1*x2^2");
    // negate one gamma: 1/9 -> -1/9 flips a sign without structural damage
    const std::size_t at = json.find("\"1/9\"");
    REQUIRE(at != std::string::npos);
    json.replace(at, 5, "\"-1/9\"");
    const RunResult r = run_cli("verify -", json);
    CHECK(r.exit_code == 1);
    CHECK(r.output == "verification: FAILED\n");
}

TEST_CASE("verify reports malformed JSON as a usage error") {
    CHECK(run_cli("verify -", "{\"rank\": \"4\"}").exit_code == 2);
    CHECK(run_cli("verify /nonexistent/path.json").exit_code == 2);
}

TEST_CASE("decompose --verify sets the exit code") {
    CHECK(run_cli("decompose x1*x2^2 --verify").exit_code == 0);
    CHECK(run_cli("decompose x1*x2^2 --verify --jobs 4").exit_code == 0);
}

TEST_CASE("hilbert verb") {
    const RunResult series = run_cli("hilbert --gens 1,2,2 --nvars 3 --upto 3");
    CHECK(series.exit_code == 0);
    CHECK(series.output == "1 2 1 0\n");

    const RunResult lemma = run_cli("hilbert --gens 1,2,3 --nvars 3 --check-lemma");
    CHECK(lemma.exit_code == 0);
    CHECK(lemma.output == "lhs=3 rhs=3 holds=true\n");

    CHECK(run_cli("hilbert --gens 2,3 --nvars 3 --check-lemma").exit_code == 2);
    CHECK(run_cli("hilbert --gens 1,2,2 --nvars 3").exit_code == 2);
    CHECK(run_cli("hilbert --gens 1,2,2 --nvars 3 --upto 3 --check-lemma").exit_code == 2);
    CHECK(run_cli("hilbert --gens 0,2 --nvars 3 --upto 2").exit_code == 2);
}

TEST_CASE("bounds verb") {
    const RunResult r = run_cli("bounds x1^2*x2 x3^3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "lower=3 upper=12\n");
    CHECK(run_cli("bounds x1^2*x2 x1^3").exit_code == 2);
}

TEST_CASE("extremal verb") {
    const RunResult closed = run_cli("extremal --nvars 3 --degree 7");
    CHECK(closed.exit_code == 0);
    CHECK(closed.output == "rank: 16\nexponents: 1 3 3\n");

    const RunResult brute = run_cli("extremal --nvars 3 --degree 7 --brute-force");
    CHECK(brute.output == closed.output);

    const RunResult quaternary = run_cli("extremal --nvars 4 --degree 6");
    CHECK(quaternary.exit_code == 0);
    CHECK(quaternary.output == "rank: 18\nexponents: 1 1 2 2\n");
}

TEST_CASE("catalecticant verb") {
    const RunResult r = run_cli("catalecticant x1*x2^2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 2 2 1\nmax: 2\n");
}

TEST_CASE("parse errors exit 2") {
    CHECK(run_cli("rank").exit_code == 2);
    CHECK(run_cli("rank 'x0^2'").exit_code == 2);
    CHECK(run_cli("rank 'x1^0'").exit_code == 2);  // degree 0
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("decompose x1*x2 --format yaml").exit_code == 2);
}

TEST_CASE("output is byte-identical across runs") {
    for (const std::string args : {"decompose x1*x2^2*x3^3 --format json",
                                   "decompose x1*x2^2*x3^3", "table --dmax 12",
                                   "decompose x1*x2*x3 --format latex"}) {
        const RunResult first = run_cli(args);
        const RunResult second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.output == second.output);
    }
    // parallel expansion must not change bytes
    const RunResult serial = run_cli("decompose x1*x2^2*x3^3 --verify --jobs 1");
    const RunResult parallel = run_cli("decompose x1*x2^2*x3^3 --verify --jobs 8");
    CHECK(serial.output == parallel.output);
}
