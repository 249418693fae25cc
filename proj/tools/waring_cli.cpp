// Command-line front end for exact Waring ranks and certified
// sum-of-powers decompositions of monomials.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "waring/decompose.hpp"
#include "waring/hilbert.hpp"
#include "waring/io.hpp"
#include "waring/monomial.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

std::vector<unsigned> parse_degree_list(const std::string& text) {
    std::vector<unsigned> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("malformed degree list '" + text + "'");
        }
        const unsigned long v = std::stoul(item);
        if (v == 0 || v > 1000000) {
            throw std::invalid_argument("degrees must be in 1..1000000");
        }
        values.push_back(static_cast<unsigned>(v));
    }
    if (values.empty()) throw std::invalid_argument("empty degree list");
    return values;
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_rank(const std::string& expr) {
    std::cout << waring::waring_rank(waring::normalize(waring::parse_monomial(expr))).get_str()
              << "\n";
    return kExitOk;
}

int run_decompose(const std::string& expr, const std::string& format, bool check,
                  unsigned jobs) {
    const waring::Decomposition dec = waring::decompose(waring::parse_monomial(expr));
    if (format == "json") {
        std::cout << waring::decomposition_to_json(dec, expr) << "\n";
    } else if (format == "latex") {
        std::cout << waring::decomposition_to_latex(dec);
    } else {
        std::cout << waring::decomposition_to_plain(dec, expr);
    }
    if (check) {
        const bool ok = waring::verify(dec, jobs);
        if (format == "plain") std::cout << "verified: " << (ok ? "true" : "false") << "\n";
        if (!ok) return kExitVerifyFailed;
    }
    return kExitOk;
}

int run_verify(const std::string& path, unsigned jobs) {
    const waring::ParsedDecomposition parsed =
        waring::decomposition_from_json(read_all(path));
    if (waring::verify(parsed.decomposition, jobs)) {
        std::cout << "verification: ok\n";
        return kExitOk;
    }
    std::cout << "verification: FAILED\n";
    return kExitVerifyFailed;
}

int run_hilbert(const std::string& gens_text, unsigned nvars, int upto, bool check_lemma) {
    const std::vector<unsigned> gens = parse_degree_list(gens_text);
    if (check_lemma) {
        if (gens.size() != nvars) {
            throw std::invalid_argument("lemma check needs as many generators as variables");
        }
        if (gens.front() != 1) {
            throw std::invalid_argument(
                "lemma check needs the linear generator first: --gens 1,a2,...");
        }
        const std::vector<unsigned> a(gens.begin() + 1, gens.end());
        if (a.empty()) throw std::invalid_argument("lemma check needs at least two generators");
        const waring::Lemma22Result result = waring::lemma22_check(a);
        std::cout << "lhs=" << result.lhs.get_str() << " rhs=" << result.rhs.get_str()
                  << " holds=" << (result.holds ? "true" : "false") << "\n";
        return result.holds ? kExitOk : kExitVerifyFailed;
    }
    if (upto < 0) throw std::invalid_argument("--upto must be non-negative");
    const waring::CIData ci(nvars, gens);
    for (int i = 0; i <= upto; ++i) {
        if (i) std::cout << " ";
        std::cout << waring::hilbert_function(ci, static_cast<unsigned>(i)).get_str();
    }
    std::cout << "\n";
    return kExitOk;
}

int run_bounds(const std::vector<std::string>& exprs) {
    std::vector<waring::Monomial> monomials;
    for (const std::string& e : exprs) monomials.push_back(waring::parse_monomial(e));
    const waring::RankBounds bounds = waring::coprime_rank_bounds(monomials);
    std::cout << "lower=" << bounds.lower.get_str() << " upper=" << bounds.upper.get_str()
              << "\n";
    return kExitOk;
}

int run_extremal(unsigned nvars, unsigned degree, bool brute_force) {
    const waring::ExtremalRank result = (nvars == 3 && !brute_force)
                                            ? waring::extremal_rank_ternary(degree)
                                            : waring::extremal_rank_bruteforce(nvars, degree);
    std::cout << "rank: " << result.value.get_str() << "\n";
    std::cout << "exponents:";
    for (unsigned e : result.exponents.exponents()) std::cout << " " << e;
    std::cout << "\n";
    return kExitOk;
}

int run_table(unsigned dmax) {
    if (dmax < 3) throw std::invalid_argument("--dmax must be at least 3");
    for (unsigned d = 3; d <= dmax; ++d) {
        std::cout << d << " " << waring::generic_rank_naive(3, d).get_str() << " "
                  << waring::extremal_rank_ternary(d).value.get_str() << "\n";
    }
    return kExitOk;
}

int run_catalecticant(const std::string& expr) {
    const waring::CanonicalMonomial c = waring::normalize(waring::parse_monomial(expr));
    const unsigned d = c.degree();
    waring::Integer best(0);
    for (unsigned a = 0; a <= d; ++a) {
        const waring::Integer value = waring::catalecticant_rank(c, a);
        if (value > best) best = value;
        if (a) std::cout << " ";
        std::cout << value.get_str();
    }
    std::cout << "\n" << "max: " << best.get_str() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Waring ranks and certified sum-of-powers decompositions of monomials"};
    app.require_subcommand(1);

    std::string expr;
    std::string format = "plain";
    bool check = false;
    unsigned jobs = 1;

    CLI::App* rank = app.add_subcommand("rank", "Waring rank of a monomial");
    rank->add_option("expr", expr, "monomial, e.g. x1^2*x3")->required();

    CLI::App* decompose = app.add_subcommand("decompose", "sum-of-powers decomposition");
    decompose->add_option("expr", expr, "monomial, e.g. x1^2*x3")->required();
    decompose->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "json", "latex"}));
    decompose->add_flag("--verify", check, "re-verify by exact expansion");
    decompose->add_option("--jobs", jobs, "worker threads for expansion")
        ->check(CLI::Range(1u, 256u));

    std::string verify_path;
    CLI::App* verify = app.add_subcommand("verify", "re-verify a decomposition JSON file");
    verify->add_option("file", verify_path, "path to decomposition JSON, or - for stdin")
        ->required();
    verify->add_option("--jobs", jobs, "worker threads for expansion")
        ->check(CLI::Range(1u, 256u));

    std::string gens_text;
    unsigned nvars = 0;
    int upto = -1;
    bool check_lemma = false;
    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function of a monomial complete "
                                                      "intersection");
    hilbert->add_option("--gens", gens_text, "generator degrees, e.g. 1,2,2")->required();
    hilbert->add_option("--nvars", nvars, "ambient variable count")->required();
    CLI::Option* upto_opt = hilbert->add_option("--upto", upto, "print values for 0..T");
    CLI::Option* lemma_opt =
        hilbert->add_flag("--check-lemma", check_lemma,
                          "check the Hilbert-function window identity");
    upto_opt->excludes(lemma_opt);

    std::vector<std::string> bound_exprs;
    CLI::App* bounds = app.add_subcommand("bounds", "rank bounds for a sum of pairwise coprime "
                                                    "monomials");
    bounds->add_option("exprs", bound_exprs, "monomials of equal degree on disjoint variables")
        ->required();

    unsigned degree = 0;
    bool brute_force = false;
    CLI::App* extremal = app.add_subcommand("extremal", "maximal monomial rank for fixed degree");
    extremal->add_option("--nvars", nvars, "variable count")->required();
    extremal->add_option("--degree", degree, "total degree")->required();
    extremal->add_flag("--brute-force", brute_force, "enumerate partitions instead of the "
                                                     "ternary closed form");

    unsigned dmax = 0;
    CLI::App* table = app.add_subcommand("table", "generic vs maximal ternary rank per degree");
    table->add_option("--dmax", dmax, "last degree row")->required();

    CLI::App* catal = app.add_subcommand("catalecticant", "catalecticant ranks and the derived "
                                                          "lower bound");
    catal->add_option("expr", expr, "monomial, e.g. x1^2*x3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    try {
        if (rank->parsed()) return run_rank(expr);
        if (decompose->parsed()) return run_decompose(expr, format, check, jobs);
        if (verify->parsed()) return run_verify(verify_path, jobs);
        if (hilbert->parsed()) {
            if (!check_lemma && upto < 0) {
                throw std::invalid_argument("hilbert needs --upto or --check-lemma");
            }
            return run_hilbert(gens_text, nvars, upto, check_lemma);
        }
        if (bounds->parsed()) return run_bounds(bound_exprs);
        if (extremal->parsed()) return run_extremal(nvars, degree, brute_force);
        if (table->parsed()) return run_table(dmax);
        if (catal->parsed()) return run_catalecticant(expr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
