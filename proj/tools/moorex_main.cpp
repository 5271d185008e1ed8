#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "moorex/constructions.hpp"
#include "moorex/graph.hpp"
#include "moorex/report.hpp"

namespace {

using namespace moorex;

void write_output(const std::string& content, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

GeneratedGraph dispatch_family(const std::string& family, int n, int m, int b,
                               int d, int k, int q) {
    if (family == "cycle") return gen_cycle(n);
    if (family == "complete") return gen_complete(m);
    if (family == "complete_bipartite") return gen_complete_bipartite(m);
    if (family == "petersen") return gen_petersen();
    if (family == "debruijn_digraph") return gen_debruijn_digraph(b, k);
    if (family == "debruijn_undirected") return gen_debruijn_undirected(b, k);
    if (family == "kautz") return gen_kautz(d, k);
    if (family == "polarity") return gen_polarity(q);
    if (family == "two_cliques_bridged") return gen_two_cliques_bridged(n);
    throw std::invalid_argument("unknown family: " + family);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "moorex: degree-diameter graph toolkit.\n"
        "Generates the classical low-diameter families, measures spectra and\n"
        "exact combinatorial expansion, and certifies the closed-form\n"
        "expansion guarantees against those measurements."};
    app.require_subcommand(1);

    std::string output;
    std::string format = "text";
    int exact_cap = kDefaultSubsetCap;
    std::optional<int> force_d;
    std::optional<double> tol;

    auto add_common = [&](CLI::App* cmd, bool with_analysis_flags) {
        cmd->add_option("--output", output, "Write to a file instead of stdout");
        if (with_analysis_flags) {
            cmd->add_option("--format", format, "Report format: text | structured")
                ->check(CLI::IsMember({"text", "structured"}));
            cmd->add_option("--exact-cap", exact_cap,
                            "Max n for exhaustive expansion (default 24)");
            cmd->add_option("--force-d", force_d,
                            "Override the degree used by bound formulas");
            cmd->add_option("--tol", tol, "Eigenvalue certificate tolerance");
        }
    };

    // generate
    auto* generate = app.add_subcommand("generate", "Emit a family member as an edge list");
    std::string family;
    int gn = 0, gm = 0, gb = 0, gd = 0, gk = 0, gq = 0;
    generate
        ->add_option("family", family,
                     "cycle | complete | complete_bipartite | petersen | "
                     "debruijn_digraph | debruijn_undirected | kautz | polarity | "
                     "two_cliques_bridged")
        ->required();
    generate->add_option("--n", gn, "Vertex count (cycle, two_cliques_bridged)");
    generate->add_option("--m", gm, "Part size (complete, complete_bipartite)");
    generate->add_option("--b", gb, "Alphabet size (de Bruijn)");
    generate->add_option("--d", gd, "Degree (kautz)");
    generate->add_option("--k", gk, "Word length / diameter (de Bruijn, kautz)");
    generate->add_option("--q", gq, "Field size, prime (polarity)");
    add_common(generate, false);
    generate->callback([&] {
        const auto gg = dispatch_family(family, gn, gm, gb, gd, gk, gq);
        write_output(to_edge_list(gg.graph), output);
    });

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Full report for one edge-list file");
    std::string input;
    analyze->add_option("input", input, "Edge-list file")->required();
    add_common(analyze, true);
    analyze->callback([&] {
        const Graph g = load_edge_list(input);
        AnalyzeOptions opts{exact_cap, force_d, tol};
        write_output(render_report(analyze_report(g, opts), format), output);
    });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Bound table for explicit (d, k, n)");
    int bd = 0, bk = 0;
    long long bn = 0;
    bool directed = false;
    bounds->add_option("--d", bd, "Degree")->required();
    bounds->add_option("--k", bk, "Diameter")->required();
    bounds->add_option("--n", bn, "Size")->required();
    bounds->add_flag("--directed", directed, "Directed regime");
    add_common(bounds, true);
    bounds->callback([&] {
        write_output(render_report(bounds_report(bd, bk, BigInt(bn), directed), format),
                     output);
    });

    // table2
    auto* table2 = app.add_subcommand(
        "table2", "Published guarantees for a known construction vs recomputed bounds");
    std::string t2_family;
    int td = 0, tk = 0;
    table2
        ->add_option("family", t2_family,
                     "debruijn | kautz | polarity | mms | canale_gomez | alegre")
        ->required();
    table2->add_option("--d", td, "Degree")->required();
    table2->add_option("--k", tk, "Diameter")->required();
    add_common(table2, true);
    table2->callback([&] {
        write_output(render_report(table2_report(t2_family, td, tk), format), output);
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Run certification checks; exit 1 on failure");
    std::string verify_input;
    std::string suite;
    verify->add_option("input", verify_input, "Edge-list file");
    verify->add_option("--suite", suite, "Built-in suite name: standard");
    add_common(verify, true);
    int verify_exit = 0;
    verify->callback([&] {
        AnalyzeOptions opts{exact_cap, force_d, tol};
        VerifyResult result;
        if (!suite.empty()) {
            if (suite != "standard") {
                throw std::invalid_argument("unknown suite: " + suite);
            }
            result = verify_suite(opts);
        } else if (!verify_input.empty()) {
            result = verify_graph(load_edge_list(verify_input), opts);
        } else {
            throw std::invalid_argument("verify needs an input file or --suite");
        }
        write_output(render_report(result.report, format), output);
        verify_exit = result.pass ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return verify_exit;
}
