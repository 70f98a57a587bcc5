// rightcay: build Cayley graphs of right groups, query surface-embedding
// invariants, and verify the toroidal classification.
//
// Exit codes: 0 success, 2 usage or parse error, 3 inconclusive genus
// bounds, 4 verification failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rightcay/cayley.hpp"
#include "rightcay/classify.hpp"
#include "rightcay/embeddings.hpp"
#include "rightcay/products.hpp"
#include "rightcay/report.hpp"
#include "rightcay/topology.hpp"

using namespace rightcay;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitVerifyFailed = 4;

struct CayleyOptions {
    std::string spec;
    std::string gens;
    std::string export_format = "edges";
    std::string output;
};

int run_cayley(const CayleyOptions& opt) {
    algebra::GroupSpec gs = algebra::parse_group_spec(opt.spec);
    std::vector<int> gen_indices = algebra::parse_generators(gs, opt.gens);
    algebra::GeneratingSet c = algebra::make_generating_set(gs.table, gen_indices);

    ColorDigraph colored = cayley::cayley_color_graph(gs.table, c);
    SimpleGraph graph = cayley::suppress(colored);
    std::cout << "vertices=" << graph.vertex_count() << " edges=" << graph.edge_count() << "\n";

    std::string artifact;
    if (opt.export_format == "dot") artifact = to_dot(colored);
    else if (opt.export_format == "edges") artifact = to_edge_list(graph);
    else throw CLI::ValidationError("--export must be dot or edges");

    if (opt.output.empty()) {
        std::cout << artifact;
    } else {
        std::ofstream out(opt.output);
        if (!out) throw std::runtime_error("cannot write " + opt.output);
        out << artifact;
        std::cout << "wrote " << opt.output << "\n";
    }
    return kExitOk;
}

struct GenusOptions {
    std::string input;  // edge-list file, certificate file, or group spec
    std::string gens;
    long long budget = 10'000'000;
    long long effort = 200'000;
    unsigned seed = 1;
};

int run_genus(const GenusOptions& opt) {
    SimpleGraph graph;
    if (std::filesystem::exists(opt.input)) {
        std::ifstream in(opt.input);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        if (text.rfind("rightcay-embedding", 0) == 0) {
            topo::EmbeddingCertificate cert = embeddings::certificate_from_text(text);
            std::cout << "certificate: vertices=" << cert.graph.vertex_count()
                      << " edges=" << cert.graph.edge_count() << " faces=" << cert.faces.size()
                      << " genus=" << cert.genus << " (revalidated)\n";
            graph = cert.graph;
        } else {
            graph = read_edge_list(text);
        }
    } else {
        algebra::GroupSpec gs = algebra::parse_group_spec(opt.input);
        if (opt.gens.empty()) throw CLI::ValidationError("a group spec needs --gens");
        auto c = algebra::make_generating_set(gs.table, algebra::parse_generators(gs, opt.gens));
        graph = cayley::cayley_graph(gs.table, c);
    }
    std::cout << "graph: vertices=" << graph.vertex_count() << " edges=" << graph.edge_count()
              << "\n";

    topo::GenusBounds bounds = topo::exact_genus(graph, opt.budget);
    if (bounds.exact()) {
        std::cout << "exact genus " << bounds.lower << " ("
                  << topo::bound_reason_name(bounds.lower_reason) << ")\n";
        return kExitOk;
    }
    std::cout << "lower " << bounds.lower << " (" << topo::bound_reason_name(bounds.lower_reason)
              << ")";
    if (bounds.upper) {
        std::cout << ", upper " << *bounds.upper << " (certificate)";
    } else {
        topo::EmbeddingCertificate cert = topo::heuristic_upper(graph, opt.effort, opt.seed);
        std::cout << ", upper " << cert.genus << " (heuristic certificate)";
    }
    std::cout << "\n";
    return kExitInconclusive;
}

struct VerifyOptions {
    int max_n = 10;
    int max_r = 5;
    std::string only;  // theorem | involutions | triple-torus | cyclic | products | bounds
    std::string report_format = "text";
    long long budget = 10'000'000;
};

int run_verify(const VerifyOptions& opt) {
    bool all_ok = true;
    const bool json = opt.report_format == "json";
    nlohmann::json out = nlohmann::json::object();
    auto wants = [&opt](const char* suite) { return opt.only.empty() || opt.only == suite; };
    auto suite_line = [&](const char* name, bool ok) {
        if (json) out[name]["pass"] = ok;
        else std::cout << (ok ? "[pass] " : "[FAIL] ") << name << "\n\n";
        if (!ok) all_ok = false;
    };

    if (wants("theorem")) {
        classify::ClassificationReport rep =
            classify::classification_report(opt.max_n, opt.max_r, false, opt.budget);
        if (json) out["theorem"] = nlohmann::json::parse(report::classification_json(rep));
        else std::cout << report::classification_text(rep) << "\n";
        if (rep.disagreements > 0) all_ok = false;
    }
    if (wants("involutions")) {
        auto rows = classify::involution_pair_table();
        if (json) out["involutions"] = nlohmann::json::parse(report::involution_json(rows));
        else std::cout << report::involution_text(rows) << "\n";
    }
    if (wants("triple-torus")) {
        classify::TripleTorusReplay replay = classify::replay_triple_torus_proof();
        if (json) out["triple-torus"] = nlohmann::json::parse(report::replay_json(replay));
        else std::cout << report::replay_text(replay) << "\n";
        if (!replay.all_pass) all_ok = false;
        topo::EmbeddingCertificate cert = embeddings::triple_torus_example();
        suite_line("seeded genus-3 certificate for (C3 box K2)[empty_2]",
                   cert.genus == 3 && topo::revalidate(cert));
    }
    if (wants("cyclic")) {
        bool ok = true;
        for (int n = 2; n <= std::min(8, std::max(2, opt.max_n)); ++n)
            for (int r = 1; r <= std::min(5, opt.max_r); ++r) {
                auto rec = classify::cyclic_table(n, r);
                bool expect =
                    (n == 2 && (r == 3 || r == 4)) || (n == 3 && r == 3) || (n >= 4 && r == 2);
                if ((rec.verdict == classify::Verdict::Toroidal) != expect) ok = false;
            }
        suite_line("cyclic family verdicts", ok);
    }
    if (wants("products")) {
        using namespace rightcay::algebra;
        bool ok = true;
        for (int a = 1; a <= 4 && ok; ++a)
            for (int b = 1; b <= 4 && ok; ++b) {
                MulTable s = make_cyclic(a), t = make_right_zero(b);
                std::vector<int> all(static_cast<size_t>(b));
                for (int i = 0; i < b; ++i) all[static_cast<size_t>(i)] = i;
                ok = products::verify_cross_identity(s, make_generating_set(s, {a == 1 ? 0 : 1}),
                                                     t, make_generating_set(t, all))
                         .holds;
            }
        suite_line("cross product identities", ok);
    }
    if (wants("bounds")) {
        bool ok = topo::euler_lower_bound(graphs::complete_bipartite(5, 5)) == 3 &&
                  topo::euler_lower_bound(graphs::complete_bipartite(6, 6)) == 4 &&
                  topo::euler_lower_bound(products::blowup(graphs::complete(5), 2)) >= 2;
        suite_line("Euler-girth obstruction bounds", ok);
    }

    if (json) {
        out["pass"] = all_ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (all_ok ? "verification passed" : "VERIFICATION FAILED") << "\n";
    }
    return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley graphs of right groups and their surface embeddings"};
    app.require_subcommand(1);

    CayleyOptions cayley_opt;
    CLI::App* cay = app.add_subcommand("cayley", "build a Cayley graph from a group spec");
    cay->add_option("spec", cayley_opt.spec, "group spec, e.g. Z6, D4, Z2xD5xR2")->required();
    cay->add_option("--gens", cayley_opt.gens, "generators: element indices or tuples like (1,*)")
        ->required();
    cay->add_option("--export", cayley_opt.export_format, "dot|edges (default edges)");
    cay->add_option("-o,--output", cayley_opt.output, "write the artifact to a file");

    GenusOptions genus_opt;
    CLI::App* gen = app.add_subcommand("genus", "genus bounds for a graph or Cayley graph");
    gen->add_option("input", genus_opt.input, "edge-list file, certificate file, or group spec")
        ->required();
    gen->add_option("--gens", genus_opt.gens, "generators (when input is a group spec)");
    gen->add_option("--budget", genus_opt.budget, "search node budget (default 1e7)");
    gen->add_option("--effort", genus_opt.effort, "heuristic effort (default 2e5)");
    gen->add_option("--seed", genus_opt.seed, "heuristic seed (default 1)");

    VerifyOptions verify_opt;
    CLI::App* ver =
        app.add_subcommand("verify-paper", "run the classification verification suites");
    ver->add_option("--max-n", verify_opt.max_n, "largest cyclic index in the table (default 10)");
    ver->add_option("--max-r", verify_opt.max_r, "largest right-zero rank (default 5)");
    ver->add_option("--only", verify_opt.only,
                    "one suite: theorem|involutions|triple-torus|cyclic|products|bounds");
    ver->add_option("--report", verify_opt.report_format, "text|json (default text)");
    ver->add_option("--budget", verify_opt.budget, "search node budget (default 1e7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cay->parsed()) return run_cayley(cayley_opt);
        if (gen->parsed()) return run_genus(genus_opt);
        if (ver->parsed()) return run_verify(verify_opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
