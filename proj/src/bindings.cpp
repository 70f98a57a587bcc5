#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rightcay/cayley.hpp"
#include "rightcay/classify.hpp"
#include "rightcay/embeddings.hpp"
#include "rightcay/multable.hpp"
#include "rightcay/products.hpp"
#include "rightcay/report.hpp"
#include "rightcay/topology.hpp"

namespace py = pybind11;
using namespace rightcay;

PYBIND11_MODULE(_rightcay, m) {
    m.doc() = "Cayley graphs of right groups and their surface embeddings";

    // ---- algebra ----
    py::class_<algebra::MulTable>(m, "MulTable")
        .def_readonly("order", &algebra::MulTable::order)
        .def_readonly("names", &algebra::MulTable::names)
        .def_property_readonly("identity",
                               [](const algebra::MulTable& s) { return s.identity; })
        .def("at", &algebra::MulTable::at)
        .def("is_group", &algebra::MulTable::is_group)
        .def("__repr__", [](const algebra::MulTable& s) {
            return "<MulTable order=" + std::to_string(s.order) + ">";
        });

    py::class_<algebra::GeneratingSet>(m, "GeneratingSet")
        .def_readonly("elements", &algebra::GeneratingSet::elements);

    m.def("make_cyclic", &algebra::make_cyclic, py::arg("n"));
    m.def("make_dihedral", &algebra::make_dihedral, py::arg("n"));
    m.def("make_symmetric", &algebra::make_symmetric, py::arg("n"));
    m.def("make_alternating", &algebra::make_alternating, py::arg("n"));
    m.def("make_right_zero", &algebra::make_right_zero, py::arg("r"));
    m.def("make_left_zero", &algebra::make_left_zero, py::arg("r"));
    m.def("make_table", &algebra::make_table, py::arg("order"), py::arg("table"),
          py::arg("names") = std::vector<std::string>{});
    m.def("direct_product", &algebra::direct_product);
    m.def("generating_set", &algebra::make_generating_set, py::arg("table"), py::arg("elements"));
    m.def("element_order", &algebra::element_order);
    m.def("closure", &algebra::closure);
    m.def("generates", &algebra::generates);
    m.def("minimal_generating_sets", &algebra::minimal_generating_sets, py::arg("table"),
          py::arg("order_cap") = 120);
    m.def("two_involutions_generate", &algebra::two_involutions_generate);
    m.def("parse_group_spec", [](const std::string& spec) {
        auto gs = algebra::parse_group_spec(spec);
        return py::make_tuple(gs.table, gs.factor_sizes, gs.text);
    });

    // ---- graphs ----
    py::class_<SimpleGraph>(m, "SimpleGraph")
        .def(py::init<int>(), py::arg("n"))
        .def("add_edge", &SimpleGraph::add_edge)
        .def("has_edge", &SimpleGraph::has_edge)
        .def_property_readonly("n", &SimpleGraph::vertex_count)
        .def_property_readonly("m", &SimpleGraph::edge_count)
        .def("degree", &SimpleGraph::degree)
        .def("neighbors", &SimpleGraph::neighbors)
        .def("edges", &SimpleGraph::edges)
        .def("connected", &SimpleGraph::connected)
        .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; })
        .def("__repr__", [](const SimpleGraph& g) {
            return "<SimpleGraph n=" + std::to_string(g.vertex_count()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<ColorDigraph>(m, "ColorDigraph")
        .def_readonly("vertex_count", &ColorDigraph::vertex_count)
        .def_property_readonly("arcs", [](const ColorDigraph& d) {
            std::vector<std::tuple<int, int, int>> out;
            for (const auto& a : d.arcs) out.emplace_back(a.src, a.dst, a.color);
            return out;
        });

    m.def("complete", &graphs::complete);
    m.def("complete_bipartite", &graphs::complete_bipartite);
    m.def("cycle", &graphs::cycle);
    m.def("path", &graphs::path);
    m.def("edgeless", &graphs::edgeless);
    m.def("to_dot", py::overload_cast<const SimpleGraph&>(&to_dot));
    m.def("to_dot_colored", py::overload_cast<const ColorDigraph&>(&to_dot));
    m.def("to_edge_list", &to_edge_list);
    m.def("read_edge_list", &read_edge_list);

    // ---- cayley ----
    m.def("cayley_color_graph", &cayley::cayley_color_graph);
    m.def("suppress", &cayley::suppress);
    m.def("cayley_graph", &cayley::cayley_graph);
    m.def("graph_isomorphic", &cayley::graph_isomorphic, py::arg("x"), py::arg("y"),
          py::arg("forced") = std::vector<std::pair<int, int>>{});
    m.def("vertex_transitive", &cayley::vertex_transitive);

    // ---- products ----
    py::class_<products::ProductWitness>(m, "ProductWitness")
        .def_readonly("holds", &products::ProductWitness::holds)
        .def_readonly("kind", &products::ProductWitness::kind)
        .def_readonly("counterexample", &products::ProductWitness::counterexample);
    py::class_<products::LexWitness>(m, "LexWitness")
        .def_readonly("witness", &products::LexWitness::witness)
        .def_readonly("t_is_right_group", &products::LexWitness::t_is_right_group);

    m.def("cross_product",
          py::overload_cast<const SimpleGraph&, const SimpleGraph&>(&products::cross_product));
    m.def("cross_product_colored",
          py::overload_cast<const ColorDigraph&, const ColorDigraph&>(&products::cross_product));
    m.def("lexicographic", &products::lexicographic);
    m.def("blowup", &products::blowup);
    m.def("box_product", &products::box_product);
    m.def("verify_cross_identity", &products::verify_cross_identity);
    m.def("verify_lex_identity", &products::verify_lex_identity);

    // ---- topology ----
    py::class_<topo::RotationSystem>(m, "RotationSystem")
        .def(py::init([](std::vector<std::vector<int>> order) {
                 return topo::RotationSystem{std::move(order)};
             }),
             py::arg("order"))
        .def_readonly("order", &topo::RotationSystem::order);

    py::class_<topo::EmbeddingCertificate>(m, "EmbeddingCertificate")
        .def_readonly("graph", &topo::EmbeddingCertificate::graph)
        .def_readonly("rotation", &topo::EmbeddingCertificate::rotation)
        .def_readonly("faces", &topo::EmbeddingCertificate::faces)
        .def_readonly("genus", &topo::EmbeddingCertificate::genus)
        .def("__repr__", [](const topo::EmbeddingCertificate& c) {
            return "<EmbeddingCertificate genus=" + std::to_string(c.genus) +
                   " faces=" + std::to_string(c.faces.size()) + ">";
        });

    py::enum_<topo::Pattern>(m, "Pattern")
        .value("K5", topo::Pattern::K5)
        .value("K33", topo::Pattern::K33)
        .value("K4", topo::Pattern::K4)
        .value("K23", topo::Pattern::K23)
        .value("K22", topo::Pattern::K22);

    py::class_<topo::KuratowskiWitness>(m, "KuratowskiWitness")
        .def_readonly("pattern", &topo::KuratowskiWitness::pattern)
        .def_readonly("branch_vertices", &topo::KuratowskiWitness::branch_vertices)
        .def_readonly("paths", &topo::KuratowskiWitness::paths);

    py::class_<topo::PlanarityResult>(m, "PlanarityResult")
        .def_readonly("planar", &topo::PlanarityResult::planar)
        .def_readonly("embedding", &topo::PlanarityResult::embedding)
        .def_readonly("witness", &topo::PlanarityResult::witness);

    py::class_<topo::OuterPlanarityResult>(m, "OuterPlanarityResult")
        .def_readonly("outer_planar", &topo::OuterPlanarityResult::outer_planar)
        .def_readonly("embedding", &topo::OuterPlanarityResult::embedding)
        .def_readonly("outer_face", &topo::OuterPlanarityResult::outer_face)
        .def_readonly("witness", &topo::OuterPlanarityResult::witness);

    py::class_<topo::GenusBounds>(m, "GenusBounds")
        .def_readonly("lower", &topo::GenusBounds::lower)
        .def_readonly("upper", &topo::GenusBounds::upper)
        .def_readonly("certificate", &topo::GenusBounds::certificate)
        .def("exact", &topo::GenusBounds::exact)
        .def_property_readonly("lower_reason", [](const topo::GenusBounds& b) {
            return std::string(topo::bound_reason_name(b.lower_reason));
        });

    m.def("face_trace", &topo::face_trace);
    m.def("revalidate", &topo::revalidate);
    m.def("default_rotation", &topo::default_rotation);
    m.def("is_planar", &topo::is_planar);
    m.def("planar", &topo::planar);
    m.def("is_outer_planar", &topo::is_outer_planar);
    m.def("girth", &topo::girth);
    m.def("euler_lower_bound", &topo::euler_lower_bound);
    m.def("edge_triangle_profile", &topo::edge_triangle_profile);
    m.def("find_subdivision", &topo::find_subdivision);
    m.def("exact_genus", &topo::exact_genus, py::arg("g"), py::arg("budget") = 10'000'000LL);
    m.def("heuristic_upper", &topo::heuristic_upper, py::arg("g"),
          py::arg("effort") = 200'000LL, py::arg("seed") = 1u);

    // ---- embeddings ----
    m.def("torus_square_grid", &embeddings::torus_square_grid);
    m.def("torus_triangular_grid_Z3R3", &embeddings::torus_triangular_grid_Z3R3);
    m.def("torus_Krr", &embeddings::torus_Krr);
    m.def("triple_torus_example", &embeddings::triple_torus_example);
    m.def("certificate_to_text", &embeddings::certificate_to_text);
    m.def("certificate_from_text", &embeddings::certificate_from_text);

    // ---- classify ----
    py::enum_<classify::Verdict>(m, "Verdict")
        .value("Planar", classify::Verdict::Planar)
        .value("Toroidal", classify::Verdict::Toroidal)
        .value("HigherGenus", classify::Verdict::HigherGenus);

    py::class_<classify::ClassificationRecord>(m, "ClassificationRecord")
        .def_readonly("group_name", &classify::ClassificationRecord::group_name)
        .def_readonly("r", &classify::ClassificationRecord::r)
        .def_readonly("verdict", &classify::ClassificationRecord::verdict)
        .def_property_readonly("rule",
                               [](const classify::ClassificationRecord& r) {
                                   return std::string(classify::rule_name(r.rule));
                               })
        .def_property_readonly("witness_gens", [](const classify::ClassificationRecord& r) {
            return r.witness_gens ? std::optional<std::vector<int>>(r.witness_gens->elements)
                                  : std::nullopt;
        });

    py::class_<classify::TripleTorusReplay>(m, "TripleTorusReplay")
        .def_readonly("all_pass", &classify::TripleTorusReplay::all_pass)
        .def_property_readonly("steps", [](const classify::TripleTorusReplay& r) {
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (const auto& s : r.steps) out.emplace_back(s.name, s.pass, s.evidence);
            return out;
        });

    py::class_<classify::ClassificationReport>(m, "ClassificationReport")
        .def_readonly("disagreements", &classify::ClassificationReport::disagreements)
        .def_readonly("erratum_rows", &classify::ClassificationReport::erratum_rows)
        .def_property_readonly("rows", [](const classify::ClassificationReport& rep) {
            std::vector<py::dict> out;
            for (const auto& row : rep.rows) {
                py::dict d;
                d["group"] = row.group;
                d["r"] = row.r;
                d["verdict"] = std::string(classify::verdict_name(row.verdict));
                d["rule"] = std::string(classify::rule_name(row.rule));
                d["published_toroidal"] = row.published_toroidal;
                d["agrees"] = row.agrees;
                d["known_erratum"] = row.known_erratum;
                out.push_back(std::move(d));
            }
            return out;
        });

    m.def("cyclic_table", &classify::cyclic_table);
    m.def("classify_right_group", &classify::classify_right_group, py::arg("g"), py::arg("r"),
          py::arg("budget") = 10'000'000LL, py::arg("name") = std::string());
    m.def("replay_triple_torus_proof", &classify::replay_triple_torus_proof);
    m.def("classification_report", &classify::classification_report, py::arg("max_n"),
          py::arg("max_r"), py::arg("include_a5") = false, py::arg("budget") = 10'000'000LL);
    m.def("classification_report_json", [](int max_n, int max_r) {
        return report::classification_json(classify::classification_report(max_n, max_r));
    });
}
