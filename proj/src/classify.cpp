#include "rightcay/classify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rightcay/embeddings.hpp"
#include "rightcay/products.hpp"

namespace rightcay::classify {

using algebra::GeneratingSet;
using algebra::MulTable;
using topo::EmbeddingCertificate;
using topo::Pattern;

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Planar: return "planar";
        case Verdict::Toroidal: return "toroidal";
        case Verdict::HigherGenus: return "genus>=2";
    }
    return "?";
}

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::PlanarCertificate: return "planar-certificate";
        case Rule::NonplanarBase: return "nonplanar-base";
        case Rule::R5K55: return "r5-k55";
        case Rule::K22Blowup: return "k22-blowup";
        case Rule::ThreeRegular: return "three-regular";
        case Rule::CyclicTable: return "cyclic-table";
        case Rule::ExplicitCertificate: return "explicit-certificate";
    }
    return "?";
}

std::optional<Obstruction> rule_nonplanar_base(const SimpleGraph& base, int r) {
    if (r < 2) throw std::invalid_argument("rule_nonplanar_base needs r >= 2");
    auto pl = topo::is_planar(base);
    if (pl.planar) return std::nullopt;
    SimpleGraph witness = topo::witness_subgraph(base, *pl.witness);
    int bound = topo::euler_lower_bound(products::blowup(witness, r));
    if (bound < 2)
        throw std::logic_error("blown Kuratowski witness fell below the torus bound");
    std::ostringstream os;
    os << "base contains a " << topo::pattern_name(pl.witness->pattern)
       << " subdivision; its blow-up has Euler-girth genus bound " << bound;
    return Obstruction{Rule::NonplanarBase, bound, os.str()};
}

std::optional<Obstruction> rule_r5(const SimpleGraph& base, int r) {
    if (r < 5 || base.edge_count() == 0) return std::nullopt;
    int bound = topo::euler_lower_bound(graphs::complete_bipartite(5, 5));
    std::ostringstream os;
    os << "r >= 5: any base edge blows up to K_{5,5}, Euler-girth genus bound " << bound;
    return Obstruction{Rule::R5K55, bound, os.str()};
}

std::optional<Obstruction> rule_K22(const SimpleGraph& base, int r) {
    if (r < 3) return std::nullopt;
    auto w = topo::find_subdivision(base, Pattern::K22);
    if (!w) return std::nullopt;
    SimpleGraph cycle_subgraph = topo::witness_subgraph(base, *w);
    int bound = topo::euler_lower_bound(products::blowup(cycle_subgraph, r));
    if (bound < 2)
        throw std::logic_error("blown long cycle fell below the torus bound");
    int len = 0;
    for (const auto& p : w->paths) len += static_cast<int>(p.size()) - 1;
    std::ostringstream os;
    os << "base has a cycle of length " << len << "; its blow-up "
       << (len == 4 ? "is K_{" + std::to_string(2 * r) + "," + std::to_string(2 * r) + "}"
                    : "has girth 4")
       << " with Euler-girth genus bound " << bound;
    return Obstruction{Rule::K22Blowup, bound, os.str()};
}

std::optional<Obstruction> rule_threereg(const SimpleGraph& base, const GeneratingSet& c,
                                         const MulTable& g) {
    int min_deg = base.vertex_count() == 0 ? 0 : base.degree(0);
    for (int v = 0; v < base.vertex_count(); ++v) min_deg = std::min(min_deg, base.degree(v));
    if (min_deg < 3) throw std::invalid_argument("rule_threereg needs minimum degree >= 3");
    if (!topo::is_planar(base).planar) throw std::invalid_argument("rule_threereg needs a planar base");

    const int nb = 2 * base.vertex_count();
    const int mb = 4 * base.edge_count();
    if (mb > 3 * nb) {
        std::ostringstream os;
        os << "blow-up has " << mb << " edges on " << nb
           << " vertices; a toroidal embedding allows at most " << 3 * nb;
        return Obstruction{Rule::ThreeRegular, 2, os.str()};
    }
    auto profile = topo::edge_triangle_profile(base);
    auto edges = base.edges();
    for (size_t i = 0; i < profile.size(); ++i) {
        if (profile[i] == 0) {
            std::ostringstream os;
            os << "base edge {" << edges[i].first << "," << edges[i].second
               << "} lies in no triangle, but a toroidal embedding of the 6-regular blow-up"
                  " would have to triangulate";
            return Obstruction{Rule::ThreeRegular, 2, os.str()};
        }
    }
    // Every base edge lies in a triangle. For an inclusion-minimal
    // generating set a triangle relation with two distinct generators makes
    // one redundant, so all generators would have order 3 -- but then every
    // vertex degree is even (2 per non-involution), contradicting the exact
    // 3-regularity the edge-count branch left us with. A >= 4-regular base
    // is caught by that branch, so nothing certifiable remains here and the
    // caller falls back to the exhaustive search.
    (void)c;
    (void)g;
    return std::nullopt;
}

namespace {

bool is_cycle_graph(const SimpleGraph& g) {
    if (g.vertex_count() < 3 || !g.connected()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

// permutation sending the canonical blow-up labels (cycle position, blob
// slot) onto the actual blown labels (base vertex, blob slot)
std::vector<int> blowup_transport(const std::vector<int>& base_to_position, int r) {
    const int k = static_cast<int>(base_to_position.size());
    std::vector<int> position_to_base(static_cast<size_t>(k));
    for (int b = 0; b < k; ++b)
        position_to_base[static_cast<size_t>(base_to_position[static_cast<size_t>(b)])] = b;
    std::vector<int> perm(static_cast<size_t>(k * r));
    for (int pos = 0; pos < k; ++pos)
        for (int j = 0; j < r; ++j)
            perm[static_cast<size_t>(pos * r + j)] = position_to_base[static_cast<size_t>(pos)] * r + j;
    return perm;
}

SetOutcome evaluate_set(const MulTable& g, const GeneratingSet& c, int r, long long budget,
                        bool allow_search) {
    SetOutcome out;
    out.gens = c;

    MulTable gr = algebra::direct_product(g, algebra::make_right_zero(r));
    std::vector<int> blown_gens;
    for (int x : c.elements)
        for (int j = 0; j < r; ++j) blown_gens.push_back(x * r + j);
    SimpleGraph blown = cayley::cayley_graph(gr, algebra::make_generating_set(gr, blown_gens));
    SimpleGraph base = cayley::cayley_graph(g, c);

    if (topo::planar(blown)) {
        out.verdict = Verdict::Planar;
        out.rule = Rule::PlanarCertificate;
        out.certificate = topo::is_planar(blown).embedding;
        return out;
    }

    auto settle_obstruction = [&out](Obstruction ob) {
        out.verdict = Verdict::HigherGenus;
        out.rule = ob.rule;
        out.obstruction = std::move(ob);
    };

    if (r >= 2) {
        if (auto ob = rule_nonplanar_base(base, r)) {
            settle_obstruction(std::move(*ob));
            return out;
        }
        if (auto ob = rule_r5(base, r)) {
            settle_obstruction(std::move(*ob));
            return out;
        }
        if (auto ob = rule_K22(base, r)) {
            settle_obstruction(std::move(*ob));
            return out;
        }
        int min_deg = base.vertex_count() == 0 ? 0 : base.degree(0);
        for (int v = 0; v < base.vertex_count(); ++v) min_deg = std::min(min_deg, base.degree(v));
        if (r == 2 && min_deg >= 3) {
            if (auto ob = rule_threereg(base, c, g)) {
                settle_obstruction(std::move(*ob));
                return out;
            }
        }

        // cyclic reduction: the base is a cycle or a single edge
        auto toroidal_with = [&](EmbeddingCertificate cert) {
            if (!(cert.graph == blown))
                throw std::logic_error("transported certificate does not match the blown graph");
            out.verdict = Verdict::Toroidal;
            out.rule = Rule::CyclicTable;
            out.certificate = std::move(cert);
            out.nonplanarity_witness = topo::is_planar(blown).witness;
        };
        if (is_cycle_graph(base)) {
            const int k = base.vertex_count();
            if (r == 2 && k >= 4) {
                auto iso = cayley::graph_isomorphic(base, graphs::cycle(k));
                toroidal_with(topo::relabel_certificate(embeddings::torus_square_grid(k),
                                                        blowup_transport(*iso, 2)));
                return out;
            }
            if (r == 3 && k == 3) {
                auto iso = cayley::graph_isomorphic(base, graphs::cycle(3));
                toroidal_with(topo::relabel_certificate(embeddings::torus_triangular_grid_Z3R3(),
                                                        blowup_transport(*iso, 3)));
                return out;
            }
            if (r == 4 && k == 3) {
                // blowing up a triangle gives the complete tripartite
                // K_{4,4,4}; deleting the 16 edges between two parts leaves
                // a triangle-free graph whose toroidal face count cannot be
                // met: 12 - 32 + f = 0 forces f = 20, but girth 4 allows at
                // most 2*32/4 = 16 faces
                SimpleGraph rest = products::blowup(graphs::path(3), 4);
                int bound = topo::euler_lower_bound(rest);
                if (bound < 2) throw std::logic_error("tripartite remainder bound fell below 2");
                std::ostringstream os;
                os << "blow-up is K_{4,4,4}; after removing the 16 edges between two parts the"
                      " rest has 12 vertices and 32 edges, needs 20 quadrilateral faces on the"
                      " torus but girth 4 allows 16 (Euler-girth bound " << bound << ")";
                out.verdict = Verdict::HigherGenus;
                out.rule = Rule::CyclicTable;
                out.obstruction = Obstruction{Rule::CyclicTable, bound, os.str()};
                return out;
            }
        }
        if (base.vertex_count() == 2 && base.edge_count() == 1 && (r == 3 || r == 4)) {
            toroidal_with(embeddings::torus_Krr(r));
            return out;
        }
    }

    // generic fallback: bounded exhaustive search on the blown graph
    if (!allow_search) {
        out.skipped = true;
        out.verdict = Verdict::HigherGenus;  // non-planar, undecided beyond that
        out.rule = Rule::ExplicitCertificate;
        return out;
    }
    topo::GenusBounds bounds = topo::exact_genus(blown, budget);
    if (bounds.exact()) {
        if (bounds.lower == 0) {
            out.verdict = Verdict::Planar;
            out.rule = Rule::ExplicitCertificate;
            out.certificate = bounds.certificate;
        } else if (bounds.lower == 1) {
            out.verdict = Verdict::Toroidal;
            out.rule = Rule::ExplicitCertificate;
            out.certificate = bounds.certificate;
            out.nonplanarity_witness = topo::is_planar(blown).witness;
        } else {
            out.verdict = Verdict::HigherGenus;
            out.rule = Rule::ExplicitCertificate;
            out.obstruction = Obstruction{Rule::ExplicitCertificate, bounds.lower,
                                          "exhaustive rotation search"};
        }
        return out;
    }
    if (bounds.lower >= 2) {
        out.verdict = Verdict::HigherGenus;
        out.rule = Rule::ExplicitCertificate;
        out.obstruction =
            Obstruction{Rule::ExplicitCertificate, bounds.lower, "search lower bound"};
        return out;
    }
    throw std::runtime_error("classification budget exhausted before a verdict");
}

}  // namespace

ClassificationRecord classify_right_group(const MulTable& g, int r, long long budget,
                                          const std::string& name) {
    if (!g.is_group()) throw std::invalid_argument("classify_right_group expects a group");
    if (g.order > 120) throw std::invalid_argument("group order exceeds the classification cap");
    if (r < 1 || r > 6) throw std::invalid_argument("classify_right_group expects 1 <= r <= 6");

    ClassificationRecord rec;
    rec.group_name = name.empty() ? "group-of-order-" + std::to_string(g.order) : name;
    rec.r = r;

    auto sets = algebra::minimal_generating_sets(g);
    if (sets.empty()) throw std::logic_error("group without minimal generating sets");

    // cheap pass first; a skipped outcome is non-planar, so the expensive
    // search only runs when no cheap outcome beat the higher-genus class
    for (const auto& c : sets) rec.outcomes.push_back(evaluate_set(g, c, r, budget, false));
    bool have_low = std::any_of(rec.outcomes.begin(), rec.outcomes.end(), [](const SetOutcome& o) {
        return !o.skipped && o.verdict != Verdict::HigherGenus;
    });
    if (!have_low)
        for (auto& out : rec.outcomes)
            if (out.skipped) out = evaluate_set(g, out.gens, r, budget, true);

    bool first = true;
    for (const auto& out : rec.outcomes) {
        if (out.skipped) continue;
        if (first || static_cast<int>(out.verdict) < static_cast<int>(rec.verdict)) {
            rec.verdict = out.verdict;
            rec.rule = out.rule;
            rec.witness_gens = out.gens;
            first = false;
        }
    }
    if (first) throw std::logic_error("no decided outcome for any generating set");

    // soundness: the verdict evidence must revalidate
    for (const auto& out : rec.outcomes) {
        if (out.skipped) continue;
        if (out.verdict != Verdict::HigherGenus) {
            if (!out.certificate || !topo::revalidate(*out.certificate))
                throw std::logic_error("verdict certificate failed revalidation");
            int expect = out.verdict == Verdict::Planar ? 0 : 1;
            if (out.certificate->genus != expect)
                throw std::logic_error("verdict certificate has the wrong genus");
        }
        if (out.verdict == Verdict::Toroidal &&
            (!out.nonplanarity_witness ||
             !topo::validate_witness(out.certificate->graph, *out.nonplanarity_witness)))
            throw std::logic_error("toroidal verdict without a valid non-planarity witness");
        if (out.verdict == Verdict::HigherGenus && (!out.obstruction || out.obstruction->bound < 2))
            throw std::logic_error("higher-genus verdict without an obstruction");
    }
    return rec;
}

ClassificationRecord cyclic_table(int n, int r) {
    if (n < 1) throw std::invalid_argument("cyclic_table: n must be >= 1");
    if (r < 1 || r > 5) throw std::invalid_argument("cyclic_table: need 1 <= r <= 5");
    return classify_right_group(algebra::make_cyclic(n), r, 10'000'000, "Z" + std::to_string(n));
}

TripleTorusReplay replay_triple_torus_proof() {
    TripleTorusReplay replay;
    auto step = [&replay](const std::string& name, bool pass, const std::string& evidence) {
        replay.steps.push_back({name, pass, evidence});
    };

    // Cay(Z6 x R2, {2,3} x R2) with (g, r_i) -> 2g + i; base vertex k maps
    // to blown vertices 2k and 2k+1
    MulTable z6 = algebra::make_cyclic(6);
    MulTable gr = algebra::direct_product(z6, algebra::make_right_zero(2));
    SimpleGraph blown = cayley::cayley_graph(
        gr, algebra::make_generating_set(gr, {2 * 2, 2 * 2 + 1, 3 * 2, 3 * 2 + 1}));

    // delete the blow-ups of one edge of each base triangle: {1,5} from the
    // odd triangle and {2,4} from the even one (the aligned choice that
    // leaves two complete bipartite halves)
    SimpleGraph h(12);
    auto deleted = [](int bu, int bv) {
        return (bu == 1 && bv == 5) || (bu == 5 && bv == 1) || (bu == 2 && bv == 4) ||
               (bu == 4 && bv == 2);
    };
    for (auto [u, v] : blown.edges())
        if (!deleted(u / 2, v / 2)) h.add_edge(u, v);

    {
        auto profile = topo::edge_triangle_profile(h);
        bool triangle_free = std::all_of(profile.begin(), profile.end(), [](int t) { return t == 0; });
        std::ostringstream os;
        os << "H has " << h.edge_count() << " edges and "
           << std::count_if(profile.begin(), profile.end(), [](int t) { return t > 0; })
           << " edges in triangles";
        step("H has 28 edges and is triangle-free", h.edge_count() == 28 && triangle_free, os.str());
    }

    {
        // two K44 halves glued along the blow-up of base edge {0,3}
        std::vector<int> a_left{0, 1, 10, 11}, a_right{4, 5, 6, 7};    // {0,0',5,5'} x {2,2',3,3'}
        std::vector<int> b_left{0, 1, 2, 3}, b_right{6, 7, 8, 9};      // {0,0',1,1'} x {3,3',4,4'}
        auto complete_between = [&h](const std::vector<int>& xs, const std::vector<int>& ys) {
            for (int x : xs)
                for (int y : ys)
                    if (!h.has_edge(x, y)) return false;
            return true;
        };
        std::set<std::pair<int, int>> union_edges, shared;
        auto collect = [](const std::vector<int>& xs, const std::vector<int>& ys,
                          std::set<std::pair<int, int>>& into) {
            for (int x : xs)
                for (int y : ys) into.insert({std::min(x, y), std::max(x, y)});
        };
        std::set<std::pair<int, int>> ea, eb;
        collect(a_left, a_right, ea);
        collect(b_left, b_right, eb);
        union_edges = ea;
        union_edges.insert(eb.begin(), eb.end());
        std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                              std::inserter(shared, shared.begin()));
        auto h_edges = h.edges();
        std::set<std::pair<int, int>> h_set(h_edges.begin(), h_edges.end());
        bool ok = complete_between(a_left, a_right) && complete_between(b_left, b_right) &&
                  union_edges == h_set && shared.size() == 4;
        std::ostringstream os;
        os << "both halves complete bipartite: "
           << (complete_between(a_left, a_right) && complete_between(b_left, b_right))
           << ", union covers H: " << (union_edges == h_set) << ", " << shared.size()
           << " identified edges";
        step("H is two K44 copies glued along four identified edges", ok, os.str());
    }

    {
        // on the double torus H would have 14 faces, all quadrangular
        int f = 2 - 2 * 2 - h.vertex_count() + h.edge_count();
        bool ok = f == 14 && 4 * f == 2 * h.edge_count();
        std::ostringstream os;
        os << "Euler gives f = " << f << "; total face length " << 2 * h.edge_count()
           << " forces all faces quadrangular given triangle-freeness";
        step("a double-torus embedding forces 14 quadrangular faces", ok, os.str());
    }

    std::vector<std::vector<int>> cycles_28, cycles_z;
    {
        // all 4-cycles of H through the blown pair of base edge {2,4}
        auto four_cycles_through = [&h](int x, int y) {
            std::vector<std::vector<int>> found;
            const int n = h.vertex_count();
            for (int a = 0; a < n; ++a) {
                if (a == x || a == y || !h.has_edge(x, a) || !h.has_edge(y, a)) continue;
                for (int b = a + 1; b < n; ++b) {
                    if (b == x || b == y || !h.has_edge(x, b) || !h.has_edge(y, b)) continue;
                    found.push_back({x, a, y, b});
                }
            }
            // x adjacent to y would add cycles with the pair on an edge
            if (h.has_edge(x, y))
                for (int a = 0; a < n; ++a)
                    if (a != x && a != y && h.has_edge(y, a))
                        for (int b = 0; b < n; ++b)
                            if (b != x && b != y && b != a && h.has_edge(a, b) && h.has_edge(b, x))
                                found.push_back({x, y, a, b});
            return found;
        };
        cycles_28 = four_cycles_through(4, 8);   // base vertices 2 and 4
        cycles_z = four_cycles_through(5, 8);    // base vertices 2' and 4
        bool ok = cycles_28.size() == 1 && cycles_z.size() == 1 &&
                  cycles_28[0] == std::vector<int>{4, 0, 8, 1} &&
                  cycles_z[0] == std::vector<int>{5, 0, 8, 1};
        std::ostringstream os;
        os << cycles_28.size() << " four-cycles through {2,4} and " << cycles_z.size()
           << " through {2',4}; the deleted edges must be diagonals of quadrangular faces,"
              " so these are forced";
        step("the put-back edges have unique quadrilateral candidates", ok, os.str());
    }

    {
        // the two candidate faces share two edges, producing a K23 on
        // ({0,0'}, {2,2',4}); K23 is not outer planar, so a vertex would be
        // trapped with degree 2
        std::vector<int> part2{0, 1}, part3{4, 5, 8};
        bool edges_present = true;
        SimpleGraph k23(5);
        std::vector<int> local{0, 1, 2, 3, 4};
        for (size_t i = 0; i < part2.size(); ++i)
            for (size_t j = 0; j < part3.size(); ++j) {
                edges_present = edges_present && h.has_edge(part2[i], part3[j]);
                k23.add_edge(static_cast<int>(i), static_cast<int>(2 + j));
            }
        auto op = topo::is_outer_planar(k23);
        bool ok = edges_present && !op.outer_planar && op.witness &&
                  op.witness->pattern == Pattern::K23;
        std::ostringstream os;
        os << "K23 on ({0,0'},{2,2',4}) present: " << edges_present
           << "; outer-planarity check returns pattern "
           << (op.witness ? topo::pattern_name(op.witness->pattern) : "none");
        step("the glued faces force a non-outer-planar K23", ok, os.str());
    }

    replay.all_pass = std::all_of(replay.steps.begin(), replay.steps.end(),
                                  [](const StepResult& s) { return s.pass; });
    return replay;
}

namespace {

struct FamilyMember {
    std::string name;
    MulTable table;
    bool claimed_toroidal_r2 = false;  // set for members whose published rule is r == 2
    bool cyclic_special = false;       // Z_n: published toroidal iff the cyclic table says so
    int cyclic_n = 0;
};

bool published_toroidal(const FamilyMember& fm, int r) {
    if (fm.cyclic_special) {
        int n = fm.cyclic_n;
        return (n == 2 && (r == 3 || r == 4)) || (n == 3 && r == 3) || (n >= 4 && r == 2);
    }
    return fm.claimed_toroidal_r2 && r == 2;
}

}  // namespace

ClassificationReport classification_report(int max_n, int max_r, bool include_a5,
                                           long long budget) {
    using algebra::direct_product;
    using algebra::make_alternating;
    using algebra::make_cyclic;
    using algebra::make_dihedral;
    using algebra::make_symmetric;

    std::vector<FamilyMember> family;
    for (int n = 2; n <= std::min(10, max_n); ++n) {
        FamilyMember fm{"Z" + std::to_string(n), make_cyclic(n)};
        fm.cyclic_special = true;
        fm.cyclic_n = n;
        family.push_back(std::move(fm));
    }
    for (int n = 2; n <= std::min(6, max_n); ++n)
        family.push_back({"D" + std::to_string(n), make_dihedral(n), true});
    for (int m = 3; m <= std::min(5, max_n); ++m) {
        // Z2 x Z_odd is cyclic of order 2m; Z2 x Z_even is never toroidal
        FamilyMember fm{"Z2xZ" + std::to_string(m), direct_product(make_cyclic(2), make_cyclic(m))};
        fm.claimed_toroidal_r2 = (m % 2 == 1);
        family.push_back(std::move(fm));
    }
    for (int n = 2; n <= std::min(5, max_n); ++n)
        family.push_back({"Z2xD" + std::to_string(n),
                          direct_product(make_cyclic(2), make_dihedral(n)), true});
    if (max_n >= 4) {
        family.push_back({"A4", make_alternating(4), false});
        family.push_back({"S4", make_symmetric(4), false});
        family.push_back({"Z2xA4", direct_product(make_cyclic(2), make_alternating(4)), false});
    }
    if (include_a5) {
        family.push_back({"A5", make_alternating(5), false});
        family.push_back({"Z2xA5", direct_product(make_cyclic(2), make_alternating(5)), false});
    }

    ClassificationReport report;
    for (const auto& fm : family) {
        for (int r = 1; r <= std::min(5, max_r); ++r) {
            ClassificationRecord rec = classify_right_group(fm.table, r, budget, fm.name);
            ReportRow row;
            row.group = fm.name;
            row.r = r;
            row.verdict = rec.verdict;
            row.rule = rec.rule;
            row.published_toroidal = published_toroidal(fm, r);
            row.agrees = (rec.verdict == Verdict::Toroidal) == row.published_toroidal;
            if (!row.agrees && fm.name.rfind("Z2xD", 0) == 0 && r == 2 &&
                rec.verdict == Verdict::HigherGenus &&
                !algebra::two_involutions_generate(fm.table)) {
                // The published list keeps Z2 x Dn x R2 for every n >= 2, but
                // for even n the pair {(1,g1),(0,g2)} generates a subgroup of
                // order 2n only (ord of (1, g1 g2) is lcm(2, n) = n), and
                // Z2 x D2 is elementary abelian of rank 3. No involution pair
                // generates these groups, so every Cayley graph has degree
                // >= 3 and the r = 2 blow-up exceeds the torus. The engine's
                // certified obstruction stands; the row is flagged instead of
                // silently matched.
                row.known_erratum = true;
                ++report.erratum_rows;
            } else if (!row.agrees) {
                ++report.disagreements;
            }
            if (rec.witness_gens && rec.verdict != Verdict::HigherGenus) {
                std::ostringstream os;
                os << "C={";
                for (size_t i = 0; i < rec.witness_gens->elements.size(); ++i)
                    os << (i ? "," : "") << rec.witness_gens->elements[i];
                os << "}";
                row.witness = os.str();
            } else if (!rec.outcomes.empty() && rec.outcomes.front().obstruction) {
                row.witness = rec.outcomes.front().obstruction->detail.substr(0, 60);
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

std::vector<InvolutionRow> involution_pair_table() {
    using algebra::direct_product;
    using algebra::make_alternating;
    using algebra::make_cyclic;
    using algebra::make_dihedral;
    using algebra::make_symmetric;

    std::vector<std::pair<std::string, MulTable>> groups;
    groups.emplace_back("A4", make_alternating(4));
    groups.emplace_back("S4", make_symmetric(4));
    groups.emplace_back("A5", make_alternating(5));
    groups.emplace_back("Z2xA4", direct_product(make_cyclic(2), make_alternating(4)));
    groups.emplace_back("Z2xS4", direct_product(make_cyclic(2), make_symmetric(4)));
    groups.emplace_back("Z2xA5", direct_product(make_cyclic(2), make_alternating(5)));
    for (int n = 2; n <= 4; ++n)
        groups.emplace_back("Z2xZ" + std::to_string(2 * n),
                            direct_product(make_cyclic(2), make_cyclic(2 * n)));
    for (int n = 2; n <= 6; ++n)
        groups.emplace_back("D" + std::to_string(n), make_dihedral(n));

    std::vector<InvolutionRow> rows;
    for (auto& [name, table] : groups)
        rows.push_back({name, algebra::two_involutions_generate(table)});
    return rows;
}

}  // namespace rightcay::classify
