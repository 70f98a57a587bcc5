#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rightcay/cayley.hpp"
#include "rightcay/multable.hpp"
#include "rightcay/topology.hpp"

namespace rightcay::classify {

enum class Verdict { Planar, Toroidal, HigherGenus };

const char* verdict_name(Verdict v);

/// Which rule decided an outcome. Rules are tried cheapest first and the
/// order is fixed, so records are deterministic.
enum class Rule {
    PlanarCertificate,    // the blown-up graph itself is planar
    NonplanarBase,        // non-planar base: blown witness subgraph exceeds the torus
    R5K55,                // r >= 5: any blown edge contains K_{5,5}
    K22Blowup,            // r >= 3 and the base has a cycle of length >= 4
    ThreeRegular,         // r = 2, planar base of minimum degree >= 3
    CyclicTable,          // base is a cycle or K_2: verdict by the cyclic family
    ExplicitCertificate,  // settled by explicit embedding or exhaustive search
};

const char* rule_name(Rule r);

/// A certified reason why Cay(G x R_r, C x R_r) has genus >= bound (>= 2
/// for every obstruction this module emits).
struct Obstruction {
    Rule rule;
    int bound;
    std::string detail;
};

/// Outcome for one generating set of the group. A skipped outcome means
/// the blown graph is non-planar but the record's verdict was already
/// minimal, so no search was spent on it.
struct SetOutcome {
    algebra::GeneratingSet gens;
    Verdict verdict;
    Rule rule;
    bool skipped = false;
    std::optional<topo::EmbeddingCertificate> certificate;        // verdict <= toroidal
    std::optional<topo::KuratowskiWitness> nonplanarity_witness;  // toroidal only
    std::optional<Obstruction> obstruction;                       // higher genus only
};

/// Classification of a right group G x R_r over all inclusion-minimal
/// generating sets C of G: the minimum verdict, its witnessing set, and the
/// per-set evidence. A toroidal record carries a face-trace-validated
/// genus-1 certificate plus a non-planarity witness; a planar record a
/// genus-0 certificate; a higher-genus record an obstruction per set.
struct ClassificationRecord {
    std::string group_name;
    int r = 1;
    Verdict verdict = Verdict::Planar;
    Rule rule = Rule::PlanarCertificate;
    std::optional<algebra::GeneratingSet> witness_gens;
    std::vector<SetOutcome> outcomes;
};

std::optional<Obstruction> rule_nonplanar_base(const SimpleGraph& base, int r);
std::optional<Obstruction> rule_r5(const SimpleGraph& base, int r);
std::optional<Obstruction> rule_K22(const SimpleGraph& base, int r);

/// The r = 2 rule for planar bases of minimum degree >= 3. Either the edge
/// count already exceeds a toroidal triangulation, or some base edge lies
/// in no triangle while a toroidal embedding of the 6-regular blow-up would
/// have to triangulate. Throws if the preconditions fail.
std::optional<Obstruction> rule_threereg(const SimpleGraph& base, const algebra::GeneratingSet& c,
                                         const algebra::MulTable& g);

ClassificationRecord classify_right_group(const algebra::MulTable& g, int r,
                                          long long budget = 10'000'000,
                                          const std::string& name = "");

/// Classification of Z_n x R_r; each branch is re-proved by the engine.
ClassificationRecord cyclic_table(int n, int r);

/// Mechanical replay of the genus >= 3 argument for
/// Cay(Z_6 x R_2, {2,3} x R_2): delete the blow-ups of one edge of each
/// base triangle, then check the resulting graph H step by step.
struct StepResult {
    std::string name;
    bool pass = false;
    std::string evidence;
};

struct TripleTorusReplay {
    std::vector<StepResult> steps;
    bool all_pass = false;
};

TripleTorusReplay replay_triple_torus_proof();

/// One row of the classification table, with the verdict compared against
/// the published list of toroidal right groups.
struct ReportRow {
    std::string group;
    int r = 1;
    Verdict verdict = Verdict::Planar;
    Rule rule = Rule::PlanarCertificate;
    std::string witness;
    bool published_toroidal = false;
    bool agrees = false;
    bool known_erratum = false;  // Z2 x D2 x R2; see the report module
};

struct ClassificationReport {
    std::vector<ReportRow> rows;
    int disagreements = 0;       // rows that differ and are not the known erratum
    int erratum_rows = 0;
};

/// Classify the standard family grid (cyclic, dihedral, A4, S4 and their
/// Z2 products) for r up to max_r and compare each verdict against the
/// published toroidal list. A5 and Z2 x A5 are covered by the cheap
/// involution checks only unless include_a5 is set.
ClassificationReport classification_report(int max_n, int max_r, bool include_a5 = false,
                                           long long budget = 10'000'000);

/// Involution-pair generation table for the groups the classification
/// excludes or includes by that criterion.
struct InvolutionRow {
    std::string group;
    bool two_involutions_generate = false;
};

std::vector<InvolutionRow> involution_pair_table();

}  // namespace rightcay::classify
