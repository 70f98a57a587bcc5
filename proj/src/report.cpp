#include "rightcay/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace rightcay::report {

using nlohmann::json;

std::string classification_text(const classify::ClassificationReport& rep) {
    std::ostringstream os;
    os << std::left << std::setw(9) << "group" << std::setw(3) << "r" << std::setw(10)
       << "verdict" << std::setw(22) << "rule" << std::setw(11) << "published" << std::setw(8)
       << "agrees" << "witness\n";
    for (const auto& row : rep.rows) {
        os << std::left << std::setw(9) << row.group << std::setw(3) << row.r << std::setw(10)
           << classify::verdict_name(row.verdict) << std::setw(22) << classify::rule_name(row.rule)
           << std::setw(11) << (row.published_toroidal ? "toroidal" : "-") << std::setw(8)
           << (row.agrees ? "yes" : (row.known_erratum ? "ERRATUM" : "NO")) << row.witness
           << "\n";
    }
    os << "rows: " << rep.rows.size() << ", disagreements: " << rep.disagreements
       << ", documented errata: " << rep.erratum_rows << "\n";
    return os.str();
}

std::string classification_json(const classify::ClassificationReport& rep) {
    json rows = json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"group", row.group},
                        {"r", row.r},
                        {"verdict", classify::verdict_name(row.verdict)},
                        {"rule", classify::rule_name(row.rule)},
                        {"published_toroidal", row.published_toroidal},
                        {"agrees", row.agrees},
                        {"known_erratum", row.known_erratum},
                        {"witness", row.witness}});
    json out{{"rows", rows},
             {"disagreements", rep.disagreements},
             {"errata", rep.erratum_rows}};
    return out.dump(2);
}

std::string replay_text(const classify::TripleTorusReplay& replay) {
    std::ostringstream os;
    for (const auto& s : replay.steps)
        os << (s.pass ? "[pass] " : "[FAIL] ") << s.name << " -- " << s.evidence << "\n";
    os << (replay.all_pass ? "all steps pass\n" : "SOME STEPS FAILED\n");
    return os.str();
}

std::string replay_json(const classify::TripleTorusReplay& replay) {
    json steps = json::array();
    for (const auto& s : replay.steps)
        steps.push_back({{"name", s.name}, {"pass", s.pass}, {"evidence", s.evidence}});
    return json{{"steps", steps}, {"all_pass", replay.all_pass}}.dump(2);
}

std::string involution_text(const std::vector<classify::InvolutionRow>& rows) {
    std::ostringstream os;
    for (const auto& r : rows)
        os << std::left << std::setw(9) << r.group << (r.two_involutions_generate ? "yes" : "no")
           << "\n";
    return os.str();
}

std::string involution_json(const std::vector<classify::InvolutionRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"group", r.group}, {"two_involutions_generate", r.two_involutions_generate}});
    return out.dump(2);
}

}  // namespace rightcay::report
