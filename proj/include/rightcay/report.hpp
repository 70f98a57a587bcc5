#pragma once

#include <string>

#include "rightcay/classify.hpp"

namespace rightcay::report {

std::string classification_text(const classify::ClassificationReport& rep);
std::string classification_json(const classify::ClassificationReport& rep);

std::string replay_text(const classify::TripleTorusReplay& replay);
std::string replay_json(const classify::TripleTorusReplay& replay);

std::string involution_text(const std::vector<classify::InvolutionRow>& rows);
std::string involution_json(const std::vector<classify::InvolutionRow>& rows);

}  // namespace rightcay::report
