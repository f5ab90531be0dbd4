#pragma once

#include <string>

#include "geomhop/problem.hpp"

namespace geomhop {

// Canonical serialization of ProblemGraph + SolutionTrace so labels can be
// re-verified without the generator.
std::string graph_to_json_text(const ProblemGraph& g);
ProblemGraph graph_from_json_text(const std::string& text);

std::string trace_to_json_text(const SolutionTrace& t);
SolutionTrace trace_from_json_text(const std::string& text);

}  // namespace geomhop
