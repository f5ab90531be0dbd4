#pragma once

#include <map>
#include <string>
#include <vector>

#include "geomhop/library.hpp"
#include "geomhop/problem.hpp"

namespace geomhop {

// Vertex letters and role-to-vertex wiring for one instance. Side roles map
// to two vertex indices (an edge), angle roles to three (outer, vertex,
// outer). Aggregate roles carry no vertices.
struct InstanceNaming {
    std::vector<std::string> vertices;
    std::map<std::string, std::vector<int>> role_vertices;
};

// Deterministic breadth-first labelling: the root takes A,B,C,...; every
// child reuses the letters of its shared element and extends the alphabet.
// Fills ShapeInstance::vertex_labels (existing labels are respected) and
// assigns palette colors to instances that have none.
std::vector<InstanceNaming> assign_labels(ProblemGraph& g,
                                          const FormulaLibrary& lib = FormulaLibrary::builtin());

const std::vector<std::string>& color_palette();

// element display names under coordinate annotation
std::string side_name(const InstanceNaming& n, const std::string& role);
std::string angle_name(const InstanceNaming& n, const std::string& role);
std::string shape_display_name(const InstanceNaming& n);

// Individual-annotation marks: the query element is "?", derived shared
// sides take lowercase letters, derived angles take Greek letters.
std::map<ElementRef, std::string> individual_marks(const ProblemGraph& g,
                                                   const FormulaLibrary& lib =
                                                       FormulaLibrary::builtin());

}  // namespace geomhop
