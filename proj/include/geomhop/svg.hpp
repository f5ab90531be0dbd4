#pragma once

#include <string>

#include "geomhop/generate.hpp"
#include "geomhop/layout.hpp"

namespace geomhop {

// Deterministic vector rendering of a placed problem. Coordinate mode
// prints uppercase vertex letters; individual mode prints lowercase side
// letters and Greek angle letters and relies on fill colors for shape
// references. Image-channel fact values are printed next to their
// elements. Identical inputs produce byte-identical output.
std::string render_svg(const ProblemGraph& g, const LayoutResult& layout,
                       const VisualStyle& style, Annotation annotation);

}  // namespace geomhop
