#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "geomhop/common.hpp"
#include "geomhop/generate.hpp"
#include "geomhop/labels.hpp"
#include "geomhop/problem.hpp"

namespace geomhop {

struct Vec2 {
    double x = 0, y = 0;
    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double k) const { return {x * k, y * k}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

// circular-arc boundary piece replacing the segment verts[i] -> verts[i+1]
struct ArcSeg {
    int after_vertex = 0;
    Vec2 center;
    double radius = 0;
    bool bulge_left = false;  // arc bows to the left of the travel direction
};

struct PlacedShape {
    InstanceId id = -1;
    std::vector<Vec2> verts;       // labelled points, same order as vertex_labels
    std::vector<ArcSeg> arcs;
    bool angle_mark = false;       // pseudo-shapes render as rays, not polygons
    std::vector<Vec2> boundary;    // discretized simple boundary (arcs at <=1 deg)
    std::string color;
    std::optional<Vec2> hole_center;  // removed circle, if any
    double hole_radius = 0;
};

struct LayoutResult {
    std::vector<PlacedShape> placed;
    std::vector<InstanceNaming> namings;
    double scale = 1.0;  // canvas units per metric unit
};

// Place the shape tree: root at the origin, every child reflected across
// its shared element into free space. Resamples free parameters on overlap
// and throws LayoutExhausted when the budget runs out.
LayoutResult layout(const ProblemGraph& g, Rng& rng,
                    const FormulaLibrary& lib = FormulaLibrary::builtin(),
                    int max_tries = 40);

// true iff the interiors of two simple polygons intersect (shared edges
// and touching vertices do not count); eps is the boundary tolerance
bool polygons_interiors_intersect(const std::vector<Vec2>& a, const std::vector<Vec2>& b,
                                  double eps = 1e-6);

// strictly-inside point test used by the predicate above
bool point_strictly_inside(const std::vector<Vec2>& poly, Vec2 p, double eps = 1e-6);

}  // namespace geomhop
