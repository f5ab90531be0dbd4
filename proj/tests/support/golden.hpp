#pragma once

// Transcriptions of the published worked examples as ProblemGraphs, with
// the expected labels and every printed intermediate frozen alongside.

#include <string>
#include <vector>

#include "geomhop/problem.hpp"

namespace geomhop::golden {

struct GoldenCase {
    std::string name;
    ProblemGraph graph;
    double label = 0;
    std::vector<std::vector<double>> step_values;  // per trace step
    int depth = 0;
    int width = 0;
};

inline ShapeInstance inst(InstanceId id, ShapeKind k) {
    ShapeInstance s;
    s.id = id;
    s.kind = k;
    return s;
}

inline ShapeInstance inst(InstanceId id, ShapeKind k, InstanceId parent,
                          const std::string& parent_role, const std::string& child_role) {
    ShapeInstance s = inst(id, k);
    s.link = ParentLink{parent, parent_role, child_role};
    return s;
}

inline void fact(ProblemGraph& g, InstanceId i, const std::string& role, double v,
                 Channel ch = Channel::Text) {
    g.shape(i).element_values[role] = v;
    g.facts.push_back(Fact{ElementRef{i, role}, ch, std::nullopt, false, false});
}

inline void use(ProblemGraph& g, const std::string& fid, InstanceId i,
                std::vector<std::string> withheld = {}) {
    FormulaUse u;
    u.formula_id = fid;
    u.inst = i;
    u.withheld = std::move(withheld);
    g.used.push_back(u);
}

// (a) parallelogram perimeter from two sides
inline GoldenCase case_a() {
    GoldenCase c;
    c.name = "parallelogram_perimeter";
    ProblemGraph& g = c.graph;
    g.shapes.push_back(inst(0, ShapeKind::Parallelogram));
    fact(g, 0, "side2", 10, Channel::Image);
    fact(g, 0, "side1", 12, Channel::Image);
    use(g, "para_perimeter_from_sides", 0);
    g.query = {0, "perimeter"};
    c.label = 44;
    c.step_values = {{22, 44}};
    c.depth = 1;
    c.width = 2;
    return c;
}

// (b) variablized triangle angle sum
inline GoldenCase case_b() {
    GoldenCase c;
    c.name = "variablized_angle_sum";
    ProblemGraph& g = c.graph;
    g.shapes.push_back(inst(0, ShapeKind::Triangle));
    fact(g, 0, "angle_a", 60);
    fact(g, 0, "angle_b", 45);
    g.facts[0].expr = VarExpr{2, 50, "x"};
    g.facts[1].expr = VarExpr{2, 35, "x"};
    g.shape(0).element_values["angle_c"] = 75;
    Fact out_fact;
    out_fact.ref = {0, "angle_c"};
    out_fact.channel = Channel::Text;
    out_fact.expr = VarExpr{5, 50, "x"};
    g.facts.push_back(out_fact);
    FormulaUse u;
    u.formula_id = "tri_angle_sum";
    u.inst = 0;
    u.var = "x";
    u.exprs["angle_a"] = VarExpr{2, 50, "x"};
    u.exprs["angle_b"] = VarExpr{2, 35, "x"};
    u.exprs["angle_c"] = VarExpr{5, 50, "x"};
    g.used.push_back(u);
    g.query = {0, "angle_c"};
    c.label = 75;
    c.step_values = {{25, 75}};
    c.depth = 1;
    c.width = 2;
    return c;
}

// (c) rectangle-plus-semicircle area -> side -> asin angle
inline GoldenCase case_c() {
    GoldenCase c;
    c.name = "rpsc_then_asin";
    ProblemGraph& g = c.graph;
    g.shapes.push_back(inst(0, ShapeKind::RightTriangle));
    g.shapes.push_back(inst(1, ShapeKind::RectPlusSemiCircle, 0, "hyp", "other"));
    fact(g, 0, "leg1", 7, Channel::Image);
    fact(g, 1, "area", 102, Channel::Text);
    fact(g, 1, "base", 6, Channel::Image);
    use(g, "rpsc_other_from_area", 1);
    use(g, "rt_angle_from_opp_hyp", 0, {"hyp"});
    g.query = {0, "angle2"};
    c.label = 28.69;
    c.step_values = {{36, 113.04, 14.13, 87.87, 14.65}, {0.48, 28.69}};
    c.depth = 2;
    c.width = 2;
    return c;
}

// (d) trapezoid area with both bases derived
inline GoldenCase case_d() {
    GoldenCase c;
    c.name = "trapezoid_branch";
    ProblemGraph& g = c.graph;
    g.shapes.push_back(inst(0, ShapeKind::Trapezoid));
    g.shapes.push_back(inst(1, ShapeKind::SemiCircle, 0, "base1", "diameter"));
    g.shapes.push_back(inst(2, ShapeKind::RectPlusEquilateral, 0, "base2", "other"));
    fact(g, 0, "height", 8, Channel::Text);
    fact(g, 1, "area", 189.97, Channel::Text);
    fact(g, 2, "perimeter", 42, Channel::Text);
    fact(g, 2, "base", 8, Channel::Image);
    use(g, "semi_diameter_from_area", 1);
    use(g, "rpet_other_from_perimeter", 2);
    use(g, "trap_area_from_bases_height", 0, {"base1", "base2"});
    g.query = {0, "area"};
    c.label = 124;
    c.step_values = {{1519.76, 484, 22}, {24, 18, 9}, {31, 248, 124}};
    c.depth = 2;
    c.width = 3;
    return c;
}

// (e) rect-minus-semicircle perimeter -> triangle side -> rect perimeter
inline GoldenCase case_e() {
    GoldenCase c;
    c.name = "chain_depth3_perimeters";
    ProblemGraph& g = c.graph;
    g.shapes.push_back(inst(0, ShapeKind::Rectangle));
    g.shapes.push_back(inst(1, ShapeKind::Triangle, 0, "length", "side_ab"));
    g.shapes.push_back(inst(2, ShapeKind::RectMinusSemiCircle, 1, "side_bc", "other"));
    fact(g, 0, "width", 15, Channel::Image);
    fact(g, 1, "perimeter", 42, Channel::Text);
    fact(g, 1, "side_ca", 10, Channel::Image);
    fact(g, 2, "perimeter", 62, Channel::Text);
    fact(g, 2, "base", 10, Channel::Image);
    use(g, "rmsc_other_from_perimeter", 2);
    use(g, "tri_side_from_perimeter", 1, {"side_bc"});
    use(g, "rect_perimeter_from_sides", 0, {"length"});
    g.query = {0, "perimeter"};
    c.label = 57.7;
    c.step_values = {{31.4, 15.7, 52, 36.3, 18.15}, {23.85, 13.85}, {28.85, 57.7}};
    c.depth = 3;
    c.width = 3;
    return c;
}

// (f) two composites -> pythagoras -> square-minus-circle area
inline GoldenCase case_f() {
    GoldenCase c;
    c.name = "square_minus_circle_depth3";
    ProblemGraph& g = c.graph;
    g.shapes.push_back(inst(0, ShapeKind::SquareMinusCircle));
    g.shapes.push_back(inst(1, ShapeKind::RightTriangle, 0, "side", "hyp"));
    g.shapes.push_back(inst(2, ShapeKind::RectPlusEquilateral, 1, "leg1", "other"));
    g.shapes.push_back(inst(3, ShapeKind::RectMinusSemiCircle, 1, "leg2", "other"));
    fact(g, 2, "perimeter", 48, Channel::Text);
    fact(g, 2, "base", 9, Channel::Image);
    fact(g, 3, "area", 78, Channel::Text);
    fact(g, 3, "base", 6, Channel::Image);
    use(g, "rpet_other_from_perimeter", 2);
    use(g, "rmsc_other_from_area", 3);
    use(g, "rt_hyp_from_legs", 1, {"leg1", "leg2"});
    use(g, "smc_area_from_side", 0, {"side"});
    g.query = {0, "area"};
    c.label = 72.65;
    c.step_values = {{27, 21, 10.5},
                     {36, 113.04, 14.13, 92.13, 15.35},
                     {110.25, 235.62, 345.87, 18.6},
                     {345.96, 273.31, 72.65}};
    c.depth = 3;
    c.width = 2;
    return c;
}

// (g) right-triangle leg from area, then area of the outer right triangle
inline GoldenCase case_g() {
    GoldenCase c;
    c.name = "right_triangle_areas";
    ProblemGraph& g = c.graph;
    g.shapes.push_back(inst(0, ShapeKind::RightTriangle));
    g.shapes.push_back(inst(1, ShapeKind::RightTriangle, 0, "leg1", "leg1"));
    fact(g, 0, "leg2", 15, Channel::Image);
    fact(g, 1, "area", 106, Channel::Text);
    fact(g, 1, "leg2", 14, Channel::Image);
    use(g, "rt_leg_from_area_leg", 1);
    use(g, "rt_area_from_legs", 0, {"leg1"});
    g.query = {0, "area"};
    c.label = 113.55;
    c.step_values = {{212, 15.14}, {227.1, 113.55}};
    c.depth = 2;
    c.width = 2;
    return c;
}

// (h) rect-plus-equilateral area -> triangle side from perimeter (individual)
inline GoldenCase case_h() {
    GoldenCase c;
    c.name = "individual_annotation_triangle";
    ProblemGraph& g = c.graph;
    g.shapes.push_back(inst(0, ShapeKind::Triangle));
    g.shapes.push_back(inst(1, ShapeKind::RectPlusEquilateral, 0, "side_ca", "other"));
    g.shape(0).color = "gray";
    g.shape(1).color = "green";
    fact(g, 0, "perimeter", 44, Channel::Text);
    fact(g, 0, "side_bc", 21, Channel::Image);
    fact(g, 1, "area", 114, Channel::Text);
    fact(g, 1, "base", 6, Channel::Image);
    use(g, "rpet_other_from_area", 1);
    use(g, "tri_side_from_perimeter", 0, {"side_ca"});
    g.query = {0, "side_ab"};
    c.label = 6.58;
    c.step_values = {{1.73, 0.43, 36, 15.48, 98.52, 16.42}, {23, 6.58}};
    c.depth = 2;
    c.width = 3;
    return c;
}

// (i) two sector radii feeding a triangle side from the perimeter
inline GoldenCase case_i() {
    GoldenCase c;
    c.name = "sector_branch";
    ProblemGraph& g = c.graph;
    g.shapes.push_back(inst(0, ShapeKind::Triangle));
    g.shapes.push_back(inst(1, ShapeKind::Sector, 0, "side_ca", "radius"));
    g.shapes.push_back(inst(2, ShapeKind::Sector, 0, "side_bc", "radius"));
    fact(g, 0, "perimeter", 33, Channel::Text);
    fact(g, 1, "angle", 75, Channel::Text);
    fact(g, 1, "area", 157, Channel::Text);
    fact(g, 2, "angle", 75, Channel::Text);
    fact(g, 2, "area", 56.52, Channel::Text);
    use(g, "sector_radius_from_area_angle", 1);
    use(g, "sector_radius_from_area_angle", 2);
    use(g, "tri_side_from_perimeter", 0, {"side_ca", "side_bc"});
    g.query = {0, "side_ab"};
    c.label = 8.33;
    c.step_values = {{0.21, 0.66, 237.88, 15.42}, {0.21, 0.66, 85.64, 9.25}, {23.75, 8.33}};
    c.depth = 2;
    c.width = 3;
    return c;
}

// the introductory figure: square area -> side, rect-minus-semicircle
// perimeter -> side, then parallelogram angle via asin
inline GoldenCase case_fig1() {
    GoldenCase c;
    c.name = "figure_one_parallelogram_angle";
    ProblemGraph& g = c.graph;
    g.shapes.push_back(inst(0, ShapeKind::Parallelogram));
    g.shapes.push_back(inst(1, ShapeKind::Square, 0, "side2", "side"));
    g.shapes.push_back(inst(2, ShapeKind::RectMinusSemiCircle, 0, "side1", "other"));
    fact(g, 0, "area", 38.4, Channel::Text);
    fact(g, 1, "area", 100, Channel::Text);
    fact(g, 2, "perimeter", 34, Channel::Text);
    fact(g, 2, "base", 7, Channel::Image);
    use(g, "sq_side_from_area", 1);
    use(g, "rmsc_other_from_perimeter", 2);
    use(g, "para_angle_from_area_sides", 0, {"side1", "side2"});
    g.query = {0, "angle"};
    c.label = 28.69;
    c.step_values = {{10}, {21.98, 10.99, 27, 16.01, 8}, {80, 0.48, 28.69}};
    c.depth = 2;
    c.width = 3;
    return c;
}

// the appendix walk-through: depth 3 with a branch at the right triangle
inline GoldenCase case_appendix_walkthrough() {
    GoldenCase c;
    c.name = "depth3_walkthrough";
    ProblemGraph& g = c.graph;
    g.shapes.push_back(inst(0, ShapeKind::Rectangle));
    g.shapes.push_back(inst(1, ShapeKind::RightTriangle, 0, "length", "leg1"));
    g.shapes.push_back(inst(2, ShapeKind::SemiCircle, 1, "hyp", "diameter"));
    g.shapes.push_back(inst(3, ShapeKind::SupplementaryAngles, 1, "angle2", "angle2"));
    fact(g, 0, "width", 10, Channel::Text);
    fact(g, 3, "angle1", 120, Channel::Text);
    fact(g, 2, "perimeter", 20, Channel::Text);
    use(g, "supp_other", 3);
    use(g, "semi_diameter_from_perimeter", 2);
    use(g, "rt_opp_from_hyp_angle", 1, {"hyp", "angle2"});
    use(g, "rect_area_from_sides", 0, {"length"});
    g.query = {0, "area"};
    c.label = 67.7;
    c.step_values = {{60}, {1.57, 2.57, 7.78}, {0.87, 6.77}, {67.7}};
    c.depth = 3;
    c.width = 2;
    return c;
}

inline std::vector<GoldenCase> table_cases() {
    return {case_a(), case_b(), case_c(), case_d(), case_e(),
            case_f(), case_g(), case_h(), case_i(), case_fig1()};
}

}  // namespace geomhop::golden
