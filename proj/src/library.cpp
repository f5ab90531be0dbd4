#include "geomhop/library.hpp"

#include <json.hpp>
#include <stdexcept>

#include "geomhop/common.hpp"

namespace geomhop {

using json = nlohmann::ordered_json;

namespace {

Operand in(int i) { return Operand::input(i); }
Operand st(int i) { return Operand::step(i); }
Operand cpi() { return Operand::constant(3.14, "pi"); }
// quarter-pi enters the square-minus-circle recipes pre-rounded so the
// printed factor is 0.79 exactly
Operand cqpi() { return Operand::constant(0.79, "pi/4"); }
Operand ci(int v) { return Operand::constant(v, std::to_string(v)); }

FormulaStep u(Op op, Operand a) { return {op, a, Operand::constant(0, "")}; }
FormulaStep b(Op op, Operand a, Operand bb) { return {op, a, bb}; }

struct Builder {
    std::vector<FormulaSpec> out;

    FormulaSpec& add(std::string id, ShapeKind shape, std::vector<std::string> inputs,
                     std::string output, std::vector<FormulaStep> steps) {
        FormulaSpec f;
        f.id = std::move(id);
        f.shape = shape;
        f.inputs = std::move(inputs);
        f.output = std::move(output);
        f.steps = std::move(steps);
        for (const auto& s : f.steps) {
            if (s.a.src == Operand::Src::Const && s.a.cname == "pi") f.uses_pi = true;
            if (s.b.src == Operand::Src::Const && s.b.cname == "pi") f.uses_pi = true;
        }
        out.push_back(std::move(f));
        return out.back();
    }

    void linear(FormulaSpec& f, std::vector<LinearForm::Term> lhs,
                std::vector<LinearForm::Term> rhs, int rhs_const) {
        f.variablizable = true;
        f.linear = LinearForm{std::move(lhs), std::move(rhs), rhs_const};
    }
};

std::vector<FormulaSpec> build_library() {
    Builder B;
    using K = ShapeKind;

    // ---- square ----
    B.add("sq_area_from_side", K::Square, {"side"}, "area", {u(Op::Square, in(0))});
    B.add("sq_side_from_area", K::Square, {"area"}, "side", {u(Op::Sqrt, in(0))});
    {
        auto& f = B.add("sq_perimeter_from_side", K::Square, {"side"}, "perimeter",
                        {b(Op::Mul, ci(4), in(0))});
        B.linear(f, {{4, 0}}, {{1, -1}}, 0);
    }
    B.add("sq_side_from_perimeter", K::Square, {"perimeter"}, "side",
          {b(Op::Div, in(0), ci(4))});
    B.add("sq_area_from_perimeter", K::Square, {"perimeter"}, "area",
          {b(Op::Div, in(0), ci(4)), u(Op::Square, st(0))});
    B.add("sq_perimeter_from_area", K::Square, {"area"}, "perimeter",
          {u(Op::Sqrt, in(0)), b(Op::Mul, ci(4), st(0))});
    B.add("sq_diagonal_from_side", K::Square, {"side"}, "diagonal",
          {u(Op::Sqrt, ci(2)), b(Op::Mul, in(0), st(0))});
    B.add("sq_side_from_diagonal", K::Square, {"diagonal"}, "side",
          {u(Op::Sqrt, ci(2)), b(Op::Div, in(0), st(0))});

    // ---- rectangle ----
    B.add("rect_area_from_sides", K::Rectangle, {"length", "width"}, "area",
          {b(Op::Mul, in(0), in(1))});
    B.add("rect_length_from_area", K::Rectangle, {"area", "width"}, "length",
          {b(Op::Div, in(0), in(1))});
    {
        auto& f = B.add("rect_perimeter_from_sides", K::Rectangle, {"width", "length"},
                        "perimeter", {b(Op::Add, in(0), in(1)), b(Op::Mul, ci(2), st(0))});
        B.linear(f, {{2, 0}, {2, 1}}, {{1, -1}}, 0);
    }
    B.add("rect_length_from_perimeter", K::Rectangle, {"perimeter", "width"}, "length",
          {b(Op::Div, in(0), ci(2)), b(Op::Sub, st(0), in(1))});

    // ---- right triangle ----
    B.add("rt_hyp_from_legs", K::RightTriangle, {"leg1", "leg2"}, "hyp",
          {u(Op::Square, in(0)), u(Op::Square, in(1)), b(Op::Add, st(0), st(1)),
           u(Op::Sqrt, st(2))});
    B.add("rt_leg_from_hyp_leg", K::RightTriangle, {"hyp", "leg2"}, "leg1",
          {u(Op::Square, in(0)), u(Op::Square, in(1)), b(Op::Sub, st(0), st(1)),
           u(Op::Sqrt, st(2))});
    B.add("rt_area_from_legs", K::RightTriangle, {"leg1", "leg2"}, "area",
          {b(Op::Mul, in(0), in(1)), b(Op::Div, st(0), ci(2))});
    B.add("rt_leg_from_area_leg", K::RightTriangle, {"area", "leg2"}, "leg1",
          {b(Op::Mul, in(0), ci(2)), b(Op::Div, st(0), in(1))});
    B.add("rt_angle_from_opp_hyp", K::RightTriangle, {"leg1", "hyp"}, "angle2",
          {b(Op::Div, in(0), in(1)), u(Op::AsinDeg, st(0))});
    B.add("rt_angle_from_adj_hyp", K::RightTriangle, {"leg2", "hyp"}, "angle2",
          {b(Op::Div, in(0), in(1)), u(Op::AcosDeg, st(0))});
    B.add("rt_opp_from_hyp_angle", K::RightTriangle, {"hyp", "angle2"}, "leg1",
          {u(Op::SinDeg, in(1)), b(Op::Mul, in(0), st(0))});
    B.add("rt_adj_from_hyp_angle", K::RightTriangle, {"hyp", "angle2"}, "leg2",
          {u(Op::CosDeg, in(1)), b(Op::Mul, in(0), st(0))});
    {
        auto& f = B.add("rt_other_acute", K::RightTriangle, {"angle2"}, "angle1",
                        {b(Op::Sub, ci(90), in(0))});
        B.linear(f, {{1, 0}, {1, -1}}, {}, 90);
    }
    {
        auto& f = B.add("rt_perimeter_from_sides", K::RightTriangle, {"leg1", "leg2", "hyp"},
                        "perimeter",
                        {b(Op::Add, in(0), in(1)), b(Op::Add, st(0), in(2))});
        B.linear(f, {{1, 0}, {1, 1}, {1, 2}}, {{1, -1}}, 0);
    }
    {
        auto& f = B.add("rt_side_from_perimeter", K::RightTriangle,
                        {"perimeter", "leg2", "hyp"}, "leg1",
                        {b(Op::Sub, in(0), in(1)), b(Op::Sub, st(0), in(2))});
        B.linear(f, {{1, -1}, {1, 1}, {1, 2}}, {{1, 0}}, 0);
    }
    B.add("rt_hyp_from_opp_angle", K::RightTriangle, {"leg1", "angle2"}, "hyp",
          {u(Op::SinDeg, in(1)), b(Op::Div, in(0), st(0))});
    B.add("rt_hyp_from_adj_angle", K::RightTriangle, {"leg2", "angle2"}, "hyp",
          {u(Op::CosDeg, in(1)), b(Op::Div, in(0), st(0))});

    // ---- triangle ----
    {
        auto& f = B.add("tri_angle_sum", K::Triangle, {"angle_a", "angle_b"}, "angle_c",
                        {b(Op::Sub, ci(180), in(0)), b(Op::Sub, st(0), in(1))});
        B.linear(f, {{1, 0}, {1, 1}, {1, -1}}, {}, 180);
    }
    {
        auto& f = B.add("tri_perimeter_from_sides", K::Triangle,
                        {"side_ab", "side_bc", "side_ca"}, "perimeter",
                        {b(Op::Add, in(0), in(1)), b(Op::Add, st(0), in(2))});
        B.linear(f, {{1, 0}, {1, 1}, {1, 2}}, {{1, -1}}, 0);
    }
    {
        auto& f = B.add("tri_side_from_perimeter", K::Triangle,
                        {"perimeter", "side_bc", "side_ca"}, "side_ab",
                        {b(Op::Sub, in(0), in(1)), b(Op::Sub, st(0), in(2))});
        B.linear(f, {{1, -1}, {1, 1}, {1, 2}}, {{1, 0}}, 0);
    }
    B.add("tri_area_from_sides_angle", K::Triangle, {"side_ab", "side_ca", "angle_a"}, "area",
          {u(Op::SinDeg, in(2)), b(Op::Mul, in(0), in(1)), b(Op::Mul, st(0), st(1)),
           b(Op::Div, st(2), ci(2))});
    B.add("tri_angle_from_area_sides", K::Triangle, {"area", "side_ab", "side_ca"}, "angle_a",
          {b(Op::Mul, in(1), in(2)), b(Op::Mul, in(0), ci(2)), b(Op::Div, st(1), st(0)),
           u(Op::AsinDeg, st(2))});

    // ---- parallelogram ----
    {
        auto& f = B.add("para_perimeter_from_sides", K::Parallelogram, {"side2", "side1"},
                        "perimeter", {b(Op::Add, in(0), in(1)), b(Op::Mul, ci(2), st(0))});
        B.linear(f, {{2, 0}, {2, 1}}, {{1, -1}}, 0);
    }
    {
        auto& f = B.add("para_side_from_perimeter", K::Parallelogram, {"perimeter", "side2"},
                        "side1", {b(Op::Div, in(0), ci(2)), b(Op::Sub, st(0), in(1))});
        B.linear(f, {{2, -1}, {2, 1}}, {{1, 0}}, 0);
    }
    B.add("para_area_from_sides_angle", K::Parallelogram, {"side1", "side2", "angle"}, "area",
          {u(Op::SinDeg, in(2)), b(Op::Mul, in(0), in(1)), b(Op::Mul, st(0), st(1))});
    B.add("para_angle_from_area_sides", K::Parallelogram, {"area", "side1", "side2"}, "angle",
          {b(Op::Mul, in(1), in(2)), b(Op::Div, in(0), st(0)), u(Op::AsinDeg, st(1))});
    B.add("para_side_from_area_angle", K::Parallelogram, {"area", "side2", "angle"}, "side1",
          {u(Op::SinDeg, in(2)), b(Op::Mul, in(1), st(0)), b(Op::Div, in(0), st(1))});

    // ---- trapezoid ----
    B.add("trap_area_from_bases_height", K::Trapezoid, {"base1", "base2", "height"}, "area",
          {b(Op::Add, in(0), in(1)), b(Op::Mul, st(0), in(2)), b(Op::Div, st(1), ci(2))});
    B.add("trap_base_from_area", K::Trapezoid, {"area", "base2", "height"}, "base1",
          {b(Op::Mul, in(0), ci(2)), b(Op::Div, st(0), in(2)), b(Op::Sub, st(1), in(1))});
    B.add("trap_height_from_area", K::Trapezoid, {"area", "base1", "base2"}, "height",
          {b(Op::Mul, in(0), ci(2)), b(Op::Add, in(1), in(2)), b(Op::Div, st(0), st(1))});
    {
        auto& f = B.add("trap_perimeter_from_sides", K::Trapezoid,
                        {"base1", "base2", "leg1", "leg2"}, "perimeter",
                        {b(Op::Add, in(0), in(1)), b(Op::Add, st(0), in(2)),
                         b(Op::Add, st(1), in(3))});
        B.linear(f, {{1, 0}, {1, 1}, {1, 2}, {1, 3}}, {{1, -1}}, 0);
    }
    {
        auto& f = B.add("trap_leg_from_perimeter", K::Trapezoid,
                        {"perimeter", "base1", "base2", "leg2"}, "leg1",
                        {b(Op::Sub, in(0), in(1)), b(Op::Sub, st(0), in(2)),
                         b(Op::Sub, st(1), in(3))});
        B.linear(f, {{1, -1}, {1, 1}, {1, 2}, {1, 3}}, {{1, 0}}, 0);
    }

    // ---- sector ----
    B.add("sector_area_from_angle_radius", K::Sector, {"angle", "radius"}, "area",
          {b(Op::Div, in(0), ci(360)), b(Op::Mul, st(0), cpi()), u(Op::Square, in(1)),
           b(Op::Mul, st(1), st(2))});
    B.add("sector_radius_from_area_angle", K::Sector, {"area", "angle"}, "radius",
          {b(Op::Div, in(1), ci(360)), b(Op::Mul, st(0), cpi()), b(Op::Div, in(0), st(1)),
           u(Op::Sqrt, st(2))});
    B.add("sector_angle_from_area_radius", K::Sector, {"area", "radius"}, "angle",
          {u(Op::Square, in(1)), b(Op::Mul, st(0), cpi()), b(Op::Div, in(0), st(1)),
           b(Op::Mul, st(2), ci(360))});
    B.add("sector_perimeter_from_angle_radius", K::Sector, {"angle", "radius"}, "perimeter",
          {b(Op::Div, in(0), ci(360)), b(Op::Mul, cpi(), in(1)), b(Op::Mul, ci(2), st(1)),
           b(Op::Mul, st(0), st(2)), b(Op::Mul, ci(2), in(1)), b(Op::Add, st(3), st(4))});
    B.add("sector_radius_from_perimeter_angle", K::Sector, {"perimeter", "angle"}, "radius",
          {b(Op::Div, in(1), ci(360)), b(Op::Mul, st(0), cpi()), b(Op::Mul, ci(2), st(1)),
           b(Op::Add, st(2), ci(2)), b(Op::Div, in(0), st(3))});

    // ---- semi-circle ----
    B.add("semi_area_from_diameter", K::SemiCircle, {"diameter"}, "area",
          {u(Op::Square, in(0)), b(Op::Mul, cpi(), st(0)), b(Op::Div, st(1), ci(8))});
    B.add("semi_diameter_from_area", K::SemiCircle, {"area"}, "diameter",
          {b(Op::Mul, ci(8), in(0)), b(Op::Div, st(0), cpi()), u(Op::Sqrt, st(1))});
    B.add("semi_perimeter_from_diameter", K::SemiCircle, {"diameter"}, "perimeter",
          {b(Op::Mul, cpi(), in(0)), b(Op::Div, st(0), ci(2)), b(Op::Add, st(1), in(0))});
    B.add("semi_diameter_from_perimeter", K::SemiCircle, {"perimeter"}, "diameter",
          {b(Op::Div, cpi(), ci(2)), b(Op::Add, st(0), ci(1)), b(Op::Div, in(0), st(1))});

    // ---- rectangle + equilateral triangle ----
    {
        auto& f = B.add("rpet_perimeter_from_sides", K::RectPlusEquilateral, {"base", "other"},
                        "perimeter",
                        {b(Op::Mul, ci(3), in(0)), b(Op::Mul, ci(2), in(1)),
                         b(Op::Add, st(0), st(1))});
        B.linear(f, {{2, 1}, {3, 0}}, {{1, -1}}, 0);
    }
    {
        auto& f = B.add("rpet_other_from_perimeter", K::RectPlusEquilateral,
                        {"perimeter", "base"}, "other",
                        {b(Op::Mul, ci(3), in(1)), b(Op::Sub, in(0), st(0)),
                         b(Op::Div, st(1), ci(2))});
        B.linear(f, {{2, -1}, {3, 1}}, {{1, 0}}, 0);
    }
    {
        auto& f = B.add("rpet_base_from_perimeter", K::RectPlusEquilateral,
                        {"perimeter", "other"}, "base",
                        {b(Op::Mul, ci(2), in(1)), b(Op::Sub, in(0), st(0)),
                         b(Op::Div, st(1), ci(3))});
        B.linear(f, {{2, 1}, {3, -1}}, {{1, 0}}, 0);
    }
    B.add("rpet_area_from_sides", K::RectPlusEquilateral, {"base", "other"}, "area",
          {u(Op::Sqrt, ci(3)), b(Op::Div, st(0), ci(4)), u(Op::Square, in(0)),
           b(Op::Mul, st(1), st(2)), b(Op::Mul, in(0), in(1)), b(Op::Add, st(4), st(3))});
    B.add("rpet_other_from_area", K::RectPlusEquilateral, {"area", "base"}, "other",
          {u(Op::Sqrt, ci(3)), b(Op::Div, st(0), ci(4)), u(Op::Square, in(1)),
           b(Op::Mul, st(1), st(2)), b(Op::Sub, in(0), st(3)), b(Op::Div, st(4), in(1))});

    // ---- rectangle minus / plus semi-circle ----
    auto add_rsc = [&](const char* prefix, K kind, bool plus) {
        std::string p = prefix;
        B.add(p + "_perimeter_from_sides", kind, {"base", "other"}, "perimeter",
              {b(Op::Mul, in(0), cpi()), b(Op::Div, st(0), ci(2)), b(Op::Mul, ci(2), in(1)),
               b(Op::Add, st(2), in(0)), b(Op::Add, st(3), st(1))});
        B.add(p + "_other_from_perimeter", kind, {"perimeter", "base"}, "other",
              {b(Op::Mul, in(1), cpi()), b(Op::Div, st(0), ci(2)), b(Op::Sub, in(0), in(1)),
               b(Op::Sub, st(2), st(1)), b(Op::Div, st(3), ci(2))});
        B.add(p + "_area_from_sides", kind, {"base", "other"}, "area",
              {u(Op::Square, in(0)), b(Op::Mul, cpi(), st(0)), b(Op::Div, st(1), ci(8)),
               b(Op::Mul, in(0), in(1)),
               plus ? b(Op::Add, st(3), st(2)) : b(Op::Sub, st(3), st(2))});
        B.add(p + "_other_from_area", kind, {"area", "base"}, "other",
              {u(Op::Square, in(1)), b(Op::Mul, cpi(), st(0)), b(Op::Div, st(1), ci(8)),
               plus ? b(Op::Sub, in(0), st(2)) : b(Op::Add, in(0), st(2)),
               b(Op::Div, st(3), in(1))});
        B.add(p + "_base_from_perimeter", kind, {"perimeter", "other"}, "base",
              {b(Op::Div, cpi(), ci(2)), b(Op::Add, st(0), ci(1)), b(Op::Mul, ci(2), in(1)),
               b(Op::Sub, in(0), st(2)), b(Op::Div, st(3), st(1))});
    };
    add_rsc("rmsc", K::RectMinusSemiCircle, false);
    add_rsc("rpsc", K::RectPlusSemiCircle, true);

    // ---- square minus circle ----
    B.add("smc_area_from_side", K::SquareMinusCircle, {"side"}, "area",
          {u(Op::Square, in(0)), b(Op::Mul, cqpi(), st(0)), b(Op::Sub, st(0), st(1))});
    B.add("smc_side_from_area", K::SquareMinusCircle, {"area"}, "side",
          {b(Op::Sub, ci(1), cqpi()), b(Op::Div, in(0), st(0)), u(Op::Sqrt, st(1))});

    // ---- angle pseudo-shapes ----
    {
        auto& f = B.add("supp_other", K::SupplementaryAngles, {"angle1"}, "angle2",
                        {b(Op::Sub, ci(180), in(0))});
        B.linear(f, {{1, 0}, {1, -1}}, {}, 180);
    }
    {
        auto& f = B.add("comp_other", K::ComplementaryAngles, {"angle1"}, "angle2",
                        {b(Op::Sub, ci(90), in(0))});
        B.linear(f, {{1, 0}, {1, -1}}, {}, 90);
    }

    return B.out;
}

json operand_to_json(const Operand& o) {
    json j;
    switch (o.src) {
        case Operand::Src::Input: j["in"] = o.index; break;
        case Operand::Src::Step: j["step"] = o.index; break;
        case Operand::Src::Const:
            j["const"] = o.value;
            j["name"] = o.cname;
            break;
    }
    return j;
}

Operand operand_from_json(const json& j) {
    if (j.contains("in")) return Operand::input(j["in"].get<int>());
    if (j.contains("step")) return Operand::step(j["step"].get<int>());
    return Operand::constant(j["const"].get<double>(), j["name"].get<std::string>());
}

}  // namespace

FormulaLibrary::FormulaLibrary(std::vector<FormulaSpec> specs) : specs_(std::move(specs)) {
    for (size_t i = 0; i < specs_.size(); i++) {
        if (!index_.emplace(specs_[i].id, i).second)
            throw std::invalid_argument("duplicate formula id: " + specs_[i].id);
    }
}

const FormulaLibrary& FormulaLibrary::builtin() {
    static const FormulaLibrary lib(build_library());
    return lib;
}

const FormulaSpec& FormulaLibrary::by_id(const std::string& id) const {
    const FormulaSpec* f = find(id);
    if (!f) throw UnsolvableError("unknown formula: " + id);
    return *f;
}

const FormulaSpec* FormulaLibrary::find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &specs_[it->second];
}

std::vector<const FormulaSpec*> FormulaLibrary::for_shape(ShapeKind k) const {
    std::vector<const FormulaSpec*> v;
    for (const auto& f : specs_)
        if (f.shape == k) v.push_back(&f);
    return v;
}

std::vector<const FormulaSpec*> FormulaLibrary::with_output_type(ShapeKind k,
                                                                 ElementType t) const {
    std::vector<const FormulaSpec*> v;
    for (const auto& f : specs_)
        if (f.shape == k && f.output_type() == t) v.push_back(&f);
    return v;
}

int FormulaLibrary::variablizable_count() const {
    int n = 0;
    for (const auto& f : specs_)
        if (f.variablizable) n++;
    return n;
}

std::string FormulaLibrary::to_json_text() const {
    json root;
    root["format"] = "geomhop-formulas-v1";
    json arr = json::array();
    for (const auto& f : specs_) {
        json jf;
        jf["id"] = f.id;
        jf["shape"] = shape_kind_name(f.shape);
        jf["inputs"] = f.inputs;
        jf["output"] = f.output;
        json steps = json::array();
        for (const auto& s : f.steps) {
            json js;
            js["op"] = op_name(s.op);
            js["a"] = operand_to_json(s.a);
            if (!op_is_unary(s.op)) js["b"] = operand_to_json(s.b);
            steps.push_back(js);
        }
        jf["steps"] = steps;
        jf["variablizable"] = f.variablizable;
        if (f.linear) {
            json jl;
            auto terms = [](const std::vector<LinearForm::Term>& ts) {
                json a = json::array();
                for (const auto& t : ts) a.push_back({{"coeff", t.coeff}, {"elem", t.elem}});
                return a;
            };
            jl["lhs"] = terms(f.linear->lhs);
            jl["rhs"] = terms(f.linear->rhs);
            jl["rhs_const"] = f.linear->rhs_const;
            jf["linear"] = jl;
        }
        arr.push_back(jf);
    }
    root["formulas"] = arr;
    return root.dump(2) + "\n";
}

FormulaLibrary FormulaLibrary::from_json_text(const std::string& text) {
    json root = json::parse(text);
    if (root.value("format", "") != "geomhop-formulas-v1")
        throw std::invalid_argument("unrecognized formula library format");
    std::vector<FormulaSpec> specs;
    for (const auto& jf : root["formulas"]) {
        FormulaSpec f;
        f.id = jf["id"].get<std::string>();
        f.shape = shape_kind_from_name(jf["shape"].get<std::string>());
        f.inputs = jf["inputs"].get<std::vector<std::string>>();
        f.output = jf["output"].get<std::string>();
        for (const auto& js : jf["steps"]) {
            FormulaStep s;
            s.op = op_from_name(js["op"].get<std::string>());
            s.a = operand_from_json(js["a"]);
            if (js.contains("b")) s.b = operand_from_json(js["b"]);
            f.steps.push_back(s);
            if (s.a.src == Operand::Src::Const && s.a.cname == "pi") f.uses_pi = true;
            if (s.b.src == Operand::Src::Const && s.b.cname == "pi") f.uses_pi = true;
        }
        f.variablizable = jf.value("variablizable", false);
        if (jf.contains("linear")) {
            LinearForm lf;
            for (const auto& t : jf["linear"]["lhs"])
                lf.lhs.push_back({t["coeff"].get<int>(), t["elem"].get<int>()});
            for (const auto& t : jf["linear"]["rhs"])
                lf.rhs.push_back({t["coeff"].get<int>(), t["elem"].get<int>()});
            lf.rhs_const = jf["linear"]["rhs_const"].get<int>();
            f.linear = lf;
        }
        specs.push_back(std::move(f));
    }
    return FormulaLibrary(std::move(specs));
}

std::string FormulaLibrary::checksum() const { return checksum_hex(to_json_text()); }

}  // namespace geomhop
