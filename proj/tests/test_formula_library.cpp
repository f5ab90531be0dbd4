#include <doctest.h>

#include <set>

#include "geomhop/common.hpp"
#include "geomhop/library.hpp"

using namespace geomhop;

static const FormulaLibrary& lib() { return FormulaLibrary::builtin(); }

TEST_CASE("library shape: 68 formulas, 17 variablizable, one per pseudo-shape") {
    CHECK(lib().size() == 68);
    CHECK(lib().variablizable_count() == 17);
    CHECK(lib().for_shape(ShapeKind::SupplementaryAngles).size() == 1);
    CHECK(lib().for_shape(ShapeKind::ComplementaryAngles).size() == 1);
    for (int i = 0; i < kShapeKindCount; i++) {
        ShapeKind k = static_cast<ShapeKind>(i);
        CHECK(lib().for_shape(k).size() >= 1);
    }
}

TEST_CASE("formula structural invariants") {
    for (const auto& f : lib().all()) {
        CHECK(!f.inputs.empty());
        CHECK(!f.steps.empty());
        for (const auto& in : f.inputs) {
            CHECK(find_role(f.shape, in) != nullptr);
            CHECK(in != f.output);
        }
        CHECK(find_role(f.shape, f.output) != nullptr);
        if (f.variablizable) {
            REQUIRE(f.linear.has_value());
            bool has_out = false;
            for (const auto& t : f.linear->lhs)
                if (t.elem == -1) has_out = true;
            for (const auto& t : f.linear->rhs)
                if (t.elem == -1) has_out = true;
            CHECK(has_out);
        }
    }
}

TEST_CASE("every connectable role group has a formula producing it") {
    for (int i = 0; i < kShapeKindCount; i++) {
        ShapeKind k = static_cast<ShapeKind>(i);
        const ShapeSpec& spec = shape_spec(k);
        std::set<std::string> produced;
        for (const FormulaSpec* f : lib().for_shape(k)) produced.insert(f->output);
        for (const auto& role : spec.roles) {
            if (!role.connectable) continue;
            bool covered = produced.count(role.name) > 0;
            if (!covered && role.sym_group >= 0) {
                for (const auto& other : spec.roles) {
                    if (other.sym_group == role.sym_group && produced.count(other.name))
                        covered = true;
                }
            }
            INFO(shape_kind_name(k) << "." << role.name);
            CHECK(covered);
        }
    }
}

TEST_CASE("eval: parallelogram perimeter {10,12} -> 44, steps [22,44]") {
    const auto& f = lib().by_id("para_perimeter_from_sides");
    EvalResult r = eval_formula(f, {10, 12});
    CHECK(r.value == 44.0);
    CHECK(r.step_values == std::vector<double>{22.0, 44.0});
    CHECK(eval_formula_exact(f, {10, 12}) == 44.0);
}

TEST_CASE("eval: right-triangle angle from opposite 7, hypotenuse 14.65") {
    const auto& f = lib().by_id("rt_angle_from_opp_hyp");
    EvalResult r = eval_formula(f, {7, 14.65});
    CHECK(r.step_values == std::vector<double>{0.48, 28.69});
    CHECK(r.value == 28.69);
}

TEST_CASE("eval: sector radius from angle 75, area 157") {
    const auto& f = lib().by_id("sector_radius_from_area_angle");
    EvalResult r = eval_formula(f, {157, 75});
    CHECK(r.step_values == std::vector<double>{0.21, 0.66, 237.88, 15.42});
    CHECK(r.value == 15.42);
}

TEST_CASE("eval: square area of unit side") {
    EvalResult r = eval_formula(lib().by_id("sq_area_from_side"), {1});
    CHECK(r.value == 1.0);
}

TEST_CASE("step-rounded vs exact of (2.26*3.14)/4 differ") {
    // recipe equivalent to the two-step product-then-quarter expression
    FormulaSpec f;
    f.id = "test_quarter";
    f.shape = ShapeKind::Square;
    f.inputs = {"side"};
    f.output = "area";
    f.steps = {{Op::Mul, Operand::input(0), Operand::constant(3.14, "pi")},
               {Op::Div, Operand::step(0), Operand::constant(4, "4")}};
    EvalResult r = eval_formula(f, {2.26});
    CHECK(r.step_values == std::vector<double>{7.1, 1.78});
    CHECK(r.value == 1.78);
    CHECK(eval_formula_exact(f, {2.26}) == 1.77);
}

TEST_CASE("eval determinism is bit-exact") {
    for (const auto* f : {&lib().by_id("rpsc_other_from_area"), &lib().by_id("rt_hyp_from_legs")}) {
        EvalResult a = eval_formula(*f, {102, 6});
        EvalResult b = eval_formula(*f, {102, 6});
        CHECK(a.step_values == b.step_values);
        CHECK(a.value == b.value);
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(eval_formula(lib().by_id("rt_leg_from_hyp_leg"), {3, 5}), DomainError);
    CHECK_THROWS_AS(eval_formula(lib().by_id("rt_angle_from_opp_hyp"), {20, 10}), DomainError);
    CHECK_THROWS_AS(eval_formula(lib().by_id("rect_length_from_area"), {10, 0}), DomainError);
}

TEST_CASE("sanity_check predicates") {
    CHECK(sanity_check(ShapeKind::RightTriangle, {{"leg1", 3}, {"leg2", 4}, {"hyp", 5}}));
    CHECK_FALSE(sanity_check(ShapeKind::RightTriangle, {{"leg1", 10}, {"hyp", 7}}));
    CHECK(sanity_check(ShapeKind::Triangle,
                       {{"angle_a", 60}, {"angle_b", 45}, {"angle_c", 75}}));
    CHECK_FALSE(sanity_check(ShapeKind::Triangle,
                             {{"angle_a", 60}, {"angle_b", 45}, {"angle_c", 80}}));
    CHECK_FALSE(sanity_check(ShapeKind::Triangle,
                             {{"side_ab", 1}, {"side_bc", 1}, {"side_ca", 5}}));
    CHECK_FALSE(sanity_check(ShapeKind::Trapezoid, {{"base1", 7}, {"base2", 7}}));
    CHECK(sanity_check(ShapeKind::Trapezoid, {{"base1", 22}, {"base2", 9}}));
    CHECK_FALSE(sanity_check(ShapeKind::Sector, {{"angle", 190}}));
    CHECK(sanity_check(ShapeKind::SupplementaryAngles, {{"angle1", 120}, {"angle2", 60}}));
    CHECK_FALSE(sanity_check(ShapeKind::SupplementaryAngles, {{"angle1", 120}, {"angle2", 70}}));
    CHECK(sanity_check(ShapeKind::ComplementaryAngles, {{"angle1", 30}, {"angle2", 60}}));
    CHECK_FALSE(sanity_check(ShapeKind::ComplementaryAngles, {{"angle1", 120}}));
}

TEST_CASE("json round-trip preserves the library") {
    std::string text = lib().to_json_text();
    FormulaLibrary loaded = FormulaLibrary::from_json_text(text);
    CHECK(loaded.size() == lib().size());
    CHECK(loaded.to_json_text() == text);
    CHECK(loaded.checksum() == lib().checksum());
    // behavior identical through a loaded library
    EvalResult r = eval_formula(loaded.by_id("sector_radius_from_area_angle"), {157, 75});
    CHECK(r.step_values == std::vector<double>{0.21, 0.66, 237.88, 15.42});
}
