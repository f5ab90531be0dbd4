#include <doctest.h>

#include "geomhop/json_io.hpp"
#include "geomhop/solve.hpp"
#include "support/golden.hpp"

using namespace geomhop;

TEST_CASE("published worked examples reproduce labels and every intermediate") {
    for (const auto& c : golden::table_cases()) {
        INFO(c.name);
        SolutionTrace t = solve(c.graph);
        CHECK(t.label == c.label);
        REQUIRE(t.steps.size() == c.step_values.size());
        for (size_t i = 0; i < t.steps.size(); i++) {
            INFO("step " << i);
            CHECK(t.steps[i].step_values == c.step_values[i]);
        }
        CHECK(verify_trace(c.graph, t));
        ProofMetrics m = proof_metrics(c.graph);
        CHECK(m.depth == c.depth);
        CHECK(m.width == c.width);
        CHECK(drift_filter(t));
    }
}

TEST_CASE("appendix walk-through deduction chain") {
    auto c = golden::case_appendix_walkthrough();
    SolutionTrace t = solve(c.graph);
    CHECK(t.label == c.label);
    REQUIRE(t.steps.size() == 4);
    for (size_t i = 0; i < 4; i++) CHECK(t.steps[i].step_values == c.step_values[i]);
    // order: supplementary angle, semicircle diameter, triangle side, area
    CHECK(t.steps[0].formula_id == "supp_other");
    CHECK(t.steps[1].formula_id == "semi_diameter_from_perimeter");
    CHECK(t.steps[2].formula_id == "rt_opp_from_hyp_angle");
    CHECK(t.steps[3].formula_id == "rect_area_from_sides");
    ProofMetrics m = proof_metrics(c.graph);
    CHECK(m.depth == 3);
    CHECK(m.width == 2);
    CHECK(m.branch_count == 1);
}

TEST_CASE("variablized golden: x = 45/9 = 5") {
    auto c = golden::case_b();
    SolutionTrace t = solve(c.graph);
    REQUIRE(t.steps.size() == 1);
    REQUIRE(t.steps[0].var_solve.has_value());
    const auto& vs = *t.steps[0].var_solve;
    CHECK(vs.lhs_coeff == 9);
    CHECK(vs.lhs_const == 135);
    CHECK(vs.rhs_const == 180);
    CHECK(vs.x == 5.0);
    CHECK(t.label == 75.0);
}

TEST_CASE("graphs serialize and re-verify without the generator") {
    for (const auto& c : golden::table_cases()) {
        INFO(c.name);
        SolutionTrace t = solve(c.graph);
        std::string gj = graph_to_json_text(c.graph);
        std::string tj = trace_to_json_text(t);
        ProblemGraph g2 = graph_from_json_text(gj);
        SolutionTrace t2 = trace_from_json_text(tj);
        CHECK(verify_trace(g2, t2));
        SolutionTrace t3 = solve(g2);
        CHECK(t3.label == t.label);
        CHECK(graph_to_json_text(g2) == gj);
    }
}
