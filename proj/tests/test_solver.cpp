#include <doctest.h>

#include "geomhop/common.hpp"
#include "geomhop/solve.hpp"
#include "support/golden.hpp"

using namespace geomhop;
using golden::fact;
using golden::inst;
using golden::use;

// the running logical-theory shapes, encoded with rule arities 1 and 2

static ProblemGraph one_premise_rule() {  // query c: a => c
    ProblemGraph g;
    g.shapes.push_back(inst(0, ShapeKind::Square));
    fact(g, 0, "side", 5);
    use(g, "sq_area_from_side", 0);
    g.query = {0, "area"};
    return g;
}

static ProblemGraph two_premise_rule() {  // query d: a & b => d
    ProblemGraph g;
    g.shapes.push_back(inst(0, ShapeKind::Rectangle));
    fact(g, 0, "length", 4);
    fact(g, 0, "width", 3);
    use(g, "rect_area_from_sides", 0);
    g.query = {0, "area"};
    return g;
}

static ProblemGraph chained_rule() {  // query e: d => e after a & b => d
    ProblemGraph g;
    g.shapes.push_back(inst(0, ShapeKind::Rectangle));
    g.shapes.push_back(inst(1, ShapeKind::Square, 0, "width", "side"));
    fact(g, 0, "length", 4);
    fact(g, 1, "area", 9);
    use(g, "sq_side_from_area", 1);
    use(g, "rect_area_from_sides", 0, {"width"});
    g.query = {0, "area"};
    return g;
}

TEST_CASE("proof metrics mirror the logical-theory examples") {
    ProofMetrics c = proof_metrics(one_premise_rule());
    CHECK(c.depth == 1);
    CHECK(c.width == 1);

    ProofMetrics d = proof_metrics(two_premise_rule());
    CHECK(d.depth == 1);
    CHECK(d.width == 2);

    ProofMetrics e = proof_metrics(chained_rule());
    CHECK(e.depth == 2);
    CHECK(e.width == 2);
}

TEST_CASE("querying a fact scores depth 0, width 0") {
    ProblemGraph g;
    g.shapes.push_back(inst(0, ShapeKind::Square));
    fact(g, 0, "side", 5);
    g.query = {0, "side"};
    ProofMetrics m = proof_metrics(g);
    CHECK(m.depth == 0);
    CHECK(m.width == 0);
    SolutionTrace t = solve(g);
    CHECK(t.steps.empty());
    CHECK(t.label == 5.0);
    CHECK(verify_trace(g, t));
}

TEST_CASE("solve errors") {
    // missing fact
    ProblemGraph g;
    g.shapes.push_back(inst(0, ShapeKind::Rectangle));
    fact(g, 0, "length", 4);
    use(g, "rect_area_from_sides", 0);
    g.query = {0, "area"};
    CHECK_THROWS_AS(solve(g), UnsolvableError);

    // domain failure: leg longer than the hypotenuse
    ProblemGraph h;
    h.shapes.push_back(inst(0, ShapeKind::RightTriangle));
    fact(h, 0, "hyp", 3);
    fact(h, 0, "leg2", 5);
    use(h, "rt_leg_from_hyp_leg", 0);
    h.query = {0, "leg1"};
    CHECK_THROWS_AS(solve(h), DomainError);
}

TEST_CASE("sanity failure mid-derivation is raised") {
    // triangle whose derived third angle breaks the 180 budget is a domain
    // error (non-positive); an inconsistent supplementary pair trips sanity
    ProblemGraph g;
    g.shapes.push_back(inst(0, ShapeKind::Triangle));
    fact(g, 0, "angle_a", 90);
    fact(g, 0, "angle_b", 95);
    use(g, "tri_angle_sum", 0);
    g.query = {0, "angle_c"};
    CHECK_THROWS_AS(solve(g), DomainError);
}

TEST_CASE("verify_trace flags a perturbed step value") {
    auto c = golden::case_c();
    SolutionTrace t = solve(c.graph);
    CHECK(verify_trace(c.graph, t));
    SolutionTrace bad = t;
    bad.steps[0].step_values[2] += 0.01;
    std::string why;
    CHECK_FALSE(verify_trace(c.graph, bad, FormulaLibrary::builtin(), &why));
    CHECK(!why.empty());

    SolutionTrace bad2 = t;
    bad2.label += 0.01;
    CHECK_FALSE(verify_trace(c.graph, bad2));
}

TEST_CASE("saturation reaches the replay label") {
    for (const auto& c : {golden::case_a(), golden::case_c(), golden::case_d(),
                          golden::case_e(), golden::case_f(), golden::case_g(),
                          golden::case_i(), golden::case_fig1(),
                          golden::case_appendix_walkthrough()}) {
        INFO(c.name);
        SolutionTrace replay = solve(c.graph);
        SolutionTrace sat = solve(c.graph, FormulaLibrary::builtin(), SolveMode::Saturate);
        CHECK(sat.label == replay.label);
    }
}

TEST_CASE("solve is deterministic") {
    auto c = golden::case_f();
    SolutionTrace a = solve(c.graph);
    SolutionTrace b = solve(c.graph);
    REQUIRE(a.steps.size() == b.steps.size());
    for (size_t i = 0; i < a.steps.size(); i++) {
        CHECK(a.steps[i].step_values == b.steps[i].step_values);
    }
    CHECK(a.label == b.label);
    CHECK(a.label_exact == b.label_exact);
}

TEST_CASE("drift filter") {
    SolutionTrace t;
    t.label = 1.78;
    t.label_exact = 1.77;
    CHECK(drift_filter(t));  // 0.56%

    t.label = 0.15;  // constructed chain 0.14/3*3 with step rounding
    t.label_exact = 0.14;
    CHECK(drift_fraction(t) > 0.05);
    CHECK_FALSE(drift_filter(t));

    t.label = 5;
    t.label_exact = 5;
    CHECK(drift_filter(t));
}
