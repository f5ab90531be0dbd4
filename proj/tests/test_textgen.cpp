#include <doctest.h>

#include "geomhop/solve.hpp"
#include "geomhop/textgen.hpp"
#include "support/golden.hpp"

using namespace geomhop;

static std::string question_of(const golden::GoldenCase& c,
                               Annotation ann = Annotation::Coordinate) {
    ProblemGraph g = c.graph;
    solve_and_fill(g);
    return render_question(g, Modality::TextImage, ann);
}

static std::string solution_of(const golden::GoldenCase& c,
                               Annotation ann = Annotation::Coordinate) {
    ProblemGraph g = c.graph;
    SolutionTrace t = solve_and_fill(g);
    return render_solution(g, t, ann);
}

TEST_CASE("question (a): no text facts, bare compute clause") {
    CHECK(question_of(golden::case_a()) == "Compute the perimeter of the ABCD parallelogram.");
}

TEST_CASE("solution (a): parallelogram perimeter sentence") {
    CHECK(solution_of(golden::case_a()) ==
          "The lengths of the AD and the AB sides of the ABCD parallelogram are 10 and "
          "12, so the perimeter of the ABCD parallelogram is 2 * (10 + 12) = 2 * 22 = 44. "
          "Therefore the final answer is 44.");
}

TEST_CASE("question and solution (b): variablized angle sum") {
    std::string q = question_of(golden::case_b());
    CHECK(q ==
          "If the degree of the BAC angle is 2x + 50, the degree of the ABC angle is "
          "2x + 35 and the degree of the BCA angle is 5x + 50, compute the degree of "
          "the BCA angle.");
    std::string s = solution_of(golden::case_b());
    CHECK(s ==
          "The three degrees of the ABC triangle are 2x + 50, 2x + 35 and 5x + 50. "
          "Therefore, 2x + 50 + 2x + 35 + 5x + 50 = 180, so 9x + 135 = 180, so 9x = 45, "
          "so x = 45 / 9 = 5. The degree of the BCA angle = 5 * 5 + 50 = 75. Therefore "
          "the final answer is 75.");
}

TEST_CASE("question (c): combination shape with area, asin query") {
    CHECK(question_of(golden::case_c()) ==
          "If the BCDE shape is a combination of a rectangle and a semi-circle and the "
          "area of the BCDE shape is 102, compute the degree of the BCA angle. Assume "
          "pi=3.14. Round computations to 2 decimal places.");
}

TEST_CASE("solution (c): full chain matches the published sentences") {
    CHECK(solution_of(golden::case_c()) ==
          "The area of the BCDE shape is 102 and the length of the CD side is 6, so "
          "(other side) * 6 + (3.14 * 6^2) / 8 = 102, so (other side) * 6 = 102 - "
          "(3.14 * 6^2) / 8 = 102 - (3.14 * 36) / 8 = 102 - 113.04 / 8 = 102 - 14.13 = "
          "87.87. Therefore, the length of the BC side is 87.87 / 6 = 14.65. The length "
          "of the hypotenuse of the ABC triangle is 14.65 and the length of the side "
          "opposite to the BCA angle is 7, so the BCA angle equals asin(7 / 14.65) = "
          "asin(0.48) = 28.69. Therefore the final answer is 28.69.");
}

TEST_CASE("question (d): clause order follows the shape tree preorder") {
    CHECK(question_of(golden::case_d()) ==
          "If the length of the height of the ABCD trapezoid is 8, the area of the red "
          "semi-circle is 189.97, the BCFGH shape is a combination of a rectangle and "
          "an equilateral triangle and the perimeter of the BCFGH shape is 42, compute "
          "the area of the ABCD trapezoid. Assume pi=3.14. Round computations to 2 "
          "decimal places.");
}

TEST_CASE("solution (d): semicircle, equilateral-combination and trapezoid blocks") {
    CHECK(solution_of(golden::case_d()) ==
          "The area of the red semi-circle is 189.97 so the length of the AD diameter "
          "can be computed as sqrt(8 * 189.97 / pi) = sqrt(1519.76 / pi) = sqrt(484) = "
          "22. The side of the equilateral triangle in the BCFGH shape is equal to the "
          "side of the rectangle with length 8 so the shape has two sides with equal "
          "but unknown lengths, one with length 8, and two triangle sides with length "
          "8. The perimeter of the BCFGH shape is 42 so 2 * (unknown side) + 3 * 8 = "
          "42. So 2 * (unknown side) = 42 - 24 = 18, and the length of the BC side is "
          "18 / 2 = 9. The lengths of the AD and the BC bases of the ABCD trapezoid are "
          "22 and 9 and the height of the trapezoid is 8, so the area of the trapezoid "
          "is (1/2) * (22 + 9) * 8 = (1/2) * 31 * 8 = 124. Therefore the final answer "
          "is 124.");
}

TEST_CASE("question and solution (e)") {
    CHECK(question_of(golden::case_e()) ==
          "If the perimeter of the ABE triangle is 42, the BEFG shape is a rectangle "
          "where a semi-circle has been removed from one side of it and the perimeter "
          "of the BEFG shape is 62, compute the perimeter of the ABCD rectangle. Assume "
          "pi=3.14. Round computations to 2 decimal places.");
    CHECK(solution_of(golden::case_e()) ==
          "The diameter of the semi-circle in the BEFG shape is equal to the side of "
          "the rectangle with length 10 so the shape has two sides with equal but "
          "unknown lengths, one side with length 10, and one semi-circle arc with "
          "diameter 10. So the perimeter is 2 * UnknownSide + 10 + (pi * 10) / 2. So "
          "2 * UnknownSide + 10 + (10 * 3.14) / 2 = 62. So 2 * UnknownSide = 62 - 10 - "
          "31.4 / 2 = 62 - 10 - 15.7 = 36.3. Therefore, the length of the BE side is "
          "36.3 / 2 = 18.15. The lengths of the AE and BE sides of the ABE triangle are "
          "10 and 18.15 and the perimeter is 42, so the lengths of the AB side equals "
          "42 - 10 - 18.15 = 13.85. The lengths of the AD and the AB sides of the ABCD "
          "rectangle are 15 and 13.85, so the perimeter of the ABCD rectangle is 2 * "
          "(15 + 13.85) = 2 * 28.85 = 57.7. Therefore the final answer is 57.7.");
}

TEST_CASE("solution (f): pythagoras and square-minus-circle blocks") {
    std::string s = solution_of(golden::case_f());
    CHECK(s.find("The side of the equilateral triangle in the AEFGH shape is equal to "
                 "the side of the rectangle with length 9") != std::string::npos);
    CHECK(s.find("the length of the AE side is 21 / 2 = 10.5") != std::string::npos);
    CHECK(s.find("The area of the DEIJ shape is 78 and the length of the EI side is 6, "
                 "so (other side) * 6 - (3.14 * 6^2) / 8 = 78") != std::string::npos);
    CHECK(s.find("the length of the DE side is 92.13 / 6 = 15.35") != std::string::npos);
    CHECK(s.find("The lengths of the AE and DE sides of the ADE triangle are 10.5 and "
                 "15.35, so the length of the hypotenuse (the AD side) is sqrt(10.5^2 + "
                 "15.35^2) = sqrt(110.25 + 235.62) = sqrt(345.87) = 18.6") !=
          std::string::npos);
    CHECK(s.find("The length of the AD side of the ABCD shape is 18.6, so its area is "
                 "18.6^2 - (pi / 4) * (18.6^2) = 345.96 - 0.79 * 345.96 = 345.96 - "
                 "273.31 = 72.65") != std::string::npos);
    CHECK(s.find("Therefore the final answer is 72.65.") != std::string::npos);
}

TEST_CASE("solution (g): right-triangle leg from area then area") {
    CHECK(solution_of(golden::case_g()) ==
          "The length of the AD side in the ACD triangle is 14 and the area is 106 so "
          "the length of the AC side = 106 * 2 / 14 = 212 / 14 = 15.14. The lengths of "
          "the AC and AB sides of the ABC triangle are 15.14 and 15, so the area of the "
          "triangle is (15.14 * 15) / 2 = 227.1 / 2 = 113.55. Therefore the final "
          "answer is 113.55.");
    CHECK(question_of(golden::case_g()) ==
          "If the area of the ACD right triangle is 106, compute the area of the ABC "
          "right triangle. Round computations to 2 decimal places.");
}

TEST_CASE("question and solution (h): individual annotation") {
    CHECK(question_of(golden::case_h(), Annotation::Individual) ==
          "If the perimeter of the gray triangle is 44, the green shape is a "
          "combination of a rectangle and an equilateral triangle and the area of the "
          "green shape is 114, compute the length of the side of the gray triangle "
          "marked with question mark. Round computations to 2 decimal places.");
    CHECK(solution_of(golden::case_h(), Annotation::Individual) ==
          "The area of the green shape is 114 and the length of one side of its "
          "rectangle is 6, so (other side) * 6 + (sqrt(3) / 4) * 6^2 = 114, so (other "
          "side) * 6 = 114 - (sqrt(3) / 4) * 6^2 = 114 - (1.73 / 4) * 36 = 114 - 0.43 * "
          "36 = 114 - 15.48 = 98.52. Therefore, the length of the side marked with "
          "letter \"a\" is 98.52 / 6 = 16.42. The lengths of two sides of the gray "
          "triangle are 21 and 16.42 and the perimeter is 44, so the lengths of the "
          "side marked with \"?\" equals 44 - 21 - 16.42 = 6.58. Therefore the final "
          "answer is 6.58.");
}

TEST_CASE("question and solution (i): sector branch") {
    CHECK(question_of(golden::case_i()) ==
          "If the perimeter of the ABC triangle is 33, the degree of the DAC angle is "
          "75, the area of the DAC sector is 157, the degree of the EBC angle is 75 and "
          "the area of the EBC sector is 56.52, compute the length of the AB side of "
          "the ABC triangle. Assume pi=3.14. Round computations to 2 decimal places.");
    std::string s = solution_of(golden::case_i());
    CHECK(s.find("The DAC angle of the DAC sector is 75 and the area is 157 so the AC "
                 "radius can be computed as sqrt(157 / ((75 / 360) * pi)) = sqrt(157 / "
                 "(0.21 * pi)) = sqrt(157 / 0.66) = sqrt(237.88) = 15.42") !=
          std::string::npos);
    CHECK(s.find("sqrt(85.64) = 9.25") != std::string::npos);
    CHECK(s.find("so the lengths of the AB side equals 33 - 15.42 - 9.25 = 8.33") !=
          std::string::npos);
    CHECK(s.find("Therefore the final answer is 8.33.") != std::string::npos);
}

TEST_CASE("figure-one question prefix and label sentence") {
    std::string q = question_of(golden::case_fig1());
    CHECK(q.find("the ABEF shape is a rectangle where a semi-circle has been removed "
                 "from one side of it") != std::string::npos);
    CHECK(q.find("the perimeter of the ABEF shape is 34") != std::string::npos);
    CHECK(q.find("compute the degree of the DAB angle") != std::string::npos);
    CHECK(q.find("Assume pi=3.14.") != std::string::npos);
    std::string s = solution_of(golden::case_fig1());
    CHECK(s.find("the length of the AB side is 16.01 / 2 = 8.") != std::string::npos);
    CHECK(s.find("Therefore the final answer is 28.69.") != std::string::npos);
}

TEST_CASE("appendix walk-through strings") {
    auto c = golden::case_appendix_walkthrough();
    ProblemGraph g = c.graph;
    SolutionTrace t = solve_and_fill(g);
    std::string q = render_question(g, Modality::TextOnly, Annotation::Coordinate);
    CHECK(q.find("the length of the AD side of the ABCD rectangle is 10") !=
          std::string::npos);
    CHECK(q.find("are supplementary") != std::string::npos);
    CHECK(q.find("the perimeter of the") != std::string::npos);
    CHECK(q.find("compute the area of the ABCD rectangle") != std::string::npos);
    std::string s = render_solution(g, t, Annotation::Coordinate);
    CHECK(s.find("supplementary") != std::string::npos);
    CHECK(s.find("Therefore the final answer is 67.7.") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
    for (int i = 0; i < 2; i++) {
        CHECK(question_of(golden::case_d()) == question_of(golden::case_d()));
        CHECK(solution_of(golden::case_f()) == solution_of(golden::case_f()));
    }
}

TEST_CASE("no pi or rounding suffix on integer-only problems") {
    std::string q = question_of(golden::case_a());
    CHECK(q.find("Assume pi") == std::string::npos);
    CHECK(q.find("Round computations") == std::string::npos);
    std::string qb = question_of(golden::case_b());
    CHECK(qb.find("Round computations") == std::string::npos);
}

TEST_CASE("template set round-trips and checksums") {
    const TemplateSet& ts = TemplateSet::builtin();
    CHECK(ts.templates.size() == 68);
    std::string text = ts.to_json_text();
    TemplateSet loaded = TemplateSet::from_json_text(text);
    CHECK(loaded.to_json_text() == text);
    CHECK(loaded.checksum() == ts.checksum());
}
