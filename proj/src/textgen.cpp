#include "geomhop/textgen.hpp"

#include <json.hpp>
#include <algorithm>
#include <sstream>

#include "geomhop/common.hpp"
#include "geomhop/rounding.hpp"

namespace geomhop {

using json = nlohmann::ordered_json;

namespace {

std::map<std::string, FormulaTemplate> build_templates() {
    std::map<std::string, FormulaTemplate> t;
    auto add = [&](const char* id, const char* solution) -> FormulaTemplate& {
        FormulaTemplate ft;
        ft.solution = solution;
        return t.emplace(id, std::move(ft)).first->second;
    };

    // square
    add("sq_area_from_side",
        "The length of the {n:in0} side of the {shape} is {v:in0}, so its area is "
        "{v:in0} * {v:in0} = {v:out}.");
    add("sq_side_from_area",
        "The area of the {shape} is {v:in0}, so the length of the {n:out} side is "
        "sqrt({v:in0}) = {v:out}.");
    add("sq_perimeter_from_side",
        "The length of the {n:in0} side of the {shape} is {v:in0}, so its perimeter is "
        "4 * {v:in0} = {v:out}.");
    add("sq_side_from_perimeter",
        "The perimeter of the {shape} is {v:in0}, so the length of the {n:out} side is "
        "{v:in0} / 4 = {v:out}.");
    add("sq_area_from_perimeter",
        "The perimeter of the {shape} is {v:in0}, so the length of each side is "
        "{v:in0} / 4 = {s:0} and the area is {s:0} * {s:0} = {v:out}.");
    add("sq_perimeter_from_area",
        "The area of the {shape} is {v:in0}, so the length of each side is "
        "sqrt({v:in0}) = {s:0} and the perimeter is 4 * {s:0} = {v:out}.");
    add("sq_diagonal_from_side",
        "The length of the {n:in0} side of the {shape} is {v:in0}, so the length of its "
        "diagonal is {v:in0} * sqrt(2) = {v:in0} * {s:0} = {v:out}.");
    add("sq_side_from_diagonal",
        "The length of the diagonal of the {shape} is {v:in0}, so the length of the "
        "{n:out} side is {v:in0} / sqrt(2) = {v:in0} / {s:0} = {v:out}.");

    // rectangle
    add("rect_area_from_sides",
        "The lengths of the {n:in0} and the {n:in1} sides of the {shape} are {v:in0} and "
        "{v:in1}, so the area of the {shape} is {v:in0} * {v:in1} = {v:out}.");
    add("rect_length_from_area",
        "The area of the {shape} is {v:in0} and the length of the {n:in1} side is "
        "{v:in1}, so the length of the {n:out} side is {v:in0} / {v:in1} = {v:out}.");
    add("rect_perimeter_from_sides",
        "The lengths of the {n:in0} and the {n:in1} sides of the {shape} are {v:in0} and "
        "{v:in1}, so the perimeter of the {shape} is 2 * ({v:in0} + {v:in1}) = "
        "2 * {s:0} = {s:1}.");
    add("rect_length_from_perimeter",
        "The perimeter of the {shape} is {v:in0} and the length of the {n:in1} side is "
        "{v:in1}, so the length of the {n:out} side is {v:in0} / 2 - {v:in1} = "
        "{s:0} - {v:in1} = {v:out}.");

    // right triangle
    add("rt_hyp_from_legs",
        "The lengths of the {n:in0} and {n:in1} sides of the {shape} are {v:in0} and "
        "{v:in1}, so the length of the hypotenuse (the {n:out} side) is "
        "sqrt({v:in0}^2 + {v:in1}^2) = sqrt({s:0} + {s:1}) = sqrt({s:2}) = {v:out}.");
    add("rt_leg_from_hyp_leg",
        "The length of the hypotenuse of the {shape} is {v:in0} and the length of the "
        "{n:in1} side is {v:in1}, so the length of the {n:out} side is "
        "sqrt({v:in0}^2 - {v:in1}^2) = sqrt({s:0} - {s:1}) = sqrt({s:2}) = {v:out}.");
    add("rt_area_from_legs",
        "The lengths of the {n:in0} and {n:in1} sides of the {shape} are {v:in0} and "
        "{v:in1}, so the area of the triangle is ({v:in0} * {v:in1}) / 2 = "
        "{s:0} / 2 = {v:out}.");
    add("rt_leg_from_area_leg",
        "The length of the {n:in1} side in the {shape} is {v:in1} and the area is "
        "{v:in0} so the length of the {n:out} side = {v:in0} * 2 / {v:in1} = "
        "{s:0} / {v:in1} = {v:out}.");
    add("rt_angle_from_opp_hyp",
        "The length of the hypotenuse of the {shape} is {v:in1} and the length of the "
        "side opposite to {ang:out} is {v:in0}, so {ang:out} equals "
        "asin({v:in0} / {v:in1}) = asin({s:0}) = {v:out}.");
    add("rt_angle_from_adj_hyp",
        "The length of the hypotenuse of the {shape} is {v:in1} and the length of the "
        "side adjacent to {ang:out} is {v:in0}, so {ang:out} equals "
        "acos({v:in0} / {v:in1}) = acos({s:0}) = {v:out}.");
    add("rt_opp_from_hyp_angle",
        "The length of the hypotenuse of the {shape} is {v:in0} and the degree of the "
        "angle opposite to the {n:out} side is {v:in1}, so the length of the {n:out} "
        "side is {v:in0} * sin({v:in1}) = {v:in0} * {s:0} = {v:out}.");
    add("rt_adj_from_hyp_angle",
        "The length of the hypotenuse of the {shape} is {v:in0} and the degree of the "
        "angle adjacent to the {n:out} side is {v:in1}, so the length of the {n:out} "
        "side is {v:in0} * cos({v:in1}) = {v:in0} * {s:0} = {v:out}.");
    {
        auto& ft = add("rt_other_acute",
                       "The two acute angles of the {shape} sum to 90, and the degree of "
                       "{ang:in0} is {v:in0}, so the degree of {ang:out} is "
                       "90 - {v:in0} = {v:out}.");
        ft.var_opener = "The two acute degrees of the {shape} are {exprlist}.";
    }
    {
        auto& ft = add("rt_perimeter_from_sides",
                       "The lengths of the sides of the {shape} are {v:in0}, {v:in1} and "
                       "{v:in2}, so its perimeter is {v:in0} + {v:in1} + {v:in2} = {v:out}.");
        ft.var_opener = "The three side lengths of the {shape} are {exprlist}.";
    }
    {
        auto& ft =
            add("rt_side_from_perimeter",
                "The lengths of the {p1n} and {p2n} sides of the {shape} are {vp1} and "
                "{vp2} and the perimeter is {v:in0}, so the lengths of the {n:out} side "
                "equals {v:in0} - {vp1} - {vp2} = {v:out}.");
        ft.solution_individual =
            "The lengths of two sides of the {shape} are {vp1} and {vp2} and the "
            "perimeter is {v:in0}, so the lengths of {sideref:out} equals "
            "{v:in0} - {vp1} - {vp2} = {v:out}.";
        ft.var_opener = "The side lengths and the perimeter of the {shape} are {exprlist}.";
    }
    add("rt_hyp_from_opp_angle",
        "The length of the {n:in0} side of the {shape} is {v:in0} and the degree of its "
        "opposite angle is {v:in1}, so the length of the hypotenuse (the {n:out} side) "
        "is {v:in0} / sin({v:in1}) = {v:in0} / {s:0} = {v:out}.");
    add("rt_hyp_from_adj_angle",
        "The length of the {n:in0} side of the {shape} is {v:in0} and the degree of its "
        "adjacent angle is {v:in1}, so the length of the hypotenuse (the {n:out} side) "
        "is {v:in0} / cos({v:in1}) = {v:in0} / {s:0} = {v:out}.");

    // triangle
    {
        auto& ft = add("tri_angle_sum",
                       "The degrees of {ang:in0} and {ang:in1} of the {shape} are {v:in0} "
                       "and {v:in1}, so the degree of {ang:out} is "
                       "180 - {v:in0} - {v:in1} = {v:out}.");
        ft.var_opener = "The three degrees of the {shape} are {exprlist}.";
    }
    {
        auto& ft = add("tri_perimeter_from_sides",
                       "The lengths of the {n:in0}, {n:in1} and {n:in2} sides of the "
                       "{shape} are {v:in0}, {v:in1} and {v:in2}, so its perimeter is "
                       "{v:in0} + {v:in1} + {v:in2} = {v:out}.");
        ft.var_opener = "The three side lengths of the {shape} are {exprlist}.";
    }
    {
        auto& ft =
            add("tri_side_from_perimeter",
                "The lengths of the {p1n} and {p2n} sides of the {shape} are {vp1} and "
                "{vp2} and the perimeter is {v:in0}, so the lengths of the {n:out} side "
                "equals {v:in0} - {vp1} - {vp2} = {v:out}.");
        ft.solution_individual =
            "The lengths of two sides of the {shape} are {vp1} and {vp2} and the "
            "perimeter is {v:in0}, so the lengths of {sideref:out} equals "
            "{v:in0} - {vp1} - {vp2} = {v:out}.";
        ft.var_opener = "The side lengths and the perimeter of the {shape} are {exprlist}.";
    }
    add("tri_area_from_sides_angle",
        "The lengths of the {n:in0} and {n:in1} sides of the {shape} are {v:in0} and "
        "{v:in1}, and the degree of the angle between them is {v:in2}, so the area of "
        "the triangle is ({v:in0} * {v:in1} * sin({v:in2})) / 2 = ({s:1} * {s:0}) / 2 = "
        "{s:2} / 2 = {v:out}.");
    add("tri_angle_from_area_sides",
        "The area of the {shape} is {v:in0} and the lengths of the {n:in1} and {n:in2} "
        "sides are {v:in1} and {v:in2}, so sin({ang:out}) = {v:in0} * 2 / "
        "({v:in1} * {v:in2}) = {s:1} / {s:0} = {s:2}, so {ang:out} equals "
        "asin({s:2}) = {v:out}.");

    // parallelogram
    {
        auto& ft = add("para_perimeter_from_sides",
                       "The lengths of the {n:in0} and the {n:in1} sides of the {shape} "
                       "are {v:in0} and {v:in1}, so the perimeter of the {shape} is "
                       "2 * ({v:in0} + {v:in1}) = 2 * {s:0} = {s:1}.");
        ft.var_opener = "The side lengths and the perimeter of the {shape} are {exprlist}.";
    }
    {
        auto& ft = add("para_side_from_perimeter",
                       "The perimeter of the {shape} is {v:in0} and the length of the "
                       "{n:in1} side is {v:in1}, so the length of the {n:out} side is "
                       "{v:in0} / 2 - {v:in1} = {s:0} - {v:in1} = {v:out}.");
        ft.var_opener = "The side lengths and the perimeter of the {shape} are {exprlist}.";
    }
    add("para_area_from_sides_angle",
        "The lengths of the {n:in0} and the {n:in1} sides of the {shape} are {v:in0} and "
        "{v:in1} and the degree of {ang:in2} is {v:in2}, so the area of the {shape} is "
        "{v:in0} * {v:in1} * sin({v:in2}) = {s:1} * {s:0} = {v:out}.");
    add("para_angle_from_area_sides",
        "The lengths of the {n:in1} and the {n:in2} sides of the {shape} are {v:in1} and "
        "{v:in2} and the area is {v:in0} so the sine of {ang:out} is {v:in0} / "
        "({v:in1} * {v:in2}) = {v:in0} / {s:0} = {s:1}, so {ang:out} equals "
        "asin({s:1}) = {v:out}.");
    add("para_side_from_area_angle",
        "The area of the {shape} is {v:in0}, the length of the {n:in1} side is {v:in1} "
        "and the degree of {ang:in2} is {v:in2}, so the length of the {n:out} side is "
        "{v:in0} / ({v:in1} * sin({v:in2})) = {v:in0} / ({v:in1} * {s:0}) = "
        "{v:in0} / {s:1} = {v:out}.");

    // trapezoid
    add("trap_area_from_bases_height",
        "The lengths of the {n:in0} and the {n:in1} bases of the {shape} are {v:in0} and "
        "{v:in1} and the height of the trapezoid is {v:in2}, so the area of the "
        "trapezoid is (1/2) * ({v:in0} + {v:in1}) * {v:in2} = (1/2) * {s:0} * {v:in2} = "
        "{v:out}.");
    add("trap_base_from_area",
        "The area of the {shape} is {v:in0}, the length of the {n:in1} base is {v:in1} "
        "and the height is {v:in2}, so the length of the {n:out} base is "
        "2 * {v:in0} / {v:in2} - {v:in1} = {s:0} / {v:in2} - {v:in1} = "
        "{s:1} - {v:in1} = {v:out}.");
    add("trap_height_from_area",
        "The area of the {shape} is {v:in0} and the lengths of its bases are {v:in1} and "
        "{v:in2}, so the height of the trapezoid is 2 * {v:in0} / ({v:in1} + {v:in2}) = "
        "{s:0} / {s:1} = {v:out}.");
    {
        auto& ft = add("trap_perimeter_from_sides",
                       "The lengths of the bases and the legs of the {shape} are {v:in0}, "
                       "{v:in1}, {v:in2} and {v:in3}, so its perimeter is "
                       "{v:in0} + {v:in1} + {v:in2} + {v:in3} = {v:out}.");
        ft.var_opener = "The side lengths and the perimeter of the {shape} are {exprlist}.";
    }
    {
        auto& ft = add("trap_leg_from_perimeter",
                       "The perimeter of the {shape} is {v:in0} and the lengths of its "
                       "other three sides are {v:in1}, {v:in2} and {v:in3}, so the length "
                       "of the {n:out} side equals {v:in0} - {v:in1} - {v:in2} - {v:in3} "
                       "= {v:out}.");
        ft.var_opener = "The side lengths and the perimeter of the {shape} are {exprlist}.";
    }

    // sector
    add("sector_area_from_angle_radius",
        "The {ang:in0} of the {shape} is {v:in0} and the {n:in1} radius is {v:in1}, so "
        "the area of the sector is ({v:in0} / 360) * pi * {v:in1}^2 = "
        "{s:0} * pi * {s:2} = {s:1} * {s:2} = {v:out}.");
    add("sector_radius_from_area_angle",
        "The {ang:in1} of the {shape} is {v:in1} and the area is {v:in0} so the {n:out} "
        "radius can be computed as sqrt({v:in0} / (({v:in1} / 360) * pi)) = "
        "sqrt({v:in0} / ({s:0} * pi)) = sqrt({v:in0} / {s:1}) = sqrt({s:2}) = {v:out}.");
    add("sector_angle_from_area_radius",
        "The area of the {shape} is {v:in0} and the {n:in1} radius is {v:in1}, so the "
        "degree of {ang:out} can be computed as 360 * ({v:in0} / (pi * {v:in1}^2)) = "
        "360 * ({v:in0} / (pi * {s:0})) = 360 * ({v:in0} / {s:1}) = 360 * {s:2} = "
        "{v:out}.");
    add("sector_perimeter_from_angle_radius",
        "The {ang:in0} of the {shape} is {v:in0} and the {n:in1} radius is {v:in1}, so "
        "the perimeter of the sector is 2 * {v:in1} + ({v:in0} / 360) * 2 * pi * "
        "{v:in1} = {s:4} + {s:0} * {s:2} = {s:4} + {s:3} = {v:out}.");
    add("sector_radius_from_perimeter_angle",
        "The perimeter of the {shape} is {v:in0} and the {ang:in1} is {v:in1}, so "
        "solving 2 * r + ({v:in1} / 360) * 2 * pi * r = {v:in0} gives the {n:out} radius "
        "as {v:in0} / (2 + {s:0} * 2 * pi) = {v:in0} / (2 + {s:2}) = "
        "{v:in0} / {s:3} = {v:out}.");

    // semi-circle
    add("semi_area_from_diameter",
        "The length of the {n:in0} diameter of the {shape} is {v:in0}, so the area of "
        "the semi-circle is (pi * {v:in0}^2) / 8 = (pi * {s:0}) / 8 = {s:1} / 8 = "
        "{v:out}.");
    add("semi_diameter_from_area",
        "The area of the {shape} is {v:in0} so the length of the {n:out} diameter can be "
        "computed as sqrt(8 * {v:in0} / pi) = sqrt({s:0} / pi) = sqrt({s:1}) = {v:out}.");
    add("semi_perimeter_from_diameter",
        "The length of the {n:in0} diameter of the {shape} is {v:in0}, so the perimeter "
        "of the semi-circle is {v:in0} + (pi * {v:in0}) / 2 = {v:in0} + {s:0} / 2 = "
        "{v:in0} + {s:1} = {v:out}.");
    add("semi_diameter_from_perimeter",
        "The perimeter of the {shape} is {v:in0} so the length of the {n:out} diameter "
        "can be computed as {v:in0} / (1 + pi / 2) = {v:in0} / (1 + {s:0}) = "
        "{v:in0} / {s:1} = {v:out}.");

    // rectangle plus equilateral triangle
    {
        auto& ft = add("rpet_perimeter_from_sides",
                       "The {shape} has two rectangle sides with length {v:in1}, one "
                       "rectangle side with length {v:in0} shared with the equilateral "
                       "triangle, and two triangle sides with length {v:in0}, so its "
                       "perimeter is 2 * {v:in1} + 3 * {v:in0} = {s:1} + {s:0} = "
                       "{v:out}.");
        ft.var_opener = "The side lengths and the perimeter of the {shape} are {exprlist}.";
    }
    {
        auto& ft = add("rpet_other_from_perimeter",
                       "The side of the equilateral triangle in the {shape} is equal to "
                       "the side of the rectangle with length {v:in1} so the shape has "
                       "two sides with equal but unknown lengths, one with length "
                       "{v:in1}, and two triangle sides with length {v:in1}. The "
                       "perimeter of the {shape} is {v:in0} so 2 * (unknown side) + "
                       "3 * {v:in1} = {v:in0}. So 2 * (unknown side) = {v:in0} - {s:0} = "
                       "{s:1}, and the length of the {n:out} side is {s:1} / 2 = "
                       "{v:out}.");
        ft.var_opener = "The side lengths and the perimeter of the {shape} are {exprlist}.";
    }
    {
        auto& ft = add("rpet_base_from_perimeter",
                       "The {shape} is a combination of a rectangle and an equilateral "
                       "triangle where the two unknown rectangle sides are {v:in1} long, "
                       "so 2 * {v:in1} + 3 * (triangle side) = {v:in0}. Then 3 * "
                       "(triangle side) = {v:in0} - {s:0} = {s:1}, and the length of the "
                       "{n:out} side is {s:1} / 3 = {v:out}.");
        ft.var_opener = "The side lengths and the perimeter of the {shape} are {exprlist}.";
    }
    add("rpet_area_from_sides",
        "The {shape} is a combination of a rectangle with sides {v:in0} and {v:in1} and "
        "an equilateral triangle with side {v:in0}, so its area is {v:in0} * {v:in1} + "
        "(sqrt(3) / 4) * {v:in0}^2 = {s:4} + ({s:0} / 4) * {s:2} = {s:4} + "
        "{s:1} * {s:2} = {s:4} + {s:3} = {v:out}.");
    {
        auto& ft = add("rpet_other_from_area",
                       "The area of the {shape} is {v:in0} and the length of the {n:in1} "
                       "side of its rectangle is {v:in1}, so (other side) * {v:in1} + "
                       "(sqrt(3) / 4) * {v:in1}^2 = {v:in0}, so (other side) * {v:in1} = "
                       "{v:in0} - (sqrt(3) / 4) * {v:in1}^2 = {v:in0} - ({s:0} / 4) * "
                       "{s:2} = {v:in0} - {s:1} * {s:2} = {v:in0} - {s:3} = {s:4}. "
                       "Therefore, the length of the {n:out} side is {s:4} / {v:in1} = "
                       "{v:out}.");
        ft.solution_individual =
            "The area of the {shape} is {v:in0} and the length of one side of its "
            "rectangle is {v:in1}, so (other side) * {v:in1} + (sqrt(3) / 4) * "
            "{v:in1}^2 = {v:in0}, so (other side) * {v:in1} = {v:in0} - (sqrt(3) / 4) * "
            "{v:in1}^2 = {v:in0} - ({s:0} / 4) * {s:2} = {v:in0} - {s:1} * {s:2} = "
            "{v:in0} - {s:3} = {s:4}. Therefore, the length of {sideref:out} is "
            "{s:4} / {v:in1} = {v:out}.";
    }

    // rectangle minus / plus semi-circle
    auto add_rsc = [&](const char* prefix, bool plus) {
        std::string p = prefix;
        std::string sign = plus ? "+" : "-";
        std::string unsign = plus ? "-" : "+";
        add((p + "_perimeter_from_sides").c_str(),
            "The {shape} has two sides with length {v:in1}, one side with length "
            "{v:in0}, and one semi-circle arc with diameter {v:in0}, so its perimeter "
            "is 2 * {v:in1} + {v:in0} + (pi * {v:in0}) / 2 = {s:2} + {v:in0} + {s:1} = "
            "{v:out}.");
        add((p + "_other_from_perimeter").c_str(),
            "The diameter of the semi-circle in the {shape} is equal to the side of "
            "the rectangle with length {v:in1} so the shape has two sides with equal "
            "but unknown lengths, one side with length {v:in1}, and one semi-circle "
            "arc with diameter {v:in1}. So the perimeter is 2 * UnknownSide + {v:in1} "
            "+ (pi * {v:in1}) / 2. So 2 * UnknownSide + {v:in1} + ({v:in1} * 3.14) / 2 "
            "= {v:in0}. So 2 * UnknownSide = {v:in0} - {v:in1} - {s:0} / 2 = {v:in0} - "
            "{v:in1} - {s:1} = {s:3}. Therefore, the length of the {n:out} side is "
            "{s:3} / 2 = {v:out}.");
        add((p + "_area_from_sides").c_str(),
            ("The {shape} is a rectangle with sides {v:in0} and {v:in1} " +
             std::string(plus ? "combined with" : "from which we remove") +
             " a semi-circle with diameter {v:in0}, so its area is {v:in0} * {v:in1} " +
             sign + " (pi * {v:in0}^2) / 8 = {s:3} " + sign + " {s:1} / 8 = {s:3} " +
             sign + " {s:2} = {v:out}.")
                .c_str());
        add((p + "_other_from_area").c_str(),
            ("The area of the {shape} is {v:in0} and the length of the {n:in1} side is "
             "{v:in1}, so (other side) * {v:in1} " +
             sign + " (3.14 * {v:in1}^2) / 8 = {v:in0}, so (other side) * {v:in1} = "
                    "{v:in0} " +
             unsign + " (3.14 * {v:in1}^2) / 8 = {v:in0} " + unsign +
             " (3.14 * {s:0}) / 8 = {v:in0} " + unsign + " {s:1} / 8 = {v:in0} " +
             unsign + " {s:2} = {s:3}. Therefore, the length of the {n:out} side is "
                      "{s:3} / {v:in1} = {v:out}.")
                .c_str());
        add((p + "_base_from_perimeter").c_str(),
            "The perimeter of the {shape} is {v:in0} and its two known sides are "
            "{v:in1} long, so (diameter) * (1 + pi / 2) = {v:in0} - 2 * {v:in1} = "
            "{v:in0} - {s:2} = {s:3}. Therefore, the length of the {n:out} side is "
            "{s:3} / (1 + {s:0}) = {s:3} / {s:1} = {v:out}.");
    };
    add_rsc("rmsc", false);
    add_rsc("rpsc", true);

    // square minus circle
    add("smc_area_from_side",
        "The length of the {n:in0} side of the {shape} is {v:in0}, so its area is "
        "{v:in0}^2 - (pi / 4) * ({v:in0}^2) = {s:0} - 0.79 * {s:0} = {s:0} - {s:1} = "
        "{v:out}.");
    add("smc_side_from_area",
        "The area of the {shape} is {v:in0} and the area is the side squared times "
        "(1 - pi / 4) = {s:0}, so the length of the {n:out} side is "
        "sqrt({v:in0} / {s:0}) = sqrt({s:1}) = {v:out}.");

    // angle pseudo-shapes
    {
        auto& ft = add("supp_other",
                       "The {ang:in0} and {ang:out} are supplementary, so the degree of "
                       "{ang:out} is 180 - {v:in0} = {v:out}.");
        ft.var_opener = "The two supplementary degrees are {exprlist}.";
    }
    {
        auto& ft = add("comp_other",
                       "The {ang:in0} and {ang:out} are complementary, so the degree of "
                       "{ang:out} is 90 - {v:in0} = {v:out}.");
        ft.var_opener = "The two complementary degrees are {exprlist}.";
    }

    return t;
}

}  // namespace

const TemplateSet& TemplateSet::builtin() {
    static const TemplateSet ts = [] {
        TemplateSet s;
        s.templates = build_templates();
        return s;
    }();
    return ts;
}

const FormulaTemplate& TemplateSet::for_formula(const std::string& id) const {
    auto it = templates.find(id);
    if (it == templates.end()) throw UnsolvableError("no template for formula " + id);
    return it->second;
}

std::string TemplateSet::to_json_text() const {
    json root;
    root["format"] = "geomhop-templates-v1";
    json arr = json::object();
    for (const auto& [id, ft] : templates) {
        json jt;
        jt["solution"] = ft.solution;
        if (!ft.solution_individual.empty()) jt["solution_individual"] = ft.solution_individual;
        if (!ft.var_opener.empty()) jt["var_opener"] = ft.var_opener;
        arr[id] = jt;
    }
    root["templates"] = arr;
    return root.dump(2) + "\n";
}

TemplateSet TemplateSet::from_json_text(const std::string& text) {
    json root = json::parse(text);
    if (root.value("format", "") != "geomhop-templates-v1")
        throw std::invalid_argument("unrecognized template set format");
    TemplateSet s;
    for (const auto& [id, jt] : root["templates"].items()) {
        FormulaTemplate ft;
        ft.solution = jt["solution"].get<std::string>();
        ft.solution_individual = jt.value("solution_individual", "");
        ft.var_opener = jt.value("var_opener", "");
        s.templates[id] = ft;
    }
    return s;
}

std::string TemplateSet::checksum() const { return checksum_hex(to_json_text()); }

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

namespace {

struct NameContext {
    const ProblemGraph& g;
    const FormulaLibrary& lib;
    std::vector<InstanceNaming> namings;
    Annotation annotation;
    std::map<ElementRef, std::string> marks;  // individual annotation

    explicit NameContext(const ProblemGraph& graph, const FormulaLibrary& library,
                         Annotation ann)
        : g(graph), lib(library), annotation(ann) {
        ProblemGraph& mg = const_cast<ProblemGraph&>(graph);
        namings = assign_labels(mg, library);
        if (annotation == Annotation::Individual) marks = individual_marks(graph, library);
    }

    const InstanceNaming& naming(InstanceId id) const {
        return namings[static_cast<size_t>(id)];
    }

    // reference core without the leading article: "ABCD rectangle",
    // "BCDE shape", "blue semi-circle", "gray triangle"
    std::string shape_core(InstanceId id) const {
        const ShapeInstance& s = g.shape(id);
        std::string phrase = shape_kind_phrase(s.kind);
        if (s.kind == ShapeKind::RightTriangle) phrase = "triangle";
        if (s.kind == ShapeKind::SemiCircle) return s.color + " semi-circle";
        if (annotation == Annotation::Individual) return s.color + " " + phrase;
        return shape_display_name(naming(id)) + " " + phrase;
    }

    std::string bare_name(const ElementRef& ref) const {
        const InstanceNaming& n = naming(ref.inst);
        ElementType t = role_type(g.shape(ref.inst).kind, ref.role);
        if (annotation == Annotation::Individual) {
            auto it = marks.find(ref);
            if (it != marks.end()) return it->second;
        }
        if (t == ElementType::Side) return side_name(n, ref.role);
        if (t == ElementType::Angle) return angle_name(n, ref.role);
        return ref.role;
    }

    std::string side_ref(const ElementRef& ref) const {
        if (annotation == Annotation::Individual) {
            auto it = marks.find(ref);
            if (it != marks.end()) {
                if (it->second == "?") return "the side marked with \"?\"";
                return "the side marked with letter \"" + it->second + "\"";
            }
            return "one side of the " + shape_core(ref.inst);
        }
        return "the " + bare_name(ref) + " side";
    }

    std::string angle_ref(const ElementRef& ref) const {
        if (annotation == Annotation::Individual) {
            auto it = marks.find(ref);
            if (it != marks.end()) {
                if (it->second == "?") return "the angle marked with \"?\"";
                return "the " + it->second + " angle";
            }
            return "one angle of the " + shape_core(ref.inst);
        }
        return "the " + bare_name(ref) + " angle";
    }
};

std::string replace_all_tokens(std::string text,
                               const std::map<std::string, std::string>& tokens) {
    for (const auto& [key, value] : tokens) {
        size_t pos = 0;
        while ((pos = text.find(key, pos)) != std::string::npos) {
            text.replace(pos, key.size(), value);
            pos += value.size();
        }
    }
    return text;
}

// collapse "a*x + b" into display form ("5x + 50", "x + 3")
std::string expr_text(const VarExpr& e) { return e.str(); }

std::string join_list(const std::vector<std::string>& items) {
    std::string out;
    for (size_t i = 0; i < items.size(); i++) {
        if (i > 0) out += (i + 1 == items.size()) ? " and " : ", ";
        out += items[i];
    }
    return out;
}

std::string capitalize(std::string s) {
    if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 32);
    return s;
}

// one templated sentence block for a numeric (non-variablized) step
std::string render_step(const TraceStep& step, const NameContext& ctx,
                        const TemplateSet& tset) {
    const FormulaSpec& f = ctx.lib.by_id(step.formula_id);
    const FormulaTemplate& ft = tset.for_formula(step.formula_id);
    std::string tpl = (ctx.annotation == Annotation::Individual &&
                       !ft.solution_individual.empty())
                          ? ft.solution_individual
                          : ft.solution;

    std::map<std::string, std::string> tokens;
    tokens["{shape}"] = ctx.shape_core(step.inst);
    for (size_t i = 0; i < f.inputs.size(); i++) {
        ElementRef ref{step.inst, f.inputs[i]};
        std::string idx = std::to_string(i);
        tokens["{v:in" + idx + "}"] = format_number(step.bindings[i].second);
        tokens["{n:in" + idx + "}"] = ctx.bare_name(ref);
        tokens["{sideref:in" + idx + "}"] = ctx.side_ref(ref);
        tokens["{ang:in" + idx + "}"] = ctx.angle_ref(ref);
    }
    ElementRef out_ref{step.inst, f.output};
    tokens["{v:out}"] = format_number(step.value);
    tokens["{n:out}"] = ctx.bare_name(out_ref);
    tokens["{sideref:out}"] = ctx.side_ref(out_ref);
    tokens["{ang:out}"] = ctx.angle_ref(out_ref);
    for (size_t k = 0; k < step.step_values.size(); k++)
        tokens["{s:" + std::to_string(k) + "}"] = format_number(step.step_values[k]);

    // the two subtracted inputs, facts first, then derivation order
    if (tpl.find("{vp1}") != std::string::npos && f.inputs.size() >= 3) {
        std::vector<size_t> order;
        for (size_t i = 1; i < f.inputs.size(); i++) {
            const Fact* fact = ctx.g.find_fact(ElementRef{step.inst, f.inputs[i]});
            if (fact && !fact->revealed) order.push_back(i);
        }
        for (size_t i = 1; i < f.inputs.size(); i++) {
            if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
        }
        for (size_t k = 0; k < order.size() && k < 2; k++) {
            std::string pi = std::to_string(k + 1);
            tokens["{vp" + pi + "}"] = format_number(step.bindings[order[k]].second);
            tokens["{p" + pi + "n}"] =
                ctx.bare_name(ElementRef{step.inst, f.inputs[order[k]]});
        }
    }
    return replace_all_tokens(tpl, tokens);
}

// variablized step: expression list, collapsed equation, x, substitution
std::string render_var_step(const TraceStep& step, const FormulaUse& use,
                            const NameContext& ctx, const TemplateSet& tset) {
    const FormulaSpec& f = ctx.lib.by_id(step.formula_id);
    const FormulaTemplate& ft = tset.for_formula(step.formula_id);
    const VarSolveInfo& vs = *step.var_solve;
    const std::string& x = vs.var;

    // element text: expression when variablized, numeric value otherwise
    auto elem_text = [&](int elem) -> std::string {
        std::string role = elem < 0 ? f.output : f.inputs.at(static_cast<size_t>(elem));
        auto it = use.exprs.find(role);
        if (it != use.exprs.end()) return expr_text(it->second);
        for (size_t i = 0; i < f.inputs.size(); i++)
            if (f.inputs[i] == role) return format_number(step.bindings[i].second);
        return format_number(step.value);
    };
    auto term_text = [&](const LinearForm::Term& t) {
        std::string e = elem_text(t.elem);
        if (t.coeff == 1) return e;
        return std::to_string(t.coeff) + " * (" + e + ")";
    };

    std::vector<std::string> exprs;
    for (const auto& [role, e] : use.exprs) exprs.push_back(expr_text(e));
    (void)exprs;
    // keep the template's element order: inputs then output
    std::vector<std::string> ordered_exprs;
    for (const auto& role : f.inputs) {
        auto it = use.exprs.find(role);
        if (it != use.exprs.end()) ordered_exprs.push_back(expr_text(it->second));
    }
    if (use.exprs.count(f.output)) ordered_exprs.push_back(expr_text(use.exprs.at(f.output)));

    std::string opener = ft.var_opener.empty()
                             ? "For the {shape}, the given elements are {exprlist}."
                             : ft.var_opener;
    opener = replace_all_tokens(
        opener, {{"{shape}", ctx.shape_core(step.inst)},
                 {"{exprlist}", join_list(ordered_exprs)}});

    const LinearForm& lf = *f.linear;
    std::vector<std::string> lhs_terms, rhs_terms;
    for (const auto& t : lf.lhs) lhs_terms.push_back(term_text(t));
    for (const auto& t : lf.rhs) rhs_terms.push_back(term_text(t));
    if (lf.rhs_const != 0) rhs_terms.push_back(std::to_string(lf.rhs_const));
    std::string equation;
    for (size_t i = 0; i < lhs_terms.size(); i++)
        equation += (i ? " + " : "") + lhs_terms[i];
    equation += " = ";
    for (size_t i = 0; i < rhs_terms.size(); i++)
        equation += (i ? " + " : "") + rhs_terms[i];

    long long diff = vs.rhs_const - vs.lhs_const;
    std::ostringstream sent;
    sent << opener << " Therefore, " << equation << ", so " << vs.lhs_coeff << x << " + "
         << vs.lhs_const << " = " << vs.rhs_const << ", so " << vs.lhs_coeff << x << " = "
         << diff << ", so " << x << " = " << diff << " / " << vs.lhs_coeff << " = "
         << format_number(vs.x) << ".";

    // closing substitution for the output expression
    const VarExpr& oe = use.exprs.at(f.output);
    ElementRef out_ref{step.inst, f.output};
    ElementType t = f.output_type();
    std::string out_phrase;
    switch (t) {
        case ElementType::Side: out_phrase = "The length of " + ctx.side_ref(out_ref); break;
        case ElementType::Angle: out_phrase = "The degree of " + ctx.angle_ref(out_ref); break;
        case ElementType::Area: out_phrase = "The area of the " + ctx.shape_core(step.inst); break;
        case ElementType::Perimeter:
            out_phrase = "The perimeter of the " + ctx.shape_core(step.inst);
            break;
    }
    sent << " " << out_phrase << " = ";
    if (oe.a == 1) {
        sent << format_number(vs.x);
    } else {
        sent << oe.a << " * " << format_number(vs.x);
    }
    if (oe.b > 0) sent << " + " << oe.b;
    if (oe.b < 0) sent << " - " << -oe.b;
    sent << " = " << format_number(step.value) << ".";
    return sent.str();
}

bool trace_uses_pi(const SolutionTrace& trace, const FormulaLibrary& lib) {
    for (const auto& step : trace.steps) {
        if (step.var_solve) continue;
        if (lib.by_id(step.formula_id).uses_pi) return true;
    }
    return false;
}

bool trace_needs_rounding(const SolutionTrace& trace) {
    for (const auto& step : trace.steps)
        for (double v : step.step_values)
            if (!is_integral_2dp(v)) return true;
    return false;
}

// fact clause without the leading "if"
std::string fact_clause(const Fact& fact, const NameContext& ctx) {
    const ShapeInstance& s = ctx.g.shape(fact.ref.inst);
    ElementType t = role_type(s.kind, fact.ref.role);
    std::string value = fact.expr ? fact.expr->str()
                                  : format_number(s.element_values.at(fact.ref.role));
    switch (t) {
        case ElementType::Angle:
            return "the degree of " + ctx.angle_ref(fact.ref) + " is " + value;
        case ElementType::Area:
            return "the area of the " + ctx.shape_core(fact.ref.inst) + " is " + value;
        case ElementType::Perimeter:
            return "the perimeter of the " + ctx.shape_core(fact.ref.inst) + " is " + value;
        case ElementType::Side: {
            if (fact.ref.role == "height")
                return "the length of the height of the " + ctx.shape_core(fact.ref.inst) +
                       " is " + value;
            if (s.kind == ShapeKind::SemiCircle)
                return "the length of the " + ctx.bare_name(fact.ref) + " diameter is " +
                       value;
            if (fact.ref.role == "diagonal")
                return "the length of the " + ctx.bare_name(fact.ref) + " diagonal of the " +
                       ctx.shape_core(fact.ref.inst) + " is " + value;
            if (ctx.annotation == Annotation::Individual)
                return "the length of " + ctx.side_ref(fact.ref) + " is " + value;
            return "the length of the " + ctx.bare_name(fact.ref) + " side of the " +
                   ctx.shape_core(fact.ref.inst) + " is " + value;
        }
    }
    return "";
}

std::string desc_clause(const ShapeInstance& s, const NameContext& ctx) {
    std::string core = "the " + ctx.shape_core(s.id);
    switch (s.kind) {
        case ShapeKind::RectPlusSemiCircle:
            return core + " is a combination of a rectangle and a semi-circle";
        case ShapeKind::RectPlusEquilateral:
            return core + " is a combination of a rectangle and an equilateral triangle";
        case ShapeKind::RectMinusSemiCircle:
            return core +
                   " is a rectangle where a semi-circle has been removed from one side of it";
        case ShapeKind::SquareMinusCircle:
            return core + " is a square where a circle has been removed from it";
        case ShapeKind::RightTriangle:
            if (ctx.annotation == Annotation::Individual)
                return core + " is a right triangle";
            return shape_display_name(ctx.naming(s.id)) + " is a right triangle";
        default: return "";
    }
}

std::string relation_clause(const ShapeInstance& s, const NameContext& ctx) {
    // "the DEF and the DEC angles are supplementary"
    const InstanceNaming& n = ctx.naming(s.id);
    std::string a1 = ctx.annotation == Annotation::Individual
                         ? ctx.angle_ref(ElementRef{s.id, "angle1"})
                         : "the " + angle_name(n, "angle1");
    std::string a2;
    if (s.link) {
        const InstanceNaming& pn = ctx.naming(s.link->parent);
        a2 = ctx.annotation == Annotation::Individual
                 ? ctx.angle_ref(ElementRef{s.link->parent, s.link->parent_role})
                 : "the " + angle_name(pn, s.link->parent_role);
    } else {
        a2 = "the " + angle_name(n, "angle2");
    }
    std::string rel =
        s.kind == ShapeKind::SupplementaryAngles ? "supplementary" : "complementary";
    if (ctx.annotation == Annotation::Individual)
        return a1 + " and " + a2 + " are " + rel;
    return a1 + " and " + a2 + " angles are " + rel;
}

}  // namespace

std::string render_question(const ProblemGraph& g, Modality modality, Annotation annotation,
                            const FormulaLibrary& lib, const TemplateSet& tset) {
    (void)tset;
    NameContext ctx(g, lib, annotation);

    std::vector<std::string> clauses;
    for (const auto& s : g.shapes) {
        bool described = false;
        switch (s.kind) {
            case ShapeKind::RectPlusSemiCircle:
            case ShapeKind::RectPlusEquilateral:
            case ShapeKind::RectMinusSemiCircle:
            case ShapeKind::SquareMinusCircle: described = true; break;
            case ShapeKind::RightTriangle:
                described = modality == Modality::TextOnly;
                break;
            default: break;
        }
        if (described) clauses.push_back(desc_clause(s, ctx));

        for (const auto& fact : g.facts) {
            if (fact.ref.inst != s.id) continue;
            if (fact.channel != Channel::Text) continue;
            clauses.push_back(fact_clause(fact, ctx));
        }

        if (is_pseudo_shape(s.kind)) clauses.push_back(relation_clause(s, ctx));
    }

    std::string query;
    {
        ElementType t = role_type(g.shape(g.query.inst).kind, g.query.role);
        switch (t) {
            case ElementType::Side:
                if (annotation == Annotation::Individual) {
                    query = "compute the length of the side of the " +
                            ctx.shape_core(g.query.inst) + " marked with question mark";
                } else if (g.shape(g.query.inst).kind == ShapeKind::SemiCircle) {
                    query = "compute the length of the " + ctx.bare_name(g.query) +
                            " diameter";
                } else {
                    query = "compute the length of the " + ctx.bare_name(g.query) +
                            " side of the " + ctx.shape_core(g.query.inst);
                }
                break;
            case ElementType::Angle:
                if (annotation == Annotation::Individual) {
                    query = "compute the degree of the angle of the " +
                            ctx.shape_core(g.query.inst) + " marked with question mark";
                } else {
                    query = "compute the degree of " + ctx.angle_ref(g.query);
                }
                break;
            case ElementType::Area:
                query = "compute the area of the " + ctx.shape_core(g.query.inst);
                break;
            case ElementType::Perimeter:
                query = "compute the perimeter of the " + ctx.shape_core(g.query.inst);
                break;
        }
    }

    SolutionTrace trace = solve(g, lib);
    std::string q;
    if (clauses.empty()) {
        q = capitalize(query) + ".";
    } else {
        q = "If " + join_list(clauses) + ", " + query + ".";
    }
    if (trace_uses_pi(trace, lib)) q += " Assume pi=3.14.";
    if (trace_needs_rounding(trace)) q += " Round computations to 2 decimal places.";
    return q;
}

std::string render_solution(const ProblemGraph& g, const SolutionTrace& trace,
                            Annotation annotation, const FormulaLibrary& lib,
                            const TemplateSet& tset) {
    NameContext ctx(g, lib, annotation);
    std::string out;
    for (const auto& step : trace.steps) {
        std::string block;
        if (step.var_solve) {
            const FormulaUse* use = nullptr;
            for (const auto& u : g.used)
                if (u.inst == step.inst && u.formula_id == step.formula_id && u.var)
                    use = &u;
            if (!use) throw UnsolvableError("variablized step without recorded use");
            block = render_var_step(step, *use, ctx, tset);
        } else {
            block = render_step(step, ctx, tset);
        }
        if (!out.empty()) out += " ";
        out += block;
    }
    if (!out.empty()) out += " ";
    out += "Therefore the final answer is " + format_number(trace.label) + ".";
    return out;
}

}  // namespace geomhop
