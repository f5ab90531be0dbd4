#include "geomhop/shapes.hpp"

#include <array>
#include <stdexcept>

namespace geomhop {

std::string element_type_name(ElementType t) {
    switch (t) {
        case ElementType::Side: return "side";
        case ElementType::Angle: return "angle";
        case ElementType::Area: return "area";
        case ElementType::Perimeter: return "perimeter";
    }
    return "?";
}

ElementType element_type_from_name(const std::string& s) {
    if (s == "side") return ElementType::Side;
    if (s == "angle") return ElementType::Angle;
    if (s == "area") return ElementType::Area;
    if (s == "perimeter") return ElementType::Perimeter;
    throw std::invalid_argument("unknown element type: " + s);
}

bool is_pseudo_shape(ShapeKind k) {
    return k == ShapeKind::SupplementaryAngles || k == ShapeKind::ComplementaryAngles;
}

std::string shape_kind_name(ShapeKind k) {
    switch (k) {
        case ShapeKind::Square: return "square";
        case ShapeKind::Rectangle: return "rectangle";
        case ShapeKind::RightTriangle: return "right_triangle";
        case ShapeKind::Triangle: return "triangle";
        case ShapeKind::Parallelogram: return "parallelogram";
        case ShapeKind::Trapezoid: return "trapezoid";
        case ShapeKind::Sector: return "sector";
        case ShapeKind::SemiCircle: return "semi_circle";
        case ShapeKind::RectPlusEquilateral: return "rect_plus_equilateral";
        case ShapeKind::RectMinusSemiCircle: return "rect_minus_semi_circle";
        case ShapeKind::RectPlusSemiCircle: return "rect_plus_semi_circle";
        case ShapeKind::SquareMinusCircle: return "square_minus_circle";
        case ShapeKind::SupplementaryAngles: return "supplementary_angles";
        case ShapeKind::ComplementaryAngles: return "complementary_angles";
    }
    return "?";
}

ShapeKind shape_kind_from_name(const std::string& s) {
    for (int i = 0; i < kShapeKindCount; i++) {
        ShapeKind k = static_cast<ShapeKind>(i);
        if (shape_kind_name(k) == s) return k;
    }
    throw std::invalid_argument("unknown shape kind: " + s);
}

std::string shape_kind_phrase(ShapeKind k) {
    switch (k) {
        case ShapeKind::Square: return "square";
        case ShapeKind::Rectangle: return "rectangle";
        case ShapeKind::RightTriangle: return "right triangle";
        case ShapeKind::Triangle: return "triangle";
        case ShapeKind::Parallelogram: return "parallelogram";
        case ShapeKind::Trapezoid: return "trapezoid";
        case ShapeKind::Sector: return "sector";
        case ShapeKind::SemiCircle: return "semi-circle";
        default: return "shape";
    }
}

namespace {

std::vector<ShapeSpec> build_specs() {
    std::vector<ShapeSpec> v(kShapeKindCount);
    auto& S = v;
    using ET = ElementType;

    auto set = [&](ShapeKind k, int vertices, std::vector<RoleSpec> roles) {
        ShapeSpec spec;
        spec.kind = k;
        spec.vertex_count = vertices;
        spec.roles = std::move(roles);
        S[static_cast<int>(k)] = std::move(spec);
    };

    set(ShapeKind::Square, 4,
        {{"side", ET::Side, true, -1},
         {"diagonal", ET::Side, false, -1},
         {"area", ET::Area, false, -1},
         {"perimeter", ET::Perimeter, false, -1}});

    set(ShapeKind::Rectangle, 4,
        {{"length", ET::Side, true, 0},
         {"width", ET::Side, true, 0},
         {"area", ET::Area, false, -1},
         {"perimeter", ET::Perimeter, false, -1}});

    // right angle at the first vertex; leg1/leg2 are the perpendicular
    // sides, angle1 sits opposite leg2 and angle2 opposite leg1
    set(ShapeKind::RightTriangle, 3,
        {{"leg1", ET::Side, true, 0},
         {"leg2", ET::Side, true, 0},
         {"hyp", ET::Side, true, -1},
         {"angle1", ET::Angle, true, 1},
         {"angle2", ET::Angle, true, 1},
         {"area", ET::Area, false, -1},
         {"perimeter", ET::Perimeter, false, -1}});

    set(ShapeKind::Triangle, 3,
        {{"side_ab", ET::Side, true, 0},
         {"side_bc", ET::Side, true, 0},
         {"side_ca", ET::Side, true, 0},
         {"angle_a", ET::Angle, true, 1},
         {"angle_b", ET::Angle, true, 1},
         {"angle_c", ET::Angle, true, 1},
         {"area", ET::Area, false, -1},
         {"perimeter", ET::Perimeter, false, -1}});

    set(ShapeKind::Parallelogram, 4,
        {{"side1", ET::Side, true, 0},
         {"side2", ET::Side, true, 0},
         {"angle", ET::Angle, true, -1},
         {"area", ET::Area, false, -1},
         {"perimeter", ET::Perimeter, false, -1}});

    set(ShapeKind::Trapezoid, 4,
        {{"base1", ET::Side, true, 0},
         {"base2", ET::Side, true, 0},
         {"leg1", ET::Side, true, 1},
         {"leg2", ET::Side, true, 1},
         {"height", ET::Side, false, -1},
         {"area", ET::Area, false, -1},
         {"perimeter", ET::Perimeter, false, -1}});

    set(ShapeKind::Sector, 3,
        {{"radius", ET::Side, true, -1},
         {"angle", ET::Angle, true, -1},
         {"area", ET::Area, false, -1},
         {"perimeter", ET::Perimeter, false, -1}});

    set(ShapeKind::SemiCircle, 2,
        {{"diameter", ET::Side, true, -1},
         {"area", ET::Area, false, -1},
         {"perimeter", ET::Perimeter, false, -1}});

    for (ShapeKind k : {ShapeKind::RectPlusEquilateral, ShapeKind::RectMinusSemiCircle,
                        ShapeKind::RectPlusSemiCircle}) {
        int verts = (k == ShapeKind::RectPlusEquilateral) ? 5 : 4;
        set(k, verts,
            {{"base", ET::Side, true, -1},
             {"other", ET::Side, true, -1},
             {"area", ET::Area, false, -1},
             {"perimeter", ET::Perimeter, false, -1}});
    }

    set(ShapeKind::SquareMinusCircle, 4,
        {{"side", ET::Side, true, -1}, {"area", ET::Area, false, -1}});

    set(ShapeKind::SupplementaryAngles, 0,
        {{"angle1", ET::Angle, true, 0}, {"angle2", ET::Angle, true, 0}});
    set(ShapeKind::ComplementaryAngles, 0,
        {{"angle1", ET::Angle, true, 0}, {"angle2", ET::Angle, true, 0}});

    return v;
}

const std::vector<ShapeSpec>& specs() {
    static const std::vector<ShapeSpec> v = build_specs();
    return v;
}

}  // namespace

const ShapeSpec& shape_spec(ShapeKind k) { return specs()[static_cast<int>(k)]; }

const RoleSpec* find_role(ShapeKind k, const std::string& role) {
    for (const auto& r : shape_spec(k).roles) {
        if (r.name == role) return &r;
    }
    return nullptr;
}

bool role_connectable(ShapeKind k, const std::string& role) {
    const RoleSpec* r = find_role(k, role);
    return r != nullptr && r->connectable;
}

ElementType role_type(ShapeKind k, const std::string& role) {
    const RoleSpec* r = find_role(k, role);
    if (!r) throw std::invalid_argument("unknown role " + role + " on " + shape_kind_name(k));
    return r->type;
}

}  // namespace geomhop
