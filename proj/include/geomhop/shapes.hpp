#pragma once

#include <string>
#include <vector>

namespace geomhop {

enum class ElementType { Side, Angle, Area, Perimeter };

std::string element_type_name(ElementType t);
ElementType element_type_from_name(const std::string& s);

// 12 geometric kinds plus the two angle-relation pseudo-shapes.
enum class ShapeKind {
    Square,
    Rectangle,
    RightTriangle,
    Triangle,
    Parallelogram,
    Trapezoid,
    Sector,
    SemiCircle,
    RectPlusEquilateral,
    RectMinusSemiCircle,
    RectPlusSemiCircle,
    SquareMinusCircle,
    SupplementaryAngles,
    ComplementaryAngles,
};

constexpr int kShapeKindCount = 14;
constexpr int kGeometricKindCount = 12;

bool is_pseudo_shape(ShapeKind k);
std::string shape_kind_name(ShapeKind k);
ShapeKind shape_kind_from_name(const std::string& s);

// Phrase used when a question names the shape inline ("the ABCD trapezoid").
// Composite kinds are referred to as "shape" and carry a description clause.
std::string shape_kind_phrase(ShapeKind k);

struct RoleSpec {
    std::string name;
    ElementType type;
    bool connectable = false;  // a full side or an angle at a vertex
    int sym_group = -1;        // roles sharing a group are interchangeable
};

struct ShapeSpec {
    ShapeKind kind;
    std::vector<RoleSpec> roles;
    int vertex_count = 0;  // labelled points in coordinate annotation
};

const ShapeSpec& shape_spec(ShapeKind k);
const RoleSpec* find_role(ShapeKind k, const std::string& role);
bool role_connectable(ShapeKind k, const std::string& role);
ElementType role_type(ShapeKind k, const std::string& role);

}  // namespace geomhop
