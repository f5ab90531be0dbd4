#include "geomhop/formula.hpp"

#include <cmath>

#include "geomhop/common.hpp"

namespace geomhop {

bool op_is_unary(Op op) {
    switch (op) {
        case Op::Sqrt:
        case Op::Square:
        case Op::SinDeg:
        case Op::CosDeg:
        case Op::AsinDeg:
        case Op::AcosDeg: return true;
        default: return false;
    }
}

std::string op_name(Op op) {
    switch (op) {
        case Op::Add: return "add";
        case Op::Sub: return "sub";
        case Op::Mul: return "mul";
        case Op::Div: return "div";
        case Op::Sqrt: return "sqrt";
        case Op::Square: return "square";
        case Op::SinDeg: return "sin";
        case Op::CosDeg: return "cos";
        case Op::AsinDeg: return "asin";
        case Op::AcosDeg: return "acos";
    }
    return "?";
}

Op op_from_name(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(Op::AcosDeg); i++) {
        Op op = static_cast<Op>(i);
        if (op_name(op) == s) return op;
    }
    throw std::invalid_argument("unknown op: " + s);
}

int FormulaSpec::connectable_input_count() const {
    int n = 0;
    for (const auto& r : inputs) {
        if (role_connectable(shape, r)) n++;
    }
    return n;
}

namespace {

constexpr double kDegPerRad = 57.29577951308232;

double fetch(const Operand& o, const std::vector<double>& inputs,
             const std::vector<double>& steps) {
    switch (o.src) {
        case Operand::Src::Input: return inputs.at(static_cast<size_t>(o.index));
        case Operand::Src::Step: return steps.at(static_cast<size_t>(o.index));
        case Operand::Src::Const: return o.value;
    }
    return 0.0;
}

double apply(Op op, double a, double b, const std::string& fid) {
    switch (op) {
        case Op::Add: return a + b;
        case Op::Sub: return a - b;
        case Op::Mul: return a * b;
        case Op::Div:
            if (b == 0.0) throw DomainError(fid + ": division by zero");
            return a / b;
        case Op::Sqrt:
            if (a < 0.0) throw DomainError(fid + ": sqrt of negative");
            return std::sqrt(a);
        case Op::Square: return a * a;
        case Op::SinDeg: return std::sin(a / kDegPerRad);
        case Op::CosDeg: return std::cos(a / kDegPerRad);
        case Op::AsinDeg:
            if (a < -1.0 || a > 1.0) throw DomainError(fid + ": asin argument outside [-1,1]");
            return std::asin(a) * kDegPerRad;
        case Op::AcosDeg:
            if (a < -1.0 || a > 1.0) throw DomainError(fid + ": acos argument outside [-1,1]");
            return std::acos(a) * kDegPerRad;
    }
    return 0.0;
}

}  // namespace

EvalResult eval_formula(const FormulaSpec& f, const std::vector<double>& inputs,
                        const RoundingPolicy&) {
    if (inputs.size() != f.inputs.size())
        throw UnsolvableError(f.id + ": binding count mismatch");
    EvalResult r;
    r.step_values.reserve(f.steps.size());
    for (const auto& st : f.steps) {
        double a = fetch(st.a, inputs, r.step_values);
        double b = op_is_unary(st.op) ? 0.0 : fetch(st.b, inputs, r.step_values);
        double raw = apply(st.op, a, b, f.id);
        if (!std::isfinite(raw)) throw DomainError(f.id + ": non-finite step value");
        r.step_values.push_back(round2(raw));
    }
    if (r.step_values.empty()) throw UnsolvableError(f.id + ": empty recipe");
    r.value = r.step_values.back();
    return r;
}

double eval_formula_raw(const FormulaSpec& f, const std::vector<double>& inputs,
                        const RoundingPolicy&) {
    if (inputs.size() != f.inputs.size())
        throw UnsolvableError(f.id + ": binding count mismatch");
    std::vector<double> steps;
    steps.reserve(f.steps.size());
    for (const auto& st : f.steps) {
        double a = fetch(st.a, inputs, steps);
        double b = op_is_unary(st.op) ? 0.0 : fetch(st.b, inputs, steps);
        double raw = apply(st.op, a, b, f.id);
        if (!std::isfinite(raw)) throw DomainError(f.id + ": non-finite step value");
        steps.push_back(raw);
    }
    if (steps.empty()) throw UnsolvableError(f.id + ": empty recipe");
    return steps.back();
}

double eval_formula_exact(const FormulaSpec& f, const std::vector<double>& inputs,
                          const RoundingPolicy& policy) {
    return round2(eval_formula_raw(f, inputs, policy));
}

void check_element_value(ElementType t, double v, const std::string& context) {
    if (!std::isfinite(v)) throw DomainError(context + ": non-finite value");
    switch (t) {
        case ElementType::Side:
        case ElementType::Area:
        case ElementType::Perimeter:
            if (v <= 0.0) throw DomainError(context + ": non-positive value");
            break;
        case ElementType::Angle:
            if (v <= 0.0 || v >= 180.0) throw DomainError(context + ": angle outside (0,180)");
            break;
    }
}

namespace {

bool get(const std::map<std::string, double>& m, const char* k, double& out) {
    auto it = m.find(k);
    if (it == m.end()) return false;
    out = it->second;
    return true;
}

constexpr double kTol2dp = 0.015;  // half a cent plus float slack

}  // namespace

bool sanity_check(ShapeKind kind, const std::map<std::string, double>& values) {
    const ShapeSpec& spec = shape_spec(kind);
    for (const auto& [role, v] : values) {
        const RoleSpec* r = find_role(kind, role);
        if (!r) return false;
        if (!std::isfinite(v) || v <= 0.0) return false;
        if (r->type == ElementType::Angle && v >= 180.0) return false;
    }
    (void)spec;
    double a = 0, b = 0, c = 0;
    switch (kind) {
        case ShapeKind::RightTriangle: {
            if (get(values, "hyp", c)) {
                if (get(values, "leg1", a) && a >= c) return false;
                if (get(values, "leg2", b) && b >= c) return false;
            }
            if (get(values, "angle1", a) && get(values, "angle2", b)) {
                if (std::abs(a + b - 90.0) > kTol2dp) return false;
            }
            if (get(values, "angle1", a) && a >= 90.0) return false;
            if (get(values, "angle2", b) && b >= 90.0) return false;
            break;
        }
        case ShapeKind::Triangle: {
            if (get(values, "angle_a", a) && get(values, "angle_b", b) &&
                get(values, "angle_c", c)) {
                if (std::abs(a + b + c - 180.0) > kTol2dp) return false;
            }
            if (get(values, "side_ab", a) && get(values, "side_bc", b) &&
                get(values, "side_ca", c)) {
                if (a + b <= c || b + c <= a || a + c <= b) return false;
            }
            break;
        }
        case ShapeKind::Trapezoid: {
            if (get(values, "base1", a) && get(values, "base2", b)) {
                if (a == b) return false;
            }
            break;
        }
        case ShapeKind::Sector: {
            if (get(values, "angle", a)) {
                if (a <= 0.0 || a > 180.0) return false;
            }
            break;
        }
        case ShapeKind::SupplementaryAngles: {
            if (get(values, "angle1", a) && get(values, "angle2", b)) {
                if (std::abs(a + b - 180.0) > kTol2dp) return false;
            }
            break;
        }
        case ShapeKind::ComplementaryAngles: {
            if (get(values, "angle1", a) && get(values, "angle2", b)) {
                if (std::abs(a + b - 90.0) > kTol2dp) return false;
            }
            if (get(values, "angle1", a) && a >= 90.0) return false;
            if (get(values, "angle2", b) && b >= 90.0) return false;
            break;
        }
        default: break;
    }
    return true;
}

}  // namespace geomhop
