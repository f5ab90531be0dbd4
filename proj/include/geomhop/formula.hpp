#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geomhop/rounding.hpp"
#include "geomhop/shapes.hpp"

namespace geomhop {

enum class Op { Add, Sub, Mul, Div, Sqrt, Square, SinDeg, CosDeg, AsinDeg, AcosDeg };

bool op_is_unary(Op op);
std::string op_name(Op op);
Op op_from_name(const std::string& s);

// One step operand: a formula input, an earlier step value, or a constant.
struct Operand {
    enum class Src { Input, Step, Const };
    Src src = Src::Const;
    int index = 0;       // input or step index
    double value = 0.0;  // constant value
    std::string cname;   // constant display name ("pi", "2", ...)

    static Operand input(int i) { return {Src::Input, i, 0.0, ""}; }
    static Operand step(int i) { return {Src::Step, i, 0.0, ""}; }
    static Operand constant(double v, std::string name) { return {Src::Const, 0, v, std::move(name)}; }
};

struct FormulaStep {
    Op op;
    Operand a;
    Operand b;  // ignored for unary ops
};

// Linear relation for variablizable formulas, kept in its natural textual
// arrangement: sum(lhs terms) [+ const] = sum(rhs terms) + rhs_const.
// elem index -1 denotes the output, otherwise an input index.
struct LinearForm {
    struct Term {
        int coeff;
        int elem;
    };
    std::vector<Term> lhs;
    std::vector<Term> rhs;
    int rhs_const = 0;
};

struct FormulaSpec {
    std::string id;
    ShapeKind shape;
    std::vector<std::string> inputs;  // role names, ordered
    std::string output;               // role name
    std::vector<FormulaStep> steps;   // each result rounded to 2 dp
    bool variablizable = false;
    std::optional<LinearForm> linear;
    bool uses_pi = false;  // any step references the pi constant

    ElementType output_type() const { return role_type(shape, output); }
    int connectable_input_count() const;
};

struct EvalResult {
    double value = 0.0;
    std::vector<double> step_values;
};

// Execute the step recipe, rounding after every step.
EvalResult eval_formula(const FormulaSpec& f, const std::vector<double>& inputs,
                        const RoundingPolicy& policy = {});

// Same computation with no intermediate rounding (pi still substituted);
// one rounding at the very end. Reference path for the drift filter.
double eval_formula_exact(const FormulaSpec& f, const std::vector<double>& inputs,
                          const RoundingPolicy& policy = {});

// raw variant used to chain exact values across formulas
double eval_formula_raw(const FormulaSpec& f, const std::vector<double>& inputs,
                        const RoundingPolicy& policy = {});

// Range check for a value of the given element type (positive lengths,
// angles inside (0,180)). Throws DomainError when out of range.
void check_element_value(ElementType t, double v, const std::string& context);

// Pure geometric-consistency predicate over the currently bound values of
// one shape. Unbound roles are skipped.
bool sanity_check(ShapeKind kind, const std::map<std::string, double>& values);

}  // namespace geomhop
