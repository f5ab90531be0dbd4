#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geomhop/shapes.hpp"

namespace geomhop {

using InstanceId = int;

struct ElementRef {
    InstanceId inst = -1;
    std::string role;

    bool operator==(const ElementRef& o) const { return inst == o.inst && role == o.role; }
    bool operator<(const ElementRef& o) const {
        return inst != o.inst ? inst < o.inst : role < o.role;
    }
    std::string str() const { return std::to_string(inst) + ":" + role; }
};

enum class Channel { Text, Image };

// linear expression a*var + b shown instead of a numeric value
struct VarExpr {
    int a = 0;
    int b = 0;
    std::string var = "x";
    std::string str() const;
    double value_at(int x) const { return a * x + b; }
};

struct Fact {
    ElementRef ref;
    Channel channel = Channel::Text;
    std::optional<VarExpr> expr;
    bool distractor = false;  // not needed by any minimal proof
    bool revealed = false;    // shortcut fact added by distractor mode
};

// How a child instance hangs off its parent: the child formula's output
// element and one connectable element of the parent carry the same value.
struct ParentLink {
    InstanceId parent = -1;
    std::string parent_role;  // withheld element on the parent
    std::string child_role;   // output role on the child
};

struct ShapeInstance {
    InstanceId id = -1;
    ShapeKind kind;
    std::optional<ParentLink> link;
    std::map<std::string, double> element_values;  // filled as deduction proceeds
    std::vector<std::string> vertex_labels;        // assigned by layout
    std::string color;                             // palette name assigned by layout
    bool distractor = false;
};

// One formula application. Variablized uses carry per-element expressions
// (fact inputs plus the output) sharing a single variable.
struct FormulaUse {
    std::string formula_id;
    InstanceId inst = -1;
    std::vector<std::string> withheld;  // input roles derived by child shapes
    std::optional<std::string> var;     // variable letter when variablized
    std::map<std::string, VarExpr> exprs;  // role -> expression (output included)
};

struct ProblemGraph {
    std::vector<ShapeInstance> shapes;  // index == id, root first
    std::vector<FormulaUse> used;       // derivation order: children before parents
    std::vector<Fact> facts;
    ElementRef query;

    const ShapeInstance& shape(InstanceId id) const { return shapes.at(static_cast<size_t>(id)); }
    ShapeInstance& shape(InstanceId id) { return shapes.at(static_cast<size_t>(id)); }
    const Fact* find_fact(const ElementRef& ref) const;
    bool well_formed(std::string* why = nullptr) const;
};

struct VarSolveInfo {
    std::string var;
    long long lhs_coeff = 0, lhs_const = 0;  // collapsed equation A x + B = C
    long long rhs_const = 0;
    double x = 0;
};

struct TraceStep {
    std::string formula_id;
    InstanceId inst = -1;
    std::vector<std::pair<ElementRef, double>> bindings;  // resolved input values
    std::vector<double> step_values;                      // rounded intermediates
    ElementRef derived;
    double value = 0;
    double value_exact = 0;  // chained without intermediate rounding
    std::optional<VarSolveInfo> var_solve;
};

struct SolutionTrace {
    std::vector<TraceStep> steps;
    double label = 0;
    double label_exact = 0;
};

}  // namespace geomhop
