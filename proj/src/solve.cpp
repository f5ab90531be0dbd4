#include "geomhop/solve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "geomhop/common.hpp"

namespace geomhop {

namespace {

struct Resolved {
    double value = 0;
    double exact = 0;
};

// child use feeding (inst, role), if any
const FormulaUse* tie_source(const ProblemGraph& g, const FormulaLibrary& lib,
                             InstanceId inst, const std::string& role) {
    for (const auto& u : g.used) {
        const auto& s = g.shape(u.inst);
        if (s.link && s.link->parent == inst && s.link->parent_role == role) {
            const FormulaSpec& f = lib.by_id(u.formula_id);
            if (f.output == s.link->child_role) return &u;
        }
    }
    return nullptr;
}

struct VarSolution {
    VarSolveInfo info;
    std::map<std::string, Resolved> element_values;  // values of expr-carrying roles
};

// Collapse the linear relation over expressions and already-known numerics
// into A*x + B = C and solve for x with a final 2-dp division.
VarSolution solve_variablized(const FormulaUse& u, const FormulaSpec& f,
                              const std::map<std::string, Resolved>& known) {
    if (!f.linear) throw UnsolvableError(f.id + ": variablized use without linear form");
    double lhs_x = 0, lhs_c = 0, rhs_x = 0, rhs_c = 0;
    auto accumulate = [&](const std::vector<LinearForm::Term>& terms, double& cx, double& cc) {
        for (const auto& t : terms) {
            std::string role = t.elem < 0 ? f.output : f.inputs.at(static_cast<size_t>(t.elem));
            auto eit = u.exprs.find(role);
            if (eit != u.exprs.end()) {
                cx += t.coeff * static_cast<double>(eit->second.a);
                cc += t.coeff * static_cast<double>(eit->second.b);
            } else {
                auto kit = known.find(role);
                if (kit == known.end())
                    throw UnsolvableError(f.id + ": unresolved element " + role +
                                          " in variablized use");
                cc += t.coeff * kit->second.value;
            }
        }
    };
    accumulate(f.linear->lhs, lhs_x, lhs_c);
    accumulate(f.linear->rhs, rhs_x, rhs_c);
    rhs_c += f.linear->rhs_const;

    double a = lhs_x - rhs_x;
    if (a == 0.0) throw DomainError(f.id + ": variable cancels out of the equation");
    double x = round2((rhs_c - lhs_c) / a);

    VarSolution vs;
    vs.info.var = *u.var;
    vs.info.lhs_coeff = llround(a);
    vs.info.lhs_const = llround(lhs_c);
    vs.info.rhs_const = llround(rhs_c);
    vs.info.x = x;
    for (const auto& [role, e] : u.exprs) {
        double v = round2(e.a * x + e.b);
        vs.element_values[role] = Resolved{v, e.a * x + e.b};
    }
    return vs;
}

SolutionTrace run_steps(const ProblemGraph& g, const FormulaLibrary& lib,
                        const std::vector<const FormulaUse*>& order,
                        std::map<ElementRef, Resolved>* fill = nullptr) {
    std::map<ElementRef, Resolved> values;
    std::map<InstanceId, std::map<std::string, double>> inst_known;

    auto note = [&](const ElementRef& ref, Resolved r) {
        values[ref] = r;
        inst_known[ref.inst][ref.role] = r.value;
        if (!sanity_check(g.shape(ref.inst).kind, inst_known[ref.inst]))
            throw DomainError("sanity check failed on instance " + std::to_string(ref.inst) +
                              " after binding " + ref.str());
    };

    // facts first; expression facts resolve through their variablized use
    for (const auto& fact : g.facts) {
        if (fact.expr) continue;
        const auto& s = g.shape(fact.ref.inst);
        auto it = s.element_values.find(fact.ref.role);
        if (it == s.element_values.end())
            throw UnsolvableError("fact without stored value: " + fact.ref.str());
        note(fact.ref, Resolved{it->second, it->second});
    }

    SolutionTrace trace;
    for (const FormulaUse* up : order) {
        const FormulaUse& u = *up;
        const FormulaSpec& f = lib.by_id(u.formula_id);
        const ShapeInstance& inst = g.shape(u.inst);
        if (inst.kind != f.shape)
            throw UnsolvableError(f.id + " applied to a " + shape_kind_name(inst.kind));

        // resolve inputs: ties beat stored facts
        std::map<std::string, Resolved> known;
        std::vector<std::string> unresolved;
        for (const auto& role : f.inputs) {
            ElementRef ref{u.inst, role};
            auto it = values.find(ref);
            if (it != values.end()) {
                known[role] = it->second;
            } else {
                unresolved.push_back(role);
            }
        }

        TraceStep step;
        step.formula_id = f.id;
        step.inst = u.inst;
        step.derived = ElementRef{u.inst, f.output};

        if (u.var) {
            VarSolution vs = solve_variablized(u, f, known);
            step.var_solve = vs.info;
            for (const auto& [role, r] : vs.element_values) {
                if (role == f.output) continue;
                known[role] = r;
                note(ElementRef{u.inst, role}, r);
            }
            for (const auto& role : unresolved) {
                if (!known.count(role))
                    throw UnsolvableError(f.id + ": missing fact for " + role);
            }
            const VarExpr& oe = u.exprs.at(f.output);
            double ax = round2(oe.a * vs.info.x);
            double v = round2(ax + oe.b);
            step.step_values = {ax, v};
            step.value = v;
            step.value_exact = oe.a * vs.info.x + oe.b;
        } else {
            if (!unresolved.empty())
                throw UnsolvableError(f.id + ": missing fact for " +
                                      ElementRef{u.inst, unresolved.front()}.str());
            std::vector<double> in_vals, in_exact;
            for (const auto& role : f.inputs) {
                in_vals.push_back(known[role].value);
                in_exact.push_back(known[role].exact);
            }
            EvalResult r = eval_formula(f, in_vals);
            step.step_values = r.step_values;
            step.value = r.value;
            step.value_exact = eval_formula_raw(f, in_exact);
        }

        for (const auto& role : f.inputs)
            step.bindings.emplace_back(ElementRef{u.inst, role}, known[role].value);

        check_element_value(f.output_type(), step.value, f.id);
        Resolved out{step.value, step.value_exact};
        note(step.derived, out);

        // propagate across the shared element to the parent
        if (inst.link && inst.link->child_role == f.output)
            note(ElementRef{inst.link->parent, inst.link->parent_role}, out);

        trace.steps.push_back(std::move(step));
    }

    auto qit = values.find(g.query);
    if (qit == values.end()) throw UnsolvableError("query not derived: " + g.query.str());
    trace.label = qit->second.value;
    trace.label_exact = round2(qit->second.exact);
    if (fill) *fill = std::move(values);
    return trace;
}

std::vector<const FormulaUse*> saturation_order(const ProblemGraph& g,
                                                const FormulaLibrary& lib,
                                                std::vector<FormulaUse>& storage) {
    std::set<ElementRef> have;
    for (const auto& fact : g.facts) have.insert(fact.ref);
    storage.clear();
    // pre-size so pointers into storage stay valid
    storage.reserve(g.shapes.size() * lib.size());

    std::vector<const FormulaUse*> order;
    bool progress = true;
    while (progress && !have.count(g.query)) {
        progress = false;
        for (const auto& s : g.shapes) {
            for (const FormulaSpec* f : lib.for_shape(s.kind)) {
                ElementRef out{s.id, f->output};
                if (have.count(out)) continue;
                bool ready = true;
                for (const auto& role : f->inputs)
                    if (!have.count(ElementRef{s.id, role})) ready = false;
                if (!ready) continue;
                FormulaUse u;
                u.formula_id = f->id;
                u.inst = s.id;
                storage.push_back(u);
                order.push_back(&storage.back());
                have.insert(out);
                if (s.link && s.link->child_role == f->output)
                    have.insert(ElementRef{s.link->parent, s.link->parent_role});
                progress = true;
            }
        }
    }
    return order;
}

}  // namespace

SolutionTrace solve(const ProblemGraph& g, const FormulaLibrary& lib, SolveMode mode) {
    std::string why;
    if (!g.well_formed(&why)) throw UnsolvableError("malformed graph: " + why);
    if (mode == SolveMode::Replay) {
        std::vector<const FormulaUse*> order;
        for (const auto& u : g.used) order.push_back(&u);
        return run_steps(g, lib, order);
    }
    std::vector<FormulaUse> storage;
    auto order = saturation_order(g, lib, storage);
    // saturation cannot honor variablized uses; values flow numerically
    return run_steps(g, lib, order);
}

SolutionTrace solve_and_fill(ProblemGraph& g, const FormulaLibrary& lib) {
    std::vector<const FormulaUse*> order;
    for (const auto& u : g.used) order.push_back(&u);
    std::map<ElementRef, Resolved> values;
    SolutionTrace t = run_steps(g, lib, order, &values);
    for (const auto& [ref, r] : values) g.shape(ref.inst).element_values[ref.role] = r.value;
    return t;
}

bool verify_trace(const ProblemGraph& g, const SolutionTrace& t, const FormulaLibrary& lib,
                  std::string* diagnostics) {
    auto fail = [&](const std::string& msg) {
        if (diagnostics) *diagnostics = msg;
        return false;
    };
    std::string why;
    if (!g.well_formed(&why)) return fail("graph: " + why);

    std::set<ElementRef> known;
    for (const auto& fact : g.facts) known.insert(fact.ref);

    if (t.steps.empty()) {
        if (!known.count(g.query)) return fail("empty trace and query is not a fact");
        const auto& s = g.shape(g.query.inst);
        auto it = s.element_values.find(g.query.role);
        if (it == s.element_values.end() || it->second != t.label)
            return fail("label does not match the fact value");
        return true;
    }

    for (size_t i = 0; i < t.steps.size(); i++) {
        const TraceStep& step = t.steps[i];
        const FormulaSpec* f = lib.find(step.formula_id);
        if (!f) return fail("unknown formula " + step.formula_id);
        if (step.bindings.size() != f->inputs.size())
            return fail(step.formula_id + ": binding arity mismatch");
        std::vector<double> in_vals;
        for (size_t k = 0; k < f->inputs.size(); k++) {
            const auto& [ref, v] = step.bindings[k];
            if (ref.inst != step.inst || ref.role != f->inputs[k])
                return fail(step.formula_id + ": binding ref mismatch at position " +
                            std::to_string(k));
            bool in_known = known.count(ref) > 0;
            bool is_var_elem = false;
            // variablized uses introduce their expression elements in place
            for (const auto& u : g.used) {
                if (u.inst == step.inst && u.formula_id == step.formula_id && u.var &&
                    u.exprs.count(ref.role))
                    is_var_elem = true;
            }
            if (!in_known && !is_var_elem)
                return fail(step.formula_id + ": input " + ref.str() +
                            " is neither a fact nor previously derived");
            in_vals.push_back(v);
        }

        if (step.var_solve) {
            // re-solve the equation and the substitution
            const FormulaUse* use = nullptr;
            for (const auto& u : g.used)
                if (u.inst == step.inst && u.formula_id == step.formula_id && u.var) use = &u;
            if (!use) return fail(step.formula_id + ": variablized step without recorded use");
            if (!f->linear) return fail(step.formula_id + ": no linear form");
            const VarSolveInfo& vi = *step.var_solve;
            if (vi.lhs_coeff == 0) return fail("degenerate equation");
            double x = round2(static_cast<double>(vi.rhs_const - vi.lhs_const) /
                              static_cast<double>(vi.lhs_coeff));
            if (x != vi.x) return fail("equation solution mismatch");
            const VarExpr& oe = use->exprs.at(f->output);
            double ax = round2(oe.a * x);
            double v = round2(ax + oe.b);
            if (step.step_values != std::vector<double>{ax, v})
                return fail("variablized step values mismatch");
            if (step.value != v) return fail("variablized value mismatch");
        } else {
            EvalResult r;
            try {
                r = eval_formula(*f, in_vals);
            } catch (const std::exception& e) {
                return fail(std::string("re-evaluation failed: ") + e.what());
            }
            if (r.step_values != step.step_values)
                return fail(step.formula_id + ": step values do not reproduce");
            if (r.value != step.value) return fail(step.formula_id + ": value mismatch");
        }

        if (step.derived.inst != step.inst || step.derived.role != f->output)
            return fail(step.formula_id + ": derived ref mismatch");
        known.insert(step.derived);
        const auto& inst = g.shape(step.inst);
        if (inst.link && inst.link->child_role == f->output)
            known.insert(ElementRef{inst.link->parent, inst.link->parent_role});
        if (step.var_solve) {
            for (const auto& u : g.used)
                if (u.inst == step.inst && u.formula_id == step.formula_id && u.var)
                    for (const auto& [role, e] : u.exprs) known.insert(ElementRef{step.inst, role});
        }
    }

    const TraceStep& last = t.steps.back();
    bool derives_query = last.derived == g.query;
    if (!derives_query && !known.count(g.query)) return fail("trace does not derive the query");
    if (t.label != last.value && !g.find_fact(g.query))
        return fail("label differs from the final derived value");
    return true;
}

ProofMetrics proof_metrics(const ProblemGraph& g, const FormulaLibrary& lib) {
    ProofMetrics m;
    const Fact* qf = g.find_fact(g.query);
    if (qf && !qf->expr) return m;  // (0,0)
    if (g.used.empty()) throw UnsolvableError("no proof recorded and query is not a fact");

    // use index deriving each element
    std::map<ElementRef, size_t> producer;
    for (size_t i = 0; i < g.used.size(); i++) {
        const FormulaSpec& f = lib.by_id(g.used[i].formula_id);
        ElementRef out{g.used[i].inst, f.output};
        producer[out] = i;
        const auto& inst = g.shape(g.used[i].inst);
        if (inst.link && inst.link->child_role == f.output)
            producer[ElementRef{inst.link->parent, inst.link->parent_role}] = i;
    }

    std::vector<int> depth(g.used.size(), -1);
    // used is in derivation order, so children come first
    for (size_t i = 0; i < g.used.size(); i++) {
        const FormulaSpec& f = lib.by_id(g.used[i].formula_id);
        int child_depth = 0;
        int premises = static_cast<int>(f.inputs.size());
        int withheld = 0;
        for (const auto& role : f.inputs) {
            ElementRef ref{g.used[i].inst, role};
            auto it = producer.find(ref);
            if (it != producer.end() && it->second < i) {
                child_depth = std::max(child_depth, depth[it->second]);
                withheld++;
            }
        }
        depth[i] = 1 + child_depth;
        m.depth = std::max(m.depth, depth[i]);
        m.width = std::max(m.width, premises);
        m.max_withheld = std::max(m.max_withheld, withheld);
        if (withheld >= 2) m.branch_count++;
    }
    return m;
}

double drift_fraction(const SolutionTrace& t) {
    if (t.label_exact == 0.0) return t.label == 0.0 ? 0.0 : 1.0;
    return std::abs(t.label - t.label_exact) / std::abs(t.label_exact);
}

bool drift_filter(const SolutionTrace& t) { return drift_fraction(t) <= 0.03; }

}  // namespace geomhop
