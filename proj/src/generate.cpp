#include "geomhop/generate.hpp"

#include <algorithm>
#include <cmath>

#include "geomhop/labels.hpp"
#include "geomhop/rounding.hpp"

namespace geomhop {

void GenerationConfig::validate() const {
    auto bad = [](const std::string& msg) { throw std::invalid_argument(msg); };
    if (depth < 1) bad("depth must be >= 1");
    if (p_branch < 0 || p_branch > 1) bad("p_branch outside [0,1]");
    if (rho < 0 || rho > 1) bad("rho outside [0,1]");
    if (info_placement < 0 || info_placement > 1) bad("info_placement outside [0,1]");
    if (!style.valid()) bad("visual style needs positive line width and font size");
    if (value_ranges.len_min < 1 || value_ranges.len_max < value_ranges.len_min)
        bad("bad length range");
    if (value_ranges.ang_min < 5 || value_ranges.ang_max >= 180 ||
        value_ranges.ang_max < value_ranges.ang_min || value_ranges.ang_step < 1)
        bad("bad angle range");
    if (max_attempts < 1) bad("max_attempts must be positive");
}

std::set<ShapeKind> GenerationConfig::effective_whitelist() const {
    std::set<ShapeKind> w = shape_whitelist;
    if (w.empty()) {
        for (int i = 0; i < kShapeKindCount; i++) w.insert(static_cast<ShapeKind>(i));
        return w;
    }
    // closure: angle-typed hidden inputs need an angle provider
    bool needs_angle = false;
    for (ShapeKind k : w)
        for (const auto& r : shape_spec(k).roles)
            if (r.connectable && r.type == ElementType::Angle) needs_angle = true;
    if (needs_angle) {
        w.insert(ShapeKind::SupplementaryAngles);
        w.insert(ShapeKind::ComplementaryAngles);
    }
    return w;
}

namespace {

struct Budget {
    int remaining;
    void spend(const char* what) {
        if (--remaining < 0) throw GenerationExhausted(what);
    }
};

ElementType pick_query_type(QuestionType qt, Rng& rng) {
    switch (qt) {
        case QuestionType::Side: return ElementType::Side;
        case QuestionType::Angle: return ElementType::Angle;
        case QuestionType::AreaOrPerimeter:
            return rng.bernoulli(0.5) ? ElementType::Area : ElementType::Perimeter;
        case QuestionType::Any: {
            int k = static_cast<int>(rng.uniform_int(0, 3));
            return static_cast<ElementType>(k);
        }
    }
    return ElementType::Side;
}

// uniform shape, then uniform formula of that shape, rejecting pairs that
// do not fit; mirrors the published sampling loop
const FormulaSpec* sample_shape_formula(const std::vector<ShapeKind>& shapes,
                                        const FormulaLibrary& lib, ElementType out_type,
                                        bool need_connectable_input,
                                        bool need_connectable_output, Rng& rng,
                                        Budget& budget) {
    for (;;) {
        budget.spend("shape/formula sampling budget exhausted");
        ShapeKind s = shapes[static_cast<size_t>(
            rng.uniform_int(0, static_cast<int64_t>(shapes.size()) - 1))];
        auto fs = lib.for_shape(s);
        const FormulaSpec* f = fs[static_cast<size_t>(
            rng.uniform_int(0, static_cast<int64_t>(fs.size()) - 1))];
        if (f->output_type() != out_type) continue;
        if (need_connectable_input && f->connectable_input_count() == 0) continue;
        if (need_connectable_output && !role_connectable(f->shape, f->output)) continue;
        return f;
    }
}

struct StructureBuilder {
    const GenerationConfig& cfg;
    const FormulaLibrary& lib;
    Rng& rng;
    Budget& budget;
    ProblemGraph g;
    std::vector<ShapeKind> real_shapes;  // whitelisted non-pseudo
    std::vector<ShapeKind> all_shapes;   // whitelisted incl. pseudo

    // returns the new instance id; appends uses in child-first order
    InstanceId grow(ElementType out_type, int hops_left,
                    std::optional<ParentLink> link_proto) {
        bool leaf = hops_left <= 1;
        const auto& pool = link_proto ? all_shapes : real_shapes;
        const FormulaSpec* f = sample_shape_formula(pool, lib, out_type, !leaf,
                                                     link_proto.has_value(), rng, budget);

        InstanceId id = static_cast<InstanceId>(g.shapes.size());
        ShapeInstance inst;
        inst.id = id;
        inst.kind = f->shape;
        if (link_proto) {
            link_proto->child_role = f->output;
            inst.link = link_proto;
        }
        g.shapes.push_back(inst);

        FormulaUse use;
        use.formula_id = f->id;
        use.inst = id;

        if (!leaf) {
            std::vector<std::string> connectable;
            for (const auto& r : f->inputs)
                if (role_connectable(f->shape, r)) connectable.push_back(r);
            size_t first = static_cast<size_t>(
                rng.uniform_int(0, static_cast<int64_t>(connectable.size()) - 1));
            use.withheld.push_back(connectable[first]);
            if (connectable.size() >= 2 && rng.bernoulli(cfg.p_branch)) {
                connectable.erase(connectable.begin() + static_cast<long>(first));
                size_t second = static_cast<size_t>(
                    rng.uniform_int(0, static_cast<int64_t>(connectable.size()) - 1));
                use.withheld.push_back(connectable[second]);
            }
        }

        // recurse first so `used` ends up children-before-parents
        for (const auto& role : use.withheld) {
            ParentLink child_link;
            child_link.parent = id;
            child_link.parent_role = role;
            grow(role_type(f->shape, role), hops_left - 1, child_link);
        }

        // every non-withheld input becomes a fact slot
        for (const auto& role : f->inputs) {
            if (std::find(use.withheld.begin(), use.withheld.end(), role) !=
                use.withheld.end())
                continue;
            g.facts.push_back(Fact{ElementRef{id, role}, Channel::Text, std::nullopt,
                                   false, false});
        }
        g.used.push_back(std::move(use));
        return id;
    }
};

// canonical forward formula recovering an aggregate role of a shape
const FormulaSpec* forward_formula(const FormulaLibrary& lib, ShapeKind kind,
                                   const std::string& role) {
    ElementType t = role_type(kind, role);
    for (const FormulaSpec* f : lib.with_output_type(kind, t)) {
        if (f->output != role) continue;
        bool primitive_inputs = true;
        for (const auto& in : f->inputs) {
            ElementType it = role_type(kind, in);
            if (it == ElementType::Area || it == ElementType::Perimeter)
                primitive_inputs = false;
        }
        if (primitive_inputs) return f;
    }
    return nullptr;
}

struct ValueAssigner {
    const GenerationConfig& cfg;
    const FormulaLibrary& lib;
    Rng& rng;
    Budget& budget;
    ProblemGraph& g;
    std::map<ElementRef, double> values;

    double sample_primitive(ElementType t) {
        if (t == ElementType::Angle) {
            const auto& vr = cfg.value_ranges;
            int steps = (vr.ang_max - vr.ang_min) / vr.ang_step;
            return vr.ang_min +
                   vr.ang_step * static_cast<int>(rng.uniform_int(0, steps));
        }
        return static_cast<double>(
            rng.uniform_int(cfg.value_ranges.len_min, cfg.value_ranges.len_max));
    }

    double sample_direct_aggregate(ElementType t) {
        if (t == ElementType::Perimeter)
            return static_cast<double>(rng.uniform_int(10, 120));
        return static_cast<double>(rng.uniform_int(10, 600));
    }

    // one sampling pass for a single use; throws DomainError to retry
    void try_assign(const FormulaUse& use) {
        const FormulaSpec& f = lib.by_id(use.formula_id);
        ShapeInstance& inst = g.shape(use.inst);
        std::map<std::string, double> local;  // values known on this instance

        // tied inputs were derived by children
        for (const auto& role : use.withheld) {
            auto it = values.find(ElementRef{use.inst, role});
            if (it == values.end())
                throw UnsolvableError(f.id + ": child value missing for " + role);
            local[role] = it->second;
        }

        // primitive facts first
        std::vector<std::string> aggregate_facts;
        for (const auto& role : f.inputs) {
            if (local.count(role)) continue;
            ElementType t = role_type(f.shape, role);
            if (t == ElementType::Area || t == ElementType::Perimeter) {
                aggregate_facts.push_back(role);
                continue;
            }
            local[role] = sample_primitive(t);
        }
        if (!sanity_check(f.shape, local)) throw DomainError("sampled facts fail sanity");

        // aggregates: computed forward from hidden dimensions, or sampled
        for (const auto& role : aggregate_facts) {
            if (cfg.aggregate_sampling == AggregateSampling::Direct) {
                local[role] = sample_direct_aggregate(role_type(f.shape, role));
                continue;
            }
            const FormulaSpec* fwd = forward_formula(lib, f.shape, role);
            if (!fwd) {
                local[role] = sample_direct_aggregate(role_type(f.shape, role));
                continue;
            }
            // hidden primitive dims the forward recipe needs
            for (int tries = 0;; tries++) {
                std::map<std::string, double> trial = local;
                for (const auto& in : fwd->inputs)
                    if (!trial.count(in)) trial[in] = sample_primitive(role_type(f.shape, in));
                if (!sanity_check(f.shape, trial)) {
                    budget.spend("hidden dimension sampling");
                    if (tries > 40) throw DomainError("hidden dims never sane");
                    continue;
                }
                std::vector<double> in_vals;
                for (const auto& in : fwd->inputs) in_vals.push_back(trial[in]);
                local[role] = eval_formula(*fwd, in_vals).value;
                // keep hidden dims for schematic drawing
                for (const auto& [k, v] : trial) local.emplace(k, v);
                break;
            }
        }

        // evaluate this use on the assigned facts
        std::vector<double> in_vals;
        for (const auto& role : f.inputs) in_vals.push_back(local.at(role));
        EvalResult r = eval_formula(f, in_vals);
        check_element_value(f.output_type(), r.value, f.id);
        local[f.output] = r.value;
        if (!sanity_check(f.shape, local)) throw DomainError("derived value fails sanity");

        for (const auto& [role, v] : local) inst.element_values[role] = v;
        values[ElementRef{use.inst, f.output}] = r.value;
        if (inst.link && inst.link->child_role == f.output)
            values[ElementRef{inst.link->parent, inst.link->parent_role}] = r.value;
    }

    void run() {
        for (const auto& use : g.used) {
            ShapeInstance& inst = g.shape(use.inst);
            for (int tries = 0;; tries++) {
                budget.spend("value assignment budget exhausted");
                auto saved_vals = inst.element_values;
                try {
                    try_assign(use);
                    break;
                } catch (const DomainError&) {
                    inst.element_values = std::move(saved_vals);
                    if (tries >= 60) throw;  // give up on this example
                }
            }
        }
    }
};

}  // namespace

ProblemGraph sample_structure(const GenerationConfig& cfg, Rng& rng, ElementType& query_type,
                              const FormulaLibrary& lib) {
    Budget budget{cfg.max_attempts * 4};
    auto wl = cfg.effective_whitelist();
    StructureBuilder b{cfg, lib, rng, budget, {}, {}, {}};
    for (ShapeKind k : wl) {
        b.all_shapes.push_back(k);
        if (!is_pseudo_shape(k)) b.real_shapes.push_back(k);
    }
    if (b.real_shapes.empty())
        throw std::invalid_argument("whitelist holds no geometric shapes");
    query_type = pick_query_type(cfg.question_type, rng);
    InstanceId root = b.grow(query_type, cfg.depth, std::nullopt);
    const FormulaSpec& rf = lib.by_id(b.g.used.back().formula_id);
    b.g.query = ElementRef{root, rf.output};
    return std::move(b.g);
}

SolutionTrace assign_values(ProblemGraph& g, const GenerationConfig& cfg, Rng& rng,
                            const FormulaLibrary& lib) {
    Budget budget{cfg.max_attempts * 4};
    ValueAssigner a{cfg, lib, rng, budget, g, {}};
    a.run();
    return solve_and_fill(g, lib);
}

void add_distractor(ProblemGraph& g, const FormulaLibrary& lib) {
    ProofMetrics m = proof_metrics(g, lib);
    if (m.depth < 2) throw std::invalid_argument("add_distractor needs depth >= 2");

    // the use deriving the query
    size_t root_idx = g.used.size();
    for (size_t i = 0; i < g.used.size(); i++) {
        const FormulaSpec& f = lib.by_id(g.used[i].formula_id);
        if (ElementRef{g.used[i].inst, f.output} == g.query) root_idx = i;
    }
    if (root_idx == g.used.size()) throw UnsolvableError("no use derives the query");
    FormulaUse root_use = g.used[root_idx];
    InstanceId root = root_use.inst;

    for (const auto& role : root_use.withheld) {
        ElementRef ref{root, role};
        auto it = g.shape(root).element_values.find(role);
        if (it == g.shape(root).element_values.end())
            throw UnsolvableError("hidden element has no solved value; solve first");
        Fact f;
        f.ref = ref;
        f.channel = Channel::Text;
        f.revealed = true;
        g.facts.push_back(f);
    }
    root_use.withheld.clear();

    for (auto& s : g.shapes)
        if (s.id != root) s.distractor = true;
    for (auto& f : g.facts)
        if (f.ref.inst != root) f.distractor = true;

    g.used = {root_use};
}

int variablize(ProblemGraph& g, double rho, Rng& rng, const FormulaLibrary& lib) {
    static const char* kVarLetters[] = {"x", "y", "z", "w", "v", "u", "t", "s"};
    int count = 0;
    for (auto& use : g.used) {
        const FormulaSpec& f = lib.by_id(use.formula_id);
        if (!f.variablizable || !f.linear) continue;
        if (!rng.bernoulli(rho)) continue;

        // candidate elements: provided fact inputs plus the output
        std::vector<std::string> roles;
        bool ok = true;
        for (const auto& role : f.inputs) {
            ElementRef ref{use.inst, role};
            const Fact* fact = g.find_fact(ref);
            if (fact) {
                if (fact->expr) ok = false;  // already variablized
                roles.push_back(role);
            }
        }
        roles.push_back(f.output);
        if (!ok || roles.empty()) continue;

        std::map<std::string, double> vals;
        for (const auto& role : roles) {
            auto it = g.shape(use.inst).element_values.find(role);
            if (it == g.shape(use.inst).element_values.end() || !is_integral_2dp(it->second) ||
                it->second < 3 || it->second > 1000) {
                ok = false;
                break;
            }
            vals[role] = it->second;
        }
        if (!ok) continue;

        // pick x and per-element (a,b) with a in [2,6], b in [1,60]
        std::map<std::string, VarExpr> exprs;
        bool found = false;
        for (int attempt = 0; attempt < 16 && !found; attempt++) {
            int x = static_cast<int>(rng.uniform_int(2, 9));
            std::map<std::string, VarExpr> trial;
            bool feasible = true;
            for (const auto& role : roles) {
                int v = static_cast<int>(llround(vals[role]));
                std::vector<int> as;
                for (int a = 2; a <= 6; a++) {
                    int bcoef = v - a * x;
                    if (bcoef >= 1 && bcoef <= 60) as.push_back(a);
                }
                if (as.empty()) {
                    feasible = false;
                    break;
                }
                int a = as[static_cast<size_t>(
                    rng.uniform_int(0, static_cast<int64_t>(as.size()) - 1))];
                trial[role] = VarExpr{a, v - a * x, "?"};
            }
            if (!feasible) continue;
            // the collapsed equation must keep a positive x coefficient
            double lhs_x = 0, rhs_x = 0;
            auto acc = [&](const std::vector<LinearForm::Term>& terms, double& cx) {
                for (const auto& t : terms) {
                    std::string role =
                        t.elem < 0 ? f.output : f.inputs.at(static_cast<size_t>(t.elem));
                    auto it = trial.find(role);
                    if (it != trial.end()) cx += t.coeff * it->second.a;
                }
            };
            acc(f.linear->lhs, lhs_x);
            acc(f.linear->rhs, rhs_x);
            if (lhs_x - rhs_x < 1) continue;
            exprs = std::move(trial);
            found = true;
        }
        if (!found) continue;

        std::string letter = kVarLetters[count % 8];
        for (auto& [role, e] : exprs) e.var = letter;
        use.var = letter;
        use.exprs = exprs;
        for (auto& fact : g.facts) {
            if (fact.ref.inst == use.inst && exprs.count(fact.ref.role) &&
                fact.ref.role != f.output)
                fact.expr = exprs[fact.ref.role];
        }
        Fact out_fact;
        out_fact.ref = ElementRef{use.inst, f.output};
        out_fact.channel = Channel::Text;
        out_fact.expr = exprs[f.output];
        g.facts.push_back(out_fact);
        count++;
    }
    return count;
}

void assign_channels(ProblemGraph& g, const GenerationConfig& cfg, Rng& rng) {
    for (auto& f : g.facts) {
        if (cfg.modality == Modality::TextOnly || f.expr || f.revealed) {
            f.channel = Channel::Text;
        } else {
            f.channel = rng.bernoulli(cfg.info_placement) ? Channel::Image : Channel::Text;
        }
    }
}

GenerationOutcome backward_generate(const GenerationConfig& cfg, const FormulaLibrary& lib) {
    Rng rng(cfg.seed);
    return backward_generate(cfg, rng, lib);
}

GenerationOutcome backward_generate(const GenerationConfig& cfg, Rng& rng,
                                    const FormulaLibrary& lib) {
    cfg.validate();
    for (int attempt = 1; attempt <= cfg.max_attempts; attempt++) {
        try {
            GenerationOutcome out;
            out.attempts = attempt;
            ProblemGraph g = sample_structure(cfg, rng, out.query_type, lib);
            SolutionTrace trace = assign_values(g, cfg, rng, lib);
            if (!drift_filter(trace)) continue;

            out.nominal_depth = proof_metrics(g, lib).depth;
            if (out.nominal_depth != cfg.depth) continue;

            if (cfg.distractor_mode == DistractorMode::RevealIntermediate &&
                out.nominal_depth >= 2) {
                add_distractor(g, lib);
                trace = solve_and_fill(g, lib);
            }
            out.variablized_uses = variablize(g, cfg.rho, rng, lib);
            if (out.variablized_uses > 0) {
                trace = solve_and_fill(g, lib);
                if (!drift_filter(trace)) continue;
            }
            assign_channels(g, cfg, rng);
            assign_labels(g, lib);
            out.effective_depth = proof_metrics(g, lib).depth;
            out.graph = std::move(g);
            out.trace = std::move(trace);
            return out;
        } catch (const DomainError&) {
        } catch (const UnsolvableError&) {
        } catch (const GenerationExhausted&) {
        }
    }
    throw GenerationExhausted("no valid example within the attempt budget");
}

}  // namespace geomhop
