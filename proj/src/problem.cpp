#include "geomhop/problem.hpp"

#include <json.hpp>

#include "geomhop/json_io.hpp"

namespace geomhop {

using json = nlohmann::ordered_json;

std::string VarExpr::str() const {
    std::string s = (a == 1) ? var : std::to_string(a) + var;
    if (b > 0) s += " + " + std::to_string(b);
    if (b < 0) s += " - " + std::to_string(-b);
    return s;
}

const Fact* ProblemGraph::find_fact(const ElementRef& ref) const {
    for (const auto& f : facts)
        if (f.ref == ref) return &f;
    return nullptr;
}

bool ProblemGraph::well_formed(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (shapes.empty()) return fail("no shapes");
    for (size_t i = 0; i < shapes.size(); i++) {
        const auto& s = shapes[i];
        if (s.id != static_cast<InstanceId>(i)) return fail("instance ids not dense");
        if (s.link) {
            if (s.link->parent < 0 || s.link->parent >= static_cast<InstanceId>(shapes.size()))
                return fail("dangling parent link");
            const auto& parent = shapes[static_cast<size_t>(s.link->parent)];
            const RoleSpec* pr = find_role(parent.kind, s.link->parent_role);
            const RoleSpec* cr = find_role(s.kind, s.link->child_role);
            if (!pr || !cr) return fail("link references unknown role");
            if (!pr->connectable || !cr->connectable) return fail("link on non-connectable role");
            if (pr->type != cr->type) return fail("link joins different element kinds");
        } else if (i != 0) {
            return fail("non-root shape without parent link");
        }
    }
    for (const auto& f : facts) {
        if (f.ref.inst < 0 || f.ref.inst >= static_cast<InstanceId>(shapes.size()))
            return fail("fact references missing instance");
        if (!find_role(shapes[static_cast<size_t>(f.ref.inst)].kind, f.ref.role))
            return fail("fact references unknown role " + f.ref.str());
    }
    if (query.inst < 0 || query.inst >= static_cast<InstanceId>(shapes.size()))
        return fail("query references missing instance");
    for (const auto& u : used) {
        if (u.inst < 0 || u.inst >= static_cast<InstanceId>(shapes.size()))
            return fail("formula use on missing instance");
    }
    return true;
}

namespace {

json ref_to_json(const ElementRef& r) { return json{{"inst", r.inst}, {"role", r.role}}; }

ElementRef ref_from_json(const json& j) {
    return ElementRef{j["inst"].get<InstanceId>(), j["role"].get<std::string>()};
}

json expr_to_json(const VarExpr& e) {
    return json{{"a", e.a}, {"b", e.b}, {"var", e.var}};
}

VarExpr expr_from_json(const json& j) {
    return VarExpr{j["a"].get<int>(), j["b"].get<int>(), j["var"].get<std::string>()};
}

}  // namespace

std::string graph_to_json_text(const ProblemGraph& g) {
    json root;
    json shapes = json::array();
    for (const auto& s : g.shapes) {
        json js;
        js["id"] = s.id;
        js["kind"] = shape_kind_name(s.kind);
        if (s.link) {
            js["link"] = {{"parent", s.link->parent},
                          {"parent_role", s.link->parent_role},
                          {"child_role", s.link->child_role}};
        }
        json vals = json::object();
        for (const auto& [k, v] : s.element_values) vals[k] = v;
        js["values"] = vals;
        if (!s.vertex_labels.empty()) js["vertices"] = s.vertex_labels;
        if (!s.color.empty()) js["color"] = s.color;
        if (s.distractor) js["distractor"] = true;
        shapes.push_back(js);
    }
    root["shapes"] = shapes;

    json used = json::array();
    for (const auto& u : g.used) {
        json ju;
        ju["formula"] = u.formula_id;
        ju["inst"] = u.inst;
        ju["withheld"] = u.withheld;
        if (u.var) {
            ju["var"] = *u.var;
            json ex = json::object();
            for (const auto& [role, e] : u.exprs) ex[role] = expr_to_json(e);
            ju["exprs"] = ex;
        }
        used.push_back(ju);
    }
    root["used"] = used;

    json facts = json::array();
    for (const auto& f : g.facts) {
        json jf;
        jf["ref"] = ref_to_json(f.ref);
        jf["channel"] = f.channel == Channel::Text ? "text" : "image";
        if (f.expr) jf["expr"] = expr_to_json(*f.expr);
        if (f.distractor) jf["distractor"] = true;
        if (f.revealed) jf["revealed"] = true;
        facts.push_back(jf);
    }
    root["facts"] = facts;
    root["query"] = ref_to_json(g.query);
    return root.dump();
}

ProblemGraph graph_from_json_text(const std::string& text) {
    json root = json::parse(text);
    ProblemGraph g;
    for (const auto& js : root["shapes"]) {
        ShapeInstance s;
        s.id = js["id"].get<InstanceId>();
        s.kind = shape_kind_from_name(js["kind"].get<std::string>());
        if (js.contains("link")) {
            ParentLink l;
            l.parent = js["link"]["parent"].get<InstanceId>();
            l.parent_role = js["link"]["parent_role"].get<std::string>();
            l.child_role = js["link"]["child_role"].get<std::string>();
            s.link = l;
        }
        for (const auto& [k, v] : js["values"].items())
            s.element_values[k] = v.get<double>();
        if (js.contains("vertices"))
            s.vertex_labels = js["vertices"].get<std::vector<std::string>>();
        s.color = js.value("color", "");
        s.distractor = js.value("distractor", false);
        g.shapes.push_back(std::move(s));
    }
    for (const auto& ju : root["used"]) {
        FormulaUse u;
        u.formula_id = ju["formula"].get<std::string>();
        u.inst = ju["inst"].get<InstanceId>();
        u.withheld = ju["withheld"].get<std::vector<std::string>>();
        if (ju.contains("var")) {
            u.var = ju["var"].get<std::string>();
            for (const auto& [role, e] : ju["exprs"].items())
                u.exprs[role] = expr_from_json(e);
        }
        g.used.push_back(std::move(u));
    }
    for (const auto& jf : root["facts"]) {
        Fact f;
        f.ref = ref_from_json(jf["ref"]);
        f.channel = jf["channel"].get<std::string>() == "text" ? Channel::Text : Channel::Image;
        if (jf.contains("expr")) f.expr = expr_from_json(jf["expr"]);
        f.distractor = jf.value("distractor", false);
        f.revealed = jf.value("revealed", false);
        g.facts.push_back(std::move(f));
    }
    g.query = ref_from_json(root["query"]);
    return g;
}

std::string trace_to_json_text(const SolutionTrace& t) {
    json root;
    json steps = json::array();
    for (const auto& s : t.steps) {
        json js;
        js["formula"] = s.formula_id;
        js["inst"] = s.inst;
        json binds = json::array();
        for (const auto& [ref, v] : s.bindings)
            binds.push_back({{"ref", ref_to_json(ref)}, {"value", v}});
        js["bindings"] = binds;
        js["steps"] = s.step_values;
        js["derived"] = ref_to_json(s.derived);
        js["value"] = s.value;
        js["value_exact"] = s.value_exact;
        if (s.var_solve) {
            js["var_solve"] = {{"var", s.var_solve->var},
                               {"lhs_coeff", s.var_solve->lhs_coeff},
                               {"lhs_const", s.var_solve->lhs_const},
                               {"rhs_const", s.var_solve->rhs_const},
                               {"x", s.var_solve->x}};
        }
        steps.push_back(js);
    }
    root["steps"] = steps;
    root["label"] = t.label;
    root["label_exact"] = t.label_exact;
    return root.dump();
}

SolutionTrace trace_from_json_text(const std::string& text) {
    json root = json::parse(text);
    SolutionTrace t;
    for (const auto& js : root["steps"]) {
        TraceStep s;
        s.formula_id = js["formula"].get<std::string>();
        s.inst = js["inst"].get<InstanceId>();
        for (const auto& jb : js["bindings"])
            s.bindings.emplace_back(ref_from_json(jb["ref"]), jb["value"].get<double>());
        s.step_values = js["steps"].get<std::vector<double>>();
        s.derived = ref_from_json(js["derived"]);
        s.value = js["value"].get<double>();
        s.value_exact = js["value_exact"].get<double>();
        if (js.contains("var_solve")) {
            VarSolveInfo v;
            v.var = js["var_solve"]["var"].get<std::string>();
            v.lhs_coeff = js["var_solve"]["lhs_coeff"].get<long long>();
            v.lhs_const = js["var_solve"]["lhs_const"].get<long long>();
            v.rhs_const = js["var_solve"]["rhs_const"].get<long long>();
            v.x = js["var_solve"]["x"].get<double>();
            s.var_solve = v;
        }
        t.steps.push_back(std::move(s));
    }
    t.label = root["label"].get<double>();
    t.label_exact = root["label_exact"].get<double>();
    return t;
}

}  // namespace geomhop
