#include "geomhop/labels.hpp"

#include <algorithm>

namespace geomhop {

namespace {

std::string letter_for(int index) {
    std::string s;
    s += static_cast<char>('A' + index % 26);
    if (index >= 26) s = std::string(1, static_cast<char>('A' + index / 26 - 1)) + s;
    return s;
}

void side(InstanceNaming& n, const std::string& role, int a, int b) {
    n.role_vertices[role] = {a, b};
}

void angle(InstanceNaming& n, const std::string& role, int prev, int vertex, int next) {
    n.role_vertices[role] = {prev, vertex, next};
}

void wire_quad(InstanceNaming& n, ShapeKind kind, bool side_shared) {
    switch (kind) {
        case ShapeKind::Square:
            side(n, "side", side_shared ? 3 : 0, side_shared ? 0 : 1);
            side(n, "diagonal", 0, 2);
            break;
        case ShapeKind::SquareMinusCircle:
            side(n, "side", 3, 0);
            break;
        case ShapeKind::Rectangle:
            side(n, "length", 0, 1);
            side(n, "width", 3, 0);
            break;
        case ShapeKind::Parallelogram:
            side(n, "side1", 0, 1);
            side(n, "side2", 3, 0);
            angle(n, "angle", 3, 0, 1);
            break;
        case ShapeKind::Trapezoid:
            side(n, "base1", 3, 0);
            side(n, "base2", 1, 2);
            side(n, "leg1", 0, 1);
            side(n, "leg2", 2, 3);
            break;
        default: break;
    }
}

}  // namespace

const std::vector<std::string>& color_palette() {
    static const std::vector<std::string> p = {"blue",  "red",     "purple", "gray",
                                               "cyan",  "orange",  "lime",   "green",
                                               "brown", "magenta", "yellow", "pink"};
    return p;
}

std::vector<InstanceNaming> assign_labels(ProblemGraph& g, const FormulaLibrary& lib) {
    (void)lib;
    std::vector<InstanceNaming> namings;
    namings.reserve(g.shapes.size());
    int next_letter = 0;
    auto fresh = [&]() { return letter_for(next_letter++); };

    // whether any child hangs on a given role of a given instance
    auto child_on = [&](InstanceId id, const std::string& role) {
        for (const auto& s : g.shapes)
            if (s.link && s.link->parent == id && s.link->parent_role == role) return true;
        return false;
    };

    for (const auto& inst : g.shapes) {
        InstanceNaming n;
        ShapeKind kind = inst.kind;

        std::vector<std::string> sh;  // letters of the shared parent element
        if (inst.link) {
            const InstanceNaming& pn = namings[static_cast<size_t>(inst.link->parent)];
            auto it = pn.role_vertices.find(inst.link->parent_role);
            if (it != pn.role_vertices.end())
                for (int idx : it->second)
                    sh.push_back(pn.vertices[static_cast<size_t>(idx)]);
        }
        bool edge_shared = inst.link && sh.size() == 2;
        bool angle_shared = inst.link && sh.size() == 3;

        switch (kind) {
            case ShapeKind::Square:
            case ShapeKind::SquareMinusCircle: {
                if (edge_shared) {
                    // [s2, n, n, s1]: shared edge sits on (v3, v0)
                    n.vertices = {sh[1], fresh(), fresh(), sh[0]};
                    wire_quad(n, kind, true);
                } else {
                    n.vertices = {fresh(), fresh(), fresh(), fresh()};
                    bool hosts = kind == ShapeKind::Square ? child_on(inst.id, "side") : true;
                    wire_quad(n, kind, kind == ShapeKind::SquareMinusCircle || hosts);
                }
                break;
            }
            case ShapeKind::Rectangle:
            case ShapeKind::Parallelogram: {
                if (edge_shared) {
                    n.vertices = {sh[0], sh[1], fresh(), fresh()};
                } else {
                    n.vertices = {fresh(), fresh(), fresh(), fresh()};
                }
                wire_quad(n, kind, false);
                break;
            }
            case ShapeKind::Trapezoid: {
                if (edge_shared) {
                    n.vertices = {sh[1], fresh(), fresh(), sh[0]};
                } else {
                    n.vertices = {fresh(), fresh(), fresh(), fresh()};
                }
                wire_quad(n, kind, false);
                break;
            }
            case ShapeKind::RightTriangle: {
                // right angle at v0; leg1=(0,1), leg2=(0,2), hyp=(1,2)
                if (edge_shared) {
                    const std::string& out = inst.link->child_role;
                    if (out == "hyp") {
                        n.vertices = {fresh(), sh[0], sh[1]};
                    } else if (out == "leg1") {
                        n.vertices = {sh[0], sh[1], fresh()};
                    } else {
                        n.vertices = {sh[0], fresh(), sh[1]};
                    }
                } else if (angle_shared) {
                    n.vertices = {fresh(), fresh(), sh[1]};
                } else {
                    n.vertices = {fresh(), fresh(), fresh()};
                }
                side(n, "leg1", 0, 1);
                side(n, "leg2", 0, 2);
                side(n, "hyp", 1, 2);
                angle(n, "angle1", 0, 1, 2);
                angle(n, "angle2", 1, 2, 0);
                break;
            }
            case ShapeKind::Triangle: {
                if (edge_shared) {
                    const std::string& out = inst.link->child_role;
                    if (out == "side_ab") {
                        n.vertices = {sh[0], sh[1], fresh()};
                    } else if (out == "side_bc") {
                        n.vertices = {fresh(), sh[0], sh[1]};
                    } else {
                        n.vertices = {sh[1], fresh(), sh[0]};
                    }
                } else if (angle_shared) {
                    n.vertices = {sh[1], fresh(), fresh()};
                } else {
                    n.vertices = {fresh(), fresh(), fresh()};
                }
                side(n, "side_ab", 0, 1);
                side(n, "side_bc", 1, 2);
                side(n, "side_ca", 2, 0);
                angle(n, "angle_a", 2, 0, 1);
                angle(n, "angle_b", 0, 1, 2);
                angle(n, "angle_c", 1, 2, 0);
                break;
            }
            case ShapeKind::Sector: {
                // [arc-end-new, center, arc-end-shared]; the center takes
                // the alphabetically first shared letter
                if (edge_shared) {
                    n.vertices = {fresh(), std::min(sh[0], sh[1]), std::max(sh[0], sh[1])};
                } else if (angle_shared) {
                    n.vertices = {fresh(), sh[1], fresh()};
                } else {
                    n.vertices = {fresh(), fresh(), fresh()};
                }
                side(n, "radius", 1, 2);
                angle(n, "angle", 0, 1, 2);
                break;
            }
            case ShapeKind::SemiCircle: {
                if (edge_shared) {
                    n.vertices = {sh[0], sh[1]};
                } else {
                    n.vertices = {fresh(), fresh()};
                }
                side(n, "diameter", 0, 1);
                break;
            }
            case ShapeKind::RectPlusEquilateral:
            case ShapeKind::RectMinusSemiCircle:
            case ShapeKind::RectPlusSemiCircle: {
                int extra = kind == ShapeKind::RectPlusEquilateral ? 3 : 2;
                if (edge_shared) {
                    n.vertices = {sh[0], sh[1]};
                } else {
                    n.vertices = {fresh(), fresh()};
                }
                for (int i = 0; i < extra; i++) n.vertices.push_back(fresh());
                // the edge tied to the parent sits on (v0,v1); when tied by
                // the "other" side, "base" lives on the opposite full side,
                // never on the arc-replaced edge
                std::string tied = inst.link ? inst.link->child_role : std::string("base");
                side(n, tied, 0, 1);
                if (tied == "base") {
                    side(n, "other", 1, 2);
                } else {
                    int last = static_cast<int>(n.vertices.size()) - 1;
                    side(n, "base", last, 0);
                }
                break;
            }
            case ShapeKind::SupplementaryAngles:
            case ShapeKind::ComplementaryAngles: {
                // [shared-ray end, vertex, new-ray end]
                if (angle_shared) {
                    n.vertices = {sh[0], sh[1], fresh()};
                } else {
                    n.vertices = {fresh(), fresh(), fresh()};
                }
                angle(n, "angle2", 0, 1, 2);
                n.role_vertices["angle1"] = {2, 1, 0};
                break;
            }
        }

        namings.push_back(std::move(n));
    }

    for (size_t i = 0; i < g.shapes.size(); i++) {
        if (g.shapes[i].vertex_labels.empty())
            g.shapes[i].vertex_labels = namings[i].vertices;
        else
            namings[i].vertices = g.shapes[i].vertex_labels;
        if (g.shapes[i].color.empty())
            g.shapes[i].color = color_palette()[i % color_palette().size()];
    }
    return namings;
}

std::string side_name(const InstanceNaming& n, const std::string& role) {
    auto it = n.role_vertices.find(role);
    if (it == n.role_vertices.end() || it->second.size() < 2) return "?";
    std::string a = n.vertices[static_cast<size_t>(it->second[0])];
    std::string b = n.vertices[static_cast<size_t>(it->second[1])];
    if (b < a) std::swap(a, b);
    return a + b;
}

std::string angle_name(const InstanceNaming& n, const std::string& role) {
    auto it = n.role_vertices.find(role);
    if (it == n.role_vertices.end() || it->second.size() < 3) return "?";
    return n.vertices[static_cast<size_t>(it->second[0])] +
           n.vertices[static_cast<size_t>(it->second[1])] +
           n.vertices[static_cast<size_t>(it->second[2])];
}

std::string shape_display_name(const InstanceNaming& n) {
    std::string s;
    for (const auto& v : n.vertices) s += v;
    return s;
}

std::map<ElementRef, std::string> individual_marks(const ProblemGraph& g,
                                                   const FormulaLibrary& lib) {
    static const char* kGreek[] = {"\xce\xb1", "\xce\xb2", "\xce\xb3", "\xce\xb4",
                                   "\xce\xb5", "\xce\xb6", "\xce\xb7", "\xce\xb8"};
    std::map<ElementRef, std::string> marks;
    int sides = 0, angles = 0;
    auto put = [&](const ElementRef& ref, ElementType t, bool is_query) {
        if (t != ElementType::Side && t != ElementType::Angle) return;
        std::string m;
        if (is_query) {
            m = "?";
        } else if (t == ElementType::Side) {
            m = std::string(1, static_cast<char>('a' + sides++ % 26));
        } else {
            m = kGreek[angles++ % 8];
        }
        marks[ref] = m;
    };
    for (const auto& u : g.used) {
        const FormulaSpec& f = lib.by_id(u.formula_id);
        ElementRef out{u.inst, f.output};
        bool is_query = out == g.query;
        if (!marks.count(out)) put(out, f.output_type(), is_query);
        const auto& inst = g.shape(u.inst);
        if (inst.link && inst.link->child_role == f.output) {
            ElementRef alias{inst.link->parent, inst.link->parent_role};
            marks[alias] = marks.count(out) ? marks[out] : "?";
        }
    }
    if (!marks.count(g.query)) {
        ElementType t = role_type(g.shape(g.query.inst).kind, g.query.role);
        put(g.query, t, true);
    }
    return marks;
}

}  // namespace geomhop
