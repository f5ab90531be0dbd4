#include "geomhop/layout.hpp"

#include <algorithm>
#include <cmath>

namespace geomhop {

namespace {

constexpr double kPi = 3.14159265358979323846;

double get_or(const std::map<std::string, double>& m, const std::string& k, double dflt) {
    auto it = m.find(k);
    return it == m.end() ? dflt : it->second;
}

bool has(const std::map<std::string, double>& m, const std::string& k) {
    return m.count(k) > 0;
}

// ---- drawing-dimension completion (raw math; schematic only) ----

struct Dims {
    std::map<std::string, double> d;
    double get(const std::string& k, double dflt = 10.0) const { return get_or(d, k, dflt); }
};

Dims complete_dims(const ShapeInstance& inst, Rng& rng) {
    const auto& v = inst.element_values;
    Dims out;
    auto& d = out.d;
    switch (inst.kind) {
        case ShapeKind::Square:
        case ShapeKind::SquareMinusCircle: {
            double s = 0;
            if (has(v, "side")) s = v.at("side");
            else if (has(v, "area")) s = std::sqrt(std::max(v.at("area"), 1.0) /
                                                   (inst.kind == ShapeKind::Square ? 1.0 : 0.215));
            else if (has(v, "perimeter")) s = v.at("perimeter") / 4;
            else if (has(v, "diagonal")) s = v.at("diagonal") / std::sqrt(2.0);
            else s = 10;
            d["side"] = std::max(s, 0.5);
            break;
        }
        case ShapeKind::Rectangle: {
            double l = get_or(v, "length", 0), w = get_or(v, "width", 0);
            if (l <= 0 && has(v, "area") && w > 0) l = v.at("area") / w;
            if (w <= 0 && has(v, "area") && l > 0) w = v.at("area") / l;
            if (l <= 0 && has(v, "perimeter") && w > 0) l = v.at("perimeter") / 2 - w;
            if (w <= 0 && has(v, "perimeter") && l > 0) w = v.at("perimeter") / 2 - l;
            if (l <= 0) l = 14;
            if (w <= 0) w = 9;
            d["length"] = l;
            d["width"] = w;
            break;
        }
        case ShapeKind::RightTriangle: {
            double l1 = get_or(v, "leg1", 0), l2 = get_or(v, "leg2", 0);
            double h = get_or(v, "hyp", 0);
            double a2 = get_or(v, "angle2", 0);
            if (l1 <= 0 && h > 0 && l2 > 0 && h > l2) l1 = std::sqrt(h * h - l2 * l2);
            if (l2 <= 0 && h > 0 && l1 > 0 && h > l1) l2 = std::sqrt(h * h - l1 * l1);
            if (l1 <= 0 && h > 0 && a2 > 0) l1 = h * std::sin(a2 * kPi / 180);
            if (l2 <= 0 && h > 0 && a2 > 0) l2 = h * std::cos(a2 * kPi / 180);
            if (l1 <= 0 && has(v, "area") && l2 > 0) l1 = 2 * v.at("area") / l2;
            if (l2 <= 0 && has(v, "area") && l1 > 0) l2 = 2 * v.at("area") / l1;
            if (l1 <= 0) l1 = (h > 0 && a2 <= 0) ? h * 0.6 : 8;
            if (l2 <= 0) l2 = (h > 0) ? std::sqrt(std::max(h * h - l1 * l1, 1.0)) : 11;
            d["leg1"] = l1;
            d["leg2"] = l2;
            break;
        }
        case ShapeKind::Triangle: {
            double ab = get_or(v, "side_ab", 0), bc = get_or(v, "side_bc", 0),
                   ca = get_or(v, "side_ca", 0);
            if (has(v, "perimeter")) {
                double p = v.at("perimeter");
                if (ab <= 0 && bc > 0 && ca > 0) ab = p - bc - ca;
                if (bc <= 0 && ab > 0 && ca > 0) bc = p - ab - ca;
                if (ca <= 0 && ab > 0 && bc > 0) ca = p - ab - bc;
            }
            if (ab > 0 && bc > 0 && ca > 0 && ab + bc > ca && bc + ca > ab && ab + ca > bc) {
                d["side_ab"] = ab;
                d["side_bc"] = bc;
                d["side_ca"] = ca;
            } else {
                // fall back on the angles, scaled to whatever side is known
                double A = get_or(v, "angle_a", 60), B = get_or(v, "angle_b", 60);
                double C = 180 - A - B;
                if (C <= 5 || C >= 175) { A = 60; B = 60; C = 60; }
                double base = ab > 0 ? ab : (bc > 0 ? bc : (ca > 0 ? ca : 10));
                // side_ab opposite angle_c, etc. (law of sines)
                double k = base / std::sin(C * kPi / 180);
                d["side_ab"] = base;
                d["side_bc"] = k * std::sin(A * kPi / 180);
                d["side_ca"] = k * std::sin(B * kPi / 180);
            }
            break;
        }
        case ShapeKind::Parallelogram: {
            double s1 = get_or(v, "side1", 14), s2 = get_or(v, "side2", 9);
            double ang = get_or(v, "angle", 0);
            if (ang <= 0 && has(v, "area") && s1 > 0 && s2 > 0) {
                double s = v.at("area") / (s1 * s2);
                if (s > 0 && s < 1) ang = std::asin(s) * 180 / kPi;
            }
            if (ang <= 0 || ang >= 180) ang = 52 + 8 * rng.uniform();
            d["side1"] = s1;
            d["side2"] = s2;
            d["angle"] = ang;
            break;
        }
        case ShapeKind::Trapezoid: {
            double b1 = get_or(v, "base1", 18), b2 = get_or(v, "base2", 10);
            double h = get_or(v, "height", 0);
            if (h <= 0 && has(v, "area") && b1 + b2 > 0) h = 2 * v.at("area") / (b1 + b2);
            if (h <= 0) h = 0.6 * std::min(b1, b2);
            d["base1"] = b1;
            d["base2"] = b2;
            d["height"] = h;
            break;
        }
        case ShapeKind::Sector: {
            double r = get_or(v, "radius", 0), ang = get_or(v, "angle", 0);
            if (r <= 0 && has(v, "area") && ang > 0)
                r = std::sqrt(v.at("area") / ((ang / 360) * kPi));
            if (r <= 0) r = 10;
            if (ang <= 0 || ang > 180) ang = 60;
            d["radius"] = r;
            d["angle"] = ang;
            break;
        }
        case ShapeKind::SemiCircle: {
            double dia = get_or(v, "diameter", 0);
            if (dia <= 0 && has(v, "area")) dia = std::sqrt(8 * v.at("area") / kPi);
            if (dia <= 0 && has(v, "perimeter")) dia = v.at("perimeter") / (1 + kPi / 2);
            if (dia <= 0) dia = 10;
            d["diameter"] = dia;
            break;
        }
        case ShapeKind::RectPlusEquilateral:
        case ShapeKind::RectMinusSemiCircle:
        case ShapeKind::RectPlusSemiCircle: {
            double b = get_or(v, "base", 8), o = get_or(v, "other", 0);
            if (o <= 0 && has(v, "area") && b > 0) o = v.at("area") / b;
            if (o <= 0 && has(v, "perimeter") && b > 0) o = (v.at("perimeter") - 3 * b) / 2;
            if (o <= 0) o = 1.3 * b;
            d["base"] = b;
            d["other"] = std::max(o, 0.4 * b);
            break;
        }
        case ShapeKind::SupplementaryAngles:
        case ShapeKind::ComplementaryAngles:
            d["angle1"] = get_or(v, "angle1", 120);
            d["angle2"] = get_or(v, "angle2", 60);
            break;
    }
    return out;
}

// ---- canonical local geometry; vertex order matches the labelling ----

struct LocalShape {
    std::vector<Vec2> verts;
    std::vector<ArcSeg> arcs;
    std::optional<Vec2> hole_center;
    double hole_radius = 0;
};

LocalShape local_geometry(const ShapeInstance& inst, const Dims& dims,
                          const std::string& tied_role) {
    LocalShape L;
    switch (inst.kind) {
        case ShapeKind::Square:
        case ShapeKind::SquareMinusCircle: {
            double s = dims.get("side");
            L.verts = {{0, 0}, {s, 0}, {s, s}, {0, s}};
            if (inst.kind == ShapeKind::SquareMinusCircle) {
                L.hole_center = Vec2{s / 2, s / 2};
                L.hole_radius = s / 2;
            }
            break;
        }
        case ShapeKind::Rectangle: {
            double l = dims.get("length"), w = dims.get("width");
            L.verts = {{0, 0}, {l, 0}, {l, w}, {0, w}};
            break;
        }
        case ShapeKind::RightTriangle: {
            double l1 = dims.get("leg1"), l2 = dims.get("leg2");
            L.verts = {{0, 0}, {l1, 0}, {0, l2}};
            break;
        }
        case ShapeKind::Triangle: {
            double ab = dims.get("side_ab"), bc = dims.get("side_bc"), ca = dims.get("side_ca");
            double x = (ab * ab + ca * ca - bc * bc) / (2 * ab);
            double y2 = ca * ca - x * x;
            double y = std::sqrt(std::max(y2, 0.04 * ca * ca));
            L.verts = {{0, 0}, {ab, 0}, {x, y}};
            break;
        }
        case ShapeKind::Parallelogram: {
            double s1 = dims.get("side1"), s2 = dims.get("side2");
            double ang = dims.get("angle") * kPi / 180;
            Vec2 e{s2 * std::cos(ang), s2 * std::sin(ang)};
            L.verts = {{0, 0}, {s1, 0}, {s1 + e.x, e.y}, {e.x, e.y}};
            break;
        }
        case ShapeKind::Trapezoid: {
            double b1 = dims.get("base1"), b2 = dims.get("base2"), h = dims.get("height");
            double o = (b1 - b2) / 2;
            L.verts = {{b1, 0}, {o + b2, h}, {o, h}, {0, 0}};
            break;
        }
        case ShapeKind::Sector: {
            double r = dims.get("radius"), ang = dims.get("angle") * kPi / 180;
            Vec2 center{0, 0};
            Vec2 endC{r, 0};
            Vec2 endD{r * std::cos(ang), r * std::sin(ang)};
            L.verts = {endD, center, endC};
            ArcSeg a;
            a.after_vertex = 2;  // closing edge endC -> endD is the arc
            a.center = center;
            a.radius = r;
            a.bulge_left = false;  // ccw arcs bow to the right of the chord
            L.arcs.push_back(a);
            break;
        }
        case ShapeKind::SemiCircle: {
            double dia = dims.get("diameter");
            L.verts = {{0, 0}, {dia, 0}};
            ArcSeg a;
            a.after_vertex = 1;  // closing edge v1 -> v0 bows outward
            a.center = Vec2{dia / 2, 0};
            a.radius = dia / 2;
            a.bulge_left = false;
            L.arcs.push_back(a);
            break;
        }
        case ShapeKind::RectPlusEquilateral: {
            double b = dims.get("base"), o = dims.get("other");
            Vec2 P0{0, 0}, P1{b, 0}, P2{b, o}, P3{0, o};
            Vec2 T{b / 2, o + b * std::sqrt(3.0) / 2};
            if (tied_role == "other") {
                L.verts = {P1, P2, T, P3, P0};
            } else {
                L.verts = {P0, P1, P2, T, P3};
            }
            break;
        }
        case ShapeKind::RectMinusSemiCircle:
        case ShapeKind::RectPlusSemiCircle: {
            double b = dims.get("base"), o = dims.get("other");
            Vec2 P0{0, 0}, P1{b, 0}, P2{b, o}, P3{0, o};
            bool outward = inst.kind == ShapeKind::RectPlusSemiCircle;
            ArcSeg a;
            a.center = Vec2{b / 2, o};
            a.radius = b / 2;
            if (tied_role == "other") {
                L.verts = {P1, P2, P3, P0};
                a.after_vertex = 1;  // the P2 -> P3 top edge is the arc
            } else {
                L.verts = {P0, P1, P2, P3};
                a.after_vertex = 2;
            }
            // traveling P2->P3 (negative x), left is -y (inward)
            a.bulge_left = !outward;
            L.arcs.push_back(a);
            break;
        }
        case ShapeKind::SupplementaryAngles:
        case ShapeKind::ComplementaryAngles:
            // placed later from the parent's rays
            break;
    }
    return L;
}

// ---- rigid transforms ----

struct Transform {
    double c = 1, s = 0;  // rotation
    Vec2 t;               // translation
    bool mirror = false;  // reflect y before rotating

    Vec2 apply(Vec2 p) const {
        if (mirror) p.y = -p.y;
        return Vec2{c * p.x - s * p.y + t.x, s * p.x + c * p.y + t.y};
    }
};

Transform map_edge(Vec2 a_from, Vec2 a_to, Vec2 b_from, Vec2 b_to, bool mirror) {
    Vec2 u = a_to - a_from;
    Vec2 v = b_to - b_from;
    if (mirror) u.y = -u.y;
    double lu = norm(u), lv = norm(v);
    Transform tr;
    tr.mirror = mirror;
    if (lu < 1e-12 || lv < 1e-12) return tr;
    // rotation taking u to v (lengths agree by construction)
    tr.c = (u.x * v.x + u.y * v.y) / (lu * lv);
    tr.s = (u.x * v.y - u.y * v.x) / (lu * lv);
    Vec2 af = a_from;
    if (tr.mirror) af.y = -af.y;
    tr.t = Vec2{b_from.x - (tr.c * af.x - tr.s * af.y), b_from.y - (tr.s * af.x + tr.c * af.y)};
    return tr;
}

std::vector<Vec2> discretize(const std::vector<Vec2>& verts, const std::vector<ArcSeg>& arcs) {
    std::vector<Vec2> out;
    size_t n = verts.size();
    for (size_t i = 0; i < n; i++) {
        out.push_back(verts[i]);
        for (const auto& a : arcs) {
            if (static_cast<size_t>(a.after_vertex) != i) continue;
            Vec2 from = verts[i];
            Vec2 to = verts[(i + 1) % n];
            double a0 = std::atan2(from.y - a.center.y, from.x - a.center.x);
            double a1 = std::atan2(to.y - a.center.y, to.x - a.center.x);
            // choose sweep direction from the bulge side
            Vec2 travel = to - from;
            double sweep = a1 - a0;
            while (sweep <= -2 * kPi) sweep += 2 * kPi;
            while (sweep > 2 * kPi) sweep -= 2 * kPi;
            // two candidate sweeps; pick the one whose midpoint lies on the
            // requested side of the chord
            for (double cand : {sweep, sweep > 0 ? sweep - 2 * kPi : sweep + 2 * kPi}) {
                double mid = a0 + cand / 2;
                Vec2 mp{a.center.x + a.radius * std::cos(mid),
                        a.center.y + a.radius * std::sin(mid)};
                double side = cross(travel, mp - from);
                if ((side > 0) == a.bulge_left) {
                    sweep = cand;
                    break;
                }
            }
            int segs = std::max(2, static_cast<int>(std::ceil(std::abs(sweep) / (kPi / 180))));
            for (int k = 1; k < segs; k++) {
                double th = a0 + sweep * k / segs;
                out.push_back(Vec2{a.center.x + a.radius * std::cos(th),
                                   a.center.y + a.radius * std::sin(th)});
            }
        }
    }
    return out;
}

double dist_point_segment(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double len2 = dot(ab, ab);
    double t = len2 > 0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
    Vec2 proj = a + ab * t;
    return norm(p - proj);
}

}  // namespace

bool point_strictly_inside(const std::vector<Vec2>& poly, Vec2 p, double eps) {
    size_t n = poly.size();
    for (size_t i = 0; i < n; i++) {
        if (dist_point_segment(p, poly[i], poly[(i + 1) % n]) <= eps) return false;
    }
    bool inside = false;
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        if ((poly[i].y > p.y) != (poly[j].y > p.y)) {
            double xint = poly[j].x + (poly[i].x - poly[j].x) * (p.y - poly[j].y) /
                                          (poly[i].y - poly[j].y);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

namespace {

bool proper_crossing(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double eps) {
    double d1 = cross(b - a, c - a);
    double d2 = cross(b - a, d - a);
    double d3 = cross(d - c, a - c);
    double d4 = cross(d - c, b - c);
    double lab = norm(b - a), lcd = norm(d - c);
    double tol1 = eps * lab, tol2 = eps * lcd;
    return ((d1 > tol1 && d2 < -tol1) || (d1 < -tol1 && d2 > tol1)) &&
           ((d3 > tol2 && d4 < -tol2) || (d3 < -tol2 && d4 > tol2));
}

}  // namespace

bool polygons_interiors_intersect(const std::vector<Vec2>& a, const std::vector<Vec2>& b,
                                  double eps) {
    if (a.size() < 3 || b.size() < 3) return false;
    // bbox reject
    auto bbox = [](const std::vector<Vec2>& p) {
        double x0 = p[0].x, x1 = p[0].x, y0 = p[0].y, y1 = p[0].y;
        for (const auto& q : p) {
            x0 = std::min(x0, q.x);
            x1 = std::max(x1, q.x);
            y0 = std::min(y0, q.y);
            y1 = std::max(y1, q.y);
        }
        return std::array<double, 4>{x0, y0, x1, y1};
    };
    auto ba = bbox(a), bb = bbox(b);
    if (ba[2] < bb[0] - eps || bb[2] < ba[0] - eps || ba[3] < bb[1] - eps ||
        bb[3] < ba[1] - eps)
        return false;

    for (size_t i = 0; i < a.size(); i++) {
        Vec2 p1 = a[i], p2 = a[(i + 1) % a.size()];
        for (size_t j = 0; j < b.size(); j++) {
            Vec2 q1 = b[j], q2 = b[(j + 1) % b.size()];
            if (proper_crossing(p1, p2, q1, q2, eps)) return true;
        }
    }
    for (const auto& p : a)
        if (point_strictly_inside(b, p, eps)) return true;
    for (const auto& p : b)
        if (point_strictly_inside(a, p, eps)) return true;
    // midpoints catch collinear pass-through cases
    for (size_t i = 0; i < a.size(); i++) {
        Vec2 m = (a[i] + a[(i + 1) % a.size()]) * 0.5;
        if (point_strictly_inside(b, m, eps)) return true;
    }
    for (size_t j = 0; j < b.size(); j++) {
        Vec2 m = (b[j] + b[(j + 1) % b.size()]) * 0.5;
        if (point_strictly_inside(a, m, eps)) return true;
    }
    return false;
}

namespace {

struct PlacementAttempt {
    const ProblemGraph& g;
    const std::vector<InstanceNaming>& namings;
    Rng& rng;
    std::vector<PlacedShape> placed;

    const PlacedShape& by_id(InstanceId id) const {
        for (const auto& p : placed)
            if (p.id == id) return p;
        throw LayoutExhausted("parent not placed");
    }

    // global positions of a role's vertices on a placed instance
    std::vector<Vec2> role_points(InstanceId id, const std::string& role) const {
        const PlacedShape& p = by_id(id);
        const InstanceNaming& n = namings[static_cast<size_t>(id)];
        auto it = n.role_vertices.find(role);
        if (it == n.role_vertices.end()) throw LayoutExhausted("role has no vertices");
        std::vector<Vec2> out;
        for (int idx : it->second) out.push_back(p.verts[static_cast<size_t>(idx)]);
        return out;
    }

    void place(const ShapeInstance& inst) {
        if (is_pseudo_shape(inst.kind)) {
            place_mark(inst);
            return;
        }
        Dims dims = complete_dims(inst, rng);
        std::string tied = inst.link ? inst.link->child_role : "";
        LocalShape L = local_geometry(inst, dims, tied);

        PlacedShape ps;
        ps.id = inst.id;
        ps.color = inst.color;
        ps.arcs = L.arcs;
        ps.hole_center = L.hole_center;
        ps.hole_radius = L.hole_radius;

        if (!inst.link) {
            ps.verts = L.verts;
        } else if (!sideways(inst)) {
            place_vertical_angle(inst, L, ps);
        } else {
            // the shared edge endpoints must coincide letter-for-letter
            const InstanceNaming& n = namings[static_cast<size_t>(inst.id)];
            auto it = n.role_vertices.find(inst.link->child_role);
            if (it == n.role_vertices.end() || it->second.size() != 2)
                throw LayoutExhausted("tied side role unmapped");
            Vec2 c0 = L.verts[static_cast<size_t>(it->second[0])];
            Vec2 c1 = L.verts[static_cast<size_t>(it->second[1])];
            auto pp = role_points(inst.link->parent, inst.link->parent_role);
            if (pp.size() != 2) throw LayoutExhausted("parent side role unmapped");
            {
                const InstanceNaming& pn = namings[static_cast<size_t>(inst.link->parent)];
                auto pit = pn.role_vertices.find(inst.link->parent_role);
                const std::string& child_l0 = n.vertices[static_cast<size_t>(it->second[0])];
                const std::string& parent_l0 =
                    pn.vertices[static_cast<size_t>(pit->second[0])];
                if (child_l0 != parent_l0) std::swap(pp[0], pp[1]);
            }
            // scale child so the drawn shared edge matches the parent's
            double lp = norm(pp[1] - pp[0]);
            double lc = norm(c1 - c0);
            if (lc > 1e-9 && std::abs(lp - lc) > 1e-9 * std::max(lp, lc)) {
                double k = lp / lc;
                for (auto& vtx : L.verts) vtx = vtx * k;
                for (auto& arc : L.arcs) {
                    arc.center = arc.center * k;
                    arc.radius *= k;
                }
                if (L.hole_center) {
                    *L.hole_center = *L.hole_center * k;
                    L.hole_radius *= k;
                }
                c0 = L.verts[static_cast<size_t>(it->second[0])];
                c1 = L.verts[static_cast<size_t>(it->second[1])];
                ps.arcs = L.arcs;
                ps.hole_center = L.hole_center;
                ps.hole_radius = L.hole_radius;
            }
            // build both reflections and keep the one away from the parent
            auto build = [&](bool mirror) {
                Transform tr = map_edge(c0, c1, pp[0], pp[1], mirror);
                PlacedShape out;
                out.id = ps.id;
                out.color = ps.color;
                out.hole_radius = L.hole_radius;
                for (const auto& vtx : L.verts) out.verts.push_back(tr.apply(vtx));
                for (auto arc : L.arcs) {
                    arc.center = tr.apply(arc.center);
                    if (mirror) arc.bulge_left = !arc.bulge_left;
                    out.arcs.push_back(arc);
                }
                if (L.hole_center) out.hole_center = tr.apply(*L.hole_center);
                out.boundary = discretize(out.verts, out.arcs);
                return out;
            };
            auto area_centroid = [](const std::vector<Vec2>& v) {
                Vec2 c{0, 0};
                for (const auto& q : v) c = c + q;
                return c * (1.0 / std::max<size_t>(v.size(), 1));
            };
            PlacedShape cand = build(false);
            const PlacedShape& par = by_id(inst.link->parent);
            Vec2 edge_mid = (pp[0] + pp[1]) * 0.5;
            Vec2 edge_dir = pp[1] - pp[0];
            Vec2 par_side = area_centroid(par.boundary) - edge_mid;
            Vec2 cand_side = area_centroid(cand.boundary) - edge_mid;
            bool same_side =
                (cross(edge_dir, par_side) > 0) == (cross(edge_dir, cand_side) > 0);
            ps = same_side ? build(true) : std::move(cand);
        }
        if (ps.boundary.empty()) ps.boundary = discretize(ps.verts, ps.arcs);
        placed.push_back(std::move(ps));
    }

    bool sideways(const ShapeInstance& inst) const {
        const auto& parent = g.shape(inst.link->parent);
        return role_type(parent.kind, inst.link->parent_role) == ElementType::Side;
    }

    // vertical-angle attachment: rotate the child's angle rays onto the
    // opposite extensions of the parent's rays
    void place_vertical_angle(const ShapeInstance& inst, LocalShape& L, PlacedShape& ps) {
        auto pr = role_points(inst.link->parent, inst.link->parent_role);
        if (pr.size() != 3) throw LayoutExhausted("parent angle role unmapped");
        Vec2 vertex = pr[1];
        Vec2 ray1 = pr[0] - vertex;  // the two parent rays

        const InstanceNaming& n = namings[static_cast<size_t>(inst.id)];
        auto it = n.role_vertices.find(inst.link->child_role);
        if (it == n.role_vertices.end() || it->second.size() != 3)
            throw LayoutExhausted("child angle role unmapped");
        Vec2 cv = L.verts[static_cast<size_t>(it->second[1])];
        Vec2 cr1 = L.verts[static_cast<size_t>(it->second[0])] - cv;

        // rotation taking the child's first ray to the opposite of the
        // parent's first ray
        Vec2 target = Vec2{-ray1.x, -ray1.y};
        double a0 = std::atan2(cr1.y, cr1.x);
        double a1 = std::atan2(target.y, target.x);
        double th = a1 - a0;
        Transform tr;
        tr.c = std::cos(th);
        tr.s = std::sin(th);
        tr.t = Vec2{vertex.x - (tr.c * cv.x - tr.s * cv.y),
                    vertex.y - (tr.s * cv.x + tr.c * cv.y)};
        for (const auto& vtx : L.verts) ps.verts.push_back(tr.apply(vtx));
        for (auto arc : L.arcs) {
            arc.center = tr.apply(arc.center);
            ps.arcs.push_back(arc);
        }
        if (L.hole_center) ps.hole_center = tr.apply(*L.hole_center);
    }

    // supplementary / complementary marks: a ray out of the parent vertex
    void place_mark(const ShapeInstance& inst) {
        auto pr = role_points(inst.link->parent, inst.link->parent_role);
        if (pr.size() != 3) throw LayoutExhausted("parent angle role unmapped");
        Vec2 vertex = pr[1];
        Vec2 shared_ray = pr[0] - vertex;
        Vec2 other_ray = pr[2] - vertex;
        double len = 0.6 * std::max(norm(shared_ray), 4.0);

        double base = std::atan2(shared_ray.y, shared_ray.x);
        double toward = std::atan2(other_ray.y, other_ray.x);
        double rel = toward - base;
        while (rel <= -kPi) rel += 2 * kPi;
        while (rel > kPi) rel -= 2 * kPi;
        // angle1 opens from the shared ray away from the parent's angle;
        // for a supplementary pair the new ray lands on the extension of
        // the parent's other ray
        double th = base + (rel > 0 ? -1.0 : 1.0) *
                               (get_or(inst.element_values, "angle1", 60.0) * kPi / 180);
        Vec2 nray{vertex.x + len * std::cos(th), vertex.y + len * std::sin(th)};

        PlacedShape ps;
        ps.id = inst.id;
        ps.color = inst.color;
        ps.angle_mark = true;
        ps.verts = {pr[0], vertex, nray};
        placed.push_back(std::move(ps));
    }
};

}  // namespace

LayoutResult layout(const ProblemGraph& g, Rng& rng, const FormulaLibrary& lib,
                    int max_tries) {
    ProblemGraph& mg = const_cast<ProblemGraph&>(g);
    LayoutResult result;
    result.namings = assign_labels(mg, lib);

    std::string last_error = "placement failed";
    for (int attempt = 0; attempt < max_tries; attempt++) {
        PlacementAttempt pa{g, result.namings, rng, {}};
        bool failed = false;
        try {
            for (const auto& inst : g.shapes) pa.place(inst);
        } catch (const LayoutExhausted& e) {
            failed = true;
            last_error = e.what();
        }
        if (failed) continue;

        // pairwise interior-intersection acceptance
        bool overlap = false;
        for (size_t i = 0; i < pa.placed.size() && !overlap; i++) {
            for (size_t j = i + 1; j < pa.placed.size() && !overlap; j++) {
                if (pa.placed[i].angle_mark || pa.placed[j].angle_mark) continue;
                if (polygons_interiors_intersect(pa.placed[i].boundary, pa.placed[j].boundary)) {
                    overlap = true;
                    last_error = "interiors of instances " + std::to_string(pa.placed[i].id) +
                                 " and " + std::to_string(pa.placed[j].id) + " intersect";
                }
            }
        }
        if (overlap) continue;

        result.placed = std::move(pa.placed);
        // uniform scale so the drawing fits a ~320 unit canvas
        double x0 = 1e18, x1 = -1e18, y0 = 1e18, y1 = -1e18;
        for (const auto& p : result.placed) {
            for (const auto& v : p.verts) {
                x0 = std::min(x0, v.x);
                x1 = std::max(x1, v.x);
                y0 = std::min(y0, v.y);
                y1 = std::max(y1, v.y);
            }
        }
        double extent = std::max({x1 - x0, y1 - y0, 1e-6});
        result.scale = 320.0 / extent;
        return result;
    }
    throw LayoutExhausted("no valid placement found: " + last_error);
}

}  // namespace geomhop
