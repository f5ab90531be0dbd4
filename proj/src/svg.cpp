#include "geomhop/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "geomhop/rounding.hpp"

namespace geomhop {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMargin = 42.0;

struct Mapper {
    double scale, x0, y1;
    Vec2 map(Vec2 p) const {
        return {(p.x - x0) * scale + kMargin, (y1 - p.y) * scale + kMargin};
    }
};

std::string num(double v) {
    char buf[40];
    snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string esc(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

Vec2 centroid(const std::vector<Vec2>& v) {
    Vec2 c{0, 0};
    for (const auto& p : v) c = c + p;
    return c * (1.0 / std::max<size_t>(v.size(), 1));
}

// arc sweep (radians, signed, math orientation) between two boundary points
double arc_sweep(const ArcSeg& a, Vec2 from, Vec2 to) {
    double a0 = std::atan2(from.y - a.center.y, from.x - a.center.x);
    double a1 = std::atan2(to.y - a.center.y, to.x - a.center.x);
    double sweep = a1 - a0;
    while (sweep <= -2 * kPi) sweep += 2 * kPi;
    while (sweep > 2 * kPi) sweep -= 2 * kPi;
    Vec2 travel = to - from;
    for (double cand : {sweep, sweep > 0 ? sweep - 2 * kPi : sweep + 2 * kPi}) {
        double mid = a0 + cand / 2;
        Vec2 mp{a.center.x + a.radius * std::cos(mid), a.center.y + a.radius * std::sin(mid)};
        if ((cross(travel, mp - from) > 0) == a.bulge_left) return cand;
    }
    return sweep;
}

std::string path_for(const PlacedShape& p, const Mapper& m) {
    std::ostringstream d;
    size_t n = p.verts.size();
    Vec2 first = m.map(p.verts[0]);
    d << "M " << num(first.x) << " " << num(first.y);
    for (size_t i = 0; i < n; i++) {
        Vec2 to_raw = p.verts[(i + 1) % n];
        Vec2 to = m.map(to_raw);
        const ArcSeg* arc = nullptr;
        for (const auto& a : p.arcs)
            if (static_cast<size_t>(a.after_vertex) == i) arc = &a;
        if (arc) {
            double sweep = arc_sweep(*arc, p.verts[i], to_raw);
            int large = std::abs(sweep) > kPi ? 1 : 0;
            int flag = sweep > 0 ? 0 : 1;  // y-flip reverses orientation
            double r = arc->radius * m.scale;
            d << " A " << num(r) << " " << num(r) << " 0 " << large << " " << flag << " "
              << num(to.x) << " " << num(to.y);
        } else {
            d << " L " << num(to.x) << " " << num(to.y);
        }
    }
    d << " Z";
    return d.str();
}

}  // namespace

std::string render_svg(const ProblemGraph& g, const LayoutResult& layout,
                       const VisualStyle& style, Annotation annotation) {
    double x0 = 1e18, x1 = -1e18, y0 = 1e18, y1 = -1e18;
    for (const auto& p : layout.placed) {
        const auto& pts = p.boundary.empty() ? p.verts : p.boundary;
        for (const auto& v : pts) {
            x0 = std::min(x0, v.x);
            x1 = std::max(x1, v.x);
            y0 = std::min(y0, v.y);
            y1 = std::max(y1, v.y);
        }
    }
    if (x0 > x1) { x0 = y0 = 0; x1 = y1 = 1; }
    Mapper m{layout.scale, x0, y1};
    double width = (x1 - x0) * layout.scale + 2 * kMargin;
    double height = (y1 - y0) * layout.scale + 2 * kMargin;

    const auto& palette =
        style.palette.empty() ? color_palette() : style.palette;
    auto color_of = [&](const PlacedShape& p) {
        const std::string& c = g.shape(p.id).color;
        if (!c.empty()) return c;
        return palette[static_cast<size_t>(p.id) % palette.size()];
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " "
        << num(height) << "\">\n";

    // shape fills and outlines
    for (const auto& p : layout.placed) {
        if (p.angle_mark) {
            Vec2 v = m.map(p.verts[1]);
            Vec2 r = m.map(p.verts[2]);
            out << "<line x1=\"" << num(v.x) << "\" y1=\"" << num(v.y) << "\" x2=\""
                << num(r.x) << "\" y2=\"" << num(r.y) << "\" stroke=\"black\" stroke-width=\""
                << num(style.line_width) << "\"/>\n";
            continue;
        }
        out << "<path d=\"" << path_for(p, m) << "\" fill=\"" << color_of(p)
            << "\" fill-opacity=\"" << num(style.color_opacity)
            << "\" stroke=\"black\" stroke-width=\"" << num(style.line_width)
            << "\" stroke-linejoin=\"round\"/>\n";
        if (p.hole_center) {
            Vec2 c = m.map(*p.hole_center);
            out << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\""
                << num(p.hole_radius * m.scale) << "\" fill=\"white\" stroke=\"black\" "
                << "stroke-width=\"" << num(style.line_width) << "\"/>\n";
        }
    }

    auto text_at = [&](Vec2 pos, const std::string& s, double size_mult = 1.0) {
        out << "<text x=\"" << num(pos.x) << "\" y=\"" << num(pos.y) << "\" font-size=\""
            << num(style.font_size * size_mult)
            << "\" font-family=\"sans-serif\" text-anchor=\"middle\" "
               "dominant-baseline=\"middle\">"
            << esc(s) << "</text>\n";
    };

    auto placed_of = [&](InstanceId id) -> const PlacedShape* {
        for (const auto& p : layout.placed)
            if (p.id == id) return &p;
        return nullptr;
    };

    // vertex letters (coordinate annotation)
    if (annotation == Annotation::Coordinate) {
        std::set<std::string> done;
        for (const auto& p : layout.placed) {
            if (p.angle_mark) {
                // only the new ray endpoint gets a fresh letter
                const auto& labels = g.shape(p.id).vertex_labels;
                if (labels.size() == 3 && !done.count(labels[2])) {
                    Vec2 pos = m.map(p.verts[2]);
                    Vec2 v = m.map(p.verts[1]);
                    Vec2 dir{pos.x - v.x, pos.y - v.y};
                    double len = std::max(norm(dir), 1e-9);
                    text_at(Vec2{pos.x + 10 * dir.x / len, pos.y + 10 * dir.y / len},
                            labels[2]);
                    done.insert(labels[2]);
                }
                continue;
            }
            Vec2 c = m.map(centroid(p.verts));
            const auto& labels = g.shape(p.id).vertex_labels;
            for (size_t i = 0; i < p.verts.size() && i < labels.size(); i++) {
                if (done.count(labels[i])) continue;
                done.insert(labels[i]);
                Vec2 pos = m.map(p.verts[i]);
                Vec2 dir{pos.x - c.x, pos.y - c.y};
                double len = std::max(norm(dir), 1e-9);
                text_at(Vec2{pos.x + 11 * dir.x / len, pos.y + 11 * dir.y / len}, labels[i]);
            }
        }
    }

    // individual marks on derived / queried elements
    std::map<ElementRef, std::string> marks;
    if (annotation == Annotation::Individual) marks = individual_marks(g);
    auto anchor_for = [&](const ElementRef& ref, bool toward_inside) -> Vec2 {
        const PlacedShape* p = placed_of(ref.inst);
        const InstanceNaming& n = layout.namings[static_cast<size_t>(ref.inst)];
        auto it = n.role_vertices.find(ref.role);
        Vec2 c = centroid(p->verts);
        if (it == n.role_vertices.end() || it->second.empty()) return m.map(c);
        if (it->second.size() == 2) {
            Vec2 a = p->verts[static_cast<size_t>(it->second[0])];
            Vec2 b = p->verts[static_cast<size_t>(it->second[1])];
            Vec2 mid = (a + b) * 0.5;
            Vec2 outv = mid - c;
            double len = std::max(norm(outv), 1e-9);
            double off = toward_inside ? -14.0 : 12.0;
            Vec2 mm = m.map(mid);
            Vec2 cc = m.map(c);
            Vec2 dir{mm.x - cc.x, mm.y - cc.y};
            double dlen = std::max(norm(dir), 1e-9);
            (void)len;
            return Vec2{mm.x + off * dir.x / dlen, mm.y + off * dir.y / dlen};
        }
        Vec2 v = p->verts[static_cast<size_t>(it->second[1])];
        Vec2 vv = m.map(v);
        Vec2 cc = m.map(c);
        Vec2 dir{cc.x - vv.x, cc.y - vv.y};
        double dlen = std::max(norm(dir), 1e-9);
        return Vec2{vv.x + 20 * dir.x / dlen, vv.y + 20 * dir.y / dlen};
    };
    for (const auto& [ref, mark] : marks) {
        if (g.shape(ref.inst).link && g.shape(ref.inst).link->parent_role == ref.role) continue;
        if (!placed_of(ref.inst)) continue;
        text_at(anchor_for(ref, false), mark);
    }

    // image-channel fact values
    for (const auto& f : g.facts) {
        if (f.channel != Channel::Image || f.expr) continue;
        const PlacedShape* p = placed_of(f.ref.inst);
        if (!p || p->angle_mark) continue;
        auto vit = g.shape(f.ref.inst).element_values.find(f.ref.role);
        if (vit == g.shape(f.ref.inst).element_values.end()) continue;
        std::string label = format_number(vit->second);
        ElementType t = role_type(g.shape(f.ref.inst).kind, f.ref.role);
        if (t == ElementType::Area) label = "A=" + label;
        if (t == ElementType::Perimeter) label = "P=" + label;
        bool inward = t == ElementType::Angle;
        text_at(anchor_for(f.ref, inward), label, 0.95);
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace geomhop
