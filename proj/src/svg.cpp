#include "suspflow/svg.hpp"

#include <sstream>

namespace suspflow::cli {

using torus_geom::Embedding;
using torus_geom::PlanePointQ;

namespace {

// Exact rational -> fixed 4-place decimal, rounded half up.
std::string fixed_decimal(const Qrat& q) {
    const Zint scale = 10000;
    Qrat shifted = q * scale;
    Zint rounded = floor_q(shifted + Qrat(1, 2));
    bool neg = rounded < 0;
    Zint mag = abs(rounded);
    Zint whole = mag / scale, frac = mag % scale;
    std::ostringstream out;
    if (neg && (whole != 0 || frac != 0)) out << "-";
    out << whole << ".";
    std::string f = frac.str();
    out << std::string(4 - f.size(), '0') << f;
    return out.str();
}

}  // namespace

std::string emit_parallelogram_svg(const torus_geom::ParallelogramData& p,
                                   const std::vector<TorusPointQ>& fixed_points) {
    const Qrat size = 360;
    const Qrat margin = 40;
    Qrat ymin = p.lift_m.y;  // lowest geometry; unit square reaches y = 1
    Qrat width = margin * 2 + size;
    Qrat height = margin * 2 + (Qrat(1) - ymin) * size;

    auto px = [&](const Qrat& x) { return fixed_decimal(margin + x * size); };
    auto py = [&](const Qrat& y) { return fixed_decimal(margin + (Qrat(1) - y) * size); };
    auto pt = [&](const PlanePointQ& q) { return px(q.x) + "," + py(q.y); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed_decimal(width)
        << "\" height=\"" << fixed_decimal(height) << "\">\n";
    svg << "<desc>section parallelogram for word " << p.w.letters();
    if (p.embedding == Embedding::DegenerateMN) svg << "; degenerate: M = N";
    svg << "</desc>\n";
    if (p.embedding == Embedding::DegenerateMN)
        svg << "<!-- degenerate case: vertices M and N coincide on the torus -->\n";

    // Unit square.
    svg << "<polygon points=\"" << pt({0, 0}) << " " << pt({1, 0}) << " " << pt({1, 1})
        << " " << pt({0, 1}) << "\" fill=\"none\" stroke=\"black\"/>\n";
    // Quadrilateral O -> N -> O' -> M.
    svg << "<polygon points=\"" << pt(p.lift_o) << " " << pt(p.lift_n) << " "
        << pt(p.lift_o2) << " " << pt(p.lift_m)
        << "\" fill=\"#c8e6c9\" fill-opacity=\"0.7\" stroke=\"green\"/>\n";

    auto label = [&](const PlanePointQ& a, const PlanePointQ& b, const std::string& text) {
        PlanePointQ mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
        svg << "<text x=\"" << px(mid.x) << "\" y=\"" << py(mid.y)
            << "\" font-size=\"14\">" << text << "</text>\n";
    };
    label(p.lift_o, p.lift_m, "r1");
    label(p.lift_o2, p.lift_m, "r0");
    label(p.lift_o, p.lift_n, "s0");
    label(p.lift_o2, p.lift_n, "s1");

    auto vertex = [&](const PlanePointQ& v, const std::string& name) {
        svg << "<text x=\"" << px(v.x + Qrat(1, 50)) << "\" y=\"" << py(v.y + Qrat(1, 50))
            << "\" font-size=\"14\" font-weight=\"bold\">" << name << "</text>\n";
    };
    vertex(p.lift_o, "O");
    vertex(p.lift_o2, "O");
    vertex(p.lift_m, "M");
    vertex(p.lift_n, "N");

    for (const auto& fp : fixed_points) {
        svg << "<circle cx=\"" << px(fp.x) << "\" cy=\"" << py(fp.y)
            << "\" r=\"4\" fill=\"red\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace suspflow::cli
