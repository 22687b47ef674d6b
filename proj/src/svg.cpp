#include "pillowcase/svg.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace pillowcase {

namespace {

constexpr double kMargin = 34.0;

std::string num(double v) {
    char buf[40];
    // normalize negative zero for byte-stable output
    if (v == 0.0) v = 0.0;
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct Mapper {
    double w, h;
    double px(double gamma) const { return kMargin + gamma / M_PI * (w - 2 * kMargin); }
    double py(double theta) const { return h - kMargin - theta / kTwoPi * (h - 2 * kMargin); }
};

void emit_polyline(std::ostream& os, const std::vector<std::array<double, 2>>& pts,
                   const SvgStyle& style, const Mapper& map) {
    if (pts.size() < 2) return;
    os << "<polyline fill=\"none\" stroke=\"" << style.stroke << "\" stroke-width=\""
       << num(style.width) << "\"";
    if (!style.dash.empty()) os << " stroke-dasharray=\"" << style.dash << "\"";
    os << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << " ";
        os << num(map.px(pts[i][0])) << "," << num(map.py(pts[i][1]));
    }
    os << "\"/>\n";
}

}  // namespace

void render_svg(const RenderSpec& spec, std::ostream& os) {
    const Mapper map{static_cast<double>(spec.width), static_cast<double>(spec.height)};

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width
       << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << " "
       << spec.height << "\">\n";
    os << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
       << num(spec.width - 2 * kMargin) << "\" height=\"" << num(spec.height - 2 * kMargin)
       << "\" fill=\"#ffffff\" stroke=\"#888888\" stroke-width=\"1.000000\"/>\n";
    // orbifold corner marks
    for (double g : {0.0, M_PI})
        for (double t : {0.0, M_PI, kTwoPi}) {
            os << "<circle cx=\"" << num(map.px(g)) << "\" cy=\"" << num(map.py(t))
               << "\" r=\"2.500000\" fill=\"#888888\"/>\n";
        }

    for (const auto& layer : spec.layers) {
        if (std::holds_alternative<PathLayer>(layer)) {
            const auto& pl = std::get<PathLayer>(layer);
            // canonicalize and split at fundamental-domain boundary jumps
            std::vector<std::array<double, 2>> piece;
            PillowPoint prev{};
            for (std::size_t i = 0; i < pl.path.size(); ++i) {
                const PillowPoint p = pl.path.canonical(i);
                if (!piece.empty()) {
                    const double canon_step = std::hypot(p.gamma - prev.gamma, p.theta - prev.theta);
                    const double lift_step =
                        std::hypot(pl.path.lift[i][0] - pl.path.lift[i - 1][0],
                                   pl.path.lift[i][1] - pl.path.lift[i - 1][1]);
                    if (canon_step > std::max(0.05, 4.0 * lift_step)) {
                        emit_polyline(os, piece, pl.style, map);
                        piece.clear();
                    }
                }
                piece.push_back({p.gamma, p.theta});
                prev = p;
            }
            emit_polyline(os, piece, pl.style, map);
        } else {
            const auto& pts = std::get<PointLayer>(layer);
            for (const auto& [p, label] : pts.points) {
                os << "<circle cx=\"" << num(map.px(p.gamma)) << "\" cy=\"" << num(map.py(p.theta))
                   << "\" r=\"" << num(pts.radius) << "\" fill=\"" << pts.fill << "\"/>\n";
                if (!label.empty()) {
                    os << "<text x=\"" << num(map.px(p.gamma) + 6.0) << "\" y=\""
                       << num(map.py(p.theta) - 6.0)
                       << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"" << pts.fill
                       << "\">" << label << "</text>\n";
                }
            }
        }
    }
    os << "</svg>\n";
}

}  // namespace pillowcase
