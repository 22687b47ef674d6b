#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "pillowcase/pillow.hpp"

namespace pillowcase {

struct SvgStyle {
    std::string stroke = "#000000";
    double width = 1.5;
    std::string dash;  // e.g. "6,4"
};

struct PathLayer {
    PillowPath path;
    SvgStyle style;
};

struct PointLayer {
    std::vector<std::pair<PillowPoint, std::string>> points;  // point, label
    std::string fill = "#000000";
    double radius = 4.0;
};

// Deterministic diagram of the fundamental domain [0,pi] x [0,2pi]: curves
// are canonicalized and split where they cross the domain boundary; fixed
// 6-decimal output, stable layer order.
struct RenderSpec {
    int width = 540;
    int height = 860;
    std::vector<std::variant<PathLayer, PointLayer>> layers;
};

void render_svg(const RenderSpec& spec, std::ostream& os);

}  // namespace pillowcase
