#include "qcent/cli/svg.hpp"

#include <cstdio>
#include <sstream>

namespace qcent::cli {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string points_attr(const Viewport& vp, const std::vector<Complex>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) s += ' ';
        s += num(vp.x(pts[i])) + "," + num(vp.y(pts[i]));
    }
    return s;
}

}  // namespace

Complex Viewport::inverse(double px, double py) const {
    return {(px - margin) / scale() - 1.0, 1.0 - (py - margin) / scale()};
}

Viewport viewport_for(const SvgOptions& options) {
    const double size = static_cast<double>(options.size_px);
    return {size, options.margin_fraction * size};
}

std::string render_region_svg(const NumRangeRegion& region, const std::vector<Complex>& eigenvalues,
                              const std::vector<std::vector<Complex>>& hulls, const SvgOptions& options) {
    const Viewport vp = viewport_for(options);
    const Complex origin{0.0, 0.0};
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size_px << "\" height=\""
       << options.size_px << "\" viewBox=\"0 0 " << options.size_px << ' ' << options.size_px << "\">\n";
    os << "  <title>rank-" << region.k << " numerical range (" << to_string(region.kind) << ")</title>\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << options.size_px << "\" height=\"" << options.size_px
       << "\" fill=\"white\"/>\n";
    os << "  <line x1=\"" << num(vp.x({-1.0, 0.0})) << "\" y1=\"" << num(vp.y(origin)) << "\" x2=\""
       << num(vp.x({1.0, 0.0})) << "\" y2=\"" << num(vp.y(origin))
       << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    os << "  <line x1=\"" << num(vp.x(origin)) << "\" y1=\"" << num(vp.y({0.0, 1.0})) << "\" x2=\""
       << num(vp.x(origin)) << "\" y2=\"" << num(vp.y({0.0, -1.0}))
       << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    os << "  <circle id=\"unit-circle\" cx=\"" << num(vp.x(origin)) << "\" cy=\"" << num(vp.y(origin))
       << "\" r=\"" << num(vp.scale()) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    if (options.show_hulls) {
        os << "  <g id=\"hulls\" fill=\"none\" stroke=\"#4477aa\" stroke-width=\"0.75\" stroke-dasharray=\"4 3\">\n";
        for (const auto& h : hulls) {
            if (h.size() >= 3) {
                os << "    <polygon points=\"" << points_attr(vp, h) << "\"/>\n";
            } else if (h.size() == 2) {
                os << "    <line x1=\"" << num(vp.x(h[0])) << "\" y1=\"" << num(vp.y(h[0])) << "\" x2=\""
                   << num(vp.x(h[1])) << "\" y2=\"" << num(vp.y(h[1])) << "\"/>\n";
            }
        }
        os << "  </g>\n";
    }

    switch (region.kind) {
        case RegionKind::Empty: break;
        case RegionKind::Point:
            os << "  <circle id=\"region\" cx=\"" << num(vp.x(region.vertices[0])) << "\" cy=\""
               << num(vp.y(region.vertices[0])) << "\" r=\"5\" fill=\"#cc3311\"/>\n";
            break;
        case RegionKind::Segment:
            os << "  <line id=\"region\" x1=\"" << num(vp.x(region.vertices[0])) << "\" y1=\""
               << num(vp.y(region.vertices[0])) << "\" x2=\"" << num(vp.x(region.vertices[1])) << "\" y2=\""
               << num(vp.y(region.vertices[1])) << "\" stroke=\"#cc3311\" stroke-width=\"3\"/>\n";
            break;
        case RegionKind::Polygon:
            os << "  <polygon id=\"region\" points=\"" << points_attr(vp, region.vertices)
               << "\" fill=\"#ee7733\" fill-opacity=\"0.6\" stroke=\"#cc3311\" stroke-width=\"1.5\"/>\n";
            break;
    }

    os << "  <g id=\"eigenvalues\" fill=\"black\">\n";
    for (auto z : eigenvalues) {
        os << "    <circle cx=\"" << num(vp.x(z)) << "\" cy=\"" << num(vp.y(z)) << "\" r=\"4\"/>\n";
    }
    os << "  </g>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace qcent::cli
