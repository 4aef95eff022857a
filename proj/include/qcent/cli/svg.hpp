#pragma once

#include <string>
#include <vector>

#include "qcent/binary_unitary.hpp"

namespace qcent::cli {

// The unit disk maps onto a size x size canvas with a margin of
// margin_fraction * size on every side; the y axis is flipped so that the
// imaginary axis points up.
struct SvgOptions {
    int size_px = 600;
    double margin_fraction = 0.05;
    bool show_hulls = false;
};

struct Viewport {
    double size = 600.0;
    double margin = 30.0;

    double scale() const { return (size - 2.0 * margin) / 2.0; }
    double x(Complex z) const { return margin + (z.real() + 1.0) * scale(); }
    double y(Complex z) const { return margin + (1.0 - z.imag()) * scale(); }
    Complex inverse(double px, double py) const;
};

Viewport viewport_for(const SvgOptions& options);

std::string render_region_svg(const NumRangeRegion& region, const std::vector<Complex>& eigenvalues,
                              const std::vector<std::vector<Complex>>& hulls, const SvgOptions& options);

}  // namespace qcent::cli
