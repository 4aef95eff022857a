#pragma once

#include <span>
#include <vector>

#include "qcent/numerics.hpp"

namespace qcent::geometry {

using Point = Complex;

// z-component of (b - a) x (c - a).
double cross(Point a, Point b, Point c);

// Closed half-plane {p : dot(normal, p) <= offset}, normal of unit length.
struct HalfPlane {
    Point normal;
    double offset = 0.0;

    double signed_distance(Point p) const;
};

/// Convex hull, counter-clockwise, collinear points dropped at `eps`
/// resolution. Returns 1 point for a point set, 2 for a segment.
std::vector<Point> convex_hull(std::vector<Point> points, double eps);

/// Half-planes whose intersection is conv(hull). Degenerate hulls become
/// zero-width slabs: two opposing half-planes along the segment plus end
/// caps (for a point, two perpendicular zero-width slabs).
std::vector<HalfPlane> hull_constraints(std::span<const Point> hull);

/// Sutherland-Hodgman clip of a convex vertex loop (which may be a
/// degenerate 1- or 2-point loop) by a half-plane. Points within eps
/// outside the boundary are kept.
std::vector<Point> clip(std::span<const Point> loop, const HalfPlane& h, double eps);

// Removes vertices within eps of the previous one (cyclically).
std::vector<Point> dedupe(std::vector<Point> loop, double eps);

// Euclidean distance from p to the segment [a, b].
double distance_to_segment(Point p, Point a, Point b);

}  // namespace qcent::geometry
