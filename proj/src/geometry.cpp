#include "qcent/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace qcent::geometry {

double cross(Point a, Point b, Point c) {
    const Point u = b - a;
    const Point v = c - a;
    return u.real() * v.imag() - u.imag() * v.real();
}

double HalfPlane::signed_distance(Point p) const {
    return normal.real() * p.real() + normal.imag() * p.imag() - offset;
}

namespace {

bool lex_less(Point a, Point b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

// Keeps p iff dot(normal, p) <= dot(normal, anchor).
HalfPlane through(Point anchor, Point normal) {
    const Point unit = normal / std::abs(normal);
    return {unit, unit.real() * anchor.real() + unit.imag() * anchor.imag()};
}

}  // namespace

std::vector<Point> convex_hull(std::vector<Point> points, double eps) {
    std::sort(points.begin(), points.end(), lex_less);
    points = dedupe(std::move(points), eps);
    // dedupe is cyclic; a sorted list can still hold near-equal non-neighbours.
    std::vector<Point> unique;
    for (auto p : points) {
        if (std::none_of(unique.begin(), unique.end(), [&](Point q) { return std::abs(p - q) <= eps; })) {
            unique.push_back(p);
        }
    }
    if (unique.size() <= 1) return unique;

    // Andrew's monotone chain; a turn counts only if the apex is more than eps off the chord.
    auto turns_left = [eps](Point a, Point b, Point c) {
        const double len = std::abs(c - a);
        return cross(a, b, c) > eps * std::max(len, 1e-300);
    };
    std::vector<Point> hull;
    for (int pass = 0; pass < 2; ++pass) {
        const std::size_t start = hull.size();
        for (auto p : unique) {
            while (hull.size() >= start + 2 && !turns_left(hull[hull.size() - 2], hull.back(), p)) {
                hull.pop_back();
            }
            hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(unique.begin(), unique.end());
    }
    hull = dedupe(std::move(hull), eps);
    if (hull.size() == 2 && std::abs(hull[0] - hull[1]) <= eps) hull.pop_back();
    return hull;
}

std::vector<HalfPlane> hull_constraints(std::span<const Point> hull) {
    std::vector<HalfPlane> out;
    if (hull.empty()) return out;
    if (hull.size() == 1) {
        const Point p = hull[0];
        for (Point n : {Point{1.0, 0.0}, Point{-1.0, 0.0}, Point{0.0, 1.0}, Point{0.0, -1.0}}) {
            out.push_back(through(p, n));
        }
        return out;
    }
    if (hull.size() == 2) {
        const Point a = hull[0];
        const Point b = hull[1];
        const Point dir = b - a;
        const Point perp{-dir.imag(), dir.real()};
        out.push_back(through(a, perp));
        out.push_back(through(a, -perp));
        out.push_back(through(a, -dir));
        out.push_back(through(b, dir));
        return out;
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point a = hull[i];
        const Point b = hull[(i + 1) % hull.size()];
        const Point dir = b - a;
        // Interior of a CCW polygon lies to the left of each edge.
        out.push_back(through(a, Point{dir.imag(), -dir.real()}));
    }
    return out;
}

std::vector<Point> clip(std::span<const Point> loop, const HalfPlane& h, double eps) {
    std::vector<Point> out;
    if (loop.empty()) return out;
    if (loop.size() == 1) {
        if (h.signed_distance(loop[0]) <= eps) out.push_back(loop[0]);
        return out;
    }
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point cur = loop[i];
        const Point next = loop[(i + 1) % n];
        const double dc = h.signed_distance(cur);
        const double dn = h.signed_distance(next);
        const bool cur_in = dc <= eps;
        const bool next_in = dn <= eps;
        if (cur_in) out.push_back(cur);
        if (cur_in != next_in) {
            // Crossing point lies exactly on the boundary line.
            const double t = dc / (dc - dn);
            out.push_back(cur + t * (next - cur));
        }
    }
    return out;
}

std::vector<Point> dedupe(std::vector<Point> loop, double eps) {
    std::vector<Point> out;
    for (auto p : loop) {
        if (out.empty() || std::abs(p - out.back()) > eps) out.push_back(p);
    }
    while (out.size() > 1 && std::abs(out.front() - out.back()) <= eps) out.pop_back();
    return out;
}

double distance_to_segment(Point p, Point a, Point b) {
    const Point d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - a);
    const Point w = p - a;
    const double t = std::clamp((w.real() * d.real() + w.imag() * d.imag()) / len2, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

}  // namespace qcent::geometry
