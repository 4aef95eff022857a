#include "qcent/binary_unitary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "qcent/entropy.hpp"
#include "qcent/geometry.hpp"

namespace qcent {

namespace geo = geometry;

namespace {

// Vertices within this distance of a constraint or of each other are treated
// as lying on it; also the membership slack for user-supplied lambdas.
double membership_eps(const ToleranceConfig& tol) { return 10.0 * tol.eps_geom; }

NumRangeRegion classify_region(std::size_t k, std::vector<Complex> loop, double eps) {
    NumRangeRegion r;
    r.k = k;
    if (loop.empty()) return r;
    auto hull = geo::convex_hull(std::move(loop), eps);

    // Farthest pair decides between Point, Segment and Polygon.
    std::size_t ia = 0;
    std::size_t ib = 0;
    double diameter = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        for (std::size_t j = i + 1; j < hull.size(); ++j) {
            const double d = std::abs(hull[i] - hull[j]);
            if (d > diameter) {
                diameter = d;
                ia = i;
                ib = j;
            }
        }
    }
    if (diameter <= 2.0 * eps) {
        Complex centre{0.0, 0.0};
        for (auto v : hull) centre += v;
        r.kind = RegionKind::Point;
        r.vertices = {centre / static_cast<double>(hull.size())};
        return r;
    }
    double width = 0.0;
    for (auto v : hull) width = std::max(width, std::abs(geo::cross(hull[ia], hull[ib], v)) / diameter);
    if (hull.size() == 2 || width <= 2.0 * eps) {
        Complex a = hull[ia];
        Complex b = hull[ib];
        if (b.real() < a.real() || (b.real() == a.real() && b.imag() < a.imag())) std::swap(a, b);
        r.kind = RegionKind::Segment;
        r.vertices = {a, b};
        return r;
    }
    r.kind = RegionKind::Polygon;
    r.vertices = std::move(hull);
    return r;
}

// Lexicographic k-combinations of {0..n-1}.
bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    const std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Convex weights t (summing to 1) with sum t_j z_j = lambda, found among
// basic solutions supported on 1, 2 or 3 points. Empty when infeasible.
std::vector<double> convex_weights(std::span<const Complex> z, Complex lambda, double eps) {
    const std::size_t n = z.size();
    std::vector<double> t(n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        if (std::abs(z[a] - lambda) <= eps) {
            t[a] = 1.0;
            return t;
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const Complex d = z[b] - z[a];
            const double len2 = std::norm(d);
            if (len2 <= eps * eps) continue;
            if (geo::distance_to_segment(lambda, z[a], z[b]) > eps) continue;
            const Complex w = lambda - z[a];
            const double s = std::clamp((w.real() * d.real() + w.imag() * d.imag()) / len2, 0.0, 1.0);
            t[a] = 1.0 - s;
            t[b] = s;
            return t;
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                const double area = geo::cross(z[a], z[b], z[c]);
                if (std::abs(area) <= eps) continue;
                double ta = geo::cross(lambda, z[b], z[c]) / area;
                double tb = geo::cross(z[a], lambda, z[c]) / area;
                double tc = geo::cross(z[a], z[b], lambda) / area;
                if (ta < -eps || tb < -eps || tc < -eps) continue;
                ta = std::max(ta, 0.0);
                tb = std::max(tb, 0.0);
                tc = std::max(tc, 0.0);
                const double sum = ta + tb + tc;
                ta /= sum;
                tb /= sum;
                tc /= sum;
                if (std::abs(ta * z[a] + tb * z[b] + tc * z[c] - lambda) > eps) continue;
                t[a] = ta;
                t[b] = tb;
                t[c] = tc;
                return t;
            }
        }
    }
    return {};
}

struct PartitionSearch {
    std::span<const Complex> eigenvalues;
    Complex lambda;
    std::size_t group_size;
    double eps;
    std::vector<bool> used;
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::vector<double>> weights;

    bool run() {
        const auto first = std::find(used.begin(), used.end(), false);
        if (first == used.end()) return true;
        const std::size_t anchor = static_cast<std::size_t>(first - used.begin());
        std::vector<std::size_t> free;
        for (std::size_t i = anchor + 1; i < used.size(); ++i) {
            if (!used[i]) free.push_back(i);
        }
        std::vector<std::size_t> comb(group_size - 1);
        std::iota(comb.begin(), comb.end(), std::size_t{0});
        do {
            std::vector<std::size_t> group{anchor};
            for (auto c : comb) group.push_back(free[c]);
            std::vector<Complex> z;
            for (auto idx : group) z.push_back(eigenvalues[idx]);
            auto t = convex_weights(z, lambda, eps);
            if (t.empty()) continue;
            for (auto idx : group) used[idx] = true;
            groups.push_back(group);
            weights.push_back(std::move(t));
            if (run()) return true;
            groups.pop_back();
            weights.pop_back();
            for (auto idx : group) used[idx] = false;
        } while (!comb.empty() && next_combination(comb, free.size()));
        return false;
    }
};

}  // namespace

// ---------------------------------------------------------------- channel

BinaryUnitaryChannel::BinaryUnitaryChannel(double p, Matrix u, const ToleranceConfig& tol)
    : p_(p), u_(std::move(u)) {
    if (!(p_ >= 0.0 && p_ <= 1.0)) throw DomainError("binary unitary channel needs p in [0, 1]");
    if (!is_unitary(u_, tol.eps_eig * static_cast<double>(u_.rows()))) {
        throw DomainError("binary unitary channel needs a unitary U");
    }
}

BinaryUnitaryChannel BinaryUnitaryChannel::from_pair(double p, const Matrix& w1, const Matrix& w2,
                                                     const ToleranceConfig& tol) {
    return BinaryUnitaryChannel(p, w1.adjoint() * w2, tol);
}

QuantumChannel BinaryUnitaryChannel::channel() const { return binary_unitary_channel(p_, u_); }

std::string_view to_string(RegionKind k) {
    switch (k) {
        case RegionKind::Empty: return "Empty";
        case RegionKind::Point: return "Point";
        case RegionKind::Segment: return "Segment";
        case RegionKind::Polygon: return "Polygon";
    }
    return "Unknown";
}

// ---------------------------------------------------------------- region

double NumRangeRegion::distance(Complex z) const {
    switch (kind) {
        case RegionKind::Empty: return std::numeric_limits<double>::infinity();
        case RegionKind::Point: return std::abs(z - vertices[0]);
        case RegionKind::Segment: return geo::distance_to_segment(z, vertices[0], vertices[1]);
        case RegionKind::Polygon: break;
    }
    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Complex a = vertices[i];
        const Complex b = vertices[(i + 1) % vertices.size()];
        if (geo::cross(a, b, z) < 0.0) inside = false;
        best = std::min(best, geo::distance_to_segment(z, a, b));
    }
    return inside ? 0.0 : best;
}

bool NumRangeRegion::contains(Complex z, double eps) const { return distance(z) <= eps; }

double NumRangeRegion::distance_to_boundary(Complex z) const {
    if (kind != RegionKind::Polygon) return distance(z);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        best = std::min(best, geo::distance_to_segment(z, vertices[i], vertices[(i + 1) % vertices.size()]));
    }
    return best;
}

Complex NumRangeRegion::closest_point(Complex z) const {
    auto project = [z](Complex a, Complex b) {
        const Complex d = b - a;
        const double len2 = std::norm(d);
        if (len2 == 0.0) return a;
        const Complex w = z - a;
        const double t = std::clamp((w.real() * d.real() + w.imag() * d.imag()) / len2, 0.0, 1.0);
        return a + t * d;
    };
    switch (kind) {
        case RegionKind::Empty: throw NoCode("empty numerical range has no closest point");
        case RegionKind::Point: return vertices[0];
        case RegionKind::Segment: return project(vertices[0], vertices[1]);
        case RegionKind::Polygon: break;
    }
    if (distance(z) == 0.0) return z;
    Complex best = vertices[0];
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Complex c = project(vertices[i], vertices[(i + 1) % vertices.size()]);
        if (std::abs(c - z) < std::abs(best - z)) best = c;
    }
    return best;
}

Spectrum merged_spectrum(const Matrix& u, const ToleranceConfig& tol) {
    Spectrum s;
    s.eigen = unitary_eigen(u, tol);
    s.cluster_of.assign(s.eigen.eigenvalues.size(), 0);
    for (std::size_t c = 0; c < s.eigen.clusters.size(); ++c) {
        Complex mean{0.0, 0.0};
        for (auto idx : s.eigen.clusters[c]) {
            mean += s.eigen.eigenvalues[idx];
            s.cluster_of[idx] = c;
        }
        s.values.push_back(mean / std::abs(mean));
        s.multiplicity.push_back(s.eigen.clusters[c].size());
    }
    return s;
}

std::vector<std::vector<Complex>> constituent_hulls(const Spectrum& spectrum, std::size_t k,
                                                    const ToleranceConfig& tol) {
    const std::size_t total = std::accumulate(spectrum.multiplicity.begin(), spectrum.multiplicity.end(),
                                              std::size_t{0});
    if (k < 1 || k > total) throw DomainError("numerical range needs 1 <= k <= N");
    const std::size_t distinct = spectrum.values.size();

    // Gamma omits k - 1 eigenvalues (with multiplicity); a distinct value
    // disappears from Gamma only when all its copies are omitted, so it is
    // enough to drop value sets whose total multiplicity is <= k - 1.
    std::vector<std::vector<Complex>> hulls;
    for (std::size_t drop = 1; drop < distinct; ++drop) {
        std::vector<std::size_t> comb(drop);
        std::iota(comb.begin(), comb.end(), std::size_t{0});
        do {
            std::size_t removed = 0;
            for (auto c : comb) removed += spectrum.multiplicity[c];
            if (removed > k - 1) continue;
            std::vector<Complex> kept;
            std::size_t next = 0;
            for (std::size_t i = 0; i < distinct; ++i) {
                if (next < comb.size() && comb[next] == i) {
                    ++next;
                    continue;
                }
                kept.push_back(spectrum.values[i]);
            }
            hulls.push_back(geo::convex_hull(std::move(kept), tol.eps_geom));
        } while (next_combination(comb, distinct));
    }
    return hulls;
}

NumRangeRegion numerical_range(const Spectrum& spectrum, std::size_t k, const ToleranceConfig& tol) {
    const double eps = tol.eps_geom;
    std::vector<Complex> loop = geo::convex_hull(spectrum.values, eps);
    for (const auto& hull : constituent_hulls(spectrum, k, tol)) {
        for (const auto& h : geo::hull_constraints(hull)) {
            loop = geo::dedupe(geo::clip(loop, h, eps), eps);
            if (loop.empty()) break;
        }
        if (loop.size() >= 3) loop = geo::convex_hull(std::move(loop), eps);
        if (loop.empty()) break;
    }
    return classify_region(k, std::move(loop), eps);
}

NumRangeRegion numerical_range(const Matrix& u, std::size_t k, const ToleranceConfig& tol) {
    return numerical_range(merged_spectrum(u, tol), k, tol);
}

ExtremalLambdas extremal_lambda(const NumRangeRegion& region, const ToleranceConfig& tol) {
    if (region.kind == RegionKind::Empty) throw NoCode("rank-k numerical range is empty: no rank-k code exists");
    double top = 0.0;
    for (auto v : region.vertices) top = std::max(top, std::abs(v));
    ExtremalLambdas out;
    for (auto v : region.vertices) {
        if (std::abs(v) >= top - tol.eps_geom) out.min_entropy_lambdas.push_back(v);
    }
    std::sort(out.min_entropy_lambdas.begin(), out.min_entropy_lambdas.end(), [](Complex a, Complex b) {
        return a.imag() < b.imag() || (a.imag() == b.imag() && a.real() < b.real());
    });
    out.max_entropy_lambda = region.closest_point(Complex{0.0, 0.0});
    return out;
}

// ---------------------------------------------------------------- closed forms

std::pair<double, double> lambda_spectrum(double p, Complex lambda, const ToleranceConfig& tol) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("lambda_spectrum needs p in [0, 1]");
    const double mod = std::abs(lambda);
    if (mod > 1.0 + tol.eps_geom) throw DomainError("compression value lies outside the unit disk");
    const double mod2 = std::min(mod * mod, 1.0);
    const double disc = std::clamp(1.0 - 4.0 * p * (1.0 - p) * (1.0 - mod2), 0.0, 1.0);
    const double root = std::sqrt(disc);
    return {0.5 * (1.0 + root), 0.5 * (1.0 - root)};
}

double biunitary_code_entropy(double p, Complex lambda, const ToleranceConfig& tol) {
    const auto [plus, minus] = lambda_spectrum(p, lambda, tol);
    // The channel is unitary at the endpoints.
    if (p <= 0.0 || p >= 1.0) return 0.0;
    const double spec[] = {minus, plus};
    return spectrum_entropy(spec, tol);
}

Matrix biunitary_lambda_matrix(double p, Complex lambda) {
    const double off = std::sqrt(p * (1.0 - p));
    return Matrix{{1.0 - p, off * lambda}, {off * std::conj(lambda), p}};
}

// ---------------------------------------------------------------- codes

GroupingCode grouping_code(const Matrix& u, std::size_t k, Complex lambda, const ToleranceConfig& tol) {
    if (!u.is_square()) throw ShapeError("grouping_code needs a square U");
    const std::size_t n = u.rows();
    if (k < 1 || k > n) throw DomainError("grouping_code needs 1 <= k <= N");
    if (n % k != 0) {
        std::ostringstream os;
        os << "eigenstate grouping needs k | N (k=" << k << ", N=" << n << ")";
        throw Unsupported(os.str());
    }
    const auto spectrum = merged_spectrum(u, tol);
    const auto region = numerical_range(spectrum, k, tol);
    const double eps = membership_eps(tol);
    if (!region.contains(lambda, eps)) {
        std::ostringstream os;
        os.precision(17);
        os << "lambda " << lambda << " is not in the rank-" << k << " numerical range (distance "
           << region.distance(lambda) << ")";
        throw LambdaOutsideRegion(os.str());
    }

    std::vector<Complex> eigenvalues;
    for (std::size_t j = 0; j < n; ++j) eigenvalues.push_back(spectrum.values[spectrum.cluster_of[j]]);

    PartitionSearch search{eigenvalues, lambda, n / k, eps, std::vector<bool>(n, false), {}, {}};
    if (!search.run()) {
        std::ostringstream os;
        os.precision(17);
        os << "no partition of the " << n << " eigenstates into " << k << " groups has lambda " << lambda
           << " in every group hull";
        throw NoFeasiblePartition(os.str());
    }

    std::vector<Vector> basis;
    for (std::size_t g = 0; g < search.groups.size(); ++g) {
        Vector phi(n);
        for (std::size_t m = 0; m < search.groups[g].size(); ++m) {
            const double t = search.weights[g][m];
            if (t > 0.0) phi += std::sqrt(t) * spectrum.eigen.eigenvectors[search.groups[g][m]];
        }
        basis.push_back(phi.normalized());
    }
    return {lambda, std::move(search.groups), std::move(search.weights), CodeSubspace(n, std::move(basis), tol)};
}

DfsResult dfs_exists(const Matrix& u, std::size_t k, const ToleranceConfig& tol) {
    const auto spectrum = merged_spectrum(u, tol);
    const auto region = numerical_range(spectrum, k, tol);
    for (std::size_t i = 0; i < spectrum.values.size(); ++i) {
        if (spectrum.multiplicity[i] >= k && region.contains(spectrum.values[i], membership_eps(tol))) {
            return {true, spectrum.values[i]};
        }
    }
    return {};
}

std::vector<std::pair<double, double>> entropy_vs_p(const Matrix& u, std::size_t k, Complex lambda,
                                                    std::span<const double> p_grid, const ToleranceConfig& tol) {
    const auto region = numerical_range(u, k, tol);
    if (!region.contains(lambda, membership_eps(tol))) {
        throw LambdaOutsideRegion("lambda is not in the rank-k numerical range");
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(p_grid.size());
    for (double p : p_grid) out.emplace_back(p, biunitary_code_entropy(p, lambda, tol));
    return out;
}

}  // namespace qcent
