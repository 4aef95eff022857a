#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qcent/channel.hpp"
#include "qcent/code.hpp"

namespace qcent {

/// Phi(rho) = (1 - p) rho + p U rho U^dagger.
class BinaryUnitaryChannel {
public:
    BinaryUnitaryChannel(double p, Matrix u, const ToleranceConfig& tol = {});
    // Phi(rho) = (1 - p) W1 rho W1^dagger + p W2 rho W2^dagger, reduced to U = W1^dagger W2.
    static BinaryUnitaryChannel from_pair(double p, const Matrix& w1, const Matrix& w2,
                                          const ToleranceConfig& tol = {});

    double p() const { return p_; }
    const Matrix& u() const { return u_; }
    std::size_t dim() const { return u_.rows(); }
    // {sqrt(1-p) 1, sqrt(p) U}
    QuantumChannel channel() const;

private:
    double p_;
    Matrix u_;
};

enum class RegionKind : std::uint8_t { Empty, Point, Segment, Polygon };

std::string_view to_string(RegionKind k);

/// Geometric form of the rank-k numerical range. Polygon vertices are CCW.
struct NumRangeRegion {
    std::size_t k = 0;
    RegionKind kind = RegionKind::Empty;
    std::vector<Complex> vertices;

    // Euclidean distance from z to the region (0 inside); infinity when Empty.
    double distance(Complex z) const;
    bool contains(Complex z, double eps) const;
    // Distance to the boundary; for Point/Segment the whole region is boundary.
    double distance_to_boundary(Complex z) const;
    // Point of the region closest to z.
    Complex closest_point(Complex z) const;
};

/// Distinct eigenvalues of a unitary with multiplicities, phases merged at
/// eps_eig * N.
struct Spectrum {
    std::vector<Complex> values;
    std::vector<std::size_t> multiplicity;
    EigenDecomposition eigen;
    // Cluster index of each eigen-index.
    std::vector<std::size_t> cluster_of;
};

Spectrum merged_spectrum(const Matrix& u, const ToleranceConfig& tol = {});

/// Hulls conv(Gamma) that bound the rank-k numerical range, one per value
/// set whose removal takes out at most k - 1 eigenvalues (with
/// multiplicity). Enumeration is lexicographic in phase order.
std::vector<std::vector<Complex>> constituent_hulls(const Spectrum& spectrum, std::size_t k,
                                                    const ToleranceConfig& tol = {});

/// Intersection of conv(Gamma) over all (N - k + 1)-element sub-multisets
/// Gamma of the spectrum, computed by successive half-plane clipping
/// starting from conv(spectrum).
NumRangeRegion numerical_range(const Matrix& u, std::size_t k, const ToleranceConfig& tol = {});
NumRangeRegion numerical_range(const Spectrum& spectrum, std::size_t k, const ToleranceConfig& tol = {});

struct ExtremalLambdas {
    // Vertices attaining max |lambda|, sorted by (im, re).
    std::vector<Complex> min_entropy_lambdas;
    std::optional<Complex> max_entropy_lambda;
};

// Throws NoCode for an Empty region.
ExtremalLambdas extremal_lambda(const NumRangeRegion& region, const ToleranceConfig& tol = {});

// Eigenvalues (Lambda_+, Lambda_-) of [[1-p, sqrt(p(1-p)) l], [sqrt(p(1-p)) conj(l), p]].
std::pair<double, double> lambda_spectrum(double p, Complex lambda, const ToleranceConfig& tol = {});

// -Lambda_+ log2 Lambda_+ - Lambda_- log2 Lambda_-; 0 for p outside (0, 1).
double biunitary_code_entropy(double p, Complex lambda, const ToleranceConfig& tol = {});

// Error-correction matrix of a rank-k code with compression value lambda.
Matrix biunitary_lambda_matrix(double p, Complex lambda);

struct GroupingCode {
    Complex lambda;
    std::vector<std::vector<std::size_t>> partition;  // eigen-indices in phase order
    std::vector<std::vector<double>> weights;         // convex weights per group member
    CodeSubspace code;
};

/// Eigenstate grouping: splits the N eigenvectors into k groups of N/k so
/// that lambda is a convex combination of each group's eigenvalues, and
/// returns the code spanned by |phi_i> = sum_j sqrt(t_j) |psi_j>.
/// Throws Unsupported unless k divides N, LambdaOutsideRegion when lambda
/// is not in the rank-k numerical range, NoFeasiblePartition when the
/// backtracking search is exhausted.
GroupingCode grouping_code(const Matrix& u, std::size_t k, Complex lambda, const ToleranceConfig& tol = {});

struct DfsResult {
    bool exists = false;
    std::optional<Complex> lambda;
};

// A rank-k decoherence-free subspace exists iff an eigenvalue of multiplicity >= k lies in Omega_k(U).
DfsResult dfs_exists(const Matrix& u, std::size_t k, const ToleranceConfig& tol = {});

std::vector<std::pair<double, double>> entropy_vs_p(const Matrix& u, std::size_t k, Complex lambda,
                                                    std::span<const double> p_grid,
                                                    const ToleranceConfig& tol = {});

}  // namespace qcent
