#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qcent/binary_unitary.hpp"
#include "qcent/catalog.hpp"
#include "qcent/code.hpp"
#include "qcent/geometry.hpp"
#include "qcent/random.hpp"

using namespace qcent;

namespace {

Matrix phases(const std::vector<double>& ph) {
    std::vector<Complex> d;
    for (double x : ph) d.push_back(std::polar(1.0, x));
    return Matrix::diagonal(std::span<const Complex>(d));
}

}  // namespace

TEST(Geometry, ConvexHullDropsInteriorAndCollinear) {
    const auto h = geometry::convex_hull({{0, 0}, {1, 0}, {0.5, 0}, {1, 1}, {0, 1}, {0.5, 0.5}}, 1e-12);
    EXPECT_EQ(h.size(), 4u);
    EXPECT_EQ(geometry::convex_hull({{0, 0}, {1, 1}, {2, 2}}, 1e-12).size(), 2u);
    EXPECT_EQ(geometry::convex_hull({{0.3, 0.3}, {0.3, 0.3}}, 1e-12).size(), 1u);
}

TEST(Geometry, ClipSquareByDiagonal) {
    const std::vector<geometry::Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const double s = 1.0 / std::sqrt(2.0);
    const geometry::HalfPlane h{{s, s}, s};  // x + y <= 1
    const auto out = geometry::dedupe(geometry::clip(square, h, 1e-12), 1e-12);
    EXPECT_EQ(out.size(), 3u);
}

TEST(NumericalRange, AntipodalPhasesGiveOrigin) {
    const auto region = numerical_range(catalog::example33_unitary(), 2);
    ASSERT_EQ(region.kind, RegionKind::Point);
    EXPECT_LT(std::abs(region.vertices[0]), 1e-12);
}

TEST(NumericalRange, PauliZZIsFullSegment) {
    const auto region = numerical_range(catalog::pauli_zz_unitary(), 2);
    ASSERT_EQ(region.kind, RegionKind::Segment);
    const double a = region.vertices[0].real();
    const double b = region.vertices[1].real();
    EXPECT_NEAR(std::min(a, b), -1.0, 1e-12);
    EXPECT_NEAR(std::max(a, b), 1.0, 1e-12);
}

TEST(NumericalRange, QutritNonagon) {
    const auto region = numerical_range(catalog::qutrit_unitary(), 3);
    ASSERT_EQ(region.kind, RegionKind::Polygon);
    EXPECT_EQ(region.vertices.size(), 9u);
    // One vertex is the intersection of the chords z1-z7 and z6-z9.
    const Complex v = catalog::qutrit_chord_vertex();
    double best = 1.0;
    for (auto z : region.vertices) best = std::min(best, std::abs(z - v));
    EXPECT_LT(best, 1e-12);
    EXPECT_NEAR(v.real(), 0.0923962654520476, 1e-13);
    EXPECT_NEAR(v.imag(), -0.5240052604587697, 1e-13);
}

TEST(NumericalRange, RankOneIsSpectrumHull) {
    const auto region = numerical_range(catalog::example33_unitary(), 1);
    ASSERT_EQ(region.kind, RegionKind::Polygon);
    EXPECT_EQ(region.vertices.size(), 4u);
}

TEST(NumericalRange, EmptyForLargeRank) {
    // Two distinct chords of four generic eigenvalues do not all meet.
    const auto region = numerical_range(phases({0.1, 1.0, 2.5, 4.0}), 3);
    EXPECT_EQ(region.kind, RegionKind::Empty);
    EXPECT_THROW(extremal_lambda(region), NoCode);
}

TEST(NumericalRange, DegenerateEigenvalueAlwaysIncluded) {
    // A triple eigenvalue survives every removal of k - 1 = 2 eigenvalues.
    const auto region = numerical_range(phases({0.0, 0.0, 0.0, 2.0, 4.0}), 3);
    EXPECT_TRUE(region.contains({1.0, 0.0}, 1e-9));
    EXPECT_TRUE(dfs_exists(phases({0.0, 0.0, 0.0, 2.0, 4.0}), 3).exists);
}

TEST(NumericalRange, InvariantUnderUnitaryConjugation) {
    Rng rng(2);
    const Matrix d = random_diagonal_unitary(5, rng);
    const Matrix w = random_unitary(5, rng);
    const auto a = numerical_range(d, 2);
    const auto b = numerical_range(w * d * w.adjoint(), 2);
    ASSERT_EQ(a.kind, b.kind);
    ASSERT_EQ(a.vertices.size(), b.vertices.size());
    for (auto z : a.vertices) EXPECT_LT(b.distance(z), 1e-9);
}

TEST(Extremal, QutritChoosesLowerChordVertex) {
    const auto ex = extremal_lambda(numerical_range(catalog::qutrit_unitary(), 3));
    ASSERT_FALSE(ex.min_entropy_lambdas.empty());
    EXPECT_LT(std::abs(ex.min_entropy_lambdas.front() - catalog::qutrit_chord_vertex()), 1e-12);
    ASSERT_TRUE(ex.max_entropy_lambda.has_value());
    EXPECT_LT(std::abs(*ex.max_entropy_lambda), 1e-12);
}

TEST(ClosedForms, LambdaSpectrumMatchesEigensolver) {
    Rng rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double p = u(rng);
        const Complex l = std::polar(u(rng), 2.0 * std::numbers::pi * u(rng));
        const auto [plus, minus] = lambda_spectrum(p, l);
        const auto w = hermitian_eigen(biunitary_lambda_matrix(p, l)).real_eigenvalues();
        EXPECT_NEAR(minus, w[0], 1e-12);
        EXPECT_NEAR(plus, w[1], 1e-12);
    }
}

TEST(ClosedForms, QutritEntropies) {
    const double p = 0.01;
    EXPECT_NEAR(biunitary_code_entropy(p, catalog::qutrit_chord_vertex()), 0.0612297, 1e-6);
    EXPECT_NEAR(lambda_spectrum(p, catalog::qutrit_chord_vertex()).second, 0.0071482, 1e-6);
    EXPECT_NEAR(biunitary_code_entropy(p, 0.0), 0.0807931, 1e-6);
    EXPECT_EQ(biunitary_code_entropy(0.0, 0.3), 0.0);
    EXPECT_EQ(biunitary_code_entropy(1.0, 0.3), 0.0);
    EXPECT_NEAR(biunitary_code_entropy(0.5, 1.0), 0.0, 1e-12);
}

TEST(BinaryUnitary, FromPairReducesToRelativeUnitary) {
    Rng rng(6);
    const Matrix w1 = random_unitary(3, rng);
    const Matrix w2 = random_unitary(3, rng);
    const auto bu = BinaryUnitaryChannel::from_pair(0.3, w1, w2);
    EXPECT_LT(frobenius_norm(bu.u() - w1.adjoint() * w2), 1e-12);
    EXPECT_THROW(BinaryUnitaryChannel(1.5, Matrix::identity(2)), DomainError);
}

TEST(Grouping, QutritMinimumEntropyCodeIsCorrectable) {
    const Matrix u = catalog::qutrit_unitary();
    const Complex v = catalog::qutrit_chord_vertex();
    const auto g = grouping_code(u, 3, v);
    EXPECT_EQ(g.partition.size(), 3u);
    for (const auto& group : g.partition) EXPECT_EQ(group.size(), 3u);
    const Matrix compressed = g.code.isometry().adjoint() * u * g.code.isometry();
    EXPECT_LT(frobenius_norm(compressed - v * Matrix::identity(3)), 1e-10);
    const auto kl = kl_check(binary_unitary_channel(0.01, u), g.code);
    EXPECT_LE(kl.max_residual, 1e-8);
    EXPECT_NEAR(code_entropy(binary_unitary_channel(0.01, u), g.code), 0.0612297, 1e-6);
}

TEST(Grouping, Errors) {
    const Matrix u = catalog::qutrit_unitary();
    EXPECT_THROW(grouping_code(u, 2, 0.0), Unsupported);
    EXPECT_THROW(grouping_code(u, 3, Complex{0.9, 0.0}), LambdaOutsideRegion);
}

TEST(Grouping, OriginForAntipodalPairs) {
    const auto g = grouping_code(catalog::example33_unitary(), 2, 0.0);
    const auto kl = kl_check(binary_unitary_channel(0.01, catalog::example33_unitary()), g.code);
    EXPECT_NEAR(std::abs(kl.lambda.matrix(0, 1)), 0.0, 1e-12);
}

TEST(Dfs, PauliZZHasDecoherenceFreePlane) {
    const auto r = dfs_exists(catalog::pauli_zz_unitary(), 2);
    EXPECT_TRUE(r.exists);
    ASSERT_TRUE(r.lambda.has_value());
    EXPECT_NEAR(std::abs(*r.lambda), 1.0, 1e-12);
    EXPECT_FALSE(dfs_exists(catalog::qutrit_unitary(), 3).exists);
}

TEST(EntropyVsP, SymmetricPeakAndZeroEnds) {
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
    const auto rows = entropy_vs_p(catalog::qutrit_unitary(), 3, catalog::qutrit_chord_vertex(), grid);
    EXPECT_EQ(rows.front().second, 0.0);
    EXPECT_EQ(rows.back().second, 0.0);
    const auto peak = std::max_element(rows.begin(), rows.end(),
                                       [](const auto& a, const auto& b) { return a.second < b.second; });
    EXPECT_DOUBLE_EQ(peak->first, 0.5);
}
