#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qcent/numerics.hpp"
#include "qcent/random.hpp"

using namespace qcent;

namespace {

double max_abs_diff(const Matrix& a, const Matrix& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    return m;
}

Matrix reconstruct(const EigenDecomposition& e) {
    const Matrix v = e.eigenvector_matrix();
    return v * Matrix::diagonal(std::span<const Complex>(e.eigenvalues)) * v.adjoint();
}

}  // namespace

TEST(Matrix, RejectsNonFiniteEntries) {
    EXPECT_THROW(Matrix(1, 1, {Complex{NAN, 0.0}}), DomainError);
    EXPECT_THROW(Matrix(2, 2, {1.0, 0.0, 0.0}), ShapeError);
}

TEST(Matrix, ShapeMismatchThrows) {
    EXPECT_THROW(Matrix::identity(2) * Matrix::identity(3), ShapeError);
    EXPECT_THROW(Matrix::identity(2) + Matrix::identity(3), ShapeError);
}

TEST(Matrix, TensorProductOrdersLeftFactorMostSignificant) {
    const Matrix x{{0.0, 1.0}, {1.0, 0.0}};
    const Matrix t = tensor_product(x, Matrix::identity(2));
    // X (x) I sends |00> (index 0) to |10> (index 2).
    EXPECT_EQ(t(2, 0), Complex(1.0));
    EXPECT_EQ(t(1, 0), Complex(0.0));
}

TEST(HermitianEigen, RankTwoExample) {
    const double t = 1.0 / 3.0;
    const Matrix a{{t, t, 0.0}, {t, t, 0.0}, {0.0, 0.0, t}};
    const auto e = hermitian_eigen(a);
    const auto w = e.real_eigenvalues();
    ASSERT_EQ(w.size(), 3u);
    EXPECT_NEAR(w[0], 0.0, 1e-14);
    EXPECT_NEAR(w[1], 1.0 / 3.0, 1e-14);
    EXPECT_NEAR(w[2], 2.0 / 3.0, 1e-14);
    EXPECT_LT(max_abs_diff(reconstruct(e), a), 1e-14);
}

TEST(HermitianEigen, ComplexOffDiagonal) {
    // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
    const Matrix a{{2.0, Complex{0.0, 1.0}}, {Complex{0.0, -1.0}, 2.0}};
    const auto w = hermitian_eigen(a).real_eigenvalues();
    EXPECT_NEAR(w[0], 1.0, 1e-14);
    EXPECT_NEAR(w[1], 3.0, 1e-14);
}

TEST(HermitianEigen, DegenerateValuesShareCluster) {
    const auto e = hermitian_eigen(Matrix::diagonal(std::vector<double>{0.5, 0.25, 0.25}));
    ASSERT_EQ(e.clusters.size(), 2u);
    EXPECT_EQ(e.clusters[0].size(), 2u);
}

TEST(HermitianEigen, RejectsNonHermitian) {
    const Matrix a{{1.0, 1.0}, {0.0, 1.0}};
    EXPECT_THROW(hermitian_eigen(a), DomainError);
}

TEST(HermitianEigen, RandomMatricesReconstruct) {
    Rng rng(7);
    for (std::size_t n : {2u, 3u, 5u, 8u}) {
        const Matrix u = random_unitary(n, rng);
        std::vector<double> d;
        for (std::size_t i = 0; i < n; ++i) d.push_back(static_cast<double>(i) - 1.5);
        const Matrix a = u * Matrix::diagonal(std::span<const double>(d)) * u.adjoint();
        const auto e = hermitian_eigen(a);
        EXPECT_LT(max_abs_diff(reconstruct(e), a), 1e-12);
        const auto w = e.real_eigenvalues();
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(w[i], d[i], 1e-12);
        const Matrix v = e.eigenvector_matrix();
        EXPECT_LT(max_abs_diff(v.adjoint() * v, Matrix::identity(n)), 1e-12);
    }
}

TEST(UnitaryEigen, DiagonalPhasesSortedOnCircle) {
    std::vector<Complex> diag{std::polar(1.0, 2.0), std::polar(1.0, 0.5), std::polar(1.0, -1.0)};
    const auto e = unitary_eigen(Matrix::diagonal(std::span<const Complex>(diag)));
    ASSERT_EQ(e.eigenvalues.size(), 3u);
    EXPECT_NEAR(phase_of(e.eigenvalues[0]), 0.5, 1e-13);
    EXPECT_NEAR(phase_of(e.eigenvalues[1]), 2.0, 1e-13);
    EXPECT_NEAR(phase_of(e.eigenvalues[2]), 2.0 * std::numbers::pi - 1.0, 1e-13);
}

TEST(UnitaryEigen, ConjugatedSpectrumRecovered) {
    Rng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix d = random_diagonal_unitary(6, rng);
        const Matrix w = random_unitary(6, rng);
        const Matrix u = w * d * w.adjoint();
        const auto e = unitary_eigen(u);
        EXPECT_LT(max_abs_diff(reconstruct(e), u), 1e-11);
        for (auto z : e.eigenvalues) EXPECT_NEAR(std::abs(z), 1.0, 1e-13);
    }
}

TEST(UnitaryEigen, ConjugateEigenvaluesAreSeparated) {
    // Hermitian part is degenerate for e^{+-i theta}; the anti-Hermitian part splits it.
    const Matrix r{{std::cos(0.7), -std::sin(0.7)}, {std::sin(0.7), std::cos(0.7)}};
    const auto e = unitary_eigen(r);
    EXPECT_NEAR(phase_of(e.eigenvalues[0]), 0.7, 1e-13);
    EXPECT_NEAR(phase_of(e.eigenvalues[1]), 2.0 * std::numbers::pi - 0.7, 1e-13);
    EXPECT_EQ(e.clusters.size(), 2u);
}

TEST(UnitaryEigen, WraparoundClusterMerged) {
    std::vector<Complex> diag{std::polar(1.0, 1e-14), std::polar(1.0, -1e-14), Complex{-1.0, 0.0}};
    const auto e = unitary_eigen(Matrix::diagonal(std::span<const Complex>(diag)));
    EXPECT_EQ(e.clusters.size(), 2u);
}

TEST(UnitaryEigen, RejectsNonUnitary) { EXPECT_THROW(unitary_eigen(2.0 * Matrix::identity(2)), DomainError); }

TEST(NumericalRank, ThresholdRelativeToLargestEigenvalue) {
    EXPECT_EQ(numerical_rank(std::vector<double>{1e-12, 0.5, 0.5}), 2);
    EXPECT_EQ(numerical_rank(Matrix::identity(3)), 3);
    EXPECT_EQ(numerical_rank(std::vector<double>{-1e-11, 1.0}), 1);
}

TEST(ToleranceConfig, RejectsNonPositive) {
    ToleranceConfig t;
    t.eps_kl = 0.0;
    EXPECT_THROW(t.validate(), DomainError);
    t.eps_kl = NAN;
    EXPECT_THROW(t.validate(), DomainError);
}
