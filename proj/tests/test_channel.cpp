#include <gtest/gtest.h>

#include <cmath>

#include "qcent/channel.hpp"
#include "qcent/random.hpp"

using namespace qcent;

TEST(PauliWord, LeftmostLetterActsOnMostSignificantQubit) {
    const Matrix xi = pauli_word("XI");
    EXPECT_EQ(xi(2, 0), Complex(1.0));
    const Matrix z = pauli_word("Z");
    EXPECT_EQ(z(1, 1), Complex(-1.0));
    EXPECT_THROW(pauli_word("Q"), DomainError);
}

TEST(Channel, KrausShapesChecked) {
    EXPECT_THROW(QuantumChannel({Matrix::identity(2), Matrix::identity(3)}), ShapeError);
    EXPECT_THROW(QuantumChannel({Matrix(2, 3)}), ShapeError);
    EXPECT_THROW(QuantumChannel(std::vector<Matrix>{}), ShapeError);
}

TEST(Channel, TracePreservationValidated) {
    const QuantumChannel ok = pauli_channel({{0.5, "I"}, {0.5, "X"}});
    EXPECT_NO_THROW(validate_channel(ok));
    const QuantumChannel bad({Matrix::identity(2), pauli_word("X")});
    EXPECT_THROW(validate_channel(bad), NotTracePreserving);
    try {
        validate_channel(bad);
    } catch (const NotTracePreserving& e) {
        EXPECT_NEAR(e.residual(), std::sqrt(2.0), 1e-12);
    }
}

TEST(ChoiGram, RankCountsIndependentKraus) {
    // Two Kraus operators proportional to the same Pauli give Choi rank 1.
    const QuantumChannel c({std::sqrt(0.25) * pauli_word("X"), std::sqrt(0.75) * pauli_word("X")});
    const auto g = choi_gram(c);
    EXPECT_EQ(g.choi_rank, 1);
    EXPECT_NEAR(g.weights.back(), 2.0, 1e-12);

    const QuantumChannel d = pauli_channel({{0.25, "I"}, {0.25, "X"}, {0.25, "Y"}, {0.25, "Z"}});
    EXPECT_EQ(choi_gram(d).choi_rank, 4);
}

TEST(ChoiGram, RandomChannelRankBoundedByDimensionSquared) {
    Rng rng(3);
    const QuantumChannel c = random_channel(2, 6, rng);
    validate_channel(c);
    EXPECT_EQ(choi_gram(c).choi_rank, 4);
}

TEST(CanonicalKraus, OrthogonalAndEquivalent) {
    Rng rng(5);
    const QuantumChannel c = random_channel(3, 4, rng);
    const QuantumChannel f = canonical_kraus(c);
    for (std::size_t i = 0; i < f.kraus_count(); ++i) {
        for (std::size_t j = 0; j < f.kraus_count(); ++j) {
            if (i != j) EXPECT_LT(std::abs(trace(f.kraus(i).adjoint() * f.kraus(j))), 1e-12);
        }
    }
    const Matrix rho = random_density_matrix(3, rng);
    const Matrix a = c.apply(rho);
    const Matrix b = f.apply(rho);
    EXPECT_LT(frobenius_norm(a - b), 1e-12);
}

TEST(CanonicalKraus, DropsZeroWeightOperators) {
    const QuantumChannel c({pauli_word("I"), Matrix(2, 2)});
    EXPECT_EQ(canonical_kraus(c).kraus_count(), 1u);
}

TEST(ApplyChannel, OutputIsState) {
    Rng rng(9);
    const QuantumChannel c = random_channel(4, 3, rng);
    const DensityMatrix rho(random_density_matrix(4, rng));
    const DensityMatrix out = apply_channel(c, rho);
    EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-12);
}

TEST(DensityMatrix, RejectsInvalidStates) {
    EXPECT_THROW(DensityMatrix(Matrix::identity(2)), DomainError);
    EXPECT_THROW(DensityMatrix(Matrix{{1.5, 0.0}, {0.0, -0.5}}), DomainError);
    EXPECT_THROW(DensityMatrix(Matrix{{0.5, 0.5}, {0.0, 0.5}}), DomainError);
    EXPECT_NO_THROW(DensityMatrix::maximally_mixed(3));
}

TEST(RemixKraus, PreservesChannelAction) {
    Rng rng(13);
    const QuantumChannel c = random_channel(2, 3, rng);
    const QuantumChannel r = remix_kraus(c, random_unitary(3, rng));
    const Matrix rho = random_density_matrix(2, rng);
    EXPECT_LT(frobenius_norm(c.apply(rho) - r.apply(rho)), 1e-12);
    EXPECT_THROW(remix_kraus(c, 2.0 * Matrix::identity(3)), DomainError);
}

TEST(BinaryUnitaryChannel, KrausForm) {
    const QuantumChannel c = binary_unitary_channel(0.25, pauli_word("Z"));
    ASSERT_EQ(c.kraus_count(), 2u);
    EXPECT_NEAR(c.kraus(0)(0, 0).real(), std::sqrt(0.75), 1e-15);
    EXPECT_NEAR(c.kraus(1)(1, 1).real(), -0.5, 1e-15);
}
