#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcent/numerics.hpp"

namespace qcent {

/// Quantum operation in Kraus form, rho -> sum_i E_i rho E_i^dagger.
///
/// Construction only checks shapes (all Kraus operators square and of the
/// same dimension); trace preservation is checked by validate_channel.
class QuantumChannel {
public:
    explicit QuantumChannel(std::vector<Matrix> kraus);

    std::size_t dim() const { return dim_; }
    std::size_t kraus_count() const { return kraus_.size(); }
    const std::vector<Matrix>& kraus() const { return kraus_; }
    const Matrix& kraus(std::size_t i) const { return kraus_.at(i); }

    // Image of an arbitrary operator (not necessarily a state).
    Matrix apply(const Matrix& x) const;

private:
    std::size_t dim_;
    std::vector<Matrix> kraus_;
};

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix {
public:
    // Validates hermiticity, unit trace (within trace_tol) and positivity
    // (eps_rank). Round-off asymmetry is symmetrized away.
    explicit DensityMatrix(Matrix m, const ToleranceConfig& tol = {}, double trace_tol = 1e-12);

    static DensityMatrix pure(const Vector& psi, const ToleranceConfig& tol = {});
    static DensityMatrix maximally_mixed(std::size_t dim);

    const Matrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.rows(); }

private:
    Matrix matrix_;
};

/// Gram matrix of the Kraus operators, G_ij = Tr E_i^dagger E_j. Its nonzero
/// spectrum matches the Choi-Jamiolkowski operator; its rank is the Choi rank.
struct ChoiGram {
    Matrix matrix;
    std::vector<double> weights;  // ascending eigenvalues, clipped at 0
    int choi_rank = 0;
};

// Residual || sum E_i^dagger E_i - 1 ||_F.
double trace_preservation_residual(const QuantumChannel& c);

// Throws NotTracePreserving unless the residual is within eps_kl * N.
void validate_channel(const QuantumChannel& c, const ToleranceConfig& tol = {});

ChoiGram choi_gram(const QuantumChannel& c, const ToleranceConfig& tol = {});

/// Orthogonal Kraus form: remixes the Kraus list with the eigenvectors of
/// the Choi-Gram matrix so that Tr F_i^dagger F_j = d_i delta_ij, then drops
/// operators with weight <= eps_rank. Output is ordered by descending weight.
QuantumChannel canonical_kraus(const QuantumChannel& c, const ToleranceConfig& tol = {});

DensityMatrix apply_channel(const QuantumChannel& c, const DensityMatrix& rho,
                            const ToleranceConfig& tol = {});

// E'_i = sum_j v_ij E_j for unitary v.
QuantumChannel remix_kraus(const QuantumChannel& c, const Matrix& v, const ToleranceConfig& tol = {});

// Builders.
QuantumChannel unitary_channel(const Matrix& u);
// {sqrt(1-p) 1, sqrt(p) U}.
QuantumChannel binary_unitary_channel(double p, const Matrix& u);
// Pauli words such as "IXZ"; the leftmost letter acts on the most significant qubit.
Matrix pauli_word(const std::string& word);
// Kraus operators sqrt(w_i) * P_i.
QuantumChannel pauli_channel(const std::vector<std::pair<double, std::string>>& terms);

}  // namespace qcent
