#include "qcent/random.hpp"

#include <cmath>
#include <numbers>

namespace qcent {

namespace {

Complex gaussian(Rng& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    const double re = nd(rng);
    const double im = nd(rng);
    return {re, im};
}

// Orthonormalizes the columns of a tall matrix (modified Gram-Schmidt, two passes).
Matrix orthonormal_columns(Matrix g) {
    const std::size_t rows = g.rows();
    const std::size_t cols = g.cols();
    for (std::size_t c = 0; c < cols; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t prev = 0; prev < c; ++prev) {
                Complex proj{0.0, 0.0};
                for (std::size_t r = 0; r < rows; ++r) proj += std::conj(g(r, prev)) * g(r, c);
                for (std::size_t r = 0; r < rows; ++r) g(r, c) -= proj * g(r, prev);
            }
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < rows; ++r) norm += std::norm(g(r, c));
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < rows; ++r) g(r, c) /= norm;
    }
    return g;
}

Matrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix g(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) g(r, c) = gaussian(rng);
    }
    return g;
}

}  // namespace

Matrix random_unitary(std::size_t n, Rng& rng) { return orthonormal_columns(ginibre(n, n, rng)); }

Matrix random_density_matrix(std::size_t n, Rng& rng, std::size_t rank) {
    if (rank == 0 || rank > n) rank = n;
    const Matrix w = ginibre(n, rank, rng);
    Matrix rho = w * w.adjoint();
    rho *= 1.0 / rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

QuantumChannel random_channel(std::size_t n, std::size_t m, Rng& rng) {
    const Matrix iso = orthonormal_columns(ginibre(n * m, n, rng));
    std::vector<Matrix> kraus;
    kraus.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Matrix k(n, n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) k(a, b) = iso(i * n + a, b);
        }
        kraus.push_back(std::move(k));
    }
    return QuantumChannel(std::move(kraus));
}

Matrix random_diagonal_unitary(std::size_t n, Rng& rng) {
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::vector<Complex> diag;
    diag.reserve(n);
    for (std::size_t i = 0; i < n; ++i) diag.push_back(std::polar(1.0, phase(rng)));
    return Matrix::diagonal(std::span<const Complex>(diag));
}

}  // namespace qcent
