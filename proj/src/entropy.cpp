#include "qcent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qcent {

namespace {

void require_matching(const QuantumChannel& c, const DensityMatrix& rho) {
    if (c.dim() != rho.dim()) throw ShapeError("state and channel dimensions differ");
}

}  // namespace

double spectrum_entropy(std::span<const double> spectrum, const ToleranceConfig& tol) {
    double s = 0.0;
    for (double x : spectrum) {
        if (x < -tol.eps_rank) {
            std::ostringstream os;
            os.precision(6);
            os << "entropy of a non-positive spectrum (eigenvalue " << x << ")";
            throw DomainError(os.str());
        }
        if (x > 0.0) s -= x * std::log2(x);
    }
    return std::max(0.0, s);
}

double von_neumann_entropy(const Matrix& state, const ToleranceConfig& tol) {
    const auto eig = hermitian_eigen(state, tol).real_eigenvalues();
    return spectrum_entropy(eig, tol);
}

double von_neumann_entropy(const DensityMatrix& rho, const ToleranceConfig& tol) {
    return von_neumann_entropy(rho.matrix(), tol);
}

ExchangeState entropy_exchange(const QuantumChannel& c, const DensityMatrix& rho,
                               const ToleranceConfig& tol) {
    require_matching(c, rho);
    const std::size_t m = c.kraus_count();
    std::vector<Matrix> rho_adj;  // rho E_i^dagger
    rho_adj.reserve(m);
    for (const auto& k : c.kraus()) rho_adj.push_back(rho.matrix() * k.adjoint());

    ExchangeState out;
    out.matrix = Matrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            const Complex s = (rho_adj[i] * c.kraus(j)).trace();
            out.matrix(i, j) = s;
            out.matrix(j, i) = std::conj(s);
        }
        out.matrix(i, i) = out.matrix(i, i).real();
    }
    out.entropy_bits = von_neumann_entropy(out.matrix, tol);
    return out;
}

double purification_exchange_entropy(const QuantumChannel& c, const DensityMatrix& rho,
                                     const ToleranceConfig& tol) {
    require_matching(c, rho);
    const std::size_t n = c.dim();
    const auto eig = hermitian_eigen(rho.matrix(), tol);
    const double cut = tol.eps_rank;

    // |psi> = sum_r sqrt(p_r) |v_r> (x) |r>, system first.
    std::vector<std::size_t> support;
    for (std::size_t r = 0; r < n; ++r) {
        if (eig.eigenvalues[r].real() > cut) support.push_back(r);
    }
    const std::size_t ref = support.size();
    Vector psi(n * ref);
    for (std::size_t slot = 0; slot < ref; ++slot) {
        const std::size_t r = support[slot];
        const double amp = std::sqrt(eig.eigenvalues[r].real());
        for (std::size_t a = 0; a < n; ++a) psi[a * ref + slot] = amp * eig.eigenvectors[r][a];
    }
    psi = psi.normalized();

    const Matrix id_ref = Matrix::identity(ref);
    Matrix out(n * ref, n * ref);
    for (const auto& k : c.kraus()) {
        const Vector image = tensor_product(k, id_ref) * psi;
        out += Matrix::outer(image, image);
    }
    return von_neumann_entropy(out, tol);
}

Matrix CompositeState::trace_system() const {
    Matrix out(index_dim, index_dim);
    for (std::size_t i = 0; i < index_dim; ++i) {
        for (std::size_t j = 0; j < index_dim; ++j) {
            Complex s{0.0, 0.0};
            for (std::size_t a = 0; a < system_dim; ++a) {
                s += matrix(i * system_dim + a, j * system_dim + a);
            }
            out(i, j) = s;
        }
    }
    return out;
}

Matrix CompositeState::trace_index() const {
    Matrix out(system_dim, system_dim);
    for (std::size_t i = 0; i < index_dim; ++i) {
        for (std::size_t a = 0; a < system_dim; ++a) {
            for (std::size_t b = 0; b < system_dim; ++b) {
                out(a, b) += matrix(i * system_dim + a, i * system_dim + b);
            }
        }
    }
    return out;
}

CompositeState lindblad_omega(const QuantumChannel& c, const DensityMatrix& rho, const ToleranceConfig&) {
    require_matching(c, rho);
    const std::size_t n = c.dim();
    const std::size_t m = c.kraus_count();
    CompositeState out{Matrix(n * m, n * m), n, m};
    std::vector<Matrix> left;  // E_i rho
    left.reserve(m);
    for (const auto& k : c.kraus()) left.push_back(k * rho.matrix());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const Matrix block = left[i] * c.kraus(j).adjoint();
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) out.matrix(i * n + a, j * n + b) = block(a, b);
            }
        }
    }
    return out;
}

LindbladReport check_lindblad_bounds(const QuantumChannel& c, const DensityMatrix& rho,
                                     const ToleranceConfig& tol) {
    constexpr double slack = 1e-8;
    LindbladReport r;
    r.s_rho = von_neumann_entropy(rho, tol);
    r.s_rho_prime = von_neumann_entropy(c.apply(rho.matrix()), tol);
    r.s_sigma = entropy_exchange(c, rho, tol).entropy_bits;
    r.holds = std::abs(r.s_rho_prime - r.s_sigma) <= r.s_rho + slack &&
              r.s_rho <= r.s_sigma + r.s_rho_prime + slack;
    return r;
}

}  // namespace qcent
