#include "qcent/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qcent {

QuantumChannel::QuantumChannel(std::vector<Matrix> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw ShapeError("channel needs at least one Kraus operator");
    dim_ = kraus_.front().rows();
    if (dim_ == 0) throw ShapeError("channel dimension must be positive");
    for (const auto& k : kraus_) {
        if (k.rows() != dim_ || k.cols() != dim_) {
            throw ShapeError("Kraus operators must be square and of equal dimension");
        }
    }
}

Matrix QuantumChannel::apply(const Matrix& x) const {
    if (x.rows() != dim_ || x.cols() != dim_) throw ShapeError("channel input has the wrong dimension");
    Matrix out(dim_, dim_);
    for (const auto& k : kraus_) out += k * x * k.adjoint();
    return out;
}

DensityMatrix::DensityMatrix(Matrix m, const ToleranceConfig& tol, double trace_tol) {
    if (!m.is_square() || m.rows() == 0) throw ShapeError("density matrix must be square");
    const double asym = m.max_hermitian_asymmetry();
    if (asym > tol.eps_kl) throw DomainError("density matrix is not Hermitian");
    m = 0.5 * (m + m.adjoint());
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > trace_tol) {
        std::ostringstream os;
        os.precision(17);
        os << "density matrix trace is " << tr << ", expected 1";
        throw DomainError(os.str());
    }
    const auto eig = hermitian_eigen(m, tol).real_eigenvalues();
    if (eig.front() < -tol.eps_rank) throw DomainError("density matrix is not positive semidefinite");
    matrix_ = std::move(m);
}

DensityMatrix DensityMatrix::pure(const Vector& psi, const ToleranceConfig& tol) {
    const Vector v = psi.normalized();
    return DensityMatrix(Matrix::outer(v, v), tol);
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return DensityMatrix(Complex{1.0 / static_cast<double>(dim), 0.0} * Matrix::identity(dim));
}

double trace_preservation_residual(const QuantumChannel& c) {
    Matrix sum(c.dim(), c.dim());
    for (const auto& k : c.kraus()) sum += k.adjoint() * k;
    return (sum - Matrix::identity(c.dim())).frobenius_norm();
}

void validate_channel(const QuantumChannel& c, const ToleranceConfig& tol) {
    const double residual = trace_preservation_residual(c);
    if (residual > tol.eps_kl * static_cast<double>(c.dim())) throw NotTracePreserving(residual);
}

ChoiGram choi_gram(const QuantumChannel& c, const ToleranceConfig& tol) {
    const std::size_t m = c.kraus_count();
    ChoiGram out;
    out.matrix = Matrix(m, m);
    std::vector<Matrix> adj;
    adj.reserve(m);
    for (const auto& k : c.kraus()) adj.push_back(k.adjoint());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            const Complex g = (adj[i] * c.kraus(j)).trace();
            out.matrix(i, j) = g;
            out.matrix(j, i) = std::conj(g);
        }
        out.matrix(i, i) = out.matrix(i, i).real();
    }
    const auto eig = hermitian_eigen(out.matrix, tol).real_eigenvalues();
    out.choi_rank = numerical_rank(std::span<const double>(eig), tol);
    out.weights.reserve(eig.size());
    for (double e : eig) out.weights.push_back(std::max(0.0, e));
    return out;
}

QuantumChannel canonical_kraus(const QuantumChannel& c, const ToleranceConfig& tol) {
    const auto gram = choi_gram(c, tol);
    const auto eig = hermitian_eigen(gram.matrix, tol);
    const std::size_t m = c.kraus_count();
    const double top = std::max(1.0, eig.eigenvalues.back().real());

    std::vector<Matrix> out;
    // Descending weight order.
    for (std::size_t idx = m; idx-- > 0;) {
        if (eig.eigenvalues[idx].real() <= tol.eps_rank * top) continue;
        const Vector& w = eig.eigenvectors[idx];
        Matrix f(c.dim(), c.dim());
        for (std::size_t i = 0; i < m; ++i) {
            if (w[i] != Complex{0.0, 0.0}) f += w[i] * c.kraus(i);
        }
        out.push_back(std::move(f));
    }
    if (out.empty()) throw DomainError("channel has no nonzero Kraus operator");
    return QuantumChannel(std::move(out));
}

DensityMatrix apply_channel(const QuantumChannel& c, const DensityMatrix& rho, const ToleranceConfig& tol) {
    if (rho.dim() != c.dim()) throw ShapeError("state and channel dimensions differ");
    const double trace_tol = std::max(1e-12, tol.eps_kl * static_cast<double>(c.dim()));
    return DensityMatrix(c.apply(rho.matrix()), tol, trace_tol);
}

QuantumChannel remix_kraus(const QuantumChannel& c, const Matrix& v, const ToleranceConfig& tol) {
    const std::size_t m = c.kraus_count();
    if (v.rows() != m || v.cols() != m) throw ShapeError("remix matrix must be MxM for M Kraus operators");
    if (!is_unitary(v, tol.eps_eig * static_cast<double>(m) * 10.0)) {
        throw DomainError("remix matrix is not unitary");
    }
    std::vector<Matrix> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Matrix e(c.dim(), c.dim());
        for (std::size_t j = 0; j < m; ++j) {
            if (v(i, j) != Complex{0.0, 0.0}) e += v(i, j) * c.kraus(j);
        }
        out.push_back(std::move(e));
    }
    return QuantumChannel(std::move(out));
}

QuantumChannel unitary_channel(const Matrix& u) { return QuantumChannel({u}); }

QuantumChannel binary_unitary_channel(double p, const Matrix& u) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binary unitary channel needs p in [0, 1]");
    if (!u.is_square()) throw ShapeError("binary unitary channel needs a square U");
    return QuantumChannel({std::sqrt(1.0 - p) * Matrix::identity(u.rows()), std::sqrt(p) * u});
}

Matrix pauli_word(const std::string& word) {
    if (word.empty()) throw DomainError("empty Pauli word");
    const Complex i{0.0, 1.0};
    Matrix out = Matrix::identity(1);
    for (char ch : word) {
        Matrix p;
        switch (ch) {
            case 'I': p = Matrix::identity(2); break;
            case 'X': p = Matrix{{0.0, 1.0}, {1.0, 0.0}}; break;
            case 'Y': p = Matrix{{0.0, -i}, {i, 0.0}}; break;
            case 'Z': p = Matrix{{1.0, 0.0}, {0.0, -1.0}}; break;
            default: throw DomainError(std::string("unknown Pauli letter '") + ch + "'");
        }
        out = tensor_product(out, p);
    }
    return out;
}

QuantumChannel pauli_channel(const std::vector<std::pair<double, std::string>>& terms) {
    std::vector<Matrix> kraus;
    kraus.reserve(terms.size());
    for (const auto& [weight, word] : terms) {
        if (weight < 0.0) throw DomainError("Pauli channel weights must be non-negative");
        kraus.push_back(std::sqrt(weight) * pauli_word(word));
    }
    return QuantumChannel(std::move(kraus));
}

}  // namespace qcent
