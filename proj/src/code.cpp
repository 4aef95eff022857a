#include "qcent/code.hpp"

#include <algorithm>
#include <cmath>

#include "qcent/entropy.hpp"
#include "qcent/random.hpp"

namespace qcent {

namespace {

ErrorCorrectionMatrix make_lambda(Matrix m, const ToleranceConfig& tol) {
    m = 0.5 * (m + m.adjoint());
    const auto eig = hermitian_eigen(m, tol).real_eigenvalues();
    ErrorCorrectionMatrix out{std::move(m), {}};
    for (double e : eig) {
        if (e < -tol.eps_rank) throw DomainError("error correction matrix is not positive semidefinite");
        out.spectrum.push_back(std::max(0.0, e));
    }
    return out;
}

}  // namespace

std::string_view to_string(CodeClass c) {
    switch (c) {
        case CodeClass::UnitarilyCorrectable: return "UnitarilyCorrectable";
        case CodeClass::DecoherenceFree: return "DecoherenceFree";
        case CodeClass::NonDegenerate: return "NonDegenerate";
        case CodeClass::PartiallyDegenerate: return "PartiallyDegenerate";
    }
    return "Unknown";
}

CodeSubspace::CodeSubspace(std::size_t ambient_dim, std::vector<Vector> basis, const ToleranceConfig& tol)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    if (basis_.empty()) throw ShapeError("code needs at least one basis vector");
    if (basis_.size() > ambient_dim_) throw ShapeError("code dimension exceeds ambient dimension");
    for (const auto& b : basis_) {
        if (b.dim() != ambient_dim_) throw ShapeError("code basis vector has the wrong dimension");
    }
    const double limit = tol.eps_eig * static_cast<double>(basis_.size()) * 10.0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        for (std::size_t j = i; j < basis_.size(); ++j) {
            const Complex g = inner(basis_[i], basis_[j]);
            const Complex expected = i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            if (std::abs(g - expected) > limit) throw DomainError("code basis is not orthonormal");
        }
    }
}

CodeSubspace CodeSubspace::from_unnormalized(std::size_t ambient_dim, const std::vector<Vector>& kets,
                                             const ToleranceConfig& tol) {
    std::vector<Vector> basis;
    basis.reserve(kets.size());
    for (const auto& k : kets) basis.push_back(k.normalized());
    return CodeSubspace(ambient_dim, std::move(basis), tol);
}

Matrix CodeSubspace::isometry() const { return Matrix::from_columns(basis_); }

Matrix CodeSubspace::projector() const {
    const Matrix b = isometry();
    return b * b.adjoint();
}

KlResult kl_check(const QuantumChannel& c, const CodeSubspace& code, const ToleranceConfig& tol) {
    if (c.dim() != code.ambient_dim()) throw ShapeError("code and channel dimensions differ");
    const std::size_t m = c.kraus_count();
    const std::size_t k = code.dim();
    const Matrix b = code.isometry();
    const Matrix id_k = Matrix::identity(k);

    std::vector<Matrix> images;  // E_i B
    std::vector<double> norms;
    images.reserve(m);
    for (const auto& e : c.kraus()) {
        images.push_back(e * b);
        norms.push_back(e.frobenius_norm());
    }
    const double top_norm = *std::max_element(norms.begin(), norms.end());

    Matrix lambda(m, m);
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const Matrix left = images[i].adjoint();
        for (std::size_t j = i; j < m; ++j) {
            // B^dagger E_i^dagger E_j B is the compression to the code.
            const Matrix compressed = left * images[j];
            const Complex value = compressed.trace() / static_cast<double>(k);
            worst = std::max(worst, (compressed - value * id_k).frobenius_norm());
            lambda(i, j) = value;
            lambda(j, i) = std::conj(value);
        }
    }
    const double threshold = tol.eps_kl * std::max(top_norm * top_norm, 1e-300);
    if (worst > threshold) throw NotCorrectable(worst, threshold);
    return {make_lambda(std::move(lambda), tol), worst, threshold};
}

double code_entropy(const QuantumChannel& c, const CodeSubspace& code, const ToleranceConfig& tol) {
    return spectrum_entropy(kl_check(c, code, tol).lambda.spectrum, tol);
}

CodeReport classify_code(const QuantumChannel& c, const CodeSubspace& code, const ToleranceConfig& tol) {
    auto kl = kl_check(c, code, tol);
    CodeReport r;
    r.max_kl_residual = kl.max_residual;
    r.entropy_bits = spectrum_entropy(kl.lambda.spectrum, tol);
    r.lambda_rank = numerical_rank(std::span<const double>(kl.lambda.spectrum), tol);
    r.choi_rank = choi_gram(c, tol).choi_rank;
    r.lambda = std::move(kl.lambda);

    r.unitarily_correctable = r.lambda_rank == 1;
    if (r.unitarily_correctable) {
        // Every E_i must act on the code as a scalar multiple of the identity.
        const Matrix b = code.isometry();
        const double k = static_cast<double>(code.dim());
        bool identity_on_code = true;
        for (const auto& e : c.kraus()) {
            const Matrix eb = e * b;
            const Complex alpha = (b.adjoint() * eb).trace() / k;
            const double residual = (eb - alpha * b).frobenius_norm();
            if (residual > tol.eps_kl * std::max(1.0, e.frobenius_norm())) {
                identity_on_code = false;
                break;
            }
        }
        r.decoherence_free = identity_on_code;
    }

    if (r.lambda_rank == r.choi_rank) {
        const double flat = 1.0 / static_cast<double>(r.choi_rank);
        const auto& spec = r.lambda.spectrum;
        bool balanced = true;
        for (std::size_t i = spec.size() - static_cast<std::size_t>(r.choi_rank); i < spec.size(); ++i) {
            if (std::abs(spec[i] - flat) > tol.eps_kl) balanced = false;
        }
        r.non_degenerate = balanced;
    }

    if (r.decoherence_free) {
        r.classification = CodeClass::DecoherenceFree;
    } else if (r.unitarily_correctable) {
        r.classification = CodeClass::UnitarilyCorrectable;
    } else if (r.non_degenerate) {
        r.classification = CodeClass::NonDegenerate;
    } else {
        r.classification = CodeClass::PartiallyDegenerate;
    }
    return r;
}

bool sigma_equals_lambda_check(const QuantumChannel& c, const CodeSubspace& code, int samples,
                               std::uint64_t seed, const ToleranceConfig& tol) {
    const auto kl = kl_check(c, code, tol);
    const Matrix b = code.isometry();
    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> rank_dist(1, code.dim());
    bool all = true;
    for (int s = 0; s < samples; ++s) {
        const Matrix inner_state = random_density_matrix(code.dim(), rng, rank_dist(rng));
        const DensityMatrix rho(b * inner_state * b.adjoint(), tol);
        const auto sigma = entropy_exchange(c, rho, tol).matrix;
        double worst = 0.0;
        for (std::size_t i = 0; i < sigma.rows(); ++i) {
            for (std::size_t j = 0; j < sigma.cols(); ++j) {
                worst = std::max(worst, std::abs(sigma(i, j) - kl.lambda.matrix(i, j)));
            }
        }
        all = all && worst <= 1e-8;
    }
    return all;
}

double recovery_residual(const QuantumChannel& recovery, const QuantumChannel& c, const CodeSubspace& code) {
    double worst = 0.0;
    for (const auto& a : code.basis()) {
        for (const auto& bvec : code.basis()) {
            const Matrix unit = Matrix::outer(a, bvec);
            const Matrix back = recovery.apply(c.apply(unit));
            worst = std::max(worst, (back - unit).frobenius_norm());
        }
    }
    return worst;
}

RecoveryOperation build_recovery(const QuantumChannel& c, const CodeSubspace& code, const ToleranceConfig& tol) {
    const auto kl = kl_check(c, code, tol);
    const auto eig = hermitian_eigen(kl.lambda.matrix, tol);
    const std::size_t n = c.dim();
    const std::size_t m = c.kraus_count();
    const Matrix b = code.isometry();
    const double top = std::max(1.0, eig.eigenvalues.back().real());

    std::vector<Matrix> kraus;
    std::vector<Vector> range_columns;
    // Descending weight order.
    for (std::size_t idx = m; idx-- > 0;) {
        const double d = eig.eigenvalues[idx].real();
        if (d <= tol.eps_rank * top) continue;
        const Vector& w = eig.eigenvectors[idx];
        Matrix f(n, n);
        for (std::size_t i = 0; i < m; ++i) {
            if (w[i] != Complex{0.0, 0.0}) f += w[i] * c.kraus(i);
        }
        // V = F B / sqrt(d) is an isometry from the code into the error space.
        const Matrix v = (1.0 / std::sqrt(d)) * (f * b);
        kraus.push_back(b * v.adjoint());
        for (std::size_t col = 0; col < v.cols(); ++col) range_columns.push_back(v.column(col));
    }
    const std::size_t corrections = kraus.size();

    // Projector onto the complement of the error spaces, rounded to an exact projector.
    const Matrix q = Matrix::from_columns(range_columns);
    const auto range = hermitian_eigen(q * q.adjoint(), tol);
    Matrix complement(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (range.eigenvalues[i].real() < 0.5) {
            complement += Matrix::outer(range.eigenvectors[i], range.eigenvectors[i]);
        }
    }
    if (complement.frobenius_norm() > 0.5) kraus.push_back(std::move(complement));

    QuantumChannel channel(std::move(kraus));
    const double residual = recovery_residual(channel, c, code);
    return {std::move(channel), corrections, residual};
}

bool rank_bound_check(const QuantumChannel& c, const CodeSubspace& code, const ToleranceConfig& tol) {
    const auto kl = kl_check(c, code, tol);
    const int lambda_rank = numerical_rank(std::span<const double>(kl.lambda.spectrum), tol);
    return lambda_rank <= choi_gram(c, tol).choi_rank;
}

}  // namespace qcent
