#include "qcent/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace qcent {

namespace {

void require_finite(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("non-finite matrix entry");
    }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream os;
        os << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
           << b.cols();
        throw ShapeError(os.str());
    }
}

// Groups consecutive sorted keys whose gaps are within `threshold`.
std::vector<std::vector<std::size_t>> chain_clusters(std::span<const double> sorted_keys,
                                                     double threshold) {
    std::vector<std::vector<std::size_t>> clusters;
    for (std::size_t i = 0; i < sorted_keys.size(); ++i) {
        if (clusters.empty() || sorted_keys[i] - sorted_keys[i - 1] > threshold) {
            clusters.emplace_back();
        }
        clusters.back().push_back(i);
    }
    return clusters;
}

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (r != c) s += std::norm(a(r, c));
        }
    }
    return std::sqrt(s);
}

}  // namespace

void ToleranceConfig::validate() const {
    for (double v : {eps_rank, eps_kl, eps_geom, eps_eig}) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw DomainError("tolerances must be strictly positive");
        }
    }
}

// ---------------------------------------------------------------- Vector

Vector::Vector(std::size_t dim) : data_(dim, Complex{0.0, 0.0}) {}

Vector::Vector(std::vector<Complex> entries) : data_(std::move(entries)) {
    for (auto z : data_) require_finite(z);
}

Vector::Vector(std::initializer_list<Complex> entries) : Vector(std::vector<Complex>(entries)) {}

Vector Vector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw ShapeError("basis index out of range");
    Vector v(dim);
    v[index] = 1.0;
    return v;
}

double Vector::norm() const {
    double s = 0.0;
    for (auto z : data_) s += std::norm(z);
    return std::sqrt(s);
}

Vector Vector::normalized() const {
    const double n = norm();
    if (n == 0.0) throw DomainError("cannot normalize the zero vector");
    Vector out = *this;
    out *= 1.0 / n;
    return out;
}

Vector& Vector::operator+=(const Vector& other) {
    if (dim() != other.dim()) throw ShapeError("vector add: dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) data_[i] += other.data_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& other) {
    if (dim() != other.dim()) throw ShapeError("vector subtract: dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Vector& Vector::operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator*(Complex s, Vector v) { return v *= s; }

Complex inner(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw ShapeError("inner product: dimension mismatch");
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw ShapeError("entry count does not match rows*cols");
    for (auto z : data_) require_finite(z);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ShapeError("ragged matrix literal");
        for (auto z : row) {
            require_finite(z);
            data_.push_back(z);
        }
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const Complex> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::outer(const Vector& ket, const Vector& bra) {
    Matrix m(ket.dim(), bra.dim());
    for (std::size_t r = 0; r < ket.dim(); ++r) {
        for (std::size_t c = 0; c < bra.dim(); ++c) m(r, c) = ket[r] * std::conj(bra[c]);
    }
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
    if (columns.empty()) throw ShapeError("from_columns: no columns");
    const std::size_t n = columns.front().dim();
    Matrix m(n, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].dim() != n) throw ShapeError("from_columns: ragged columns");
        for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::adjoint() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    }
    return m;
}

Complex Matrix::trace() const {
    if (!is_square()) throw ShapeError("trace of a non-square matrix");
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (auto z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double Matrix::max_hermitian_asymmetry() const {
    if (!is_square()) throw ShapeError("hermiticity of a non-square matrix");
    double worst = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    require_same_shape(*this, other, "add");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require_same_shape(*this, other, "subtract");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Complex s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        std::ostringstream os;
        os << "multiply: inner dimensions " << a.cols() << " and " << b.rows() << " differ";
        throw ShapeError(os.str());
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
        }
    }
    return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols() != v.dim()) throw ShapeError("matrix-vector: dimension mismatch");
    Vector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Complex s{0.0, 0.0};
        for (std::size_t c = 0; c < a.cols(); ++c) s += a(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) { return a * b; }
Matrix add(const Matrix& a, const Matrix& b) { return a + b; }
Matrix adjoint(const Matrix& a) { return a.adjoint(); }
Complex trace(const Matrix& a) { return a.trace(); }
double frobenius_norm(const Matrix& a) { return a.frobenius_norm(); }

Matrix tensor_product(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

Vector tensor_product(const Vector& a, const Vector& b) {
    Vector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
    }
    return out;
}

// ---------------------------------------------------------------- eigen

std::vector<double> EigenDecomposition::real_eigenvalues() const {
    std::vector<double> out;
    out.reserve(eigenvalues.size());
    for (auto z : eigenvalues) out.push_back(z.real());
    return out;
}

Matrix EigenDecomposition::eigenvector_matrix() const { return Matrix::from_columns(eigenvectors); }

double phase_of(Complex z) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double ph = std::arg(z);
    if (ph < 0.0) ph += two_pi;
    if (ph >= two_pi) ph -= two_pi;
    return ph;
}

bool is_unitary(const Matrix& u, double tol) {
    if (!u.is_square()) return false;
    const Matrix residual = u.adjoint() * u - Matrix::identity(u.rows());
    return residual.frobenius_norm() <= tol;
}

EigenDecomposition hermitian_eigen(const Matrix& a, const ToleranceConfig& tol) {
    if (!a.is_square()) throw ShapeError("hermitian_eigen: matrix is not square");
    const std::size_t n = a.rows();
    const double scale = std::max(1.0, a.frobenius_norm());
    const double asym = a.max_hermitian_asymmetry();
    if (asym > tol.eps_eig * scale) {
        std::ostringstream os;
        os.precision(6);
        os << "hermitian_eigen: matrix is not Hermitian (max asymmetry " << asym << ")";
        throw DomainError(os.str());
    }

    // Symmetrize so the rotations act on an exactly Hermitian matrix.
    Matrix work(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        work(r, r) = a(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex z = 0.5 * (a(r, c) + std::conj(a(c, r)));
            work(r, c) = z;
            work(c, r) = std::conj(z);
        }
    }
    Matrix vecs = Matrix::identity(n);

    const double stop = 1e-15 * std::max(work.frobenius_norm(), 1e-300);
    constexpr int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps && off_diagonal_norm(work) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex g = work(p, q);
                const double mag = std::abs(g);
                if (mag <= 1e-300) continue;
                const Complex phase = g / mag;  // e^{i phi}
                const Complex phase_c = std::conj(phase);
                const double app = work(p, p).real();
                const double aqq = work(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q); work <- J^dagger work J.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex wp = work(k, p);
                    const Complex wq = work(k, q);
                    work(k, p) = c * wp - s * phase_c * wq;
                    work(k, q) = s * wp + c * phase_c * wq;
                    const Complex vp = vecs(k, p);
                    const Complex vq = vecs(k, q);
                    vecs(k, p) = c * vp - s * phase_c * vq;
                    vecs(k, q) = s * vp + c * phase_c * vq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex wp = work(p, k);
                    const Complex wq = work(q, k);
                    work(p, k) = c * wp - s * phase * wq;
                    work(q, k) = s * wp + c * phase * wq;
                }
                work(p, q) = 0.0;
                work(q, p) = 0.0;
                work(p, p) = work(p, p).real();
                work(q, q) = work(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return work(i, i).real() < work(j, j).real();
    });

    EigenDecomposition out;
    std::vector<double> sorted;
    for (std::size_t idx : order) {
        sorted.push_back(work(idx, idx).real());
        out.eigenvalues.emplace_back(work(idx, idx).real(), 0.0);
        out.eigenvectors.push_back(vecs.column(idx));
    }
    out.clusters = chain_clusters(sorted, tol.eps_eig * static_cast<double>(n) * scale);
    return out;
}

EigenDecomposition unitary_eigen(const Matrix& u, const ToleranceConfig& tol) {
    if (!u.is_square()) throw ShapeError("unitary_eigen: matrix is not square");
    const std::size_t n = u.rows();
    const double dim = static_cast<double>(n);
    if (!is_unitary(u, tol.eps_eig * dim)) throw DomainError("unitary_eigen: matrix is not unitary");

    const Matrix ud = u.adjoint();
    const Matrix herm = 0.5 * (u + ud);
    const Matrix anti = Complex{0.0, -0.5} * (u - ud);

    const EigenDecomposition h = hermitian_eigen(herm, tol);
    std::vector<Vector> vectors;
    vectors.reserve(n);
    for (const auto& cluster : h.clusters) {
        if (cluster.size() == 1) {
            vectors.push_back(h.eigenvectors[cluster.front()]);
            continue;
        }
        std::vector<Vector> cols;
        for (std::size_t idx : cluster) cols.push_back(h.eigenvectors[idx]);
        const Matrix q = Matrix::from_columns(cols);
        Matrix compressed = q.adjoint() * anti * q;
        // Compression of a Hermitian matrix is Hermitian up to round-off.
        compressed = 0.5 * (compressed + compressed.adjoint());
        const EigenDecomposition k = hermitian_eigen(compressed, tol);
        for (const auto& w : k.eigenvectors) vectors.push_back(q * w);
    }

    struct Entry {
        double phase;
        Complex value;
        Vector vec;
    };
    std::vector<Entry> entries;
    entries.reserve(n);
    for (auto& v : vectors) {
        Complex lambda = inner(v, u * v);
        lambda /= std::abs(lambda);
        entries.push_back({phase_of(lambda), lambda, std::move(v)});
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.phase < b.phase; });

    EigenDecomposition out;
    std::vector<double> phases;
    for (auto& e : entries) {
        phases.push_back(e.phase);
        out.eigenvalues.push_back(e.value);
        out.eigenvectors.push_back(std::move(e.vec));
    }
    const double threshold = tol.eps_eig * dim;
    out.clusters = chain_clusters(phases, threshold);
    // Phases just below 2pi and just above 0 belong to one cluster.
    if (out.clusters.size() > 1 &&
        phases.front() + 2.0 * std::numbers::pi - phases.back() <= threshold) {
        auto tail = std::move(out.clusters.back());
        out.clusters.pop_back();
        tail.insert(tail.end(), out.clusters.front().begin(), out.clusters.front().end());
        out.clusters.front() = std::move(tail);
    }
    return out;
}

int numerical_rank(std::span<const double> eigenvalues, const ToleranceConfig& tol) {
    if (eigenvalues.empty()) return 0;
    const double top = *std::max_element(eigenvalues.begin(), eigenvalues.end());
    const double cut = tol.eps_rank * std::max(1.0, top);
    int rank = 0;
    for (double e : eigenvalues) {
        if (e < -cut) {
            std::ostringstream os;
            os.precision(6);
            os << "numerical_rank: matrix is not positive semidefinite (eigenvalue " << e << ")";
            throw DomainError(os.str());
        }
        if (e > cut) ++rank;
    }
    return rank;
}

int numerical_rank(const Matrix& a, const ToleranceConfig& tol) {
    const auto eig = hermitian_eigen(a, tol).real_eigenvalues();
    return numerical_rank(std::span<const double>(eig), tol);
}

}  // namespace qcent
