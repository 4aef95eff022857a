#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcent/errors.hpp"

namespace qcent {

using Complex = std::complex<double>;

struct ToleranceConfig {
    double eps_rank = 1e-9;
    double eps_kl = 1e-8;
    double eps_geom = 1e-10;
    double eps_eig = 1e-10;

    // Throws DomainError unless every field is strictly positive and finite.
    void validate() const;
};

class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim);
    explicit Vector(std::vector<Complex> entries);
    Vector(std::initializer_list<Complex> entries);

    static Vector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return data_.size(); }
    Complex& operator[](std::size_t i) { return data_[i]; }
    const Complex& operator[](std::size_t i) const { return data_[i]; }
    std::span<const Complex> entries() const { return data_; }

    double norm() const;
    Vector normalized() const;

    Vector& operator+=(const Vector& other);
    Vector& operator-=(const Vector& other);
    Vector& operator*=(Complex s);

private:
    std::vector<Complex> data_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(Complex s, Vector v);
// Conjugate-linear in the first argument.
Complex inner(const Vector& a, const Vector& b);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    // Row-major entries; rejects NaN/Inf.
    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix diagonal(std::span<const Complex> diag);
    static Matrix diagonal(std::span<const double> diag);
    static Matrix outer(const Vector& ket, const Vector& bra);
    // Columns are the given vectors.
    static Matrix from_columns(std::span<const Vector> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Complex> entries() const { return data_; }

    Vector column(std::size_t c) const;

    Matrix adjoint() const;
    Matrix transpose() const;
    Complex trace() const;
    double frobenius_norm() const;
    // Largest |a_ij - conj(a_ji)|.
    double max_hermitian_asymmetry() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(Complex s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Complex s, Matrix a);
Vector operator*(const Matrix& a, const Vector& v);

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& a);
Complex trace(const Matrix& a);
double frobenius_norm(const Matrix& a);
Matrix tensor_product(const Matrix& a, const Matrix& b);
Vector tensor_product(const Vector& a, const Vector& b);

// Orthonormal eigendecomposition. `clusters` partitions the eigen-indices into
// groups whose eigenvalues coincide within the degeneracy threshold, closed
// under chaining.
struct EigenDecomposition {
    std::vector<Complex> eigenvalues;
    std::vector<Vector> eigenvectors;
    std::vector<std::vector<std::size_t>> clusters;

    std::vector<double> real_eigenvalues() const;
    // Columns are the eigenvectors.
    Matrix eigenvector_matrix() const;
};

/// Diagonalizes a Hermitian matrix with cyclic complex Jacobi rotations.
/// Eigenvalues come back ascending; degenerate eigenvalues (within
/// eps_eig * dim) share a cluster.
EigenDecomposition hermitian_eigen(const Matrix& a, const ToleranceConfig& tol = {});

/// Diagonalizes a unitary matrix. The Hermitian part (U + U^dagger)/2 is
/// diagonalized first; inside each of its eigenvalue clusters the compressed
/// anti-Hermitian part (U - U^dagger)/2i is diagonalized, which is a joint
/// eigenbasis because the two parts commute for normal U. Eigenvalues are
/// unimodular and ordered by phase in [0, 2pi).
EigenDecomposition unitary_eigen(const Matrix& u, const ToleranceConfig& tol = {});

// Count of eigenvalues above eps_rank * max(1, lambda_max) for a PSD matrix.
int numerical_rank(const Matrix& a, const ToleranceConfig& tol = {});
int numerical_rank(std::span<const double> eigenvalues, const ToleranceConfig& tol = {});

// Phase of z mapped into [0, 2pi).
double phase_of(Complex z);

bool is_unitary(const Matrix& u, double tol);

}  // namespace qcent
