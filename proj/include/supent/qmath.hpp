// Copyright 2026 The supent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace supent {

using Complex = std::complex<double>;

/// Dense complex matrix stored row-major. Intended for the small blocks that
/// show up in reduced density operators and Schmidt decompositions.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimError if the entry count does not match, DomainError on NaN/Inf.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  Complex trace() const;
  double frobenius_norm_sq() const;
  /// Largest |a_ij - b_ij|; DimMismatch on shape mismatch.
  double max_abs_diff(const ComplexMatrix& other) const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);

/// Real values kept in descending order together with their sum.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double trace() const noexcept { return trace_; }

  /// Divides every value by the trace; ZeroState if the trace is not positive.
  Spectrum normalized() const;
  Spectrum squared() const;

 private:
  std::vector<double> values_;
  double trace_ = 0.0;
};

inline constexpr double kDefaultHermitianTol = 1e-10;

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Values in [-tol, 0) are clipped to zero.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m, double tol = kDefaultHermitianTol);

struct SingularValueDecomposition {
  ComplexMatrix u;             // rows x k, orthonormal columns where sigma > 0
  std::vector<double> sigma;   // k = min(rows, cols), descending
  ComplexMatrix v;             // cols x k
};

/// One-sided (Hestenes) Jacobi SVD: m = u * diag(sigma) * v^dagger.
SingularValueDecomposition svd(const ComplexMatrix& m);

Spectrum singular_values(const ComplexMatrix& m);

/// -sum p log2 p with 0 log 0 = 0. Requires a trace within 1e-8 of one.
double shannon_entropy(const Spectrum& p);

/// -x log2 x - (1-x) log2(1-x).
double binary_entropy(double x);

}  // namespace supent
