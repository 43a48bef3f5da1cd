// Copyright 2026 The supent Authors
// SPDX-License-Identifier: Apache-2.0

#include "supent/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "supent/error.hpp"

namespace supent {

namespace {

constexpr int kMaxSweeps = 100;

// Parameters (c, s, e) of the unitary G = [[c, s], [-s conj(e), c conj(e)]]
// that diagonalizes the Hermitian 2x2 block [[app, apq], [conj(apq), aqq]].
struct JacobiRotation {
  double c;
  double s;
  Complex phase;
};

JacobiRotation make_rotation(double app, double aqq, Complex apq) {
  const double r = std::abs(apq);
  const Complex phase = apq / r;
  const double theta = (aqq - app) / (2.0 * r);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  return {c, t * c, phase};
}

// Columns p, q of a row-major matrix are replaced by [col_p col_q] * G.
void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, const JacobiRotation& g) {
  const Complex ce = std::conj(g.phase);
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const Complex mp = m(k, p);
    const Complex mq = m(k, q);
    m(k, p) = g.c * mp - g.s * ce * mq;
    m(k, q) = g.s * mp + g.c * ce * mq;
  }
}

// Rows p, q are replaced by G^dagger * [row_p; row_q].
void rotate_rows(ComplexMatrix& m, std::size_t p, std::size_t q, const JacobiRotation& g) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const Complex mp = m(p, k);
    const Complex mq = m(q, k);
    m(p, k) = g.c * mp - g.s * g.phase * mq;
    m(q, k) = g.s * mp + g.c * g.phase * mq;
  }
}

double off_diagonal_sq(const ComplexMatrix& a) {
  double off = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p) {
    for (std::size_t q = p + 1; q < a.cols(); ++q) off += std::norm(a(p, q));
  }
  return 2.0 * off;
}

SingularValueDecomposition svd_tall(const ComplexMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  ComplexMatrix w = a;
  ComplexMatrix v = ComplexMatrix::identity(n);

  bool converged = n < 2;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
          alpha += std::norm(w(k, p));
          beta += std::norm(w(k, q));
          gamma += std::conj(w(k, p)) * w(k, q);
        }
        const double mag = std::abs(gamma);
        if (mag == 0.0 || mag <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const JacobiRotation g = make_rotation(alpha, beta, gamma);
        rotate_columns(w, p, q, g);
        rotate_columns(v, p, q, g);
      }
    }
    converged = !rotated;
  }
  if (!converged) fail(ErrorKind::NoConvergence, "one-sided Jacobi SVD exceeded its sweep budget");

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k) s += std::norm(w(k, j));
    norms[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  SingularValueDecomposition out{ComplexMatrix(m, n), std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    const double sigma = norms[src];
    out.sigma[j] = sigma;
    for (std::size_t k = 0; k < m; ++k) out.u(k, j) = sigma > 0.0 ? w(k, src) / sigma : Complex{};
    for (std::size_t k = 0; k < n; ++k) out.v(k, j) = v(k, src);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    fail(ErrorKind::DimError, "matrix of shape " + std::to_string(rows_) + "x" +
                                  std::to_string(cols_) + " given " +
                                  std::to_string(entries_.size()) + " entries");
  }
  if (!all_finite()) fail(ErrorKind::DomainError, "matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (auto& z : out.entries_) z = std::conj(z);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm_sq() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return s;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    fail(ErrorKind::DimMismatch, "max_abs_diff on matrices of different shape");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    d = std::max(d, std::abs(entries_[i] - other.entries_[i]));
  }
  return d;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    fail(ErrorKind::DimMismatch, "adding matrices of different shape");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::DimMismatch, "matrix product shape mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) {
  m *= s;
  return m;
}

// ---------------------------------------------------------------------------
// Spectrum

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
  // Summing smallest-first keeps the trace accurate for long tails.
  trace_ = std::accumulate(values_.rbegin(), values_.rend(), 0.0);
}

Spectrum Spectrum::normalized() const {
  if (!(trace_ > 0.0)) fail(ErrorKind::ZeroState, "cannot normalize a spectrum with zero trace");
  std::vector<double> out(values_);
  for (auto& v : out) v /= trace_;
  return Spectrum(std::move(out));
}

Spectrum Spectrum::squared() const {
  std::vector<double> out(values_);
  for (auto& v : out) v *= v;
  return Spectrum(std::move(out));
}

// ---------------------------------------------------------------------------
// Decompositions

Spectrum hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) fail(ErrorKind::DomainError, "eigenvalues need a square matrix");
  if (!m.all_finite()) fail(ErrorKind::DomainError, "matrix entries must be finite");
  const std::size_t n = m.rows();
  if (m.max_abs_diff(m.adjoint()) > tol) {
    fail(ErrorKind::NotHermitian, "matrix differs from its adjoint by more than tolerance");
  }

  ComplexMatrix a = m;
  for (std::size_t p = 0; p < n; ++p) {
    a(p, p) = a(p, p).real();
    for (std::size_t q = p + 1; q < n; ++q) {
      const Complex avg = 0.5 * (a(p, q) + std::conj(a(q, p)));
      a(p, q) = avg;
      a(q, p) = std::conj(avg);
    }
  }

  const double scale = a.frobenius_norm_sq();
  bool converged = scale == 0.0;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_sq(a) <= 1e-30 * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const JacobiRotation g = make_rotation(a(p, p).real(), a(q, q).real(), apq);
        rotate_columns(a, p, q, g);
        rotate_rows(a, p, q, g);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged && off_diagonal_sq(a) > 1e-30 * scale) {
    fail(ErrorKind::NoConvergence, "Jacobi eigenvalue iteration exceeded its sweep budget");
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = a(i, i).real();
    values[i] = (v < 0.0 && v >= -tol) ? 0.0 : v;
  }
  return Spectrum(std::move(values));
}

SingularValueDecomposition svd(const ComplexMatrix& m) {
  if (!m.all_finite()) fail(ErrorKind::DomainError, "matrix entries must be finite");
  if (m.rows() >= m.cols()) return svd_tall(m);
  SingularValueDecomposition t = svd_tall(m.adjoint());
  return {std::move(t.v), std::move(t.sigma), std::move(t.u)};
}

Spectrum singular_values(const ComplexMatrix& m) { return Spectrum(svd(m).sigma); }

// ---------------------------------------------------------------------------
// Entropies

double shannon_entropy(const Spectrum& p) {
  if (std::abs(p.trace() - 1.0) > 1e-8) {
    fail(ErrorKind::NotNormalized,
         "probabilities sum to " + std::to_string(p.trace()) + ", expected 1");
  }
  double h = 0.0;
  for (double v : p.values()) {
    if (v < -1e-12) fail(ErrorKind::DomainError, "negative probability in spectrum");
    if (v > 0.0) h -= v * std::log2(v);
  }
  return std::max(h, 0.0);
}

double binary_entropy(double x) {
  if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) {
    fail(ErrorKind::DomainError, "binary entropy argument " + std::to_string(x) + " outside [0,1]");
  }
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

}  // namespace supent
