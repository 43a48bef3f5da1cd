#include "supent/harness/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "supent/error.hpp"

namespace supent::harness {

namespace {

std::uint32_t lo32(std::uint64_t x) { return static_cast<std::uint32_t>(x); }
std::uint32_t hi32(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }

std::mt19937_64 seeded(std::initializer_list<std::uint32_t> words) {
  std::seed_seq seq(words);
  return std::mt19937_64(seq);
}

std::vector<double> random_simplex(std::size_t n, Rng& rng, bool uniform) {
  std::vector<double> w(n, 1.0);
  if (!uniform) {
    // exponential weights give the flat distribution on the simplex
    for (double& x : w) x = -std::log(1.0 - rng.uniform());
  }
  double total = 0.0;
  for (double x : w) total += x;
  for (double& x : w) x /= total;
  return w;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(seeded({lo32(seed), hi32(seed)})) {}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : engine_(seeded({lo32(seed), hi32(seed), lo32(stream), hi32(stream)})) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  return u * f;
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im) / std::sqrt(2.0);
}

std::size_t Rng::uniform_index(std::size_t lo, std::size_t hi) {
  if (hi < lo) fail(ErrorKind::DomainError, "uniform_index needs lo <= hi");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return lo + engine_();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::size_t>(x % range);
}

BipartiteState haar_random_state(std::size_t dim_a, std::size_t dim_b, Rng& rng) {
  if (dim_a == 0 || dim_b == 0) fail(ErrorKind::DimError, "dimensions must be positive");
  std::vector<Amplitude> amps;
  amps.reserve(dim_a * dim_b);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j) amps.push_back({i, j, rng.complex_gaussian()});
  return BipartiteState::from_entries(dim_a, dim_b, std::move(amps)).normalized();
}

BipartiteState haar_random_state(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_state(dim_a, dim_b, rng);
}

ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  if (cols > rows) fail(ErrorKind::DimError, "isometry needs cols <= rows");
  ComplexMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    double norm = 0.0;
    do {
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = rng.complex_gaussian();
      // two passes of modified Gram-Schmidt
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < c; ++k) {
          Complex dot = 0.0;
          for (std::size_t r = 0; r < rows; ++r) dot += std::conj(m(r, k)) * m(r, c);
          for (std::size_t r = 0; r < rows; ++r) m(r, c) -= dot * m(r, k);
        }
      }
      norm = 0.0;
      for (std::size_t r = 0; r < rows; ++r) norm += std::norm(m(r, c));
    } while (norm < 1e-20);
    const double inv = 1.0 / std::sqrt(norm);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) *= inv;
  }
  return m;
}

std::pair<Complex, Complex> random_coefficients(Rng& rng) {
  Complex a, b;
  double n = 0.0;
  do {
    a = rng.complex_gaussian();
    b = rng.complex_gaussian();
    n = std::norm(a) + std::norm(b);
  } while (n < 1e-300);
  const double inv = 1.0 / std::sqrt(n);
  return {a * inv, b * inv};
}

OneSidedPair generate_one_sided_pair(std::size_t d1, std::size_t d2, std::size_t dim_a,
                                     std::uint64_t seed, OneSidedOptions options) {
  if (d1 == 0 || d2 == 0) fail(ErrorKind::DimError, "Schmidt ranks must be positive");
  if (dim_a < std::max(d1, d2)) {
    fail(ErrorKind::DimError, "dim_a = " + std::to_string(dim_a) + " is below max(d1, d2) = " +
                                  std::to_string(std::max(d1, d2)));
  }
  Rng rng(seed);
  const std::size_t dim_b = d1 + d2;
  std::vector<double> p = random_simplex(d1, rng, options.uniform_spectra);
  std::vector<double> q = random_simplex(d2, rng, options.uniform_spectra);
  ComplexMatrix u, v;
  if (options.orthogonal_a_frames) {
    if (dim_a < d1 + d2) fail(ErrorKind::DimError, "orthogonal A frames need dim_a >= d1 + d2");
    const ComplexMatrix both = random_isometry(dim_a, d1 + d2, rng);
    u = ComplexMatrix(dim_a, d1);
    v = ComplexMatrix(dim_a, d2);
    for (std::size_t a = 0; a < dim_a; ++a) {
      for (std::size_t i = 0; i < d1; ++i) u(a, i) = both(a, i);
      for (std::size_t i = 0; i < d2; ++i) v(a, i) = both(a, d1 + i);
    }
  } else {
    u = random_isometry(dim_a, d1, rng);
    v = random_isometry(dim_a, d2, rng);
  }
  const ComplexMatrix w =
      options.rotate_b ? random_isometry(dim_b, dim_b, rng) : ComplexMatrix::identity(dim_b);

  // sum_i sqrt(w_i) |x_i> (W|offset + i>)
  auto build = [&](const ComplexMatrix& x, const std::vector<double>& weights, std::size_t offset) {
    ComplexMatrix c(dim_a, dim_b);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      const double s = std::sqrt(weights[i]);
      for (std::size_t a = 0; a < dim_a; ++a)
        for (std::size_t j = 0; j < dim_b; ++j) c(a, j) += s * x(a, i) * w(j, offset + i);
    }
    return BipartiteState::from_matrix(c).normalized();
  };
  BipartiteState psi = build(u, p, 0);
  BipartiteState phi = build(v, q, d1);
  std::sort(p.rbegin(), p.rend());
  std::sort(q.rbegin(), q.rend());
  return {std::move(psi), std::move(phi), std::move(p), std::move(q)};
}

}  // namespace supent::harness
