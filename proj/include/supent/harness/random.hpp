#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "supent/qmath.hpp"
#include "supent/states.hpp"

namespace supent::harness {

/// Seeded source of uniforms and Gaussians. Sampling is done by hand on top of
/// mt19937_64 so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  /// Independent stream `stream` derived from `seed` (one per audit trial).
  Rng(std::uint64_t seed, std::uint64_t stream);

  double uniform();  // [0, 1)
  double gaussian();
  Complex complex_gaussian();  // E|z|^2 = 1
  /// Uniform integer in [lo, hi].
  std::size_t uniform_index(std::size_t lo, std::size_t hi);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

BipartiteState haar_random_state(std::size_t dim_a, std::size_t dim_b, Rng& rng);
BipartiteState haar_random_state(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed);

/// rows x cols matrix with orthonormal columns, Haar distributed. Needs cols <= rows.
ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng);

/// Point on the unit sphere of C^2.
std::pair<Complex, Complex> random_coefficients(Rng& rng);

struct OneSidedPair {
  BipartiteState psi;
  BipartiteState phi;
  std::vector<double> p;  // Schmidt coefficients of psi
  std::vector<double> q;  // Schmidt coefficients of phi
};

struct OneSidedOptions {
  bool uniform_spectra = false;
  /// Apply a random unitary on B so the pair is not in canonical position.
  bool rotate_b = true;
  /// Draw the A frames of psi and phi from one isometry so the pair is
  /// biorthogonal. Needs dim_a >= d1 + d2.
  bool orthogonal_a_frames = false;
};

/// Pair with Schmidt ranks d1, d2 satisfying the B-side orthogonality condition.
/// A has dimension dim_a >= max(d1, d2), B has dimension d1 + d2. DimError otherwise.
OneSidedPair generate_one_sided_pair(std::size_t d1, std::size_t d2, std::size_t dim_a,
                                     std::uint64_t seed, OneSidedOptions options = {});

}  // namespace supent::harness
