// Copyright 2026 The supent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "supent/qmath.hpp"

namespace supent {

/// Amplitude on the product basis vector |row>_A |col>_B.
struct Amplitude {
  std::size_t row;
  std::size_t col;
  Complex value;

  bool operator==(const Amplitude&) const = default;
};

enum class Side { A, B };

/// Pure state on C^dim_a (x) C^dim_b, kept unnormalized.
///
/// Only nonzero amplitudes are stored (sorted row-major), so structured states
/// such as the high-dimensional Schmidt-diagonal families stay cheap even when
/// the dense coefficient matrix would not fit in memory. Entropy routines split
/// the support into connected row/column blocks and diagonalize each block.
class BipartiteState {
 public:
  /// The zero vector. DimError if either dimension is zero.
  BipartiteState(std::size_t dim_a, std::size_t dim_b);

  static BipartiteState from_matrix(const ComplexMatrix& coeffs);
  /// IndexError for indices outside the dimensions, DomainError for repeated
  /// (row, col) pairs or non-finite values.
  static BipartiteState from_entries(std::size_t dim_a, std::size_t dim_b,
                                     std::vector<Amplitude> entries);

  std::size_t dim_a() const noexcept { return dim_a_; }
  std::size_t dim_b() const noexcept { return dim_b_; }

  Complex at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, Complex value);

  std::span<const Amplitude> entries() const noexcept { return entries_; }

  /// Dense dim_a x dim_b coefficient matrix. DomainError above 2^24 entries.
  ComplexMatrix coeffs() const;

  /// Swaps the roles of A and B.
  BipartiteState transposed() const;
  BipartiteState scaled(Complex factor) const;
  /// ZeroState for the zero vector.
  BipartiteState normalized() const;

  bool operator==(const BipartiteState&) const = default;

 private:
  std::size_t dim_a_;
  std::size_t dim_b_;
  std::vector<Amplitude> entries_;
};

double norm_squared(const BipartiteState& s);

/// <s1|s2>; DimMismatch for different shapes.
Complex inner_product(const BipartiteState& s1, const BipartiteState& s2);

/// alpha*s1 + beta*s2, unnormalized.
BipartiteState superpose(Complex alpha, const BipartiteState& s1, Complex beta,
                         const BipartiteState& s2);

/// Side A: C C^dagger. Side B: C^T conj(C). Trace equals norm_squared(s).
ComplexMatrix reduced_density(const BipartiteState& s, Side side);

/// Squared Schmidt coefficients of s / ||s||, descending, summing to one.
Spectrum schmidt_spectrum(const BipartiteState& s);

enum class EntropyRoute { SingularValues, ReducedA, ReducedB };

/// Entropy of entanglement (ebits) of s / ||s||. ZeroState for the zero vector.
double entanglement_entropy(const BipartiteState& s,
                            EntropyRoute route = EntropyRoute::SingularValues);

inline constexpr double kDefaultOrthogonalityTol = 1e-9;

struct OrthogonalityClass {
  Complex overlap;
  double eq1_value = 0.0;  // Tr_B[Tr_A|psi><psi| Tr_A|phi><phi|]
  double eq2_value = 0.0;  // Tr_A[Tr_B|psi><psi| Tr_B|phi><phi|]
  bool one_sided_eq1 = false;
  bool one_sided_eq2 = false;
  bool biorthogonal = false;
};

/// Both states must be normalized within 1e-8 (NotNormalized otherwise).
OrthogonalityClass classify_orthogonality(const BipartiteState& psi, const BipartiteState& phi,
                                          double tol = kDefaultOrthogonalityTol);

/// Schmidt data expressed in a shared B basis.
struct SchmidtForm {
  Spectrum coefficients;    // p_i, summing to one
  ComplexMatrix a_vectors;  // dim_a x rank, orthonormal columns
  ComplexMatrix b_vectors;  // (d1 + d2) x rank, canonical basis vectors
};

/// Canonical form of a pair whose B-side supports are orthogonal: psi lives on
/// canonical B indices [0, d1), phi on [d1, d1 + d2). Column k of b_frame is the
/// canonical vector |k>_B written in the original B basis.
struct CanonicalPair {
  SchmidtForm psi;
  SchmidtForm phi;
  ComplexMatrix b_frame;
  std::size_t d1 = 0;
  std::size_t d2 = 0;
};

/// NotOneSided unless the pair satisfies the B-side condition at 1e-8. Pairs
/// that are one-sided on the A side should be passed through transposed().
CanonicalPair lemma1_canonical_form(const BipartiteState& psi, const BipartiteState& phi);

/// Inverse of lemma1_canonical_form for one member of the pair.
BipartiteState reconstruct(const SchmidtForm& form, const ComplexMatrix& b_frame);

struct ReducedEntropies {
  double a = 0.0;
  double b = 0.0;
};

/// Precomputed data for the rank-2 family rho_t = t|psi><psi| + (1-t)|phi><phi|.
/// Construction normalizes copies of both states after checking they are
/// normalized within 1e-8.
class MixturePair {
 public:
  MixturePair(const BipartiteState& psi, const BipartiteState& phi);

  Complex overlap() const noexcept { return overlap_; }

  /// S(rho_t) from the 2x2 Gram matrix of the two weighted vectors.
  double mixture_entropy(double t) const;

  /// (S(Tr_B rho_t), S(Tr_A rho_t)), each diagonalized block by block.
  ReducedEntropies reduced_entropies(double t) const;

 private:
  struct BlockGrams {
    ComplexMatrix psi_a, phi_a;
    ComplexMatrix psi_b, phi_b;
  };

  Complex overlap_;
  std::vector<BlockGrams> blocks_;
};

double mixture_entropy(const BipartiteState& psi, const BipartiteState& phi, double t);

ReducedEntropies reduced_mixture_entropies(const BipartiteState& psi, const BipartiteState& phi,
                                           double t);

}  // namespace supent
