// Copyright 2026 The supent Authors
// SPDX-License-Identifier: Apache-2.0

#include "supent/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "supent/error.hpp"

namespace supent {

namespace {

constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 24;
constexpr std::size_t kMaxDenseReducedDim = 4096;
constexpr double kNormalizedTol = 1e-8;

bool row_major_less(const Amplitude& x, const Amplitude& y) {
  return x.row != y.row ? x.row < y.row : x.col < y.col;
}

void require_same_shape(const BipartiteState& s1, const BipartiteState& s2) {
  if (s1.dim_a() != s2.dim_a() || s1.dim_b() != s2.dim_b()) {
    fail(ErrorKind::DimMismatch, "states of shape " + std::to_string(s1.dim_a()) + "x" +
                                     std::to_string(s1.dim_b()) + " and " +
                                     std::to_string(s2.dim_a()) + "x" +
                                     std::to_string(s2.dim_b()));
  }
}

void require_normalized(const BipartiteState& s, const char* name) {
  const double n = norm_squared(s);
  if (std::abs(n - 1.0) > kNormalizedTol) {
    fail(ErrorKind::NotNormalized,
         std::string(name) + " has squared norm " + std::to_string(n) + ", expected 1");
  }
}

// Connected components of the bipartite graph whose vertices are A rows and B
// columns and whose edges are nonzero amplitudes of any of the given states.
// Every reduced operator of every state in the set is block diagonal along
// these components.
class BlockLayout {
 public:
  struct Block {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
  };

  BlockLayout(std::size_t dim_a, std::size_t dim_b,
              std::initializer_list<const BipartiteState*> states)
      : dim_a_(dim_a), parent_(dim_a + dim_b), local_(dim_a + dim_b, kNone),
        block_of_(dim_a + dim_b, kNone) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    std::vector<char> used(dim_a + dim_b, 0);
    for (const BipartiteState* s : states) {
      for (const Amplitude& e : s->entries()) {
        unite(e.row, dim_a + e.col);
        used[e.row] = 1;
        used[dim_a + e.col] = 1;
      }
    }
    std::vector<std::size_t> block_of_root(dim_a + dim_b, kNone);
    for (std::size_t v = 0; v < used.size(); ++v) {
      if (!used[v]) continue;
      const std::size_t root = find(v);
      if (block_of_root[root] == kNone) {
        block_of_root[root] = blocks_.size();
        blocks_.emplace_back();
      }
      const std::size_t b = block_of_root[root];
      block_of_[v] = b;
      if (v < dim_a) {
        local_[v] = blocks_[b].rows.size();
        blocks_[b].rows.push_back(v);
      } else {
        local_[v] = blocks_[b].cols.size();
        blocks_[b].cols.push_back(v - dim_a);
      }
    }
  }

  std::size_t size() const noexcept { return blocks_.size(); }
  const Block& operator[](std::size_t i) const { return blocks_[i]; }

  /// Dense restriction of s to every block; s must be covered by the layout.
  std::vector<ComplexMatrix> restrict(const BipartiteState& s) const {
    std::vector<ComplexMatrix> out;
    out.reserve(blocks_.size());
    for (const Block& b : blocks_) out.emplace_back(b.rows.size(), b.cols.size());
    for (const Amplitude& e : s.entries()) {
      const std::size_t b = block_of_[e.row];
      out[b](local_[e.row], local_[dim_a_ + e.col]) = e.value;
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

  std::size_t dim_a_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> local_;
  std::vector<std::size_t> block_of_;
  std::vector<Block> blocks_;
};

// m m^dagger (side A) or m^T conj(m) (side B).
ComplexMatrix gram(const ComplexMatrix& m, Side side) {
  if (side == Side::A) {
    ComplexMatrix g(m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t k = i; k < m.rows(); ++k) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * std::conj(m(k, j));
        g(i, k) = s;
        g(k, i) = std::conj(s);
      }
    return g;
  }
  ComplexMatrix g(m.cols(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t l = j; l < m.cols(); ++l) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, j) * std::conj(m(i, l));
      g(j, l) = s;
      g(l, j) = std::conj(s);
    }
  return g;
}

void append_eigenvalues(const ComplexMatrix& h, std::vector<double>& out) {
  if (h.rows() == 1) {
    out.push_back(std::max(h(0, 0).real(), 0.0));
    return;
  }
  const Spectrum s = hermitian_eigenvalues(h);
  for (double v : s.values()) out.push_back(std::max(v, 0.0));
}

double entropy_of_unnormalized(std::vector<double> values) {
  return shannon_entropy(Spectrum(std::move(values)).normalized());
}

// sum over (i,k) of |sum_j x_ij conj(y_kj)|^2, grouping entries by the shared
// index selected by `key` (column for the B-side condition, row for A-side).
template <typename KeyFn, typename OtherFn>
double trace_overlap(const BipartiteState& x, const BipartiteState& y, KeyFn key, OtherFn other,
                     std::size_t other_dim) {
  std::unordered_map<std::size_t, std::vector<const Amplitude*>> y_by_key;
  for (const Amplitude& e : y.entries()) y_by_key[key(e)].push_back(&e);
  std::unordered_map<std::size_t, Complex> acc;
  for (const Amplitude& e : x.entries()) {
    const auto it = y_by_key.find(key(e));
    if (it == y_by_key.end()) continue;
    for (const Amplitude* f : it->second) {
      acc[other(e) * other_dim + other(*f)] += e.value * std::conj(f->value);
    }
  }
  double total = 0.0;
  for (const auto& [_, z] : acc) total += std::norm(z);
  return total;
}

double clamp_weight(double t) {
  if (!(t >= -1e-12 && t <= 1.0 + 1e-12)) {
    fail(ErrorKind::DomainError, "mixture weight " + std::to_string(t) + " outside [0,1]");
  }
  return std::clamp(t, 0.0, 1.0);
}

}  // namespace

// ---------------------------------------------------------------------------
// BipartiteState

BipartiteState::BipartiteState(std::size_t dim_a, std::size_t dim_b)
    : dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a == 0 || dim_b == 0) fail(ErrorKind::DimError, "state dimensions must be positive");
}

BipartiteState BipartiteState::from_matrix(const ComplexMatrix& coeffs) {
  BipartiteState s(coeffs.rows(), coeffs.cols());
  for (std::size_t i = 0; i < coeffs.rows(); ++i)
    for (std::size_t j = 0; j < coeffs.cols(); ++j)
      if (coeffs(i, j) != Complex{}) s.entries_.push_back({i, j, coeffs(i, j)});
  return s;
}

BipartiteState BipartiteState::from_entries(std::size_t dim_a, std::size_t dim_b,
                                            std::vector<Amplitude> entries) {
  BipartiteState s(dim_a, dim_b);
  for (const Amplitude& e : entries) {
    if (e.row >= dim_a || e.col >= dim_b) {
      fail(ErrorKind::IndexError, "amplitude (" + std::to_string(e.row) + ", " +
                                      std::to_string(e.col) + ") outside " +
                                      std::to_string(dim_a) + "x" + std::to_string(dim_b));
    }
    if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag())) {
      fail(ErrorKind::DomainError, "amplitudes must be finite");
    }
  }
  std::sort(entries.begin(), entries.end(), row_major_less);
  for (std::size_t k = 1; k < entries.size(); ++k) {
    if (entries[k].row == entries[k - 1].row && entries[k].col == entries[k - 1].col) {
      fail(ErrorKind::DomainError, "repeated amplitude (" + std::to_string(entries[k].row) +
                                       ", " + std::to_string(entries[k].col) + ")");
    }
  }
  std::erase_if(entries, [](const Amplitude& e) { return e.value == Complex{}; });
  s.entries_ = std::move(entries);
  return s;
}

Complex BipartiteState::at(std::size_t row, std::size_t col) const {
  if (row >= dim_a_ || col >= dim_b_) fail(ErrorKind::IndexError, "amplitude index out of range");
  const Amplitude key{row, col, {}};
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), key, row_major_less);
  return (it != entries_.end() && it->row == row && it->col == col) ? it->value : Complex{};
}

void BipartiteState::set(std::size_t row, std::size_t col, Complex value) {
  if (row >= dim_a_ || col >= dim_b_) fail(ErrorKind::IndexError, "amplitude index out of range");
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    fail(ErrorKind::DomainError, "amplitudes must be finite");
  }
  const Amplitude key{row, col, value};
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), key, row_major_less);
  const bool present = it != entries_.end() && it->row == row && it->col == col;
  if (value == Complex{}) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    entries_.insert(it, key);
  }
}

ComplexMatrix BipartiteState::coeffs() const {
  if (dim_a_ > kMaxDenseEntries / dim_b_) {
    fail(ErrorKind::DomainError, "state too large for a dense coefficient matrix");
  }
  ComplexMatrix m(dim_a_, dim_b_);
  for (const Amplitude& e : entries_) m(e.row, e.col) = e.value;
  return m;
}

BipartiteState BipartiteState::transposed() const {
  BipartiteState t(dim_b_, dim_a_);
  t.entries_.reserve(entries_.size());
  for (const Amplitude& e : entries_) t.entries_.push_back({e.col, e.row, e.value});
  std::sort(t.entries_.begin(), t.entries_.end(), row_major_less);
  return t;
}

BipartiteState BipartiteState::scaled(Complex factor) const {
  if (factor == Complex{}) return BipartiteState(dim_a_, dim_b_);
  BipartiteState s = *this;
  for (Amplitude& e : s.entries_) e.value *= factor;
  return s;
}

BipartiteState BipartiteState::normalized() const {
  const double n = norm_squared(*this);
  if (!(n > 0.0)) fail(ErrorKind::ZeroState, "cannot normalize the zero vector");
  return scaled(1.0 / std::sqrt(n));
}

// ---------------------------------------------------------------------------
// Basic algebra

double norm_squared(const BipartiteState& s) {
  double n = 0.0;
  for (const Amplitude& e : s.entries()) n += std::norm(e.value);
  return n;
}

Complex inner_product(const BipartiteState& s1, const BipartiteState& s2) {
  require_same_shape(s1, s2);
  Complex acc = 0.0;
  auto x = s1.entries().begin();
  auto y = s2.entries().begin();
  while (x != s1.entries().end() && y != s2.entries().end()) {
    if (row_major_less(*x, *y)) {
      ++x;
    } else if (row_major_less(*y, *x)) {
      ++y;
    } else {
      acc += std::conj(x->value) * y->value;
      ++x;
      ++y;
    }
  }
  return acc;
}

BipartiteState superpose(Complex alpha, const BipartiteState& s1, Complex beta,
                         const BipartiteState& s2) {
  require_same_shape(s1, s2);
  std::vector<Amplitude> merged;
  merged.reserve(s1.entries().size() + s2.entries().size());
  auto x = s1.entries().begin();
  auto y = s2.entries().begin();
  const auto x_end = s1.entries().end();
  const auto y_end = s2.entries().end();
  while (x != x_end || y != y_end) {
    if (y == y_end || (x != x_end && row_major_less(*x, *y))) {
      merged.push_back({x->row, x->col, alpha * x->value});
      ++x;
    } else if (x == x_end || row_major_less(*y, *x)) {
      merged.push_back({y->row, y->col, beta * y->value});
      ++y;
    } else {
      merged.push_back({x->row, x->col, alpha * x->value + beta * y->value});
      ++x;
      ++y;
    }
  }
  return BipartiteState::from_entries(s1.dim_a(), s1.dim_b(), std::move(merged));
}

ComplexMatrix reduced_density(const BipartiteState& s, Side side) {
  const std::size_t d = side == Side::A ? s.dim_a() : s.dim_b();
  if (d > kMaxDenseReducedDim) {
    fail(ErrorKind::DomainError, "reduced operator of dimension " + std::to_string(d) +
                                     " is too large to materialize densely");
  }
  ComplexMatrix rho(d, d);
  const BlockLayout layout(s.dim_a(), s.dim_b(), {&s});
  const std::vector<ComplexMatrix> parts = layout.restrict(s);
  for (std::size_t b = 0; b < layout.size(); ++b) {
    const auto& idx = side == Side::A ? layout[b].rows : layout[b].cols;
    const ComplexMatrix g = gram(parts[b], side);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t k = 0; k < idx.size(); ++k) rho(idx[i], idx[k]) = g(i, k);
  }
  return rho;
}

Spectrum schmidt_spectrum(const BipartiteState& s) {
  const double n = norm_squared(s);
  if (!(n > 0.0)) fail(ErrorKind::ZeroState, "entanglement of the zero vector is undefined");
  const BlockLayout layout(s.dim_a(), s.dim_b(), {&s});
  std::vector<double> p;
  for (const ComplexMatrix& block : layout.restrict(s)) {
    if (block.rows() == 1 || block.cols() == 1) {
      p.push_back(block.frobenius_norm_sq());
      continue;
    }
    for (double sigma : svd(block).sigma) p.push_back(sigma * sigma);
  }
  return Spectrum(std::move(p)).normalized();
}

double entanglement_entropy(const BipartiteState& s, EntropyRoute route) {
  if (route == EntropyRoute::SingularValues) return shannon_entropy(schmidt_spectrum(s));
  if (!(norm_squared(s) > 0.0)) {
    fail(ErrorKind::ZeroState, "entanglement of the zero vector is undefined");
  }
  const Side side = route == EntropyRoute::ReducedA ? Side::A : Side::B;
  const BlockLayout layout(s.dim_a(), s.dim_b(), {&s});
  std::vector<double> eigenvalues;
  for (const ComplexMatrix& block : layout.restrict(s)) {
    append_eigenvalues(gram(block, side), eigenvalues);
  }
  return entropy_of_unnormalized(std::move(eigenvalues));
}

// ---------------------------------------------------------------------------
// Orthogonality and canonical form

OrthogonalityClass classify_orthogonality(const BipartiteState& psi, const BipartiteState& phi,
                                          double tol) {
  require_same_shape(psi, phi);
  require_normalized(psi, "psi");
  require_normalized(phi, "phi");
  OrthogonalityClass c;
  c.overlap = inner_product(psi, phi);
  // B-side condition: || C_psi C_phi^dagger ||_F^2, shared index is the column.
  c.eq1_value = trace_overlap(
      psi, phi, [](const Amplitude& e) { return e.col; },
      [](const Amplitude& e) { return e.row; }, psi.dim_a());
  // A-side condition: || C_psi^dagger C_phi ||_F^2, shared index is the row.
  c.eq2_value = trace_overlap(
      psi, phi, [](const Amplitude& e) { return e.row; },
      [](const Amplitude& e) { return e.col; }, psi.dim_b());
  c.one_sided_eq1 = c.eq1_value <= tol;
  c.one_sided_eq2 = c.eq2_value <= tol;
  c.biorthogonal = c.one_sided_eq1 && c.one_sided_eq2;
  return c;
}

CanonicalPair lemma1_canonical_form(const BipartiteState& psi, const BipartiteState& phi) {
  const OrthogonalityClass cls = classify_orthogonality(psi, phi, 1e-8);
  if (!cls.one_sided_eq1) {
    fail(ErrorKind::NotOneSided, "B-side supports overlap (trace overlap " +
                                     std::to_string(cls.eq1_value) + ")");
  }
  const SingularValueDecomposition sp = svd(psi.normalized().coeffs());
  const SingularValueDecomposition sf = svd(phi.normalized().coeffs());
  auto rank_of = [](const SingularValueDecomposition& d) {
    std::size_t r = 0;
    while (r < d.sigma.size() && d.sigma[r] * d.sigma[r] > 1e-14) ++r;
    return r;
  };

  CanonicalPair out;
  out.d1 = rank_of(sp);
  out.d2 = rank_of(sf);
  const std::size_t dim_a = psi.dim_a();
  const std::size_t dim_b = psi.dim_b();
  const std::size_t total = out.d1 + out.d2;

  // The B-side Schmidt ket of term i is conj(V[:, i]).
  out.b_frame = ComplexMatrix(dim_b, total);
  for (std::size_t j = 0; j < dim_b; ++j) {
    for (std::size_t i = 0; i < out.d1; ++i) out.b_frame(j, i) = std::conj(sp.v(j, i));
    for (std::size_t i = 0; i < out.d2; ++i) out.b_frame(j, out.d1 + i) = std::conj(sf.v(j, i));
  }

  auto make_form = [&](const SingularValueDecomposition& d, std::size_t rank,
                       std::size_t offset) {
    SchmidtForm f;
    std::vector<double> p(rank);
    f.a_vectors = ComplexMatrix(dim_a, rank);
    f.b_vectors = ComplexMatrix(total, rank);
    for (std::size_t i = 0; i < rank; ++i) {
      p[i] = d.sigma[i] * d.sigma[i];
      for (std::size_t a = 0; a < dim_a; ++a) f.a_vectors(a, i) = d.u(a, i);
      f.b_vectors(offset + i, i) = 1.0;
    }
    f.coefficients = Spectrum(std::move(p));
    return f;
  };
  out.psi = make_form(sp, out.d1, 0);
  out.phi = make_form(sf, out.d2, out.d1);
  return out;
}

BipartiteState reconstruct(const SchmidtForm& form, const ComplexMatrix& b_frame) {
  if (b_frame.cols() != form.b_vectors.rows()) {
    fail(ErrorKind::DimMismatch, "B frame does not match the canonical basis size");
  }
  const ComplexMatrix kets = b_frame * form.b_vectors;  // dim_b x rank
  ComplexMatrix c(form.a_vectors.rows(), b_frame.rows());
  for (std::size_t i = 0; i < form.coefficients.size(); ++i) {
    const double w = std::sqrt(form.coefficients[i]);
    for (std::size_t a = 0; a < c.rows(); ++a)
      for (std::size_t j = 0; j < c.cols(); ++j) c(a, j) += w * form.a_vectors(a, i) * kets(j, i);
  }
  return BipartiteState::from_matrix(c);
}

// ---------------------------------------------------------------------------
// Rank-2 mixtures

MixturePair::MixturePair(const BipartiteState& psi, const BipartiteState& phi) {
  require_same_shape(psi, phi);
  require_normalized(psi, "psi");
  require_normalized(phi, "phi");
  const BipartiteState p = psi.normalized();
  const BipartiteState f = phi.normalized();
  overlap_ = inner_product(p, f);

  const BlockLayout layout(p.dim_a(), p.dim_b(), {&p, &f});
  const std::vector<ComplexMatrix> pb = layout.restrict(p);
  const std::vector<ComplexMatrix> fb = layout.restrict(f);
  blocks_.reserve(layout.size());
  for (std::size_t b = 0; b < layout.size(); ++b) {
    blocks_.push_back({gram(pb[b], Side::A), gram(fb[b], Side::A), gram(pb[b], Side::B),
                       gram(fb[b], Side::B)});
  }
}

double MixturePair::mixture_entropy(double t) const {
  t = clamp_weight(t);
  const Complex off = std::sqrt(t * (1.0 - t)) * overlap_;
  const ComplexMatrix g(2, 2, {t, off, std::conj(off), 1.0 - t});
  const Spectrum ev = hermitian_eigenvalues(g);
  std::vector<double> clipped;
  for (double v : ev.values()) clipped.push_back(std::max(v, 0.0));
  return entropy_of_unnormalized(std::move(clipped));
}

ReducedEntropies MixturePair::reduced_entropies(double t) const {
  t = clamp_weight(t);
  std::vector<double> ev_a;
  std::vector<double> ev_b;
  auto mix = [t](const ComplexMatrix& x, const ComplexMatrix& y) {
    ComplexMatrix m = x;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = t * x(i, k) + (1.0 - t) * y(i, k);
    return m;
  };
  auto append_mixed = [&](const ComplexMatrix& x, const ComplexMatrix& y, std::vector<double>& out) {
    if (x.rows() == 1) {
      out.push_back(std::max(t * x(0, 0).real() + (1.0 - t) * y(0, 0).real(), 0.0));
    } else {
      append_eigenvalues(mix(x, y), out);
    }
  };
  ev_a.reserve(blocks_.size());
  ev_b.reserve(blocks_.size());
  for (const BlockGrams& b : blocks_) {
    append_mixed(b.psi_a, b.phi_a, ev_a);
    append_mixed(b.psi_b, b.phi_b, ev_b);
  }
  return {entropy_of_unnormalized(std::move(ev_a)), entropy_of_unnormalized(std::move(ev_b))};
}

double mixture_entropy(const BipartiteState& psi, const BipartiteState& phi, double t) {
  return MixturePair(psi, phi).mixture_entropy(t);
}

ReducedEntropies reduced_mixture_entropies(const BipartiteState& psi, const BipartiteState& phi,
                                           double t) {
  return MixturePair(psi, phi).reduced_entropies(t);
}

}  // namespace supent
