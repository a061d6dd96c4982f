#pragma once

// Lattices in K^n, saturated submodules, and the extremal direct-sum norms
// that define hive entries.

#include <cstdint>
#include <vector>

#include "hivekit/matrix.hpp"

namespace hivekit {

struct Lattice {
  Matrix gens;  // n x n, full rank
  explicit Lattice(Matrix g);
  std::size_t n() const { return gens.rows(); }
  const RingConfig& ring() const { return gens.ring(); }
};

struct Submodule {
  Matrix gens;  // n x k, K-rank k
  explicit Submodule(Matrix g);
  std::size_t n() const { return gens.rows(); }
  std::size_t rank() const { return gens.cols(); }
};

// O-spans agree (both matrices must have independent columns).
bool same_span(const Matrix& X, const Matrix& Y);
bool same_lattice(const Lattice& a, const Lattice& b);
bool contains(const Lattice& L, const Matrix& V);  // every column of V is in L

Partition lattice_invariants(const Lattice& L);

struct PairInvariant {
  Lattice M;
  Partition mu;
};
// M.gens = N.gens^-1 * L.gens.
PairInvariant pair_invariant(const Lattice& N, const Lattice& L);

// Columns i..j (1-based, inclusive) of an invariant-adapted basis of L.
Submodule adapted_slice(const Lattice& L, std::size_t i, std::size_t j);
// Same, for an arbitrary submodule.
Submodule adapted_slice(const Submodule& V, std::size_t i, std::size_t j);

// (K V) intersected with L.
Submodule saturate(const Lattice& L, const Submodule& V);
// Saturation of the column span of V inside O^n.
Matrix saturate_in_unit(const Matrix& V);
// Columns completing a saturated V to a basis of O^n.
Matrix unit_complement(const Matrix& V);

// ----- minimum of ||A_a (+) C_c|| over all submodules -----
//
// Cauchy-Binet plus the Gauss-norm bound show the minimum is attained at
// coordinate submodules of any fixed bases of A and C, so it is a finite
// search over column subsets.

struct MinResult {
  std::int64_t value;
  Matrix a_gens, c_gens;  // a witnessing pair
};
MinResult min_direct_sum(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c);
std::int64_t min_direct_sum_norm(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c);

// The refuted greedy: take the c smallest adapted vectors of C, then the a
// smallest quotient invariants of A. Kept as a diagnostic only.
std::int64_t c_first_greedy(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c);

// ----- maximum over saturated frames -----
//
// The generators of A and C share column coordinates (A = N C for the lattice
// N = A C^-1). For a saturated frame [V | Y] of O^n, V of rank c and Y of rank a,
//
//   F(V, Y) = ||C V|| + ||A [V | Y]|| - ||A V||.
//
// F is unchanged by a common unimodular change of coordinates. With Y free it
// collapses to ||C V|| plus the a largest invariants of A on O^n / V, and
// F <= ||A|| - min_direct_sum_norm(A, N, n - a - c, c).

std::int64_t coupled_value(const Matrix& A, const Matrix& C, const Matrix& V, std::size_t a,
                           Matrix* best_Y = nullptr);
std::int64_t coupled_upper_bound(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c);

struct MaxResult {
  std::int64_t value;
  std::int64_t upper_bound;
  bool certified;  // value reached the upper bound
  Matrix V, Y;     // frame in O^n coordinates
};
MaxResult max_direct_sum(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c);
std::int64_t max_direct_sum_norm(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c);

// A representative M* of the pair class with inv(M*) = mu and
// inv(M*^-1 L) = inv(N): M* = P D P^T N^-T where L = P D Q.
Lattice swapped_factor(const Lattice& N, const Lattice& L);

}  // namespace hivekit
