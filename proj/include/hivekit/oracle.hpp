#pragma once

// Brute-force certification at small sizes (p-adic rings only).

#include <cstdint>
#include <string>
#include <vector>

#include "hivekit/hive.hpp"

namespace hivekit {

struct EnumerationBudget {
  std::size_t max_n = 3;
  std::int64_t exponent_bound = -1;  // M; -1 means (max inv - min inv of the lattices) + 1
  std::int64_t residue_depth = -1;   // D: free entries range over [0, p^D); -1 means max(1, M)
  std::uint64_t count_cap = 5'000'000;
};

// Fill in the automatic fields from the lattices involved.
EnumerationBudget resolve_budget(const EnumerationBudget& b, const std::vector<const Lattice*>& lattices);

// Canonical frames X (n x r, saturated in O^n): column echelon by first nonzero
// row, pivot entries p^e, entries in other columns' pivot rows reduced mod p^e,
// every entry in [0, p^D).
std::vector<Matrix> saturated_frames(const RingConfig& cfg, std::size_t n, std::size_t r, std::int64_t depth,
                                     std::uint64_t count_cap);

// r x r lower triangular Hermite forms with pivots p^e, entries below the
// diagonal reduced mod the pivot of their row, invariants in [0, M].
std::vector<Matrix> inner_forms(const RingConfig& cfg, std::size_t r, std::int64_t bound, std::uint64_t count_cap);

// Canonical column Hermite form of the O-span of V (independent columns);
// a span fingerprint.
Matrix hermite_form(const Matrix& V);
std::string fingerprint(const Matrix& V);

struct EnumeratedSubmodule {
  Submodule sub;
  std::string key;      // fingerprint, used for ordering and dedup
  bool on_boundary;     // relative invariant M or a residue digit at depth D
};

// All rank-r submodules X T of L (X a saturated frame in L's coordinates,
// T an inner form), sorted by fingerprint.
std::vector<EnumeratedSubmodule> enumerate_submodules(const Lattice& L, std::size_t r, const EnumerationBudget& b);

struct OraclePair {
  Matrix a_gens, c_gens;
};

struct OracleResult {
  std::int64_t value = 0;
  std::vector<OraclePair> witnesses;  // minimizers (or maximizers)
  bool boundary_warning = false;
  std::uint64_t candidates = 0;
};

// min ||A_a (+) C_c|| over the enumerated product.
OracleResult brute_min_direct_sum(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c,
                                  const EnumerationBudget& b);

// max of the coupled objective over every enumerated saturated V; for each V the
// best Y is exact (top quotient invariants). Witnesses hold (A Y, C V).
OracleResult brute_max_direct_sum(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c,
                                  const EnumerationBudget& b);

// Exhaustive max of ||B Z|| over saturated rank-a frames Z at depth D; checks
// the closed form used for the Y side.
std::int64_t brute_max_single(const Matrix& B, std::size_t a, std::int64_t depth);

// All LR fillings of lambda/mu with content nu, by cell-by-cell backtracking.
std::vector<LRFilling> enumerate_lr_fillings(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace hivekit
