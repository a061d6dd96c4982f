#include "hivekit/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace hivekit {

namespace {

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

void check_ranks(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c) {
  if (A.n() != C.n()) throw InputError("lattices of different dimension");
  if (!(A.ring() == C.ring())) throw InputError("lattices over different rings");
  if (a + c > A.n()) throw InputError("rank constraint violated: a + c > n");
}

// Coordinates U with Y = X U, X of full column rank; throws if Y is not in K X.
Matrix coords_in(const Matrix& X, const Matrix& Y) {
  const std::size_t k = X.cols();
  SmithDecomposition sd = smith_decompose(X);
  Matrix Z = inverse(sd.P) * Y;
  for (std::size_t i = k; i < Z.rows(); ++i)
    for (std::size_t j = 0; j < Z.cols(); ++j)
      if (!Z(i, j).is_zero()) throw InputError("vector outside the K-span");
  Matrix Dt = sd.D.row_range(0, k);
  return inverse(sd.Q) * inverse(Dt) * Z.row_range(0, k);
}

}  // namespace

Lattice::Lattice(Matrix g) : gens(std::move(g)) {
  if (gens.rows() != gens.cols() || gens.rows() == 0) throw InputError("lattice generators must be square");
  if (rank(gens) != gens.rows()) throw InputError("lattice generators are not full rank");
}

Submodule::Submodule(Matrix g) : gens(std::move(g)) {
  if (hivekit::rank(gens) != gens.cols()) throw InputError("submodule generators are dependent");
}

bool same_span(const Matrix& X, const Matrix& Y) {
  if (X.rows() != Y.rows() || X.cols() != Y.cols()) return false;
  try {
    return unimodular_check(coords_in(X, Y));
  } catch (const InputError&) {
    return false;
  }
}

bool same_lattice(const Lattice& a, const Lattice& b) { return same_span(a.gens, b.gens); }

bool contains(const Lattice& L, const Matrix& V) { return is_integral(inverse(L.gens) * V); }

Partition lattice_invariants(const Lattice& L) { return invariant_partition(L.gens); }

PairInvariant pair_invariant(const Lattice& N, const Lattice& L) {
  if (N.n() != L.n()) throw InputError("pair of different dimensions");
  Lattice M(inverse(N.gens) * L.gens);
  Partition mu = lattice_invariants(M);
  return {std::move(M), std::move(mu)};
}

Submodule adapted_slice(const Submodule& V, std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > V.rank()) throw InputError("adapted_slice: index out of range");
  SmithDecomposition sd = smith_decompose(V.gens);
  Matrix basis = sd.P * sd.D;  // column k is t^{alpha_k} u_k
  return Submodule(basis.column_range(i - 1, j));
}

Submodule adapted_slice(const Lattice& L, std::size_t i, std::size_t j) {
  return adapted_slice(Submodule(L.gens), i, j);
}

Matrix saturate_in_unit(const Matrix& V) {
  SmithDecomposition sd = smith_decompose(V);
  return sd.P.column_range(0, V.cols());
}

Matrix unit_complement(const Matrix& V) {
  SmithDecomposition sd = smith_decompose(V);
  return sd.P.column_range(V.cols(), V.rows());
}

Submodule saturate(const Lattice& L, const Submodule& V) {
  Matrix X = inverse(L.gens) * V.gens;
  if (!is_integral(X)) throw InputError("saturate: submodule is not contained in the lattice");
  return Submodule(L.gens * saturate_in_unit(X));
}

// ---------- min ----------

MinResult min_direct_sum(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c) {
  check_ranks(A, C, a, c);
  const std::size_t n = A.n();
  MinResult best{0, Matrix(A.ring(), n, 0), Matrix(A.ring(), n, 0)};
  bool found = false;
  auto ka = subsets(n, a), kc = subsets(n, c);
  for (const auto& K2 : kc) {
    Matrix cc = C.gens.columns(K2);
    for (const auto& K : ka) {
      Matrix aa = A.gens.columns(K);
      Valuation v = matrix_norm(aa.hcat(cc));
      if (v.is_infinite()) continue;
      if (!found || v.value() < best.value) {
        best = {v.value(), aa, cc};
        found = true;
      }
    }
  }
  if (!found) throw Error("min_direct_sum: no independent coordinate pair");  // unreachable for full-rank A
  return best;
}

std::int64_t min_direct_sum_norm(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c) {
  return min_direct_sum(A, C, a, c).value;
}

std::int64_t c_first_greedy(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c) {
  check_ranks(A, C, a, c);
  const std::size_t n = A.n();
  if (c == 0) return bottom_sum(lattice_invariants(A), a);
  Submodule slice = adapted_slice(C, n - c + 1, n);
  std::int64_t own = matrix_norm(slice.gens).value();
  return own + bottom_sum(quotient_free_invariants(A.gens, slice.gens), a);
}

// ---------- max ----------

std::int64_t coupled_value(const Matrix& A, const Matrix& C, const Matrix& V, std::size_t a, Matrix* best_Y) {
  const std::size_t n = A.rows(), c = V.cols();
  if (a + c > n) throw InputError("rank constraint violated: a + c > n");
  if (c == 0) {
    SmithDecomposition sd = smith_decompose(A);
    Partition inv = invariant_partition(A);
    if (best_Y) *best_Y = inverse(sd.Q).column_range(0, a);
    return top_sum(inv, a);
  }
  Matrix W = unit_complement(V);
  TopRows tr = reduce_to_top_rows(A * V);
  Matrix B = (tr.P * A * W).row_range(c, n);
  std::int64_t own = matrix_norm(C * V).value();
  if (a == 0) {
    if (best_Y) *best_Y = Matrix(A.ring(), n, 0);
    return own;
  }
  SmithDecomposition sb = smith_decompose(B);
  std::int64_t top = 0;
  for (std::size_t i = 0; i < a; ++i) top += sb.D(i, i).valuation().value();
  if (best_Y) *best_Y = W * inverse(sb.Q).column_range(0, a);
  return own + top;
}

std::int64_t coupled_upper_bound(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c) {
  check_ranks(A, C, a, c);
  Lattice N(A.gens * inverse(C.gens));
  return partition_sum(lattice_invariants(A)) - min_direct_sum_norm(A, N, A.n() - a - c, c);
}

MaxResult max_direct_sum(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c) {
  check_ranks(A, C, a, c);
  const std::size_t n = A.n();
  const RingConfig& cfg = A.ring();
  MaxResult best{0, coupled_upper_bound(A, C, a, c), false, Matrix(cfg, n, 0), Matrix(cfg, n, 0)};
  bool found = false;

  auto consider = [&](const Matrix& raw) {
    Matrix V = saturate_in_unit(raw);
    Matrix Y;
    std::int64_t v = coupled_value(A.gens, C.gens, V, a, &Y);
    if (!found || v > best.value) {
      best.value = v;
      best.V = V;
      best.Y = Y;
      found = true;
    }
    return best.value >= best.upper_bound;
  };

  if (c == 0) {
    consider(Matrix(cfg, n, 0));
    best.certified = best.value == best.upper_bound;
    return best;
  }

  const Matrix Cinv = inverse(C.gens);
  const Matrix Ainv = inverse(A.gens);
  Lattice N(A.gens * Cinv);

  // seed 1: pull back the N-side of a min witness
  MinResult mr = min_direct_sum(A, N, n - a - c, c);
  if (consider(Ainv * mr.c_gens)) {
    best.certified = true;
    return best;
  }

  // seed 2: coordinate frames in a few natural bases, and their pullbacks through C
  std::vector<Matrix> bases{Matrix::identity(cfg, n)};
  for (const Matrix* X : std::initializer_list<const Matrix*>{&A.gens, &C.gens, &N.gens}) {
    SmithDecomposition sd = smith_decompose(*X);
    bases.push_back(sd.P);
    bases.push_back(inverse(sd.Q));
  }
  for (const Matrix& B : bases)
    for (const auto& K : subsets(n, c)) {
      Matrix cols = B.columns(K);
      if (consider(cols) || consider(Cinv * cols)) {
        best.certified = true;
        return best;
      }
    }

  // local improvement: V_i += +-t^k e_j, re-saturated
  bool improved = true;
  for (int round = 0; improved && round < 64; ++round) {
    improved = false;
    Matrix base = best.V;
    for (std::size_t i = 0; i < c && !improved; ++i)
      for (std::size_t j = 0; j < n && !improved; ++j)
        for (std::int64_t k = 0; k <= 3 && !improved; ++k)
          for (int sign : {1, -1}) {
            Matrix V = base;
            Scalar step = Scalar::uniformizer_pow(cfg, k);
            V(j, i) += sign > 0 ? step : -step;
            if (rank(V) < c) continue;
            std::int64_t before = best.value;
            if (consider(V)) {
              best.certified = true;
              return best;
            }
            if (best.value > before) {
              improved = true;
              break;
            }
          }
  }
  best.certified = best.value >= best.upper_bound;
  return best;
}

std::int64_t max_direct_sum_norm(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c) {
  return max_direct_sum(A, C, a, c).value;
}

Lattice swapped_factor(const Lattice& N, const Lattice& L) {
  SmithDecomposition sd = smith_decompose(L.gens);
  return Lattice(sd.P * sd.D * sd.P.transpose() * inverse(N.gens).transpose());
}

}  // namespace hivekit
