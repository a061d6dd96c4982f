#pragma once

// Dense matrices over K and the O-structure operations on them.

#include <cstdint>
#include <vector>

#include "hivekit/ring.hpp"

namespace hivekit {

using Partition = std::vector<std::int64_t>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(const RingConfig& cfg, std::size_t rows, std::size_t cols);
  static Matrix identity(const RingConfig& cfg, std::size_t n);
  static Matrix diagonal(const RingConfig& cfg, const std::vector<std::int64_t>& exps);  // t^e on the diagonal
  static Matrix from_ints(const RingConfig& cfg, const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  const RingConfig& ring() const { return cfg_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& k) const;
  bool operator==(const Matrix& o) const;

  Matrix transpose() const;
  Matrix columns(const std::vector<std::size_t>& idx) const;
  Matrix column_range(std::size_t from, std::size_t to) const;  // [from, to)
  Matrix row_range(std::size_t from, std::size_t to) const;
  Matrix hcat(const Matrix& o) const;  // column-count zero operands are allowed

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Scalar& f);  // row dst += f * row src
  void add_col_multiple(std::size_t dst, std::size_t src, const Scalar& f);  // col dst += f * col src
  void scale_row(std::size_t i, const Scalar& f);
  void scale_col(std::size_t j, const Scalar& f);

 private:
  RingConfig cfg_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

Scalar det(const Matrix& A);
std::size_t rank(const Matrix& A);
Matrix inverse(const Matrix& A);  // throws on singular input
bool is_integral(const Matrix& A);  // all entries in O
Valuation min_entry_valuation(const Matrix& A);

// A = P D Q, P and Q unimodular, D diagonal with t-powers whose orders are
// non-increasing, zeros last.
struct SmithDecomposition {
  Matrix P, D, Q;
};
SmithDecomposition smith_decompose(const Matrix& A);

// Finite invariant orders, non-increasing, truncated to the K-rank.
Partition invariant_partition(const Matrix& A);
Valuation matrix_norm(const Matrix& A);  // +inf when the columns are dependent
bool unimodular_check(const Matrix& P);

struct TopRows {
  Matrix P;      // unimodular, P*S vanishes below row r
  Matrix S_top;  // the r x r top block of P*S
};
TopRows reduce_to_top_rows(const Matrix& S);

// Invariants of the bottom (n-r) rows of P*T, P from reduce_to_top_rows(S).
Partition quotient_free_invariants(const Matrix& T, const Matrix& S);

// Block upper triangular realization of a direct sum [B_1 | ... | B_k]:
// P * [B_1 R_1 | ... | B_k R_k] = T, where the diagonal block of B_i is
// diagonal with non-increasing orders.
struct NormalForm {
  Matrix P;
  std::vector<Matrix> R;
  Matrix T;
  std::vector<Partition> block_invariants;
};
NormalForm normal_form(const std::vector<Matrix>& blocks);

// Minimum valuation of the k x k minors of an m x k matrix (+inf when k > m); an oracle for matrix_norm.
Valuation min_maximal_minor_valuation(const Matrix& A);

std::int64_t partition_sum(const Partition& p);
std::int64_t top_sum(const Partition& p, std::size_t k);     // k largest parts
std::int64_t bottom_sum(const Partition& p, std::size_t k);  // k smallest parts

}  // namespace hivekit
