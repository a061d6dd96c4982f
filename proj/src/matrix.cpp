#include "hivekit/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace hivekit {

Matrix::Matrix(const RingConfig& cfg, std::size_t rows, std::size_t cols)
    : cfg_(cfg), r_(rows), c_(cols), a_(rows * cols, Scalar::zero(cfg)) {}

Matrix Matrix::identity(const RingConfig& cfg, std::size_t n) {
  Matrix m(cfg, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(cfg);
  return m;
}

Matrix Matrix::diagonal(const RingConfig& cfg, const std::vector<std::int64_t>& exps) {
  Matrix m(cfg, exps.size(), exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) m(i, i) = Scalar::uniformizer_pow(cfg, exps[i]);
  return m;
}

Matrix Matrix::from_ints(const RingConfig& cfg, const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(cfg, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(cfg, rows[i][j]);
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw InputError("dimension mismatch in product");
  if (!(cfg_ == o.cfg_)) throw InputError("mixed rings in product");
  Matrix m(cfg_, r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Scalar& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.c_; ++j)
        if (!o(k, j).is_zero()) m(i, j) += x * o(k, j);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw InputError("dimension mismatch in sum");
  Matrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw InputError("dimension mismatch in difference");
  Matrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

Matrix Matrix::scaled(const Scalar& k) const {
  Matrix m = *this;
  for (auto& x : m.a_) x *= k;
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return cfg_ == o.cfg_ && r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

Matrix Matrix::transpose() const {
  Matrix m(cfg_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
  Matrix m(cfg_, r_, idx.size());
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
  return m;
}

Matrix Matrix::column_range(std::size_t from, std::size_t to) const {
  std::vector<std::size_t> idx(to - from);
  std::iota(idx.begin(), idx.end(), from);
  return columns(idx);
}

Matrix Matrix::row_range(std::size_t from, std::size_t to) const {
  Matrix m(cfg_, to - from, c_);
  for (std::size_t i = from; i < to; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(i - from, j) = (*this)(i, j);
  return m;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (r_ != o.r_) throw InputError("row mismatch in hcat");
  Matrix m(cfg_, r_, c_ + o.c_);
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.c_; ++j) m(i, c_ + j) = o(i, j);
  }
  return m;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void Matrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const Scalar& f) {
  if (f.is_zero()) return;
  for (std::size_t k = 0; k < c_; ++k)
    if (!(*this)(src, k).is_zero()) (*this)(dst, k) += f * (*this)(src, k);
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const Scalar& f) {
  if (f.is_zero()) return;
  for (std::size_t k = 0; k < r_; ++k)
    if (!(*this)(k, src).is_zero()) (*this)(k, dst) += f * (*this)(k, src);
}

void Matrix::scale_row(std::size_t i, const Scalar& f) {
  for (std::size_t k = 0; k < c_; ++k) (*this)(i, k) *= f;
}

void Matrix::scale_col(std::size_t j, const Scalar& f) {
  for (std::size_t k = 0; k < r_; ++k) (*this)(k, j) *= f;
}

// ---------- elimination ----------

namespace {

// Gaussian elimination over K; returns the rank and (optionally) the determinant.
std::size_t gauss(Matrix A, Scalar* det_out) {
  const std::size_t m = A.rows(), n = A.cols();
  Scalar d = Scalar::one(A.ring());
  std::size_t rk = 0;
  for (std::size_t col = 0; col < n && rk < m; ++col) {
    std::size_t piv = m;
    for (std::size_t i = rk; i < m; ++i)
      if (!A(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv == m) {
      d = Scalar::zero(A.ring());
      continue;
    }
    if (piv != rk) {
      A.swap_rows(piv, rk);
      d = -d;
    }
    d *= A(rk, col);
    for (std::size_t i = rk + 1; i < m; ++i)
      if (!A(i, col).is_zero()) A.add_row_multiple(i, rk, -(A(i, col) / A(rk, col)));
    ++rk;
  }
  if (det_out) *det_out = (rk == n && m == n) ? d : Scalar::zero(A.ring());
  return rk;
}

// Smith elimination with the valuation-minimal pivot (ties: lowest row, then
// lowest column). Keeps A = P D Q when P, Q are given. Returns the rank.
std::size_t smith_eliminate(Matrix& D, Matrix* P, Matrix* Q) {
  const std::size_t m = D.rows(), k = D.cols();
  std::size_t s = 0;
  for (; s < std::min(m, k); ++s) {
    std::size_t pi = m, pj = k;
    Valuation best = Valuation::infinity();
    for (std::size_t i = s; i < m; ++i)
      for (std::size_t j = s; j < k; ++j) {
        if (D(i, j).is_zero()) continue;
        Valuation v = D(i, j).valuation();
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi == m) break;
    if (pi != s) {
      D.swap_rows(pi, s);
      if (P) P->swap_cols(pi, s);
    }
    if (pj != s) {
      D.swap_cols(pj, s);
      if (Q) Q->swap_rows(pj, s);
    }
    const Scalar piv = D(s, s);
    for (std::size_t r = s + 1; r < m; ++r) {
      if (D(r, s).is_zero()) continue;
      Scalar f = -(D(r, s) / piv);
      D.add_row_multiple(r, s, f);
      if (P) P->add_col_multiple(s, r, -f);
    }
    for (std::size_t c = s + 1; c < k; ++c) {
      if (D(s, c).is_zero()) continue;
      Scalar f = -(D(s, c) / piv);
      D.add_col_multiple(c, s, f);
      if (Q) Q->add_row_multiple(s, c, -f);
    }
    if (P) {
      Scalar u = piv.unit_part();
      D(s, s) = piv / u;
      P->scale_col(s, u);
    }
  }
  return s;
}

}  // namespace

Scalar det(const Matrix& A) {
  if (A.rows() != A.cols()) throw InputError("determinant of a non-square matrix");
  if (A.rows() == 0) return Scalar::one(A.ring());
  Scalar d;
  gauss(A, &d);
  return d;
}

std::size_t rank(const Matrix& A) { return gauss(A, nullptr); }

Matrix inverse(const Matrix& A) {
  const std::size_t n = A.rows();
  if (A.cols() != n) throw InputError("inverse of a non-square matrix");
  Matrix W = A.hcat(Matrix::identity(A.ring(), n));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = col; i < n; ++i)
      if (!W(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) throw InputError("matrix is singular");
    W.swap_rows(piv, col);
    W.scale_row(col, Scalar::one(A.ring()) / W(col, col));
    for (std::size_t i = 0; i < n; ++i)
      if (i != col && !W(i, col).is_zero()) W.add_row_multiple(i, col, -W(i, col));
  }
  return W.column_range(n, 2 * n);
}

bool is_integral(const Matrix& A) { return min_entry_valuation(A) >= Valuation(0); }

Valuation min_entry_valuation(const Matrix& A) {
  Valuation best = Valuation::infinity();
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) best = std::min(best, A(i, j).valuation());
  return best;
}

SmithDecomposition smith_decompose(const Matrix& A) {
  const RingConfig& cfg = A.ring();
  SmithDecomposition sd{Matrix::identity(cfg, A.rows()), A, Matrix::identity(cfg, A.cols())};
  std::size_t r = smith_eliminate(sd.D, &sd.P, &sd.Q);

  // pivots come out with non-decreasing orders; stable-sort them descending
  std::vector<std::size_t> sigma(r);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::int64_t> v(r);
  for (std::size_t i = 0; i < r; ++i) v[i] = sd.D(i, i).valuation().value();
  std::stable_sort(sigma.begin(), sigma.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  bool moved = false;
  for (std::size_t i = 0; i < r; ++i) moved |= sigma[i] != i;
  if (moved) {
    Matrix P = sd.P, D = sd.D, Q = sd.Q;
    for (std::size_t i = 0; i < r; ++i) {
      D(i, i) = sd.D(sigma[i], sigma[i]);
      for (std::size_t k = 0; k < P.rows(); ++k) P(k, i) = sd.P(k, sigma[i]);
      for (std::size_t k = 0; k < Q.cols(); ++k) Q(i, k) = sd.Q(sigma[i], k);
    }
    sd = {std::move(P), std::move(D), std::move(Q)};
  }
  return sd;
}

Partition invariant_partition(const Matrix& A) {
  Matrix D = A;
  std::size_t r = smith_eliminate(D, nullptr, nullptr);
  Partition p(r);
  for (std::size_t i = 0; i < r; ++i) p[i] = D(i, i).valuation().value();
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

Valuation matrix_norm(const Matrix& A) {
  Partition p = invariant_partition(A);
  if (p.size() < A.cols()) return Valuation::infinity();
  return Valuation(partition_sum(p));
}

bool unimodular_check(const Matrix& P) {
  if (P.rows() != P.cols()) return false;
  if (!is_integral(P)) return false;
  return det(P).valuation() == Valuation(0);
}

TopRows reduce_to_top_rows(const Matrix& S) {
  std::size_t r = S.cols();
  if (rank(S) != r) throw InputError("reduce_to_top_rows: columns are dependent");
  SmithDecomposition sd = smith_decompose(S);
  Matrix Pinv = inverse(sd.P);
  Matrix PS = Pinv * S;
  return {Pinv, PS.row_range(0, r)};
}

Partition quotient_free_invariants(const Matrix& T, const Matrix& S) {
  const std::size_t n = T.rows();
  if (T.cols() != n || rank(T) != n) throw InputError("quotient_free_invariants: T must be full rank");
  if (S.rows() != n) throw InputError("quotient_free_invariants: dimension mismatch");
  const std::size_t r = S.cols();
  if (r == n) {
    if (rank(S) != n) throw InputError("quotient_free_invariants: S is rank deficient");
    return {};
  }
  TopRows tr = reduce_to_top_rows(S);
  return invariant_partition((tr.P * T).row_range(r, n));
}

NormalForm normal_form(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw InputError("normal_form: no blocks");
  const RingConfig& cfg = blocks[0].ring();
  const std::size_t n = blocks[0].rows();
  NormalForm nf{Matrix::identity(cfg, n), {}, Matrix(cfg, n, 0), {}};
  std::size_t off = 0;
  for (const Matrix& B : blocks) {
    if (B.rows() != n) throw InputError("normal_form: row mismatch");
    const std::size_t r = B.cols();
    if (off + r > n) throw InputError("sum not direct");
    Matrix sub = (nf.P * B).row_range(off, n);
    if (rank(sub) != r) throw InputError("sum not direct");
    SmithDecomposition sd = smith_decompose(sub);
    Matrix Pi = inverse(sd.P);
    Matrix lift = Matrix::identity(cfg, n);
    for (std::size_t i = 0; i < n - off; ++i)
      for (std::size_t j = 0; j < n - off; ++j) lift(off + i, off + j) = Pi(i, j);
    nf.P = lift * nf.P;
    nf.R.push_back(inverse(sd.Q));
    Partition inv(r);
    for (std::size_t i = 0; i < r; ++i) inv[i] = sd.D(i, i).valuation().value();
    nf.block_invariants.push_back(inv);
    off += r;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) nf.T = nf.T.hcat(nf.P * blocks[b] * nf.R[b]);
  return nf;
}

Valuation min_maximal_minor_valuation(const Matrix& A) {
  const std::size_t m = A.rows(), k = A.cols();
  if (k > m) return Valuation::infinity();  // k columns in K^m, m < k, are dependent
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  Valuation best = Valuation::infinity();
  const Matrix At = A.transpose();
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) idx.push_back(i);
    best = std::min(best, det(At.columns(idx)).valuation());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

std::int64_t partition_sum(const Partition& p) {
  std::int64_t s = 0;
  for (auto x : p) s += x;
  return s;
}

std::int64_t top_sum(const Partition& p, std::size_t k) {
  if (k > p.size()) throw InputError("top_sum: k exceeds length");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < k; ++i) s += p[i];
  return s;
}

std::int64_t bottom_sum(const Partition& p, std::size_t k) {
  if (k > p.size()) throw InputError("bottom_sum: k exceeds length");
  std::int64_t s = 0;
  for (std::size_t i = p.size() - k; i < p.size(); ++i) s += p[i];
  return s;
}

}  // namespace hivekit
