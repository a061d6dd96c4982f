#include "hivekit/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace hivekit {

namespace {

void require_padic(const RingConfig& cfg) {
  if (cfg.kind != RingKind::padic) throw InputError("enumeration needs a p-adic ring (the t-adic residue field is infinite)");
}

mpz_class ipow(unsigned long p, std::int64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e));
  return r;
}

void charge(std::uint64_t& used, std::uint64_t add, std::uint64_t cap, const char* what) {
  if (add > cap || used > cap - add)
    throw BudgetError(std::string("enumeration budget exceeded (") + what + ", cap " + std::to_string(cap) + ")");
  used += add;
}

// Rank of an integer matrix reduced mod p.
std::size_t rank_mod_p(std::vector<std::vector<mpz_class>> m, unsigned long p) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  mpz_class P(p);
  for (auto& r : m)
    for (auto& x : r) x = ((x % P) + P) % P;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = rk; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[piv], m[rk]);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), m[rk][c].get_mpz_t(), P.get_mpz_t());
    for (std::size_t i = rk + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      mpz_class f = (m[i][c] * inv) % P;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = (((m[i][j] - f * m[rk][j]) % P) + P) % P;
    }
    ++rk;
  }
  return rk;
}

struct Frame {
  Matrix X;
  bool edge;
};

// Saturated canonical frames; edge marks a free entry whose top digit sits at depth D.
std::vector<Frame> frames_impl(const RingConfig& cfg, std::size_t n, std::size_t r, std::int64_t depth,
                               std::uint64_t cap) {
  require_padic(cfg);
  if (r > n) throw InputError("frame rank exceeds dimension");
  if (depth < 1) throw InputError("residue depth must be at least 1");
  const unsigned long p = cfg.p;
  const mpz_class top = ipow(p, depth), edge_at = ipow(p, depth - 1);
  std::vector<Frame> out;
  std::uint64_t used = 0;

  std::vector<std::size_t> piv(r);
  std::function<void(std::size_t, std::size_t)> choose_rows;
  auto fill = [&](const std::vector<std::int64_t>& e) {
    // free cells and their ranges
    struct Cell {
      std::size_t i, j;
      mpz_class range;
    };
    std::vector<Cell> cells;
    std::vector<long> owner(n, -1);
    for (std::size_t j = 0; j < r; ++j) owner[piv[j]] = static_cast<long>(j);
    mpz_class count = 1;
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = piv[j] + 1; i < n; ++i) {
        mpz_class range = owner[i] >= 0 ? ipow(p, e[static_cast<std::size_t>(owner[i])]) : top;
        if (range > 1) cells.push_back({i, j, range});
        count *= range;
      }
    if (count > cap) charge(used, cap + 1, cap, "frames");
    charge(used, count.get_ui(), cap, "frames");
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(r, 0));
    for (std::size_t j = 0; j < r; ++j) m[piv[j]][j] = ipow(p, e[j]);
    std::vector<mpz_class> val(cells.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < cells.size(); ++k) m[cells[k].i][cells[k].j] = val[k];
      if (rank_mod_p(m, p) == r) {
        Matrix X(cfg, n, r);
        bool edge = false;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < r; ++j) {
            X(i, j) = Scalar(cfg, mpq_class(m[i][j]));
            bool at_pivot = i == piv[j];
            if (at_pivot ? (m[i][j] > 1 && m[i][j] >= edge_at) : (m[i][j] != 0 && m[i][j] >= edge_at)) edge = true;
          }
        out.push_back({std::move(X), edge});
      }
      std::size_t k = 0;
      for (; k < cells.size(); ++k) {
        if (++val[k] < cells[k].range) break;
        val[k] = 0;
      }
      if (k == cells.size()) break;
    }
  };
  std::function<void(std::size_t, std::vector<std::int64_t>&)> choose_exps = [&](std::size_t j,
                                                                                 std::vector<std::int64_t>& e) {
    if (j == r) {
      fill(e);
      return;
    }
    for (std::int64_t x = 0; x < depth; ++x) {
      e[j] = x;
      choose_exps(j + 1, e);
    }
  };
  choose_rows = [&](std::size_t j, std::size_t from) {
    if (j == r) {
      std::vector<std::int64_t> e(r, 0);
      choose_exps(0, e);
      return;
    }
    for (std::size_t i = from; i + (r - j) <= n; ++i) {
      piv[j] = i;
      choose_rows(j + 1, i + 1);
    }
  };
  choose_rows(0, 0);
  return out;
}

struct Inner {
  Matrix T;
  bool edge;
};

std::vector<Inner> inner_impl(const RingConfig& cfg, std::size_t r, std::int64_t bound, std::uint64_t cap) {
  require_padic(cfg);
  if (bound < 0) throw InputError("exponent bound must be nonnegative");
  const unsigned long p = cfg.p;
  std::vector<Inner> out;
  std::uint64_t used = 0;
  std::vector<std::int64_t> e(r, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j < r) {
      for (std::int64_t x = 0; x <= bound; ++x) {
        e[j] = x;
        rec(j + 1);
      }
      return;
    }
    struct Cell {
      std::size_t i, j;
      mpz_class range;
    };
    std::vector<Cell> cells;
    mpz_class count = 1;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t jj = 0; jj < i; ++jj) {
        mpz_class range = ipow(p, e[i]);
        if (range > 1) cells.push_back({i, jj, range});
        count *= range;
      }
    if (count > cap) charge(used, cap + 1, cap, "inner forms");
    charge(used, count.get_ui(), cap, "inner forms");
    std::vector<mpz_class> val(cells.size(), 0);
    while (true) {
      Matrix T(cfg, r, r);
      for (std::size_t i = 0; i < r; ++i) T(i, i) = Scalar::uniformizer_pow(cfg, e[i]);
      for (std::size_t k = 0; k < cells.size(); ++k) T(cells[k].i, cells[k].j) = Scalar(cfg, mpq_class(val[k]));
      Partition inv = invariant_partition(T);
      std::int64_t hi = inv.empty() ? 0 : inv.front();
      if (hi <= bound) out.push_back({std::move(T), hi == bound});
      std::size_t k = 0;
      for (; k < cells.size(); ++k) {
        if (++val[k] < cells[k].range) break;
        val[k] = 0;
      }
      if (k == cells.size()) break;
    }
  };
  rec(0);
  return out;
}

// x mod t^e in O, as a canonical representative.
Scalar residue(const Scalar& x, std::int64_t e) {
  const RingConfig& cfg = x.ring();
  if (e == 0) return Scalar::zero(cfg);
  if (cfg.kind == RingKind::padic) {
    mpz_class m = ipow(cfg.p, e), inv;
    const mpq_class& q = x.rational();
    if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t()) == 0)
      throw Error("residue of a non-integral element");
    mpz_class r = (q.get_num() * inv) % m;
    if (r < 0) r += m;
    return Scalar(cfg, mpq_class(r));
  }
  // truncated power series of num/den
  const Poly &num = x.num(), &den = x.den();
  std::vector<mpq_class> c(static_cast<std::size_t>(e), 0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    mpq_class acc = static_cast<long>(k) <= num.degree() ? num.coeff(k) : mpq_class(0);
    for (std::size_t i = 1; i <= k; ++i)
      if (static_cast<long>(i) <= den.degree()) acc -= den.coeff(i) * c[k - i];
    c[k] = acc / den.coeff(0);
  }
  return Scalar(cfg, Poly(c), Poly(mpq_class(1)));
}

}  // namespace

EnumerationBudget resolve_budget(const EnumerationBudget& b, const std::vector<const Lattice*>& lattices) {
  EnumerationBudget r = b;
  if (r.exponent_bound < 0) {
    std::int64_t lo = 0, hi = 0;
    bool first = true;
    for (const Lattice* L : lattices) {
      Partition inv = lattice_invariants(*L);
      if (inv.empty()) continue;
      lo = first ? inv.back() : std::min(lo, inv.back());
      hi = first ? inv.front() : std::max(hi, inv.front());
      first = false;
    }
    r.exponent_bound = hi - lo + 1;
  }
  if (r.residue_depth < 0) r.residue_depth = std::max<std::int64_t>(1, r.exponent_bound);
  return r;
}

std::vector<Matrix> saturated_frames(const RingConfig& cfg, std::size_t n, std::size_t r, std::int64_t depth,
                                     std::uint64_t count_cap) {
  std::vector<Matrix> out;
  for (auto& f : frames_impl(cfg, n, r, depth, count_cap)) out.push_back(std::move(f.X));
  return out;
}

std::vector<Matrix> inner_forms(const RingConfig& cfg, std::size_t r, std::int64_t bound, std::uint64_t count_cap) {
  std::vector<Matrix> out;
  for (auto& f : inner_impl(cfg, r, bound, count_cap)) out.push_back(std::move(f.T));
  return out;
}

Matrix hermite_form(const Matrix& V) {
  const std::size_t n = V.rows(), k = V.cols();
  if (rank(V) != k) throw InputError("hermite_form: dependent columns");
  Matrix H = V;
  std::size_t placed = 0;
  for (std::size_t i = 0; i < n && placed < k; ++i) {
    std::size_t best = k;
    Valuation bv = Valuation::infinity();
    for (std::size_t j = placed; j < k; ++j)
      if (!H(i, j).is_zero() && H(i, j).valuation() < bv) {
        bv = H(i, j).valuation();
        best = j;
      }
    if (best == k) continue;
    H.swap_cols(best, placed);
    for (std::size_t j = placed + 1; j < k; ++j)
      if (!H(i, j).is_zero()) H.add_col_multiple(j, placed, -(H(i, j) / H(i, placed)));
    Scalar u = H(i, placed).unit_part();
    H.scale_col(placed, Scalar::one(H.ring()) / u);
    const std::int64_t e = bv.value();
    for (std::size_t j = 0; j < placed; ++j) {
      Scalar x = H(i, j);
      if (x.is_zero()) continue;
      Scalar q = (x - residue(x, e)) / H(i, placed);
      H.add_col_multiple(j, placed, -q);
    }
    ++placed;
  }
  return H;
}

std::string fingerprint(const Matrix& V) {
  Matrix H = hermite_form(V);
  std::string s;
  for (std::size_t j = 0; j < H.cols(); ++j) {
    s += j ? "|" : "";
    for (std::size_t i = 0; i < H.rows(); ++i) s += (i ? "," : "") + H(i, j).str();
  }
  return s;
}

std::vector<EnumeratedSubmodule> enumerate_submodules(const Lattice& L, std::size_t r, const EnumerationBudget& raw) {
  require_padic(L.ring());
  EnumerationBudget b = resolve_budget(raw, {&L});
  const std::size_t n = L.n();
  if (n > b.max_n) throw BudgetError("dimension " + std::to_string(n) + " exceeds max_n");
  if (r > n) throw InputError("rank exceeds dimension");
  auto frames = frames_impl(L.ring(), n, r, b.residue_depth, b.count_cap);
  auto inners = inner_impl(L.ring(), r, b.exponent_bound, b.count_cap);
  std::uint64_t used = 0;
  charge(used, static_cast<std::uint64_t>(frames.size()) * inners.size(), b.count_cap, "submodules");
  std::map<std::string, EnumeratedSubmodule> byKey;
  for (const auto& f : frames) {
    Matrix LX = L.gens * f.X;
    for (const auto& t : inners) {
      Matrix V = LX * t.T;
      std::string key = r ? fingerprint(V) : std::string();
      byKey.emplace(key, EnumeratedSubmodule{Submodule(V), key, f.edge || t.edge});
    }
  }
  std::vector<EnumeratedSubmodule> out;
  for (auto& [k, v] : byKey) out.push_back(std::move(v));
  return out;
}

OracleResult brute_min_direct_sum(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c,
                                  const EnumerationBudget& raw) {
  if (a + c > A.n()) throw InputError("rank constraint violated: a + c > n");
  EnumerationBudget b = resolve_budget(raw, {&A, &C});
  auto la = enumerate_submodules(A, a, b), lc = enumerate_submodules(C, c, b);
  std::uint64_t used = 0;
  charge(used, static_cast<std::uint64_t>(la.size()) * lc.size(), b.count_cap, "pairs");
  OracleResult res;
  bool found = false, all_edge = true;
  for (const auto& x : la)
    for (const auto& y : lc) {
      ++res.candidates;
      Valuation v = matrix_norm(x.sub.gens.hcat(y.sub.gens));
      if (v.is_infinite()) continue;
      std::int64_t val = v.value();
      bool edge = x.on_boundary || y.on_boundary;
      if (!found || val < res.value) {
        res.value = val;
        res.witnesses.clear();
        all_edge = true;
        found = true;
      }
      if (val == res.value) {
        res.witnesses.push_back({x.sub.gens, y.sub.gens});
        all_edge = all_edge && edge;
      }
    }
  if (!found) throw Error("brute_min: no direct pair enumerated");
  res.boundary_warning = all_edge;
  return res;
}

OracleResult brute_max_direct_sum(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c,
                                  const EnumerationBudget& raw) {
  require_padic(A.ring());
  if (a + c > A.n()) throw InputError("rank constraint violated: a + c > n");
  EnumerationBudget b = resolve_budget(raw, {&A, &C});
  if (A.n() > b.max_n) throw BudgetError("dimension exceeds max_n");
  auto frames = frames_impl(A.ring(), A.n(), c, b.residue_depth, b.count_cap);
  OracleResult res;
  bool found = false, all_edge = true;
  for (const auto& f : frames) {
    ++res.candidates;
    Matrix Y;
    std::int64_t val = coupled_value(A.gens, C.gens, f.X, a, &Y);
    if (!found || val > res.value) {
      res.value = val;
      res.witnesses.clear();
      all_edge = true;
      found = true;
    }
    if (val == res.value) {
      res.witnesses.push_back({A.gens * Y, C.gens * f.X});
      all_edge = all_edge && f.edge;
    }
  }
  res.boundary_warning = all_edge && c > 0;
  return res;
}

std::int64_t brute_max_single(const Matrix& B, std::size_t a, std::int64_t depth) {
  std::int64_t best = 0;
  bool found = false;
  for (const auto& f : frames_impl(B.ring(), B.cols(), a, depth, 50'000'000)) {
    std::int64_t v = matrix_norm(B * f.X).value();
    if (!found || v > best) best = v;
    found = true;
  }
  return best;
}

std::vector<LRFilling> enumerate_lr_fillings(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const std::size_t n = lambda.size();
  if (mu.size() != n || nu.size() != n) throw InputError("malformed partition triple: lengths differ");
  for (const Partition* p : {&lambda, &mu, &nu}) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((*p)[i] < 0) throw InputError("malformed partition triple: negative part");
      if (i + 1 < n && (*p)[i] < (*p)[i + 1]) throw InputError("malformed partition triple: not a partition");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (mu[i] > lambda[i]) throw InputError("malformed partition triple: mu is not inside lambda");
  if (partition_sum(mu) + partition_sum(nu) != partition_sum(lambda))
    throw InputError("malformed partition triple: sizes do not add up");

  // cells in reading order: top row first, right to left
  struct Cell {
    std::size_t row;
    std::int64_t col;
  };
  std::vector<Cell> cells;
  for (std::size_t k = 0; k < n; ++k)
    for (std::int64_t x = lambda[k] - 1; x >= mu[k]; --x) cells.push_back({k, x});

  std::map<std::pair<std::size_t, std::int64_t>, std::size_t> letter;
  std::vector<std::int64_t> used(n + 1, 0);
  std::vector<LRFilling> out;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      LRFilling f{n, lambda, mu, nu, {}};
      for (std::size_t k = 0; k < n; ++k) f.counts.emplace_back(k + 1, 0);
      for (const auto& [pos, l] : letter) f.counts[pos.first][l - 1] += 1;
      out.push_back(std::move(f));
      return;
    }
    const Cell cell = cells[idx];
    for (std::size_t l = 1; l <= n; ++l) {
      if (used[l] >= nu[l - 1]) continue;
      if (l > 1 && used[l] + 1 > used[l - 1]) continue;  // ballot
      auto right = letter.find({cell.row, cell.col + 1});
      if (right != letter.end() && right->second < l) continue;  // rows weakly increase
      if (cell.row > 0 && cell.col >= mu[cell.row - 1]) {
        auto above = letter.find({cell.row - 1, cell.col});
        if (above != letter.end() && above->second >= l) continue;  // columns strictly increase
      }
      if (l > cell.row + 1) continue;
      letter[{cell.row, cell.col}] = l;
      ++used[l];
      rec(idx + 1);
      --used[l];
      letter.erase({cell.row, cell.col});
    }
  };
  rec(0);
  return out;
}

}  // namespace hivekit
