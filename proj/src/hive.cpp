#include "hivekit/hive.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hivekit {

Hive::Hive(std::size_t n_) : n(n_), rows(n_ + 1) {
  for (std::size_t j = 0; j <= n; ++j) rows[j].assign(j + 1, 0);
}

Hive Hive::from_rows(std::vector<std::vector<std::int64_t>> r) {
  if (r.empty()) throw InputError("hive needs at least one row");
  for (std::size_t j = 0; j < r.size(); ++j)
    if (r[j].size() != j + 1)
      throw InputError("hive row " + std::to_string(j) + " must have " + std::to_string(j + 1) + " entries");
  if (r[0][0] != 0) throw InputError("hive must have h00 = 0");
  Hive h;
  h.n = r.size() - 1;
  h.rows = std::move(r);
  return h;
}

std::string variant_name(Variant v) { return v == Variant::primary ? "primary" : "swapped"; }

Variant parse_variant(const std::string& s) {
  if (s == "primary") return Variant::primary;
  if (s == "swapped") return Variant::swapped;
  throw InputError("unknown variant '" + s + "'");
}

HiveBuild build_hive_checked(const Lattice& N, const Lattice& L, Variant v) {
  if (N.n() != L.n()) throw InputError("N and L have different dimensions");
  if (!(N.ring() == L.ring())) throw InputError("N and L are over different rings");
  const std::size_t n = L.n();
  const std::int64_t lam = partition_sum(lattice_invariants(L));

  const Lattice left = v == Variant::primary ? N : swapped_factor(N, L);
  const Lattice right(inverse(left.gens) * L.gens);

  HiveBuild out{Hive(n), v, {}};
  for (std::size_t t = 0; t <= n; ++t)
    for (std::size_t s = 0; s <= t; ++s) {
      std::int64_t lo = lam - min_direct_sum_norm(L, left, n - t, t - s);
      MaxResult hi = max_direct_sum(L, right, s, t - s);
      out.entries.push_back({s, t, lo, hi.value, hi.certified});
      if (lo != hi.value)
        throw DualityError(s, t,
                           "duality check failed at (" + std::to_string(s) + "," + std::to_string(t) +
                               "): min formula gives " + std::to_string(lo) + ", max search reached " +
                               std::to_string(hi.value));
      out.hive.at(s, t) = lo;
    }
  return out;
}

Hive build_hive(const Lattice& N, const Lattice& L, Variant v) { return build_hive_checked(N, L, v).hive; }

std::string family_name(Family f) {
  switch (f) {
    case Family::right:
      return "right";
    case Family::left:
      return "left";
    default:
      return "vertical";
  }
}

std::string Violation::str() const {
  std::ostringstream os;
  os << (family == Family::vertical ? "vertical" : family_name(family) + "-leaning") << " violation at (" << i << ","
     << j << "): " << lhs << " < " << rhs;
  return os.str();
}

std::string RhombusReport::str() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v.str() << "\n";
  return os.str();
}

RhombusReport check_rhombus(const Hive& H) {
  RhombusReport rep;
  const std::size_t n = H.n;
  auto h = [&](std::size_t i, std::size_t j) { return H.at(i, j); };
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (i >= 1) {
        std::int64_t l = h(i, j) + h(i - 1, j - 1), r = h(i - 1, j) + h(i, j - 1);
        if (l < r) rep.violations.push_back({Family::right, i, j, l, r});
        l = h(i, j) + h(i, j - 1);
        r = h(i - 1, j - 1) + h(i + 1, j);
        if (l < r) rep.violations.push_back({Family::left, i, j, l, r});
      }
      if (j + 1 <= n) {
        std::int64_t l = h(i, j) + h(i + 1, j), r = h(i + 1, j + 1) + h(i, j - 1);
        if (l < r) rep.violations.push_back({Family::vertical, i, j, l, r});
      }
    }
  return rep;
}

HiveType hive_boundary(const Hive& H) {
  HiveType t;
  const std::size_t n = H.n;
  for (std::size_t i = 1; i <= n; ++i) {
    t.mu.push_back(H.at(0, i) - H.at(0, i - 1));
    t.lambda.push_back(H.at(i, i) - H.at(i - 1, i - 1));
    t.nu.push_back(H.at(i, n) - H.at(i - 1, n));
  }
  return t;
}

HiveType hive_type(const Hive& H) {
  RhombusReport rep = check_rhombus(H);
  if (!rep.ok()) throw ValidationError("not a hive:\n" + rep.str());
  return hive_boundary(H);
}

LRFilling hive_to_lr_filling(const Hive& H) {
  HiveType t = hive_boundary(H);
  LRFilling f{H.n, t.lambda, t.mu, t.nu, {}};
  for (std::size_t k = 1; k <= H.n; ++k) {
    std::vector<std::int64_t> row;
    for (std::size_t i = 1; i <= k; ++i) {
      std::int64_t c = H.at(i, k) - H.at(i - 1, k);
      if (i <= k - 1) c -= H.at(i, k - 1) - H.at(i - 1, k - 1);
      row.push_back(c);
    }
    f.counts.push_back(std::move(row));
  }
  return f;
}

LRCheck validate_lr(const LRFilling& F) {
  const std::size_t n = F.n;
  auto fail = [](std::string why) { return LRCheck{false, std::move(why)}; };
  if (F.shape.size() != n || F.inner.size() != n || F.content.size() != n || F.counts.size() != n)
    return fail("dimension mismatch");
  for (std::size_t k = 0; k < n; ++k)
    if (F.counts[k].size() != k + 1) return fail("row " + std::to_string(k + 1) + " has the wrong number of counts");
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (F.shape[k] < F.shape[k + 1]) return fail("shape is not a partition");
    if (F.inner[k] < F.inner[k + 1]) return fail("inner shape is not a partition");
  }

  std::vector<std::int64_t> seen(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::int64_t len = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      if (F.counts[k][i] < 0) return fail("negative count of letter " + std::to_string(i + 1) + " in row " +
                                          std::to_string(k + 1));
      len += F.counts[k][i];
      seen[i] += F.counts[k][i];
    }
    if (F.inner[k] + len != F.shape[k]) return fail("row " + std::to_string(k + 1) + " length mismatch");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (seen[i] != F.content[i]) return fail("content mismatch for letter " + std::to_string(i + 1));

  // Lay out the tableau; shift so the smallest inner part sits at column 0.
  const std::int64_t base = n ? std::min(*std::min_element(F.inner.begin(), F.inner.end()), F.shape.back()) : 0;
  std::vector<std::vector<std::size_t>> letters(n);  // letters[k][x] for cells left to right
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      for (std::int64_t c = 0; c < F.counts[k][i]; ++c) letters[k].push_back(i + 1);

  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t x = 0; x < letters[k].size(); ++x) {
      std::int64_t col = F.inner[k] - base + static_cast<std::int64_t>(x);
      std::int64_t above_start = F.inner[k - 1] - base;
      if (col < above_start) continue;  // above is an inner box
      std::size_t ax = static_cast<std::size_t>(col - above_start);
      if (ax >= letters[k - 1].size()) return fail("shape is not a partition");
      if (letters[k - 1][ax] >= letters[k][x])
        return fail("column not strictly increasing at row " + std::to_string(k + 1) + ", column " +
                    std::to_string(col + 1));
    }
  }

  std::vector<std::int64_t> prefix(n + 2, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = letters[k].size(); x-- > 0;) {
      std::size_t l = letters[k][x];
      ++prefix[l];
      if (l > 1 && prefix[l] > prefix[l - 1])
        return fail("ballot condition fails at letter " + std::to_string(l) + " in row " + std::to_string(k + 1));
    }
  return {true, ""};
}

std::string render_ascii(const Hive& H) {
  std::size_t w = 1;
  for (const auto& r : H.rows)
    for (auto x : r) w = std::max(w, std::to_string(x).size());
  std::ostringstream os;
  for (std::size_t j = 0; j <= H.n; ++j) {
    os << std::string((H.n - j) * (w + 1) / 2, ' ');
    for (std::size_t i = 0; i <= j; ++i) {
      std::string s = std::to_string(H.at(i, j));
      if (i) os << ' ';
      os << std::string(w - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

std::string render_svg(const Hive& H) {
  const double dx = 60.0, dy = dx * std::sqrt(3.0) / 2.0, margin = 30.0;
  const std::size_t n = H.n;
  auto X = [&](std::size_t i, std::size_t j) { return margin + (static_cast<double>(n - j) / 2.0 + i) * dx; };
  auto Y = [&](std::size_t j) { return margin + static_cast<double>(j) * dy; };
  char buf[256];
  std::ostringstream os;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.1f\" height=\"%.1f\" font-family=\"monospace\" "
                "font-size=\"14\">\n",
                2 * margin + n * dx, 2 * margin + n * dy);
  os << buf;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      for (std::size_t d = 0; d < 2; ++d) {
        std::snprintf(buf, sizeof buf, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#bbb\"/>\n",
                      X(i, j), Y(j), X(i + d, j + 1), Y(j + 1));
        os << buf;
      }
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      std::snprintf(buf, sizeof buf, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#bbb\"/>\n",
                    X(i, j), Y(j), X(i + 1, j), Y(j));
      os << buf;
    }
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      std::snprintf(buf, sizeof buf,
                    "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"13\" fill=\"white\" stroke=\"black\"/>"
                    "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\" dominant-baseline=\"central\">%lld</text>\n",
                    X(i, j), Y(j), X(i, j), Y(j), static_cast<long long>(H.at(i, j)));
      os << buf;
    }
  os << "</svg>\n";
  return os.str();
}

}  // namespace hivekit
