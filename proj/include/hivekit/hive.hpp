#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hivekit/lattice.hpp"

namespace hivekit {

// Triangular array h(i, j), 0 <= i <= j <= n; rows[j] holds h(0, j) .. h(j, j).
struct Hive {
  std::size_t n = 0;
  std::vector<std::vector<std::int64_t>> rows;

  Hive() = default;
  explicit Hive(std::size_t n_);
  static Hive from_rows(std::vector<std::vector<std::int64_t>> rows);

  std::int64_t& at(std::size_t i, std::size_t j) { return rows[j][i]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return rows[j][i]; }
  bool operator==(const Hive&) const = default;
};

enum class Variant { primary, swapped };
std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);

struct HiveType {
  Partition mu, nu, lambda;
  bool operator==(const HiveType&) const = default;
};

// One entry of a constructed hive: the value from the min formula and the
// value from the max formula.
struct EntryCheck {
  std::size_t s, t;
  std::int64_t from_min, from_max;
  bool max_certified;
};

struct HiveBuild {
  Hive hive;
  Variant variant;
  std::vector<EntryCheck> entries;
};

// primary: h(s,t) = |lambda| - min ||L_{n-t} (+) N_{t-s}||, max side over (L, N^-1 L).
// swapped: same with N replaced by swapped_factor(N, L), max side over (L, M*^-1 L).
// Throws DualityError when the two formulas disagree.
HiveBuild build_hive_checked(const Lattice& N, const Lattice& L, Variant v);
Hive build_hive(const Lattice& N, const Lattice& L, Variant v);

enum class Family { right, left, vertical };
std::string family_name(Family f);

struct Violation {
  Family family;
  std::size_t i, j;
  std::int64_t lhs, rhs;
  std::string str() const;  // "right-leaning violation at (1,2): 51 < 61"
};

struct RhombusReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

RhombusReport check_rhombus(const Hive& H);

// Throws ValidationError (message carries the report) when H is not a hive.
HiveType hive_type(const Hive& H);
HiveType hive_boundary(const Hive& H);  // the same differences, no validation

// counts[k-1][i-1] = number of letters i in row k, 1 <= i <= k <= n.
struct LRFilling {
  std::size_t n = 0;
  Partition shape, inner, content;
  std::vector<std::vector<std::int64_t>> counts;
  bool operator==(const LRFilling&) const = default;
};

LRFilling hive_to_lr_filling(const Hive& H);

struct LRCheck {
  bool ok;
  std::string diagnostic;  // first failure, empty when ok
};
LRCheck validate_lr(const LRFilling& F);

std::string render_ascii(const Hive& H);
std::string render_svg(const Hive& H);

}  // namespace hivekit
