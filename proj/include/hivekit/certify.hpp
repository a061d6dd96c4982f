#pragma once

// Optimizer-versus-enumeration certification of whole lattice pairs, shared
// by the CLI oracle command and the acceptance harness.

#include <optional>
#include <string>
#include <vector>

#include "hivekit/oracle.hpp"

namespace hivekit {

// Brute force with the exponent bound and residue depth grown by one while
// every optimizer sits on the boundary (until two consecutive values agree),
// or while the value is worse than `witness`, a value some explicit
// submodule pair is known to attain.
struct Stabilized {
  OracleResult result;
  EnumerationBudget budget;  // the last budget that ran
  bool stable = false;
  std::string note;
};
Stabilized stabilized_min(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c,
                          const EnumerationBudget& start, int max_rounds = 3,
                          std::optional<std::int64_t> witness = std::nullopt);
Stabilized stabilized_max(const Lattice& A, const Lattice& C, std::size_t a, std::size_t c,
                          const EnumerationBudget& start, int max_rounds = 3,
                          std::optional<std::int64_t> witness = std::nullopt);

struct EntryCertificate {
  std::size_t s = 0, t = 0;
  std::int64_t opt_min = 0, brute_min = 0, opt_max = 0, brute_max = 0;
  bool boundary_warning = false, stable = true;
  std::string note;
  bool min_ok() const { return opt_min == brute_min; }
  bool max_ok() const { return opt_max == brute_max; }
};

struct TrialCertificate {
  std::size_t n = 0;
  HiveType expected;  // (mu, nu, lambda) from the pair
  std::vector<EntryCertificate> entries;
  bool optimizer_ok = false, duality_ok = false, type_primary_ok = false, type_swapped_ok = false;
  bool lr_valid = false, lr_member = false, realizable = false;
  std::string error;  // budget exhaustion or an unexpected failure
  bool certified() const;
};

// h(s,t) entries of the primary hive: min over (L, N, n-t, t-s) and max over
// (L, N^-1 L, s, t-s), each against enumeration; then duality of the brute
// values, both type claims, and LR validity and membership.
TrialCertificate certify_pair(const Lattice& N, const Lattice& L, const EnumerationBudget& start);

// The pair certified in every oracle report: A = diag(4,1), C = diag(2,1), a = c = 1.
struct Regression {
  std::int64_t optimizer, greedy, brute;
};
Regression regression_instance();

}  // namespace hivekit
