#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hivekit/certify.hpp"
#include "hivekit/instance.hpp"

using namespace hivekit;

namespace {
const RingConfig P2 = RingConfig::padic(2);

Matrix m(const std::vector<std::vector<long>>& rows) { return Matrix::from_ints(P2, rows); }
Lattice diag(std::vector<std::int64_t> e) { return Lattice(Matrix::diagonal(P2, e)); }

EnumerationBudget budget(std::int64_t M, std::int64_t D = -1) {
  EnumerationBudget b;
  b.exponent_bound = M;
  b.residue_depth = D;
  return b;
}

InstanceSpec spec(std::size_t n, std::int64_t hi, std::uint64_t seed) {
  InstanceSpec s;
  s.n = n;
  s.hi = hi;
  s.seed = seed;
  return s;
}

std::set<std::string> keys(const std::vector<EnumeratedSubmodule>& subs) {
  std::set<std::string> out;
  for (const auto& s : subs) out.insert(s.key);
  return out;
}
}  // namespace

TEST_CASE("enumeration examples") {
  Lattice O1(Matrix::identity(P2, 1)), O2(Matrix::identity(P2, 2));
  auto one = enumerate_submodules(O1, 1, budget(1));
  REQUIRE(one.size() == 2);
  CHECK(keys(one) == std::set<std::string>{fingerprint(m({{1}})), fingerprint(m({{2}}))});

  auto full = enumerate_submodules(O2, 2, budget(0));
  REQUIRE(full.size() == 1);
  CHECK(same_span(full[0].sub.gens, Matrix::identity(P2, 2)));

  auto lines = enumerate_submodules(O2, 1, budget(1));
  std::set<std::string> ks = keys(lines);
  CHECK(ks.size() == lines.size());
  for (auto v : std::vector<std::vector<std::vector<long>>>{{{1}, {0}}, {{0}, {1}}, {{1}, {1}}, {{2}, {0}},
                                                             {{0}, {2}}, {{2}, {2}}})
    CHECK(ks.count(fingerprint(m(v))) == 1);
}

TEST_CASE("fingerprints identify spans") {
  CHECK(fingerprint(m({{1, 0}, {0, 1}})) == fingerprint(m({{1, 1}, {1, 2}})));
  CHECK(fingerprint(m({{2}, {2}})) == fingerprint(m({{-2}, {-2}})));
  CHECK(fingerprint(m({{2}, {2}})) != fingerprint(m({{2}, {0}})));
  CHECK(hermite_form(m({{3}, {6}})) == m({{1}, {2}}));
}

TEST_CASE("enumeration refuses an oversized budget") {
  EnumerationBudget b = budget(3, 3);
  b.count_cap = 50;
  CHECK_THROWS_AS(enumerate_submodules(Lattice(Matrix::identity(P2, 3)), 2, b), BudgetError);
  CHECK_THROWS_AS(enumerate_submodules(Lattice(Matrix::identity(RingConfig::tadic(), 2)), 1, budget(1)), InputError);
  EnumerationBudget small;
  small.max_n = 2;
  CHECK_THROWS_AS(enumerate_submodules(Lattice(Matrix::identity(P2, 3)), 1, small), BudgetError);
}

TEST_CASE("saturated frames are saturated and distinct") {
  auto frames = saturated_frames(P2, 3, 2, 2, 1'000'000);
  std::set<std::string> seen;
  for (const auto& X : frames) {
    CHECK(invariant_partition(X) == Partition{0, 0});
    CHECK(seen.insert(fingerprint(X)).second);
  }
  // saturated lines in O^2 at depth 1: (1,0), (0,1), (1,1)
  CHECK(saturated_frames(P2, 2, 1, 1, 1000).size() == 3);
}

TEST_CASE("brute min examples") {
  Lattice I2(Matrix::identity(P2, 2));
  CHECK(brute_min_direct_sum(I2, I2, 1, 1, budget(1)).value == 0);
  OracleResult r = brute_min_direct_sum(diag({2, 0}), diag({1, 0}), 1, 1, EnumerationBudget{});
  CHECK(r.value == 1);
  CHECK_FALSE(r.witnesses.empty());
  for (const auto& w : r.witnesses) CHECK(matrix_norm(w.a_gens.hcat(w.c_gens)) == Valuation(1));
  CHECK(brute_min_direct_sum(diag({2, 0}), diag({1, 0}), 0, 1, EnumerationBudget{}).value == 0);
}

TEST_CASE("brute max examples") {
  Lattice I2(Matrix::identity(P2, 2));
  CHECK(brute_max_direct_sum(I2, I2, 1, 1, budget(1)).value == 0);
  CHECK(brute_max_direct_sum(diag({2, 0}), diag({1, 0}), 1, 1, EnumerationBudget{}).value == 2);
  CHECK(brute_max_direct_sum(diag({2, 1}), diag({1, 0}), 2, 0, EnumerationBudget{}).value == 3);
}

TEST_CASE("boundary warning when every minimizer sits on the bound") {
  // with M = 0 the only rank-1 submodules of O^1 are O^1 itself, and it sits on the bound
  Lattice O1(Matrix::identity(P2, 1));
  OracleResult r = brute_min_direct_sum(O1, O1, 1, 0, budget(0, 1));
  CHECK(r.value == 0);
  CHECK(r.boundary_warning);
  CHECK_FALSE(brute_min_direct_sum(O1, O1, 1, 0, budget(1, 1)).boundary_warning);
}

TEST_CASE("optimizers against enumeration on random pairs") {
  for (std::uint64_t k = 0; k < 6; ++k) {
    RandomPair pr = random_pair(spec(2 + k % 2, 2, 20 + k));
    TrialCertificate c = certify_pair(pr.N, pr.L, budget(2, 2));
    CHECK(c.error.empty());
    CHECK(c.optimizer_ok);
    CHECK(c.duality_ok);
    CHECK(c.type_primary_ok);
    CHECK(c.type_swapped_ok);
    CHECK(c.lr_valid);
    CHECK(c.lr_member);
    CHECK(c.realizable);
    CHECK(c.certified());
  }
}

TEST_CASE("saturation lowers the norm of every enumerated submodule") {
  RandomPair pr = random_pair(spec(2, 2, 3));
  for (const auto& e : enumerate_submodules(pr.L, 1, budget(2, 2)))
    CHECK(matrix_norm(saturate(pr.L, e.sub).gens) <= matrix_norm(e.sub.gens));
}

TEST_CASE("regression instance") {
  Regression r = regression_instance();
  CHECK(r.optimizer == 1);
  CHECK(r.brute == 1);
  CHECK(r.greedy == 2);
}

TEST_CASE("lr enumeration examples") {
  CHECK(enumerate_lr_fillings({2, 0}, {1, 0}, {1, 0}).size() == 1);
  CHECK(enumerate_lr_fillings({2, 1, 0}, {2, 1, 0}, {0, 0, 0}).size() == 1);
  CHECK(enumerate_lr_fillings({2, 1, 0}, {1, 0, 0}, {1, 1, 0}).size() == 1);
  CHECK(enumerate_lr_fillings({2, 1, 0}, {1, 1, 0}, {1, 0, 0}).size() == 1);
  // s21 * s21 contains s321 twice
  CHECK(enumerate_lr_fillings({3, 2, 1}, {2, 1, 0}, {2, 1, 0}).size() == 2);
  CHECK(enumerate_lr_fillings({3, 0}, {1, 0}, {1, 1}).empty());
  CHECK_THROWS_AS(enumerate_lr_fillings({1, 2}, {0, 0}, {3, 0}), InputError);
  for (const auto& f : enumerate_lr_fillings({4, 3, 1}, {2, 1, 0}, {3, 2, 0})) CHECK(validate_lr(f).ok);
}

TEST_CASE("lr counts are symmetric in the two inner partitions") {
  std::vector<Partition> parts{{2, 1, 0}, {1, 1, 0}, {2, 0, 0}, {3, 1, 0}, {1, 0, 0}, {2, 2, 1}};
  for (const auto& a : parts)
    for (const auto& b : parts) {
      std::int64_t total = partition_sum(a) + partition_sum(b);
      // all lambda of size |a| + |b| with three rows, parts up to 5
      for (std::int64_t x = 0; x <= 5; ++x)
        for (std::int64_t y = 0; y <= x; ++y) {
          std::int64_t z = total - x - y;
          if (z < 0 || z > y) continue;
          Partition lam{x, y, z};
          bool ab = true, ba = true;
          for (std::size_t i = 0; i < 3; ++i) {
            ab = ab && a[i] <= lam[i];
            ba = ba && b[i] <= lam[i];
          }
          std::size_t c1 = ab ? enumerate_lr_fillings(lam, a, b).size() : 0;
          std::size_t c2 = ba ? enumerate_lr_fillings(lam, b, a).size() : 0;
          CHECK(c1 == c2);
        }
    }
}

TEST_CASE("stabilization grows the budget until the value settles") {
  Lattice O1(Matrix::identity(P2, 1));
  Stabilized s = stabilized_min(O1, O1, 1, 0, budget(0, 1));
  CHECK(s.stable);
  CHECK(s.result.value == 0);
  CHECK(s.budget.exponent_bound >= 1);
}

TEST_CASE("a shallow enumeration that misses a known witness keeps growing") {
  // seed 17: at depth 1 the best saturated V reaches 1, the optimizer's V reaches 2
  InstanceSpec s = spec(2, 2, 17);
  RandomPair pr = random_pair(s);
  PairInvariant pi = pair_invariant(pr.N, pr.L);
  const std::int64_t opt = max_direct_sum_norm(pr.L, pi.M, 0, 1);
  CHECK(opt == 2);
  Stabilized blind = stabilized_max(pr.L, pi.M, 0, 1, budget(1, 1));
  CHECK(blind.result.value == 1);
  Stabilized guided = stabilized_max(pr.L, pi.M, 0, 1, budget(1, 1), 3, opt);
  CHECK(guided.stable);
  CHECK(guided.result.value == 2);
  CHECK(guided.budget.residue_depth > 1);
  // a witness the enumeration cannot reach leaves the entry unstable
  Stabilized stuck = stabilized_max(pr.L, pi.M, 0, 1, budget(1, 1), 1, opt + 5);
  CHECK_FALSE(stuck.stable);
  CHECK(stuck.note.find("witness") != std::string::npos);
}
