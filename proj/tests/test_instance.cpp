#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hivekit/instance.hpp"

using namespace hivekit;

namespace {
InstanceSpec spec(std::size_t n, std::int64_t lo, std::int64_t hi, std::uint64_t seed) {
  InstanceSpec s;
  s.n = n;
  s.lo = lo;
  s.hi = hi;
  s.seed = seed;
  return s;
}

Partition sorted_desc(Partition p) {
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}
}  // namespace

TEST_CASE("rng is deterministic and bounded") {
  Rng a(42), b(42);
  for (int k = 0; k < 200; ++k) {
    std::uint64_t x = a.below(7);
    CHECK(x == b.below(7));
    CHECK(x < 7);
    std::int64_t y = a.between(-3, 3);
    CHECK(y == b.between(-3, 3));
    CHECK(y >= -3);
    CHECK(y <= 3);
  }
  CHECK(Rng(1).below(1000000) != Rng(2).below(1000000));
}

TEST_CASE("same seed gives the same pair") {
  for (const RingConfig& cfg : {RingConfig::padic(2), RingConfig::padic(3), RingConfig::tadic()}) {
    InstanceSpec s = spec(4, -1, 3, 17);
    s.ring = cfg;
    RandomPair x = random_pair(s), y = random_pair(s);
    CHECK(x.N.gens == y.N.gens);
    CHECK(x.M.gens == y.M.gens);
    CHECK(x.L.gens == y.L.gens);
    CHECK(x.d1 == y.d1);
    CHECK(x.d2 == y.d2);
  }
}

TEST_CASE("no mixing gives diagonal lattices") {
  InstanceSpec s = spec(3, 0, 4, 5);
  s.mix_steps = 0;
  RandomPair pr = random_pair(s);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) {
        CHECK(pr.N.gens(i, j).is_zero());
        CHECK(pr.M.gens(i, j).is_zero());
      }
}

TEST_CASE("drawn exponents are the invariants") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomPair pr = random_pair(spec(2 + seed % 3, -2, 4, seed));
    CHECK(pr.d1.size() == pr.N.n());
    for (auto e : pr.d1) {
      CHECK(e >= -2);
      CHECK(e <= 4);
    }
    CHECK(lattice_invariants(pr.N) == sorted_desc(pr.d1));
    CHECK(lattice_invariants(pr.M) == sorted_desc(pr.d2));
    CHECK(pr.L.gens == pr.N.gens * pr.M.gens);
  }
}

TEST_CASE("random unimodular matrices are unimodular") {
  Rng rng(3);
  for (const RingConfig& cfg : {RingConfig::padic(5), RingConfig::tadic()})
    for (int k = 0; k < 20; ++k) CHECK(unimodular_check(random_unimodular(cfg, 4, 8, 2, rng)));
}
