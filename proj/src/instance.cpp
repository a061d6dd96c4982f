#include "hivekit/instance.hpp"

#include <algorithm>

namespace hivekit {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = g_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InputError("empty range");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

Scalar random_unit(const RingConfig& cfg, Rng& rng) {
  static const long units[] = {1, -1, 3, -3, 5, 7};
  if (cfg.kind == RingKind::padic) {
    long u;
    do {
      u = units[rng.below(6)];
    } while (static_cast<unsigned long>(u < 0 ? -u : u) % cfg.p == 0);
    return Scalar(cfg, u);
  }
  // c0 + c1 t with c0 != 0
  long c0 = units[rng.below(6)], c1 = rng.between(-2, 2);
  return Scalar(cfg, Poly(std::vector<mpq_class>{mpq_class(c0), mpq_class(c1)}), Poly(mpq_class(1)));
}

}  // namespace

Matrix random_unimodular(const RingConfig& cfg, std::size_t n, std::size_t steps, std::int64_t max_exp, Rng& rng) {
  Matrix U = Matrix::identity(cfg, n);
  if (n < 2) return U;
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t i = rng.below(n), j = rng.below(n - 1);
    if (j >= i) ++j;
    if (rng.below(4) == 0) {
      U.swap_rows(i, j);
    } else {
      // two statements: operand evaluation order would otherwise be unspecified
      Scalar u = random_unit(cfg, rng);
      Scalar f = u * Scalar::uniformizer_pow(cfg, rng.between(0, std::max<std::int64_t>(0, max_exp)));
      U.add_row_multiple(i, j, f);
    }
  }
  return U;
}

RandomPair random_pair(const InstanceSpec& spec) {
  if (spec.lo > spec.hi) throw InputError("exponent range is empty");
  if (spec.n == 0) throw InputError("n must be positive");
  Rng rng(spec.seed);
  const RingConfig& cfg = spec.ring;
  const std::size_t n = spec.n;
  Partition d1(n), d2(n);
  for (auto& x : d1) x = rng.between(spec.lo, spec.hi);
  for (auto& x : d2) x = rng.between(spec.lo, spec.hi);
  const std::int64_t mix = std::max<std::int64_t>(0, spec.hi);
  Matrix P1 = random_unimodular(cfg, n, spec.mix_steps, mix, rng);
  Matrix Q1 = random_unimodular(cfg, n, spec.mix_steps, mix, rng);
  Matrix P2 = random_unimodular(cfg, n, spec.mix_steps, mix, rng);
  Matrix Q2 = random_unimodular(cfg, n, spec.mix_steps, mix, rng);
  Matrix N = P1 * Matrix::diagonal(cfg, d1) * Q1;
  Matrix M = P2 * Matrix::diagonal(cfg, d2) * Q2;
  Matrix L = N * M;
  return {Lattice(N), Lattice(L), Lattice(M), d1, d2};
}

}  // namespace hivekit
