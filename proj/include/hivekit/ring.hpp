#pragma once

// Exact arithmetic in a discrete valuation ring O and its fraction field K.
// Two instantiations: Q with the p-adic valuation, and Q(t) with the t-adic one.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hivekit/error.hpp"

namespace hivekit {

enum class RingKind { padic, tadic };

struct RingConfig {
  RingKind kind = RingKind::padic;
  unsigned long p = 2;  // unused for tadic

  static RingConfig padic(unsigned long p);  // throws on composite p
  static RingConfig tadic();

  bool operator==(const RingConfig&) const = default;
  std::string name() const;  // "padic:2" or "tadic"
};

// Accepts "padic:<p>", "padic" (p = 2) and "tadic".
RingConfig parse_ring(const std::string& s);

// Integer order with an explicit +infinity.
class Valuation {
 public:
  Valuation(std::int64_t v = 0) : inf_(false), v_(v) {}
  static Valuation infinity() {
    Valuation r;
    r.inf_ = true;
    return r;
  }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }
  std::int64_t value() const;  // throws when infinite

  Valuation operator+(const Valuation& o) const;
  Valuation operator-() const;  // only for finite values

  bool operator==(const Valuation& o) const { return inf_ == o.inf_ && (inf_ || v_ == o.v_); }
  std::strong_ordering operator<=>(const Valuation& o) const;

  std::string str() const;

 private:
  bool inf_;
  std::int64_t v_;
};

// Dense univariate polynomial over Q, coefficients low degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const mpq_class& c);
  explicit Poly(std::vector<mpq_class> coeffs);
  static Poly monomial(const mpq_class& c, std::size_t deg);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  const mpq_class& coeff(std::size_t i) const { return c_[i]; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& lead() const { return c_.back(); }
  std::size_t low_order() const;  // index of the first nonzero coefficient

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const mpq_class& k) const;
  Poly shifted_down(std::size_t k) const;  // divide by t^k, exact
  void divmod(const Poly& d, Poly& q, Poly& r) const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  std::string str() const;  // integer-looking form when coefficients are integral

 private:
  void trim();
  std::vector<mpq_class> c_;
};

Poly poly_gcd(Poly a, Poly b);  // monic, or zero when both are zero

// An element of K. Canonical: reduced rational, or num/den coprime with den monic.
class Scalar {
 public:
  Scalar() = default;  // zero of the default 2-adic ring
  Scalar(const RingConfig& cfg, long v);
  Scalar(const RingConfig& cfg, const mpq_class& q);
  Scalar(const RingConfig& cfg, Poly num, Poly den);

  static Scalar zero(const RingConfig& cfg) { return Scalar(cfg, 0L); }
  static Scalar one(const RingConfig& cfg) { return Scalar(cfg, 1L); }
  static Scalar uniformizer_pow(const RingConfig& cfg, std::int64_t k);

  const RingConfig& ring() const { return cfg_; }
  bool is_zero() const;
  bool is_one() const;
  Valuation valuation() const;
  Scalar unit_part() const;  // throws on zero

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;

  // padic only
  const mpq_class& rational() const { return q_; }
  // tadic only
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  // padic: "num/den" or "num"; tadic: "(num)/(den)" with integer coefficients.
  std::string str() const;
  static Scalar parse(const RingConfig& cfg, const std::string& s);

 private:
  void check_same(const Scalar& o) const;
  void canonicalize();

  RingConfig cfg_;
  mpq_class q_;
  Poly num_, den_;
};

// Valuation of an integer or rational in the p-adic sense; +inf for zero.
Valuation padic_valuation(const mpq_class& q, unsigned long p);

}  // namespace hivekit
