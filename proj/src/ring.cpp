#include "hivekit/ring.hpp"

#include <cctype>
#include <utility>

namespace hivekit {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Polynomial in t with integer (or a/b) coefficients: "3t^2-t+1", "2*t", "-5".
class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  Poly parse() {
    Poly acc;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      acc = acc + term().scaled(mpq_class(sign));
      first = false;
      skip();
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("bad polynomial '" + s_ + "': " + why);
  }
  std::string digits() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(b, pos_ - b);
  }

  Poly term() {
    mpq_class c(1);
    bool have_coeff = false;
    std::string d = digits();
    if (!d.empty()) {
      have_coeff = true;
      mpz_class num(d);
      mpz_class den(1);
      if (peek() == '/') {
        ++pos_;
        std::string dd = digits();
        if (dd.empty()) fail("missing denominator");
        den = mpz_class(dd);
        if (den == 0) fail("zero denominator");
      }
      c = mpq_class(num, den);
      c.canonicalize();
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 't') fail("expected t after *");
      }
    }
    std::size_t deg = 0;
    if (peek() == 't') {
      ++pos_;
      deg = 1;
      if (peek() == '^') {
        ++pos_;
        std::string e = digits();
        if (e.empty()) fail("missing exponent");
        deg = std::stoul(e);
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    return Poly::monomial(c, deg);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---------- RingConfig ----------

RingConfig RingConfig::padic(unsigned long p) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  return RingConfig{RingKind::padic, p};
}

RingConfig RingConfig::tadic() { return RingConfig{RingKind::tadic, 0}; }

std::string RingConfig::name() const {
  return kind == RingKind::padic ? "padic:" + std::to_string(p) : "tadic";
}

RingConfig parse_ring(const std::string& raw) {
  std::string s = strip(raw);
  if (s == "tadic" || s == "tadic-ratfunc") return RingConfig::tadic();
  if (s == "padic" || s == "padic-rational") return RingConfig::padic(2);
  if (s.rfind("padic:", 0) == 0) {
    std::string num = s.substr(6);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad ring '" + raw + "'");
    return RingConfig::padic(std::stoul(num));
  }
  throw InputError("unknown ring '" + raw + "'");
}

// ---------- Valuation ----------

std::int64_t Valuation::value() const {
  if (inf_) throw Error("value() of infinite valuation");
  return v_;
}

Valuation Valuation::operator+(const Valuation& o) const {
  if (inf_ || o.inf_) return infinity();
  std::int64_t r;
  if (__builtin_add_overflow(v_, o.v_, &r)) throw Error("valuation overflow");
  return Valuation(r);
}

Valuation Valuation::operator-() const {
  if (inf_) throw Error("negation of infinite valuation");
  return Valuation(-v_);
}

std::strong_ordering Valuation::operator<=>(const Valuation& o) const {
  if (inf_ || o.inf_) {
    if (inf_ && o.inf_) return std::strong_ordering::equal;
    return inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return v_ <=> o.v_;
}

std::string Valuation::str() const { return inf_ ? "inf" : std::to_string(v_); }

Valuation padic_valuation(const mpq_class& q, unsigned long p) {
  if (q == 0) return Valuation::infinity();
  mpz_class rest, pp(p);
  std::int64_t up = mpz_remove(rest.get_mpz_t(), q.get_num_mpz_t(), pp.get_mpz_t());
  std::int64_t down = mpz_remove(rest.get_mpz_t(), q.get_den_mpz_t(), pp.get_mpz_t());
  return Valuation(up - down);
}

// ---------- Poly ----------

Poly::Poly(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const mpq_class& c, std::size_t deg) {
  Poly r;
  if (c == 0) return r;
  r.c_.assign(deg + 1, mpq_class(0));
  r.c_[deg] = c;
  return r;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t Poly::low_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  throw Error("low_order of zero polynomial");
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] += o.c_[i];
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const { return scaled(mpq_class(-1)); }
Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

Poly Poly::scaled(const mpq_class& k) const {
  Poly r;
  if (k == 0) return r;
  r.c_ = c_;
  for (auto& x : r.c_) x *= k;
  return r;
}

Poly Poly::shifted_down(std::size_t k) const {
  Poly r;
  if (k >= c_.size()) return r;
  r.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
  r.trim();
  return r;
}

void Poly::divmod(const Poly& d, Poly& q, Poly& r) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  q = Poly();
  r = *this;
  if (r.degree() < d.degree()) return;
  q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree() + 1), mpq_class(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
    mpq_class f = r.lead() / d.lead();
    q.c_[shift] = f;
    for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[i + shift] -= f * d.c_[i];
    r.trim();
  }
  q.trim();
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const mpq_class& c = c_[k];
    if (c == 0) continue;
    bool neg = c < 0;
    mpq_class a = neg ? mpq_class(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    std::string mag = a.get_str();
    if (k == 0) {
      out += mag;
    } else {
      if (a != 1) out += (a.get_den() == 1 ? mag : "(" + mag + ")");
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.lead());
}

// ---------- Scalar ----------

Scalar::Scalar(const RingConfig& cfg, long v) : cfg_(cfg) {
  if (cfg_.kind == RingKind::padic) {
    q_ = v;
  } else {
    num_ = Poly(mpq_class(v));
    den_ = Poly(mpq_class(1));
  }
}

Scalar::Scalar(const RingConfig& cfg, const mpq_class& q) : cfg_(cfg) {
  if (cfg_.kind == RingKind::padic) {
    q_ = q;
    q_.canonicalize();
  } else {
    num_ = Poly(q);
    den_ = Poly(mpq_class(1));
  }
}

Scalar::Scalar(const RingConfig& cfg, Poly num, Poly den) : cfg_(cfg), num_(std::move(num)), den_(std::move(den)) {
  if (cfg_.kind != RingKind::tadic) throw InputError("polynomial scalar in a p-adic ring");
  if (den_.is_zero()) throw InputError("zero denominator");
  canonicalize();
}

void Scalar::canonicalize() {
  if (cfg_.kind == RingKind::padic) return;
  if (num_.is_zero()) {
    den_ = Poly(mpq_class(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    num_.divmod(g, q, r);
    num_ = std::move(q);
    den_.divmod(g, q, r);
    den_ = std::move(q);
  }
  mpq_class l = den_.lead();
  if (l != 1) {
    num_ = num_.scaled(1 / l);
    den_ = den_.scaled(1 / l);
  }
}

Scalar Scalar::uniformizer_pow(const RingConfig& cfg, std::int64_t k) {
  std::size_t a = static_cast<std::size_t>(k < 0 ? -k : k);
  if (cfg.kind == RingKind::padic) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), cfg.p, a);
    return Scalar(cfg, k >= 0 ? mpq_class(pk) : mpq_class(mpz_class(1), pk));
  }
  Poly tk = Poly::monomial(mpq_class(1), a);
  Poly one(mpq_class(1));
  return k >= 0 ? Scalar(cfg, tk, one) : Scalar(cfg, one, tk);
}

void Scalar::check_same(const Scalar& o) const {
  if (!(cfg_ == o.cfg_)) throw InputError("mixed rings: " + cfg_.name() + " vs " + o.cfg_.name());
}

bool Scalar::is_zero() const { return cfg_.kind == RingKind::padic ? q_ == 0 : num_.is_zero(); }

bool Scalar::is_one() const {
  if (cfg_.kind == RingKind::padic) return q_ == 1;
  return num_.degree() == 0 && num_.coeff(0) == 1 && den_.degree() == 0;
}

Valuation Scalar::valuation() const {
  if (cfg_.kind == RingKind::padic) return padic_valuation(q_, cfg_.p);
  if (num_.is_zero()) return Valuation::infinity();
  return Valuation(static_cast<std::int64_t>(num_.low_order()) - static_cast<std::int64_t>(den_.low_order()));
}

Scalar Scalar::unit_part() const {
  if (is_zero()) throw InputError("no unit part of zero");
  if (cfg_.kind == RingKind::padic) return *this / uniformizer_pow(cfg_, valuation().value());
  return Scalar(cfg_, num_.shifted_down(num_.low_order()), den_.shifted_down(den_.low_order()));
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (cfg_.kind == RingKind::padic) return Scalar(cfg_, mpq_class(q_ + o.q_));
  if (den_ == o.den_) return Scalar(cfg_, num_ + o.num_, den_);
  return Scalar(cfg_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (cfg_.kind == RingKind::padic)
    r.q_ = -q_;
  else
    r.num_ = -num_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (cfg_.kind == RingKind::padic) return Scalar(cfg_, mpq_class(q_ * o.q_));
  return Scalar(cfg_, num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  if (o.is_zero()) throw InputError("division by zero");
  if (cfg_.kind == RingKind::padic) return Scalar(cfg_, mpq_class(q_ / o.q_));
  return Scalar(cfg_, num_ * o.den_, den_ * o.num_);
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(cfg_ == o.cfg_)) return false;
  if (cfg_.kind == RingKind::padic) return q_ == o.q_;
  return num_ == o.num_ && den_ == o.den_;
}

std::string Scalar::str() const {
  if (cfg_.kind == RingKind::padic) return q_.get_str();
  // clear denominators, then remove the integer content
  mpz_class l = 1;
  for (const auto* p : {&num_, &den_})
    for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Poly n = num_.scaled(mpq_class(l)), d = den_.scaled(mpq_class(l));
  mpz_class g = 0;
  for (const auto* p : {&n, &d})
    for (const auto& c : p->coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  if (g > 1) {
    n = n.scaled(mpq_class(mpz_class(1), g));
    d = d.scaled(mpq_class(mpz_class(1), g));
  }
  return "(" + n.str() + ")/(" + d.str() + ")";
}

Scalar Scalar::parse(const RingConfig& cfg, const std::string& raw) {
  std::string s = strip(raw);
  if (s.empty()) throw InputError("empty scalar");
  if (cfg.kind == RingKind::padic) {
    if (s[0] == '+') s = s.substr(1);
    std::size_t slash = s.find('/');
    auto is_int = [](const std::string& x) {
      std::size_t b = (!x.empty() && x[0] == '-') ? 1 : 0;
      return x.size() > b && x.find_first_not_of("0123456789", b) == std::string::npos;
    };
    std::string a = s.substr(0, slash);
    std::string b = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(a) || !is_int(b) || b[0] == '-') throw InputError("bad rational '" + raw + "'");
    mpz_class den(b);
    if (den == 0) throw InputError("zero denominator in '" + raw + "'");
    return Scalar(cfg, mpq_class(mpz_class(a), den));
  }
  // "(p)/(q)", "(p)" or "p"
  auto parse_group = [&](const std::string& g) {
    std::string x = strip(g);
    if (x.size() >= 2 && x.front() == '(' && x.back() == ')') x = x.substr(1, x.size() - 2);
    return PolyParser(x).parse();
  };
  std::size_t split = std::string::npos;
  if (s.front() == '(') {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0) {
        split = i + 1;
        break;
      }
    }
    if (split == std::string::npos) throw InputError("unbalanced parentheses in '" + raw + "'");
  }
  if (split != std::string::npos && split < s.size()) {
    std::string rest = strip(s.substr(split));
    if (rest.empty() || rest[0] != '/') throw InputError("bad rational function '" + raw + "'");
    Poly n = parse_group(s.substr(0, split)), d = parse_group(rest.substr(1));
    if (d.is_zero()) throw InputError("zero denominator in '" + raw + "'");
    return Scalar(cfg, n, d);
  }
  return Scalar(cfg, parse_group(s), Poly(mpq_class(1)));
}

}  // namespace hivekit
