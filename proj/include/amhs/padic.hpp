#pragma once

// Values p^v * u with u a unit known to a finite number of p-adic digits.
//
// Besides ordinary nonzero values there are two zero states: an exact zero,
// and a "vanished" value known only to be divisible by p^N (what remains when
// an addition cancels every tracked digit). Keeping them apart means a
// cancellation never masquerades as an exact zero.

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <vector>

#include "amhs/residue.hpp"

namespace amhs {

struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class PadicScaled {
 public:
  enum class Kind { exact_zero, vanished, nonzero };

  static PadicScaled zero(u64 p) { return PadicScaled(Kind::exact_zero, p, 0, Residue(p, 1, 0)); }

  // A value congruent to 0 modulo p^abs_precision and otherwise unknown.
  static PadicScaled vanished(u64 p, int abs_precision) {
    return PadicScaled(Kind::vanished, p, abs_precision, Residue(p, 1, 0));
  }

  static PadicScaled from_unit(int valuation, const Residue& unit) {
    if (!unit.is_unit()) throw std::invalid_argument("PadicScaled: unit part divisible by p");
    return PadicScaled(Kind::nonzero, unit.prime(), valuation, unit);
  }

  // An exact integer, with relative precision k after stripping powers of p.
  static PadicScaled from_integer(i64 x, u64 p, int k) {
    if (x == 0) return zero(p);
    int v = 0;
    while (x % static_cast<i64>(p) == 0) {
      x /= static_cast<i64>(p);
      ++v;
    }
    return from_unit(v, Residue::from_signed(x, p, k));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_exact_zero() const noexcept { return kind_ == Kind::exact_zero; }
  bool is_zero() const noexcept { return kind_ != Kind::nonzero; }
  u64 prime() const noexcept { return p_; }

  int valuation() const {
    if (kind_ != Kind::nonzero) throw std::domain_error("PadicScaled: zero has no finite valuation");
    return v_;
  }
  const Residue& unit() const {
    if (kind_ != Kind::nonzero) throw std::domain_error("PadicScaled: zero has no unit part");
    return unit_;
  }
  int relative_precision() const { return unit().exponent(); }

  // Largest N such that the value is determined modulo p^N; INT_MAX for exact zero.
  int absolute_precision() const noexcept {
    switch (kind_) {
      case Kind::exact_zero: return INT_MAX;
      case Kind::vanished: return v_;
      case Kind::nonzero: return v_ + unit_.exponent();
    }
    return 0;
  }

  // The value as an element of Z/p^kZ. Needs a p-integral value known to at
  // least k absolute digits.
  Residue to_residue(int k) const {
    if (kind_ == Kind::exact_zero) return Residue(p_, k, 0);
    if (absolute_precision() < k) throw PrecisionError("PadicScaled::to_residue: value not known to requested precision");
    if (kind_ == Kind::vanished) return Residue(p_, k, 0);
    if (v_ < 0) throw std::domain_error("PadicScaled::to_residue: value is not p-integral");
    if (v_ >= k) return Residue(p_, k, 0);
    const u64 m = checked_pow(p_, k);
    return Residue(p_, k, detail::mul_mod(checked_pow(p_, v_), unit_.value(), m));
  }

  PadicScaled operator-() const {
    if (kind_ != Kind::nonzero) return *this;
    return PadicScaled(kind_, p_, v_, -unit_);
  }

  friend PadicScaled padic_add(const PadicScaled& a, const PadicScaled& b);
  friend PadicScaled padic_mul(const PadicScaled& a, const PadicScaled& b);
  friend PadicScaled padic_div(const PadicScaled& a, const PadicScaled& b);

  friend PadicScaled operator+(const PadicScaled& a, const PadicScaled& b) { return padic_add(a, b); }
  friend PadicScaled operator-(const PadicScaled& a, const PadicScaled& b) { return padic_add(a, -b); }
  friend PadicScaled operator*(const PadicScaled& a, const PadicScaled& b) { return padic_mul(a, b); }
  friend PadicScaled operator/(const PadicScaled& a, const PadicScaled& b) { return padic_div(a, b); }

  friend bool operator==(const PadicScaled&, const PadicScaled&) = default;

 private:
  PadicScaled(Kind kind, u64 p, int v, Residue unit) : kind_(kind), p_(p), v_(v), unit_(unit) {}

  // Truncate a nonzero value to absolute precision n (> valuation).
  PadicScaled truncated(int n) const {
    if (kind_ != Kind::nonzero || n >= absolute_precision()) return *this;
    return PadicScaled(kind_, p_, v_, unit_.reduced(n - v_));
  }

  static void require_same_prime(const PadicScaled& a, const PadicScaled& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("PadicScaled: operands use different primes");
  }

  Kind kind_;
  u64 p_;
  int v_;  // valuation when nonzero, absolute precision when vanished
  Residue unit_;
};

inline PadicScaled padic_add(const PadicScaled& a, const PadicScaled& b) {
  using Kind = PadicScaled::Kind;
  PadicScaled::require_same_prime(a, b);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const u64 p = a.p_;
  const int n = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.kind_ == Kind::vanished || b.kind_ == Kind::vanished) {
    const PadicScaled& other = a.kind_ == Kind::vanished ? b : a;
    if (other.kind_ == Kind::vanished || other.v_ >= n) return PadicScaled::vanished(p, n);
    return other.truncated(n);
  }

  const PadicScaled& lo = a.v_ <= b.v_ ? a : b;
  const PadicScaled& hi = a.v_ <= b.v_ ? b : a;
  const int gap = hi.v_ - lo.v_;
  if (gap >= lo.unit_.exponent()) {
    throw PrecisionError("padic_add: valuation gap exceeds the tracked precision");
  }
  const int rel = n - lo.v_;
  const u64 m = checked_pow(p, rel);
  const u64 shifted = detail::mul_mod(checked_pow(p, gap), hi.unit_.value() % m, m);
  u64 s = detail::add_mod(lo.unit_.value() % m, shifted, m);
  if (s == 0) return PadicScaled::vanished(p, n);
  int t = 0;
  while (s % p == 0) {
    s /= p;
    ++t;
  }
  return PadicScaled(Kind::nonzero, p, lo.v_ + t, Residue(p, rel - t, s));
}

inline PadicScaled padic_mul(const PadicScaled& a, const PadicScaled& b) {
  using Kind = PadicScaled::Kind;
  PadicScaled::require_same_prime(a, b);
  if (a.is_exact_zero() || b.is_exact_zero()) return PadicScaled::zero(a.p_);
  if (a.kind_ == Kind::vanished && b.kind_ == Kind::vanished) return PadicScaled::vanished(a.p_, a.v_ + b.v_);
  if (a.kind_ == Kind::vanished) return PadicScaled::vanished(a.p_, a.v_ + b.v_);
  if (b.kind_ == Kind::vanished) return PadicScaled::vanished(a.p_, a.v_ + b.v_);
  const int k = std::min(a.unit_.exponent(), b.unit_.exponent());
  return PadicScaled(Kind::nonzero, a.p_, a.v_ + b.v_, a.unit_.reduced(k) * b.unit_.reduced(k));
}

inline PadicScaled padic_div(const PadicScaled& a, const PadicScaled& b) {
  using Kind = PadicScaled::Kind;
  PadicScaled::require_same_prime(a, b);
  if (b.is_zero()) throw std::domain_error("padic_div: division by zero");
  if (a.is_exact_zero()) return a;
  if (a.kind_ == Kind::vanished) return PadicScaled::vanished(a.p_, a.v_ - b.v_);
  const int k = std::min(a.unit_.exponent(), b.unit_.exponent());
  return PadicScaled(Kind::nonzero, a.p_, a.v_ - b.v_, a.unit_.reduced(k) * mod_inverse(b.unit_.reduced(k)));
}

enum class PadicOp { add, mul, div };

inline PadicScaled padic_arith(PadicOp op, const PadicScaled& a, const PadicScaled& b) {
  switch (op) {
    case PadicOp::add: return padic_add(a, b);
    case PadicOp::mul: return padic_mul(a, b);
    case PadicOp::div: return padic_div(a, b);
  }
  throw std::invalid_argument("padic_arith: unknown operation");
}

// C(2j, j) for j = 1..p-1 via C(2j,j) = C(2j-2,j-1) * 2(2j-1) / j. The only
// factor of p enters at j = (p+1)/2, where 2j-1 = p.
inline std::vector<PadicScaled> central_binomial_stream(u64 p, int k) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("central_binomial_stream: p must be an odd prime");
  std::vector<PadicScaled> out;
  out.reserve(p - 1);
  auto c = PadicScaled::from_integer(1, p, k);
  for (u64 j = 1; j < p; ++j) {
    const auto num = PadicScaled::from_integer(static_cast<i64>(2 * (2 * j - 1)), p, k);
    c = padic_div(padic_mul(c, num), PadicScaled::from_integer(static_cast<i64>(j), p, k));
    out.push_back(c);
  }
  return out;
}

namespace detail {

// v_p(n!) by Legendre's formula.
constexpr int factorial_valuation(u64 n, u64 p) {
  int v = 0;
  while (n > 0) {
    n /= p;
    v += static_cast<int>(n);
  }
  return v;
}

}  // namespace detail

// C(n, r) for 0 <= r <= n <= 2p as p^v * unit. The valuation comes from
// Legendre's formula; the unit is the product of the p-free parts of the factors.
inline PadicScaled binom_mod(u64 n, u64 r, u64 p, int k) {
  if (r > n) throw std::out_of_range("binom_mod: need r <= n");
  if (n > 2 * p) throw std::out_of_range("binom_mod: n exceeds 2p");
  r = std::min(r, n - r);
  const u64 m = checked_pow(p, k);
  const int v = detail::factorial_valuation(n, p) - detail::factorial_valuation(r, p) -
                detail::factorial_valuation(n - r, p);
  u64 num = 1 % m;
  u64 den = 1 % m;
  int stripped = 0;
  for (u64 i = 1; i <= r; ++i) {
    u64 top = n - r + i;
    u64 bottom = i;
    while (top % p == 0) {
      top /= p;
      ++stripped;
    }
    while (bottom % p == 0) {
      bottom /= p;
      --stripped;
    }
    num = detail::mul_mod(num, top % m, m);
    den = detail::mul_mod(den, bottom % m, m);
  }
  if (stripped != v) throw std::logic_error("binom_mod: valuation bookkeeping disagrees with Legendre count");
  return PadicScaled::from_unit(v, Residue(p, k, detail::mul_mod(num, detail::inverse_mod(den, m), m)));
}

}  // namespace amhs
