#pragma once

// Arithmetic in Z/p^kZ with 64-bit words and 128-bit intermediate products.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace amhs {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Largest p with p^4 < 2^64. Every registry modulus is at most p^4.
inline constexpr u64 kMaxWordPrime = 65535;

// base^exp, throwing std::overflow_error when the result does not fit a word.
constexpr u64 checked_pow(u64 base, int exp) {
  u64 r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<u64>::max() / base) {
      throw std::overflow_error("checked_pow: result exceeds 64 bits");
    }
    r *= base;
  }
  return r;
}

namespace detail {

constexpr u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

constexpr u64 add_mod(u64 a, u64 b, u64 m) {
  return a >= m - b ? a - (m - b) : a + b;
}

constexpr u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

constexpr u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

constexpr u64 reduce_signed(i64 v, u64 m) {
  if (v >= 0) return static_cast<u64>(v) % m;
  // -(v+1) avoids overflow on INT64_MIN
  u64 mag = static_cast<u64>(-(v + 1)) + 1;
  u64 r = mag % m;
  return r == 0 ? 0 : m - r;
}

// Inverse of a modulo m by the extended Euclidean algorithm.
inline u64 inverse_mod(u64 a, u64 m) {
  using i128 = __int128;
  i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 quot = old_r / r;
    i128 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("inverse_mod: element is not a unit");
  i128 res = old_s % static_cast<i128>(m);
  if (res < 0) res += static_cast<i128>(m);
  return static_cast<u64>(res);
}

// Inverses of 1..n modulo m via prefix products: one gcd inversion, 3n multiplications.
// Every 1..n must be a unit; entry i-1 holds 1/i.
inline std::vector<u64> batch_inverse_values(u64 n, u64 m) {
  std::vector<u64> out(n);
  if (n == 0) return out;
  std::vector<u64> prefix(n);
  u64 acc = 1 % m;
  for (u64 i = 1; i <= n; ++i) {
    acc = mul_mod(acc, i % m, m);
    prefix[i - 1] = acc;
  }
  u64 inv = inverse_mod(acc, m);
  for (u64 i = n; i >= 2; --i) {
    out[i - 1] = mul_mod(inv, prefix[i - 2], m);
    inv = mul_mod(inv, i % m, m);
  }
  out[0] = inv;
  return out;
}

}  // namespace detail

// An element of Z/p^kZ. The prime is not tested for primality here; callers
// (the registry and CLI) are responsible for that.
class Residue {
 public:
  Residue(u64 p, int k, u64 value) : p_(p), k_(k) {
    if (p < 2 || k < 1) throw std::invalid_argument("Residue: need p >= 2 and k >= 1");
    modulus_ = checked_pow(p, k);
    value_ = value % modulus_;
  }

  static Residue from_signed(i64 v, u64 p, int k) {
    Residue r(p, k, 0);
    r.value_ = detail::reduce_signed(v, r.modulus_);
    return r;
  }

  u64 value() const noexcept { return value_; }
  u64 prime() const noexcept { return p_; }
  int exponent() const noexcept { return k_; }
  u64 modulus() const noexcept { return modulus_; }
  bool is_unit() const noexcept { return value_ % p_ != 0; }

  // Image under Z/p^kZ -> Z/p^jZ for j <= k.
  Residue reduced(int j) const {
    if (j > k_) throw std::invalid_argument("Residue::reduced: cannot raise precision");
    return Residue(p_, j, value_);
  }

  Residue operator-() const { return Residue(p_, k_, value_ == 0 ? 0 : modulus_ - value_); }

  Residue& operator+=(const Residue& o) {
    require_same_ring(o);
    value_ = detail::add_mod(value_, o.value_, modulus_);
    return *this;
  }
  Residue& operator-=(const Residue& o) {
    require_same_ring(o);
    value_ = detail::sub_mod(value_, o.value_, modulus_);
    return *this;
  }
  Residue& operator*=(const Residue& o) {
    require_same_ring(o);
    value_ = detail::mul_mod(value_, o.value_, modulus_);
    return *this;
  }

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }

  friend bool operator==(const Residue&, const Residue&) = default;

  std::string to_string() const {
    return std::to_string(value_) + " mod " + std::to_string(p_) + "^" + std::to_string(k_);
  }

 private:
  void require_same_ring(const Residue& o) const {
    if (p_ != o.p_ || k_ != o.k_) throw std::invalid_argument("Residue: operands live in different rings");
  }

  u64 p_;
  int k_;
  u64 modulus_ = 1;
  u64 value_ = 0;
};

inline Residue mod_inverse(const Residue& a) {
  if (!a.is_unit()) throw std::domain_error("mod_inverse: p divides the element");
  return Residue(a.prime(), a.exponent(), detail::inverse_mod(a.value(), a.modulus()));
}

inline Residue mod_pow(const Residue& a, u64 e) {
  return Residue(a.prime(), a.exponent(), detail::pow_mod(a.value(), e, a.modulus()));
}

// Inverses of 1..n modulo p^k. Requires n < p so that every entry is a unit.
inline std::vector<Residue> batch_inverses(u64 n, u64 p, int k) {
  if (n >= p) throw std::invalid_argument("batch_inverses: need n < p");
  const u64 m = checked_pow(p, k);
  std::vector<Residue> out;
  out.reserve(n);
  for (u64 v : detail::batch_inverse_values(n, m)) out.emplace_back(p, k, v);
  return out;
}

}  // namespace amhs
