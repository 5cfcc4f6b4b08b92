#pragma once

// Exact integers and rationals (GMP-backed) plus the conversions from exact
// values into p-adic and modular data.

#include <compare>
#include <concepts>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "amhs/residue.hpp"

namespace amhs {

using BigInt = mpz_class;

// A rational kept in lowest terms with positive denominator after every operation.
class BigRational {
 public:
  BigRational() = default;

  template <std::integral T>
  BigRational(T v) {  // NOLINT(google-explicit-constructor): formula code mixes literals freely
    if constexpr (std::is_signed_v<T>) {
      q_ = static_cast<long>(v);
    } else {
      q_ = static_cast<unsigned long>(v);
    }
  }

  BigRational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

  BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
  }

  const BigInt& numerator() const { return q_.get_num(); }
  const BigInt& denominator() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  BigRational operator-() const {
    BigRational r;
    r.q_ = -q_;
    return r;
  }

  BigRational& operator+=(const BigRational& o) {
    q_ += o.q_;
    return *this;
  }
  BigRational& operator-=(const BigRational& o) {
    q_ -= o.q_;
    return *this;
  }
  BigRational& operator*=(const BigRational& o) {
    q_ *= o.q_;
    return *this;
  }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

  // "n" for integers, "n/d" otherwise.
  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

 private:
  mpq_class q_;
};

// C(n, r) for n >= 0; zero outside 0 <= r <= n.
inline BigInt binom_exact(i64 n, i64 r) {
  if (n < 0) throw std::invalid_argument("binom_exact: n must be non-negative");
  if (r < 0 || r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

// Exponent of p in a nonzero integer.
inline int integer_valuation(const BigInt& x, u64 p) {
  if (x == 0) throw std::domain_error("valuation of zero is infinite");
  BigInt rest;
  BigInt prime(static_cast<unsigned long>(p));
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

// v_p(numerator) - v_p(denominator). Zero is rejected.
inline int rational_padic_valuation(const BigRational& r, u64 p) {
  if (r.is_zero()) throw std::domain_error("rational_padic_valuation: zero has infinite valuation");
  return integer_valuation(r.numerator(), p) - integer_valuation(r.denominator(), p);
}

inline u64 big_mod(const BigInt& x, u64 m) {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(m));
}

// numerator * denominator^{-1} in Z/p^kZ. A denominator divisible by p is
// rejected: such values must go through PadicScaled.
inline Residue rational_reduce_mod(const BigRational& r, u64 p, int k) {
  Residue num(p, k, 0);
  const u64 m = num.modulus();
  const u64 den = big_mod(r.denominator(), m);
  if (den % p == 0) throw std::domain_error("rational_reduce_mod: denominator divisible by p");
  return Residue(p, k, detail::mul_mod(big_mod(r.numerator(), m), detail::inverse_mod(den, m), m));
}

}  // namespace amhs
