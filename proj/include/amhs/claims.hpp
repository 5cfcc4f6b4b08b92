#pragma once

// Right- and left-hand sides of the registered congruences, written once and
// instantiated for both ExactContext and FastContext. Notation: q = q_p(2),
// B = B_{p-3}, h = (p-1)/2, and every H(...) without an explicit bound runs to p-1.

#include <cstdlib>
#include <vector>

#include "amhs/mhs.hpp"

namespace amhs::claims {

template <class C>
using value_t = typename C::value_type;

template <class C>
u64 full(const C& c) {
  return c.prime() - 1;
}

template <class C>
u64 half(const C& c) {
  return (c.prime() - 1) / 2;
}

inline i64 pow2(int e) { return i64{1} << e; }
inline i64 neg_one_pow(int e) { return e % 2 == 0 ? 1 : -1; }

// sum_{k=1}^{n} (-1)^k C(-1/2, k) / k, evaluated as sum C(2k,k) / (k 4^k).
template <class C>
value_t<C> central_series(C& c, u64 n) {
  const auto cb = c.central_binomials(n);
  const auto inv4 = c.inverse(c.rat(4));
  value_t<C> scale = c.rat(1);
  value_t<C> acc = c.rat(0);
  for (u64 k = 1; k <= n; ++k) {
    scale = scale * inv4;
    acc = acc + cb[k] * scale * c.rat(1, static_cast<i64>(k));
  }
  return acc;
}

// 2q - p q^2 + (2/3) p^2 q^3 + (7/12) p^2 B
template <class C>
value_t<C> main_rhs(C& c) {
  const auto q = c.q();
  return c.rat(2) * q - c.p_power(1) * q * q + c.rat(2, 3) * c.p_power(2) * q * q * q +
         c.rat(7, 12) * c.p_bern(2, static_cast<int>(c.prime()) - 3);
}

// H({a}^r; p-1) against (-1)^r a(ar+1)/(2(ar+2)) p^2 B_{p-ar-2} (ar odd, mod p^3)
// or (-1)^{r-1} a/(ar+1) p B_{p-ar-1} (ar even, mod p^2).
template <class C>
value_t<C> power_sum_rhs(C& c, int a, int r) {
  const int p = static_cast<int>(c.prime());
  const int ar = a * r;
  if (ar % 2 == 1) return c.rat(neg_one_pow(r) * a * (ar + 1), 2 * (ar + 2)) * c.p_bern(2, p - ar - 2);
  return c.rat(neg_one_pow(r - 1) * a, ar + 1) * c.p_bern(1, p - ar - 1);
}

// -2q + p q^2 - (2/3) p^2 q^3 - (7/12) p^2 B
template <class C>
value_t<C> half_harmonic_rhs(C& c) {
  const auto q = c.q();
  return c.rat(-2) * q + c.p_power(1) * q * q - c.rat(2, 3) * c.p_power(2) * q * q * q -
         c.rat(7, 12) * c.p_bern(2, static_cast<int>(c.prime()) - 3);
}

// H(a; h): -(2^a-2)/a B_{p-a} for odd a (mod p), a(2^{a+1}-1)/(2(a+1)) p B_{p-a-1} for even a (mod p^2)
template <class C>
value_t<C> half_power_rhs(C& c, int a) {
  const int p = static_cast<int>(c.prime());
  if (a % 2 == 1) return c.rat(-(pow2(a) - 2), a) * c.p_bern(0, p - a);
  return c.rat(a * (pow2(a + 1) - 1), 2 * (a + 1)) * c.p_bern(1, p - a - 1);
}

// H(a,b; p-1) == (-1)^b / (a+b) C(a+b, a) B_{p-a-b} (mod p)
template <class C>
value_t<C> depth_two_rhs(C& c, int a, int b) {
  i64 binom = 1;
  for (int i = 1; i <= a; ++i) binom = binom * (b + i) / i;
  return c.rat(neg_one_pow(b) * binom, a + b) * c.p_bern(0, static_cast<int>(c.prime()) - a - b);
}

// -(1 - 2^{1-a-b}) H(a,b) - (-1)^b 2^{1-a-b} H(a;h) H(b;h)
template <class C>
value_t<C> negative_pair_rhs(C& c, int a, int b) {
  const i64 scale = pow2(a + b - 1);
  return c.rat(-(scale - 1), scale) * c.H(Signature{a, b}, full(c)) -
         c.rat(neg_one_pow(b), scale) * c.H(Signature{a}, half(c)) * c.H(Signature{b}, half(c));
}

// H(a,b; h) + (-1)^b H(a; h) H(b; h) + (-1)^{a+b} H(b,a; h)
template <class C>
value_t<C> split_pair_rhs(C& c, int a, int b) {
  const u64 h = half(c);
  return c.H(Signature{a, b}, h) + c.rat(neg_one_pow(b)) * c.H(Signature{a}, h) * c.H(Signature{b}, h) +
         c.rat(neg_one_pow(a + b)) * c.H(Signature{b, a}, h);
}

// -2q + p q^2 - (2/3) p^2 q^3 - (1/4) p^2 B
template <class C>
value_t<C> alternating_harmonic_rhs(C& c) {
  const auto q = c.q();
  return c.rat(-2) * q + c.p_power(1) * q * q - c.rat(2, 3) * c.p_power(2) * q * q * q -
         c.rat(1, 4) * c.p_bern(2, static_cast<int>(c.prime()) - 3);
}

// 2q^2 - 2p q^3 - (1/3) p B
template <class C>
value_t<C> alternating_pair_rhs(C& c) {
  const auto q = c.q();
  return c.rat(2) * q * q - c.rat(2) * c.p_power(1) * q * q * q -
         c.rat(1, 3) * c.p_bern(1, static_cast<int>(c.prime()) - 3);
}

// H(-a; p-1) == -(2^a-2)/(a 2^{a-1}) B_{p-a} (mod p)
template <class C>
value_t<C> negative_power_rhs(C& c, int a) {
  return c.rat(-(pow2(a) - 2), a * pow2(a - 1)) * c.p_bern(0, static_cast<int>(c.prime()) - a);
}

// (-1)^{r-1} sum_{k<p} 2^k / k^r
template <class C>
value_t<C> twisted_rhs(C& c, int r) {
  return c.rat(neg_one_pow(r - 1)) * c.twisted(2, r, full(c));
}

// sum_{k<p} 2^k/k^3 == -(1/3) q^3 + (7/12) H(-3; p-1) (mod p)
template <class C>
value_t<C> twisted_cube_rhs(C& c) {
  const auto q = c.q();
  return c.rat(-1, 3) * q * q * q + c.rat(7, 12) * c.H(Signature{-3}, full(c));
}

// sum_{0<d<p} (-1)^d C(2p, d) / (p-d)
template <class C>
value_t<C> weighted_binomial_single(C& c) {
  const u64 p = c.prime();
  const auto row = c.binom_row(2 * p);
  value_t<C> acc = c.rat(0);
  for (u64 d = 1; d < p; ++d) {
    acc = acc + c.rat(neg_one_pow(static_cast<int>(d % 2)), static_cast<i64>(p - d)) * row[d];
  }
  return acc;
}

// sum_{0<j<d<p} (-1)^d C(2p, j) / (p-d)
template <class C>
value_t<C> weighted_binomial_double(C& c) {
  const u64 p = c.prime();
  const auto row = c.binom_row(2 * p);
  value_t<C> prefix = c.rat(0);  // sum_{0<j<d} C(2p, j)
  value_t<C> acc = c.rat(0);
  for (u64 d = 1; d < p; ++d) {
    acc = acc + c.rat(neg_one_pow(static_cast<int>(d % 2)), static_cast<i64>(p - d)) * prefix;
    prefix = prefix + row[d];
  }
  return acc;
}

// 1 - 2pq + 3p^2 q^2
template <class C>
value_t<C> inverse_four_power_rhs(C& c) {
  const auto q = c.q();
  return c.rat(1) - c.rat(2) * c.p_power(1) * q + c.rat(3) * c.p_power(2) * q * q;
}

// 2q + 3p q^2 + (2/3) p^2 q^3 + (7/12) p^2 B
template <class C>
value_t<C> scaled_series_rhs(C& c) {
  const auto q = c.q();
  return c.rat(2) * q + c.rat(3) * c.p_power(1) * q * q + c.rat(2, 3) * c.p_power(2) * q * q * q +
         c.rat(7, 12) * c.p_bern(2, static_cast<int>(c.prime()) - 3);
}

// 4^{p-1} sum_{k<p} (-1)^k C(-1/2,k)/k
template <class C>
value_t<C> scaled_series(C& c) {
  return c.power(4, c.prime() - 1) * central_series(c, full(c));
}

// The exact split of the scaled series:
// (2 - C(2p,p))/(4p) - H(-1; p-1) + double sum + (1/2) single sum
template <class C>
value_t<C> scaled_series_split(C& c) {
  return c.central_excess() - c.H(Signature{-1}, full(c)) + weighted_binomial_double(c) +
         c.rat(1, 2) * weighted_binomial_single(c);
}

}  // namespace amhs::claims
