#pragma once

// Exact (non-modular) identities: the binomial-sum identity with the v_k
// recurrence, checked as a polynomial identity in x; its x = 4 specialisation
// for the central binomial series; the alternating central row; and the two
// exact relations between H(-a; n), H(a; n) and H(a; n/2).

#include <stdexcept>
#include <vector>

#include "amhs/bigrational.hpp"
#include "amhs/mhs.hpp"
#include "amhs/rational_poly.hpp"

namespace amhs {

template <class Scalar>
struct VSequence {
  Scalar x;
  std::vector<Scalar> terms;  // v_0 .. v_m
};

// v_0 = 2, v_1 = x - 2, v_{k+1} = (x - 2) v_k - v_{k-1}.
template <class Scalar>
VSequence<Scalar> v_sequence(const Scalar& x, std::size_t m) {
  VSequence<Scalar> seq{x, {}};
  seq.terms.reserve(m + 1);
  seq.terms.push_back(Scalar(2));
  if (m == 0) return seq;
  const Scalar step = x - Scalar(2);
  seq.terms.push_back(step);
  for (std::size_t k = 1; k < m; ++k) seq.terms.push_back(step * seq.terms[k] - seq.terms[k - 1]);
  return seq;
}

// d * sum_{k=1}^{n} C(2k, k+d) x^{n-k} / k
inline RationalPoly riordan_lhs(long n, long d) {
  RationalPoly acc;
  for (long k = 1; k <= n; ++k) {
    acc += RationalPoly::monomial(BigRational(binom_exact(2 * k, k + d), BigInt(k)), static_cast<std::size_t>(n - k));
  }
  return acc * RationalPoly(d);
}

// sum_{k=0}^{n-d} C(2n, n+d+k) v_k(x) - C(2n, n+d)
inline RationalPoly riordan_rhs(long n, long d) {
  const auto v = v_sequence(RationalPoly::x(), static_cast<std::size_t>(n - d));
  RationalPoly acc;
  for (long k = 0; k <= n - d; ++k) acc += RationalPoly(BigRational(binom_exact(2 * n, n + d + k))) * v.terms[k];
  return acc - RationalPoly(BigRational(binom_exact(2 * n, n + d)));
}

inline bool riordan_identity_check(long n, long d) {
  if (d < 1 || d > n) throw std::invalid_argument("riordan_identity_check: need 1 <= d <= n");
  return riordan_lhs(n, d) == riordan_rhs(n, d);
}

// 4^n sum_{k=1}^{n} (-1)^k C(-1/2, k) / k, using (-1)^k C(-1/2,k) = C(2k,k) / 4^k.
inline BigRational central_series_scaled(long n) {
  BigRational acc(0);
  BigInt four_pow = 1;  // 4^{n-k}, built from k = n downward
  for (long k = n; k >= 1; --k) {
    acc += BigRational(binom_exact(2 * k, k) * four_pow, BigInt(k));
    four_pow *= 4;
  }
  return acc;
}

// -4(-1)^n sum_{d<n} (-1)^d/(n-d) sum_{j<d} C(2n,j) - 2(-1)^n sum_{d<n} (-1)^d/(n-d) C(2n,d)
inline BigRational central_series_binomial_form(long n) {
  BigRational double_sum(0);
  BigRational single_sum(0);
  BigInt prefix = 0;  // sum_{j<d} C(2n, j)
  for (long d = 0; d < n; ++d) {
    const BigInt sign = d % 2 == 0 ? 1 : -1;
    double_sum += BigRational(sign * prefix, BigInt(n - d));
    single_sum += BigRational(sign * binom_exact(2 * n, d), BigInt(n - d));
    prefix += binom_exact(2 * n, d);
  }
  const long outer = n % 2 == 0 ? 1 : -1;
  return BigRational(-4 * outer) * double_sum - BigRational(2 * outer) * single_sum;
}

inline bool corollary32_check(long n) {
  if (n < 1) throw std::invalid_argument("corollary32_check: need n >= 1");
  return central_series_scaled(n) == central_series_binomial_form(n);
}

// The same scaled series assembled from the polynomial identity at x = 4:
// -2 sum_{d=1}^{n} (-1)^d / d * rhs_d(4).
inline BigRational central_series_via_riordan(long n) {
  BigRational acc(0);
  for (long d = 1; d <= n; ++d) {
    const BigRational term = riordan_rhs(n, d).evaluate(BigRational(4)) / BigRational(d);
    acc += d % 2 == 0 ? term : -term;
  }
  return BigRational(-2) * acc;
}

// sum_{d=-k}^{k} (-1)^d C(2k, k+d) == 0
inline bool alt_row_check(long k) {
  if (k < 1) throw std::invalid_argument("alt_row_check: need k >= 1");
  BigInt acc = 0;
  for (long d = -k; d <= k; ++d) {
    const BigInt c = binom_exact(2 * k, k + d);
    if (d % 2 == 0) {
      acc += c;
    } else {
      acc -= c;
    }
  }
  return acc == 0;
}

// For even n:
//   H(-a; n) = -H(a; n) + 2^{1-a} H(a; n/2)
//   2 H(-a,-a; n) = H(-a; n)^2 - H(2a; n)
inline bool theorem21_exact_check(int a, long n) {
  if (a < 1) throw std::invalid_argument("theorem21_exact_check: need a >= 1");
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("theorem21_exact_check: n must be even");
  const u64 un = static_cast<u64>(n);
  const BigRational neg = mhs_exact(Signature{-a}, un);
  BigInt two_pow = 1;
  two_pow <<= static_cast<unsigned>(a - 1);
  const bool first = neg == -mhs_exact(Signature{a}, un) + mhs_exact(Signature{a}, un / 2) / BigRational(two_pow);
  const bool second = BigRational(2) * mhs_exact(Signature{-a, -a}, un) == neg * neg - mhs_exact(Signature{2 * a}, un);
  return first && second;
}

}  // namespace amhs
