#pragma once

// Bernoulli numbers (exact, and modulo p by an independent power-sum route)
// and Fermat quotients.

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "amhs/bigrational.hpp"
#include "amhs/residue.hpp"

namespace amhs {

inline constexpr std::size_t kDefaultBernoulliCap = 4000;

// Exact B_0..B_N from sum_{j=0}^{m} C(m+1, j) B_j = 0, with B_1 = -1/2.
// Grows on demand; extension takes an exclusive lock, reads a shared one.
class BernoulliCache {
 public:
  explicit BernoulliCache(std::size_t cap = kDefaultBernoulliCap) : cap_(cap) { values_.emplace_back(1); }

  std::size_t cap() const noexcept { return cap_; }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
  }

  void ensure(std::size_t n) {
    if (n > cap_) throw std::out_of_range("BernoulliCache: index " + std::to_string(n) + " exceeds cap");
    std::unique_lock lock(mutex_);
    while (values_.size() <= n) extend_one();
  }

  BigRational get(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    ensure(n);
    std::shared_lock lock(mutex_);
    return values_[n];
  }

 private:
  void extend_one() {
    const std::size_t m = values_.size();
    BigRational acc(0);
    BigInt c = 1;  // C(m+1, j), advanced in the loop
    for (std::size_t j = 0; j < m; ++j) {
      if (j == 1 || j % 2 == 0) acc += BigRational(c) * values_[j];
      c = c * static_cast<unsigned long>(m + 1 - j) / static_cast<unsigned long>(j + 1);
    }
    BigRational b = -acc / BigRational(static_cast<unsigned long>(m + 1));
    if (m >= 3 && m % 2 == 1 && !b.is_zero()) throw std::logic_error("BernoulliCache: odd-index value is nonzero");
    values_.push_back(std::move(b));
  }

  std::size_t cap_;
  mutable std::shared_mutex mutex_;
  std::vector<BigRational> values_;
};

inline BernoulliCache& shared_bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

inline BigRational bernoulli_exact(std::size_t n) { return shared_bernoulli_cache().get(n); }

// B_m mod p for even 2 <= m <= p-3 from sum_{k<p} k^m == p B_m (mod p^2).
inline Residue bernoulli_mod_p(u64 m, u64 p) {
  if (m % 2 != 0) throw std::invalid_argument("bernoulli_mod_p: index must be even");
  if (m < 2 || p < 5 || m > p - 3) throw std::invalid_argument("bernoulli_mod_p: need 2 <= m <= p-3");
  const u64 p2 = checked_pow(p, 2);
  u64 t = 0;
  for (u64 k = 1; k < p; ++k) t = detail::add_mod(t, detail::pow_mod(k, m, p2), p2);
  if (t % p != 0) throw std::logic_error("bernoulli_mod_p: power sum not divisible by p");
  return Residue(p, 1, t / p);
}

// q_p(x) = (x^{p-1} - 1) / p mod p^k.
inline Residue fermat_quotient(i64 x, u64 p, int k) {
  const u64 big = checked_pow(p, k + 1);
  const u64 base = detail::reduce_signed(x, big);
  if (base % p == 0) throw std::invalid_argument("fermat_quotient: p divides x");
  const u64 t = detail::sub_mod(detail::pow_mod(base, p - 1, big), 1, big);
  return Residue(p, k, t / p);
}

// The integer q_p(x) itself.
inline BigInt fermat_quotient_exact(i64 x, u64 p) {
  if (x % static_cast<i64>(p) == 0) throw std::invalid_argument("fermat_quotient_exact: p divides x");
  BigInt pw;
  BigInt base(static_cast<long>(x));
  mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(p - 1));
  pw -= 1;
  BigInt q;
  mpz_divexact_ui(q.get_mpz_t(), pw.get_mpz_t(), static_cast<unsigned long>(p));
  return q;
}

}  // namespace amhs
