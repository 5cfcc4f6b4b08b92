#pragma once

// Two evaluation backends sharing one interface, so each congruence is written
// once as a generic formula and evaluated both ways:
//
//   ExactContext  values are BigRational; reduced mod p^k only at the end.
//   FastContext   values are Residue mod p^k, computed natively in words.
//
// The primitives (harmonic sums, binomials, Bernoulli numbers, Fermat
// quotients) are implemented independently in each backend.

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "amhs/bernoulli.hpp"
#include "amhs/bigrational.hpp"
#include "amhs/mhs.hpp"
#include "amhs/padic.hpp"
#include "amhs/residue.hpp"

namespace amhs {

class ExactContext {
 public:
  using value_type = BigRational;

  ExactContext(u64 p, BernoulliCache& bernoulli) : p_(p), bernoulli_(&bernoulli) {}

  u64 prime() const noexcept { return p_; }
  int precision() const noexcept { return k_; }
  void set_precision(int k) { k_ = k; }

  BigRational rat(i64 num, i64 den = 1) const { return BigRational(BigInt(num), BigInt(den)); }

  BigRational p_power(int e) const { return power(static_cast<i64>(p_), static_cast<u64>(e)); }

  BigRational power(i64 base, u64 e) const {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), BigInt(base).get_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(out);
  }

  BigRational inverse(const BigRational& v) const { return BigRational(1) / v; }

  const BigRational& H(const Signature& sig, u64 n) {
    auto key = std::make_pair(sig, n);
    auto it = h_cache_.find(key);
    if (it == h_cache_.end()) it = h_cache_.emplace(std::move(key), mhs_exact(sig, n)).first;
    return it->second;
  }

  BigRational twisted(i64 x, int r, u64 n) const { return twisted_power_sum_exact(BigRational(x), r, n); }

  // q_p(2)
  const BigRational& q() {
    if (!q_) q_ = BigRational(fermat_quotient_exact(2, p_));
    return *q_;
  }

  // p^e * B_m
  BigRational p_bern(int e, int m) {
    if (m < 0) throw std::invalid_argument("p_bern: negative Bernoulli index");
    return p_power(e) * bernoulli_->get(static_cast<std::size_t>(m));
  }

  BigRational binom(u64 n, u64 r) const { return BigRational(binom_exact(static_cast<i64>(n), static_cast<i64>(r))); }

  // C(n, j) for j = 0..n
  std::vector<BigRational> binom_row(u64 n) const {
    std::vector<BigRational> row;
    row.reserve(n + 1);
    BigInt c = 1;
    for (u64 j = 0; j <= n; ++j) {
      row.emplace_back(c);
      c = c * static_cast<unsigned long>(n - j) / static_cast<unsigned long>(j + 1);
    }
    return row;
  }

  // C(2j, j) for j = 0..n
  std::vector<BigRational> central_binomials(u64 n) const {
    std::vector<BigRational> out;
    out.reserve(n + 1);
    for (u64 j = 0; j <= n; ++j) out.emplace_back(binom_exact(static_cast<i64>(2 * j), static_cast<i64>(j)));
    return out;
  }

  // (2 - C(2p, p)) / (4p)
  BigRational central_excess() const {
    return BigRational(2 - binom_exact(static_cast<i64>(2 * p_), static_cast<i64>(p_)), BigInt(static_cast<long>(4 * p_)));
  }

  Residue reduce(const BigRational& v) const { return rational_reduce_mod(v, p_, k_); }
  bool congruent(const BigRational& a, const BigRational& b) const { return reduce(a) == reduce(b); }

 private:
  u64 p_;
  int k_ = 1;
  BernoulliCache* bernoulli_;
  std::map<std::pair<Signature, u64>, BigRational> h_cache_;
  std::optional<BigRational> q_;
};

class FastContext {
 public:
  using value_type = Residue;

  explicit FastContext(u64 p) : p_(p) {
    if (p < 3 || p > kMaxWordPrime) throw std::invalid_argument("FastContext: prime outside the word-size envelope");
  }

  u64 prime() const noexcept { return p_; }
  int precision() const noexcept { return k_; }
  void set_precision(int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("FastContext: precision must be 1..4");
    k_ = k;
  }

  Residue rat(i64 num, i64 den = 1) const {
    const Residue d = Residue::from_signed(den, p_, k_);
    return Residue::from_signed(num, p_, k_) * mod_inverse(d);
  }

  Residue p_power(int e) const { return e >= k_ ? Residue(p_, k_, 0) : Residue(p_, k_, checked_pow(p_, e)); }

  Residue power(i64 base, u64 e) const { return mod_pow(Residue::from_signed(base, p_, k_), e); }

  Residue inverse(const Residue& v) const { return mod_inverse(v); }

  const Residue& H(const Signature& sig, u64 n) {
    auto key = std::make_tuple(k_, sig, n);
    auto it = h_cache_.find(key);
    if (it == h_cache_.end()) it = h_cache_.emplace(std::move(key), mhs_mod_with_inverses(sig, n, p_, k_, inverses())).first;
    return it->second;
  }

  Residue twisted(i64 x, int r, u64 n) const { return twisted_power_sum(Residue::from_signed(x, p_, k_), r, n); }

  Residue q() const { return fermat_quotient(2, p_, k_); }

  // p^e * B_m. Only B_m mod p is available here, so the term must carry
  // enough powers of p (e >= k-1) to be determined modulo p^k.
  Residue p_bern(int e, int m) {
    if (e >= k_) return Residue(p_, k_, 0);
    if (m >= 3 && m % 2 == 1) return Residue(p_, k_, 0);
    if (e < k_ - 1) throw std::logic_error("p_bern: Bernoulli term needs at least p^{k-1} in front");
    auto it = bernoulli_.find(m);
    if (it == bernoulli_.end()) {
      it = bernoulli_.emplace(m, bernoulli_mod_p(static_cast<u64>(m), p_).value()).first;
    }
    return Residue(p_, k_, checked_pow(p_, e) * it->second);
  }

  Residue binom(u64 n, u64 r) const { return binom_mod(n, r, p_, k_).to_residue(k_); }

  // C(n, j) for j = 0..n (n <= 2p) by C(n,j) = C(n,j-1) (n-j+1) / j with p-adic bookkeeping.
  std::vector<Residue> binom_row(u64 n) const {
    if (n > 2 * p_) throw std::out_of_range("binom_row: n exceeds 2p");
    std::vector<Residue> row;
    row.reserve(n + 1);
    auto c = PadicScaled::from_integer(1, p_, k_);
    row.push_back(c.to_residue(k_));
    for (u64 j = 1; j <= n; ++j) {
      c = c * PadicScaled::from_integer(static_cast<i64>(n - j + 1), p_, k_) /
          PadicScaled::from_integer(static_cast<i64>(j), p_, k_);
      row.push_back(c.to_residue(k_));
    }
    return row;
  }

  // C(2j, j) for j = 0..n, n < p
  std::vector<Residue> central_binomials(u64 n) const {
    if (n >= p_) throw std::out_of_range("central_binomials: need n < p");
    std::vector<Residue> out{Residue(p_, k_, 1)};
    const auto stream = central_binomial_stream(p_, k_);
    for (u64 j = 1; j <= n; ++j) out.push_back(stream[j - 1].to_residue(k_));
    return out;
  }

  // (2 - C(2p, p)) / (4p): C(2p, p) is taken to k+1 digits, one of which the
  // division by p consumes.
  Residue central_excess() const {
    const int wide = k_ + 1;
    const auto diff = PadicScaled::from_integer(2, p_, wide) - binom_mod(2 * p_, p_, p_, wide);
    return (diff / PadicScaled::from_integer(static_cast<i64>(4 * p_), p_, wide)).to_residue(k_);
  }

  Residue reduce(const Residue& v) const { return v; }
  bool congruent(const Residue& a, const Residue& b) const { return a == b; }

 private:
  std::span<const u64> inverses() {
    auto& table = inverse_tables_[k_];
    if (table.empty()) table = detail::batch_inverse_values(p_ - 1, checked_pow(p_, k_));
    return table;
  }

  u64 p_;
  int k_ = 1;
  std::map<int, std::vector<u64>> inverse_tables_;
  std::map<std::tuple<int, Signature, u64>, Residue> h_cache_;
  std::map<int, u64> bernoulli_;
};

}  // namespace amhs
