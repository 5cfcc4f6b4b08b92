#pragma once

// Alternating multiple harmonic sums
//
//   H(a_1,...,a_r; n) = sum over 1 <= k_1 < ... < k_r <= n of
//                       prod_i sign(a_i)^{k_i} / k_i^{|a_i|}
//
// evaluated exactly and modulo p^k, together with the quasi-shuffle product
// and the k -> p-k reversal.

#include <charconv>
#include <compare>
#include <cstdlib>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "amhs/bigrational.hpp"
#include "amhs/residue.hpp"

namespace amhs {

// An ordered list of nonzero integers naming an alternating sum.
class Signature {
 public:
  Signature(std::initializer_list<int> entries) : Signature(std::vector<int>(entries)) {}

  explicit Signature(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("Signature: depth must be at least 1");
    for (int a : entries_) {
      if (a == 0) throw std::invalid_argument("Signature: entries must be nonzero");
    }
  }

  // Parses "a1,a2,...", e.g. "-1,-2".
  static Signature parse(std::string_view text) {
    std::vector<int> out;
    while (true) {
      const auto comma = text.find(',');
      const auto item = text.substr(0, comma);
      int value = 0;
      const auto* first = item.data();
      const auto* last = item.data() + item.size();
      if (!item.empty() && *first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last || first == last) {
        throw std::invalid_argument("Signature::parse: bad entry '" + std::string(item) + "'");
      }
      out.push_back(value);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return Signature(std::move(out));
  }

  std::size_t depth() const noexcept { return entries_.size(); }

  int weight() const noexcept {
    int w = 0;
    for (int a : entries_) w += std::abs(a);
    return w;
  }

  std::span<const int> entries() const noexcept { return entries_; }
  int operator[](std::size_t i) const { return entries_.at(i); }

  Signature reversed() const { return Signature(std::vector<int>(entries_.rbegin(), entries_.rend())); }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(entries_[i]);
    }
    return s + ")";
  }

  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  std::vector<int> entries_;
};

// a (+) b = sign(ab) (|a| + |b|)
constexpr int merge_entries(int a, int b) {
  const int mag = (a < 0 ? -a : a) + (b < 0 ? -b : b);
  return (a < 0) != (b < 0) ? -mag : mag;
}

namespace detail {

constexpr bool negative_term(int a, u64 k) { return a < 0 && (k & 1); }

// DP over the innermost index: after processing m, h[i] = H(a_1..a_i; m).
// Updating i from high to low keeps h[i-1] at its value for m-1.
template <class T, class TermFn>
T run_mhs_dp(const Signature& sig, u64 n, T zero, T one, TermFn term) {
  const std::size_t r = sig.depth();
  std::vector<T> h(r + 1, zero);
  h[0] = one;
  for (u64 m = 1; m <= n; ++m) {
    const std::size_t top = m < r ? static_cast<std::size_t>(m) : r;
    for (std::size_t i = top; i >= 1; --i) h[i] += h[i - 1] * term(sig[i - 1], m);
  }
  return h[r];
}

}  // namespace detail

inline BigRational mhs_exact(const Signature& sig, u64 n) {
  return detail::run_mhs_dp<BigRational>(sig, n, BigRational(0), BigRational(1), [](int a, u64 m) {
    BigInt den = BigInt(static_cast<unsigned long>(m));
    mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(std::abs(a)));
    return BigRational(detail::negative_term(a, m) ? BigInt(-1) : BigInt(1), den);
  });
}

// H(sig; n) mod p^k using a precomputed table inv[i-1] = 1/i mod p^k, i <= n.
inline Residue mhs_mod_with_inverses(const Signature& sig, u64 n, u64 p, int k, std::span<const u64> inv) {
  if (n >= p) throw std::invalid_argument("mhs_mod: need n < p");
  if (inv.size() < n) throw std::invalid_argument("mhs_mod: inverse table too short");
  const u64 m = checked_pow(p, k);
  struct Word {
    u64 v;
    u64 m;
    Word& operator+=(const Word& o) {
      v = detail::add_mod(v, o.v, m);
      return *this;
    }
    Word operator*(const Word& o) const { return {detail::mul_mod(v, o.v, m), m}; }
  };
  const u64 value = detail::run_mhs_dp<Word>(sig, n, Word{0, m}, Word{1 % m, m}, [&](int a, u64 idx) {
    u64 t = detail::pow_mod(inv[idx - 1], static_cast<u64>(std::abs(a)), m);
    if (detail::negative_term(a, idx) && t != 0) t = m - t;
    return Word{t, m};
  }).v;
  return Residue(p, k, value);
}

inline Residue mhs_mod(const Signature& sig, u64 n, u64 p, int k) {
  if (n >= p) throw std::invalid_argument("mhs_mod: need n < p");
  const auto inv = detail::batch_inverse_values(n, checked_pow(p, k));
  return mhs_mod_with_inverses(sig, n, p, k, inv);
}

// Literal enumeration of all index tuples. Test-scale only.
inline BigRational naive_mhs(const Signature& sig, u64 n) {
  const auto entries = sig.entries();
  BigRational total(0);
  std::vector<u64> idx(entries.size());
  auto recurse = [&](auto&& self, std::size_t pos, u64 lo) -> void {
    if (pos == entries.size()) {
      BigRational term(1);
      for (std::size_t i = 0; i < entries.size(); ++i) {
        BigInt den = 1;
        for (int e = 0; e < std::abs(entries[i]); ++e) den *= static_cast<unsigned long>(idx[i]);
        const bool neg = entries[i] < 0 && idx[i] % 2 == 1;
        term *= BigRational(BigInt(neg ? -1 : 1), den);
      }
      total += term;
      return;
    }
    for (u64 k = lo; k <= n; ++k) {
      idx[pos] = k;
      self(self, pos + 1, k + 1);
    }
  };
  recurse(recurse, 0, 1);
  return total;
}

// Quasi-shuffle expansion: H(s1;n) H(s2;n) = sum of H(s;n) over the returned
// multiset, for every n. Recursion on the leading (smallest-index) letters:
//   a.u * b.v = a.(u * b.v) + b.(a.u * v) + (a(+)b).(u * v)
inline std::vector<Signature> stuffle_product(const Signature& s1, const Signature& s2) {
  using Word = std::vector<int>;
  auto rec = [](auto&& self, std::span<const int> u, std::span<const int> v) -> std::vector<Word> {
    if (u.empty()) return {Word(v.begin(), v.end())};
    if (v.empty()) return {Word(u.begin(), u.end())};
    std::vector<Word> out;
    auto prepend_all = [&out](int letter, std::vector<Word> tails) {
      for (auto& t : tails) {
        t.insert(t.begin(), letter);
        out.push_back(std::move(t));
      }
    };
    prepend_all(u[0], self(self, u.subspan(1), v));
    prepend_all(v[0], self(self, u, v.subspan(1)));
    prepend_all(merge_entries(u[0], v[0]), self(self, u.subspan(1), v.subspan(1)));
    return out;
  };
  std::vector<Signature> result;
  for (auto& w : rec(rec, s1.entries(), s2.entries())) result.emplace_back(std::move(w));
  return result;
}

struct Reversal {
  Signature signature;
  int sign;
};

// H(sig; p-1) == sign * H(reversed; p-1) (mod p), from k_i -> p - k_i.
// sign = (-1)^{weight} * prod sign(a_i). Only depths 2 and 3 are supported.
inline Reversal reversal_pair(const Signature& sig) {
  if (sig.depth() != 2 && sig.depth() != 3) {
    throw std::invalid_argument("reversal_pair: only depths 2 and 3 are supported");
  }
  int sign = sig.weight() % 2 == 0 ? 1 : -1;
  for (int a : sig.entries()) {
    if (a < 0) sign = -sign;
  }
  return {sig.reversed(), sign};
}

// sum_{j=1}^{n} x^j / j^r mod p^k, where (p, k) come from x. Requires n < p.
inline Residue twisted_power_sum(const Residue& x, int r, u64 n) {
  const u64 p = x.prime();
  if (n >= p) throw std::invalid_argument("twisted_power_sum: need n < p");
  if (r < 1) throw std::invalid_argument("twisted_power_sum: weight must be positive");
  const u64 m = x.modulus();
  const auto inv = detail::batch_inverse_values(n, m);
  u64 power = 1 % m;
  u64 acc = 0;
  for (u64 j = 1; j <= n; ++j) {
    power = detail::mul_mod(power, x.value(), m);
    acc = detail::add_mod(acc, detail::mul_mod(power, detail::pow_mod(inv[j - 1], static_cast<u64>(r), m), m), m);
  }
  return Residue(p, x.exponent(), acc);
}

inline BigRational twisted_power_sum_exact(const BigRational& x, int r, u64 n) {
  BigRational acc(0);
  BigRational power(1);
  for (u64 j = 1; j <= n; ++j) {
    power *= x;
    BigInt den(static_cast<unsigned long>(j));
    mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(r));
    acc += power / BigRational(den);
  }
  return acc;
}

}  // namespace amhs
