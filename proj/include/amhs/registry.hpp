#pragma once

// The catalog of congruences. Each entry names a claim, the modulus p^k it is
// stated at, the smallest admissible prime, and one generic procedure that
// produces (lhs, rhs) under either backend.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "amhs/claims.hpp"
#include "amhs/contexts.hpp"
#include "amhs/primes.hpp"

namespace amhs {

struct CongruenceCheck {
  std::string id;
  u64 min_prime = 5;
  int modulus_exponent = 1;
  std::string description;
  std::function<std::pair<BigRational, BigRational>(ExactContext&)> exact;
  std::function<std::pair<Residue, Residue>(FastContext&)> fast;

  bool admissible(u64 p) const { return p >= min_prime && p % 2 == 1; }
};

template <class F>
CongruenceCheck make_check(std::string id, u64 min_prime, int k, std::string description, F eval) {
  return CongruenceCheck{std::move(id), min_prime, k, std::move(description), eval, eval};
}

namespace detail {

// Smallest odd prime strictly greater than bound, and at least floor.
inline u64 first_prime_above(u64 bound, u64 floor = 3) {
  u64 n = std::max(bound + 1, floor);
  while (n % 2 == 0 || !is_prime(n)) ++n;
  return n;
}

// "M1M2" for (-1,-2); single-digit entries only.
inline std::string signature_tag(const Signature& sig) {
  std::string s;
  for (int a : sig.entries()) s += (a < 0 ? "M" : "") + std::to_string(std::abs(a));
  return s;
}

// "H(a1,...,ar; bound)"
inline std::string h_text(const Signature& sig, std::string_view bound) {
  std::string s = sig.to_string();
  s.pop_back();
  return "H" + s + "; " + std::string(bound) + ")";
}

// "c1 s1 + c2 s2" with zero terms dropped and unit coefficients elided.
inline std::string linear_text(std::initializer_list<std::pair<BigRational, std::string_view>> terms) {
  std::string out;
  for (const auto& [c, sym] : terms) {
    if (c.is_zero()) continue;
    const BigRational mag = c.sign() < 0 ? -c : c;
    out += out.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
    if (mag != BigRational(1)) out += mag.is_integer() ? mag.to_string() + " " : "(" + mag.to_string() + ") ";
    out += sym;
  }
  return out.empty() ? "0" : out;
}

inline std::string pair_tag(int a, int b) { return std::to_string(a) + "_" + std::to_string(b); }

}  // namespace detail

inline std::vector<CongruenceCheck> registry_list() {
  using namespace claims;
  std::vector<CongruenceCheck> out;

  // Main congruence, both forms.
  out.push_back(make_check("T11_MAIN", 5, 3,
                           "sum_{k<p} (-1)^k C(-1/2,k)/k == 2q - pq^2 + (2/3)p^2q^3 + (7/12)p^2 B_{p-3} (mod p^3)",
                           [](auto& c) { return std::pair{central_series(c, full(c)), main_rhs(c)}; }));
  out.push_back(make_check("T11_HALF", 5, 3, "sum_{k<p} (-1)^k C(-1/2,k)/k == -H(1; (p-1)/2) (mod p^3)", [](auto& c) {
    return std::pair{central_series(c, full(c)), -c.H(Signature{1}, half(c))};
  }));

  // Non-alternating power sums H({a}^r; p-1).
  for (int a = 1; a <= 3; ++a) {
    for (int r = 1; r <= 3; ++r) {
      const int ar = a * r;
      const bool odd = ar % 2 == 1;
      out.push_back(make_check(
          "KNOWN_I_" + detail::pair_tag(a, r), detail::first_prime_above(static_cast<u64>(ar + 2)), odd ? 3 : 2,
          detail::h_text(Signature(std::vector<int>(static_cast<std::size_t>(r), a)), "p-1") + " == " +
              (odd ? "(-1)^r a(ar+1)/(2(ar+2)) p^2 B_{p-ar-2} (mod p^3)" : "(-1)^{r-1} a/(ar+1) p B_{p-ar-1} (mod p^2)"),
          [a, r](auto& c) {
            return std::pair{c.H(Signature(std::vector<int>(static_cast<std::size_t>(r), a)), full(c)),
                             power_sum_rhs(c, a, r)};
          }));
    }
  }

  out.push_back(make_check("KNOWN_II_1", 5, 3,
                           "H(1; (p-1)/2) == -2q + pq^2 - (2/3)p^2q^3 - (7/12)p^2 B_{p-3} (mod p^3)",
                           [](auto& c) { return std::pair{c.H(Signature{1}, half(c)), half_harmonic_rhs(c)}; }));
  for (int a = 2; a <= 6; ++a) {
    const bool odd = a % 2 == 1;
    out.push_back(make_check("KNOWN_II_A_" + std::to_string(a), detail::first_prime_above(static_cast<u64>(a + 1), 5),
                             odd ? 1 : 2,
                             "H(" + std::to_string(a) + "; (p-1)/2) == " +
                                 (odd ? "-(2^a-2)/a B_{p-a} (mod p)" : "a(2^{a+1}-1)/(2(a+1)) p B_{p-a-1} (mod p^2)"),
                             [a](auto& c) { return std::pair{c.H(Signature{a}, half(c)), half_power_rhs(c, a)}; }));
  }

  for (int s = 2; s <= 5; ++s) {
    for (int a = 1; a < s; ++a) {
      const int b = s - a;
      out.push_back(make_check("KNOWN_III_" + detail::pair_tag(a, b), detail::first_prime_above(static_cast<u64>(s + 1)), 1,
                               "H(" + std::to_string(a) + "," + std::to_string(b) +
                                   "; p-1) == (-1)^b/(a+b) C(a+b,a) B_{p-a-b} (mod p)",
                               [a, b](auto& c) { return std::pair{c.H(Signature{a, b}, full(c)), depth_two_rhs(c, a, b)}; }));
    }
  }

  // Negative pairs reduced to positive ones, and the half-range split behind it.
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      out.push_back(make_check(
          "T21_NEGPAIR_" + detail::pair_tag(a, b), 3, 1,
          "H(-" + std::to_string(a) + ",-" + std::to_string(b) +
              "; p-1) == -(1-2^{1-a-b})H(a,b; p-1) - (-1)^b 2^{1-a-b} H(a;h)H(b;h) (mod p)",
          [a, b](auto& c) { return std::pair{c.H(Signature{-a, -b}, full(c)), negative_pair_rhs(c, a, b)}; }));
      out.push_back(make_check(
          "T21_DECOMP_" + detail::pair_tag(a, b), 3, 1,
          "H(" + std::to_string(a) + "," + std::to_string(b) +
              "; p-1) == H(a,b;h) + (-1)^b H(a;h)H(b;h) + (-1)^{a+b} H(b,a;h) (mod p)",
          [a, b](auto& c) { return std::pair{c.H(Signature{a, b}, full(c)), split_pair_rhs(c, a, b)}; }));
    }
  }

  out.push_back(make_check("C22_M1", 5, 3, "H(-1; p-1) == -2q + pq^2 - (2/3)p^2q^3 - (1/4)p^2 B_{p-3} (mod p^3)",
                           [](auto& c) { return std::pair{c.H(Signature{-1}, full(c)), alternating_harmonic_rhs(c)}; }));
  out.push_back(make_check("C22_M1M1", 5, 2, "H(-1,-1; p-1) == 2q^2 - 2pq^3 - (1/3)p B_{p-3} (mod p^2)",
                           [](auto& c) { return std::pair{c.H(Signature{-1, -1}, full(c)), alternating_pair_rhs(c)}; }));
  for (int a = 2; a <= 6; ++a) {
    out.push_back(make_check("C22_MA_" + std::to_string(a), detail::first_prime_above(static_cast<u64>(a + 1), 5), 1,
                             "H(-" + std::to_string(a) + "; p-1) == -(2^a-2)/(a 2^{a-1}) B_{p-a} (mod p)",
                             [a](auto& c) { return std::pair{c.H(Signature{-a}, full(c)), negative_power_rhs(c, a)}; }));
  }

  for (int r = 1; r <= 4; ++r) {
    std::vector<int> entries(static_cast<std::size_t>(r - 1), 1);
    entries.push_back(-1);
    const Signature sig(entries);
    out.push_back(make_check("T23_R_" + std::to_string(r), detail::first_prime_above(static_cast<u64>(r + 1)), 1,
                             detail::h_text(sig, "p-1") + " == " + (r % 2 == 0 ? "-" : "") + "sum_{k<p} 2^k/k^" +
                                 std::to_string(r) + " (mod p)",
                             [sig, r](auto& c) {
                               return std::pair{c.H(sig, full(c)), twisted_rhs(c, r)};
                             }));
  }

  // Depth-two alternating sums mod p.
  struct DepthClaim {
    Signature sig;
    int q_squared;  // coefficient of q^2
    i64 b_num;      // coefficient of B_{p-3} is b_num / b_den
    i64 b_den;
  };
  const std::vector<DepthClaim> depth_two{
      {{1, -1}, 1, 0, 1},  {{-1, 1}, -1, 0, 1}, {{-1, 2}, 0, 1, 4},   {{1, -2}, 0, 1, 4},
      {{2, -1}, 0, 1, 4},  {{-2, 1}, 0, 1, 4},  {{-1, -2}, 0, -3, 4}, {{-2, -1}, 0, 3, 4},
  };
  for (const auto& claim : depth_two) {
    out.push_back(make_check("C24_" + detail::signature_tag(claim.sig), 5, 1,
                             detail::h_text(claim.sig, "p-1") + " == " +
                                 detail::linear_text({{BigRational(claim.q_squared), "q^2"},
                                                      {BigRational(claim.b_num, claim.b_den), "B_{p-3}"}}) +
                                 " (mod p)",
                             [claim](auto& c) {
                               const auto q = c.q();
                               return std::pair{c.H(claim.sig, full(c)),
                                                c.rat(claim.q_squared) * q * q +
                                                    c.rat(claim.b_num, claim.b_den) *
                                                        c.p_bern(0, static_cast<int>(c.prime()) - 3)};
                             }));
  }
  out.push_back(make_check("AUX_GR04", 5, 1, "sum_{k<p} 2^k/k^2 == -q^2 (mod p)", [](auto& c) {
    const auto q = c.q();
    return std::pair{c.twisted(2, 2, full(c)), c.rat(-1) * q * q};
  }));

  // Depth-three alternating sums mod p: coefficient of q^3 and of B_{p-3}.
  struct DepthThreeClaim {
    Signature sig;
    i64 q_num, q_den, b_num, b_den;
  };
  const std::vector<DepthThreeClaim> depth_three{
      {{-1, 1, -1}, 0, 1, 0, 1},   {{1, 1, -1}, -1, 3, -7, 24},  {{-1, 1, 1}, -1, 3, -7, 24},
      {{-1, -1, 1}, 1, 1, 7, 8},   {{1, -1, -1}, -1, 1, -7, 8},  {{1, -1, 1}, 2, 3, 1, 12},
      {{-1, -1, -1}, -4, 3, -1, 6},
  };
  for (const auto& claim : depth_three) {
    out.push_back(make_check("C25_" + detail::signature_tag(claim.sig), 5, 1,
                             detail::h_text(claim.sig, "p-1") + " == " +
                                 detail::linear_text({{BigRational(claim.q_num, claim.q_den), "q^3"},
                                                      {BigRational(claim.b_num, claim.b_den), "B_{p-3}"}}) +
                                 " (mod p)",
                             [claim](auto& c) {
                               const auto q = c.q();
                               return std::pair{c.H(claim.sig, full(c)),
                                                c.rat(claim.q_num, claim.q_den) * q * q * q +
                                                    c.rat(claim.b_num, claim.b_den) *
                                                        c.p_bern(0, static_cast<int>(c.prime()) - 3)};
                             }));
  }
  out.push_back(make_check("AUX_DISK06", 5, 1, "sum_{k<p} 2^k/k^3 == -(1/3)q^3 + (7/12)H(-3; p-1) (mod p)",
                           [](auto& c) { return std::pair{c.twisted(2, 3, full(c)), twisted_cube_rhs(c)}; }));

  // Binomial coefficients C(2p, j).
  out.push_back(make_check(
      "L33_J", 3, 3,
      "C(2p,j) == -2p(-1)^j/j + 4p^2(-1)^j/j H(1; j-1) (mod p^3) for every 0<j<p; reports the first failing j, "
      "or the sums over j when all hold",
      [](auto& c) {
        const u64 p = c.prime();
        const auto row = c.binom_row(2 * p);
        auto harmonic = c.rat(0);  // H(1; j-1)
        auto lhs_sum = c.rat(0);
        auto rhs_sum = c.rat(0);
        for (u64 j = 1; j < p; ++j) {
          const i64 s = neg_one_pow(static_cast<int>(j % 2));
          const auto rhs = c.rat(-2 * s, static_cast<i64>(j)) * c.p_power(1) +
                           c.rat(4 * s, static_cast<i64>(j)) * c.p_power(2) * harmonic;
          if (!c.congruent(row[j], rhs)) return std::pair{row[j], rhs};
          lhs_sum = lhs_sum + row[j];
          rhs_sum = rhs_sum + rhs;
          harmonic = harmonic + c.rat(1, static_cast<i64>(j));
        }
        return std::pair{lhs_sum, rhs_sum};
      }));
  out.push_back(make_check("L33_P", 5, 4, "C(2p,p) == 2 - (4/3)p^3 B_{p-3} (mod p^4)", [](auto& c) {
    return std::pair{c.binom(2 * c.prime(), c.prime()),
                     c.rat(2) - c.rat(4, 3) * c.p_bern(3, static_cast<int>(c.prime()) - 3)};
  }));

  // Terms of the proof of the main congruence.
  out.push_back(make_check("S3_T1", 5, 3, "(2 - C(2p,p))/(4p) == (1/3)p^2 B_{p-3} (mod p^3)", [](auto& c) {
    return std::pair{c.central_excess(), c.rat(1, 3) * c.p_bern(2, static_cast<int>(c.prime()) - 3)};
  }));
  out.push_back(make_check("S3_T2", 5, 3, "sum_{0<d<p} (-1)^d/d == -2q + pq^2 - (2/3)p^2q^3 - (1/4)p^2 B_{p-3} (mod p^3)",
                           [](auto& c) { return std::pair{c.H(Signature{-1}, full(c)), alternating_harmonic_rhs(c)}; }));
  out.push_back(make_check("S3_T3", 5, 3, "sum_{0<d<p} (-1)^d C(2p,d)/(p-d) == -(8/3)p^2 B_{p-3} (mod p^3)", [](auto& c) {
    return std::pair{weighted_binomial_single(c), c.rat(-8, 3) * c.p_bern(2, static_cast<int>(c.prime()) - 3)};
  }));
  out.push_back(make_check("S3_T4", 5, 3, "sum_{0<j<d<p} (-1)^d C(2p,j)/(p-d) == 4pq^2 + (4/3)p^2 B_{p-3} (mod p^3)",
                           [](auto& c) {
                             const auto q = c.q();
                             return std::pair{weighted_binomial_double(c),
                                              c.rat(4) * c.p_power(1) * q * q +
                                                  c.rat(4, 3) * c.p_bern(2, static_cast<int>(c.prime()) - 3)};
                           }));
  out.push_back(make_check("S3_TOTAL", 5, 3,
                           "4^{p-1} sum_{k<p} (-1)^k C(-1/2,k)/k == 2q + 3pq^2 + (2/3)p^2q^3 + (7/12)p^2 B_{p-3} (mod p^3)",
                           [](auto& c) { return std::pair{scaled_series(c), scaled_series_rhs(c)}; }));
  out.push_back(make_check("S3_INV4", 5, 3, "4^{-(p-1)} == 1 - 2pq + 3p^2q^2 (mod p^3)", [](auto& c) {
    return std::pair{c.inverse(c.power(4, c.prime() - 1)), inverse_four_power_rhs(c)};
  }));
  out.push_back(make_check("S3_SPLIT", 5, 3,
                           "4^{p-1} sum_{k<p} (-1)^k C(-1/2,k)/k == (2-C(2p,p))/(4p) - H(-1;p-1) + double sum + "
                           "(1/2) single sum (exact; compared mod p^3)",
                           [](auto& c) { return std::pair{scaled_series(c), scaled_series_split(c)}; }));

  // Reversal k -> p-k for all signatures over {+-1, +-2} of depth 2 and 3.
  const std::vector<int> letters{-2, -1, 1, 2};
  std::vector<Signature> reversible;
  for (int a : letters) {
    for (int b : letters) {
      reversible.push_back(Signature{a, b});
      for (int c : letters) reversible.push_back(Signature{a, b, c});
    }
  }
  for (const auto& sig : reversible) {
    const auto rev = reversal_pair(sig);
    out.push_back(make_check("REV" + std::to_string(sig.depth()) + "_" + detail::signature_tag(sig), 3, 1,
                             detail::h_text(sig, "p-1") + " == " + std::to_string(rev.sign) + " * " +
                                 detail::h_text(rev.signature, "p-1") + " (mod p)",
                             [sig, rev](auto& c) {
                               return std::pair{c.H(sig, full(c)), c.rat(rev.sign) * c.H(rev.signature, full(c))};
                             }));
  }
  return out;
}

inline const std::vector<CongruenceCheck>& default_registry() {
  static const std::vector<CongruenceCheck> registry = registry_list();
  return registry;
}

inline const CongruenceCheck* find_check(const std::vector<CongruenceCheck>& registry, std::string_view id) {
  for (const auto& c : registry) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace amhs
