#pragma once

// Running registry checks for one prime or across a sweep of primes.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "amhs/bernoulli.hpp"
#include "amhs/registry.hpp"

namespace amhs {

enum class Backend { exact, fast, both };
enum class CheckStatus { pass, fail, skipped, backend_mismatch, error };

inline std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::backend_mismatch: return "backend_mismatch";
    case CheckStatus::error: return "error";
  }
  return "error";
}

inline std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::exact: return "exact";
    case Backend::fast: return "fast";
    case Backend::both: return "both";
  }
  return "both";
}

struct CheckResult {
  u64 prime = 0;
  std::string check_id;
  int modulus_exponent = 1;
  std::optional<u64> lhs;  // absent for skipped and errored checks
  std::optional<u64> rhs;
  CheckStatus status = CheckStatus::skipped;
  u64 elapsed_us = 0;
  std::string message;

  bool pass() const noexcept { return status == CheckStatus::pass; }
  std::string modulus() const { return std::to_string(prime) + "^" + std::to_string(modulus_exponent); }
};

// Largest prime the exact backend can serve with the default Bernoulli cap.
inline constexpr u64 kMaxExactPrime = kDefaultBernoulliCap + 3;

// Per-prime evaluation state: both contexts with their caches.
class PrimeSession {
 public:
  PrimeSession(u64 p, BernoulliCache& bernoulli) : p_(p), bernoulli_(&bernoulli) {}

  u64 prime() const noexcept { return p_; }

  ExactContext& exact() {
    if (!exact_) exact_.emplace(p_, *bernoulli_);
    return *exact_;
  }
  FastContext& fast() {
    if (!fast_) fast_.emplace(p_);
    return *fast_;
  }

 private:
  u64 p_;
  BernoulliCache* bernoulli_;
  std::optional<ExactContext> exact_;
  std::optional<FastContext> fast_;
};

namespace detail {

inline std::pair<Residue, Residue> eval_exact(const CongruenceCheck& check, PrimeSession& session) {
  auto& ctx = session.exact();
  ctx.set_precision(check.modulus_exponent);
  const auto [lhs, rhs] = check.exact(ctx);
  return {ctx.reduce(lhs), ctx.reduce(rhs)};
}

inline std::pair<Residue, Residue> eval_fast(const CongruenceCheck& check, PrimeSession& session) {
  auto& ctx = session.fast();
  ctx.set_precision(check.modulus_exponent);
  return check.fast(ctx);
}

}  // namespace detail

// Evaluates one admissible check in a session. Evaluation errors are captured
// in the result rather than thrown.
inline CheckResult evaluate_check(const CongruenceCheck& check, PrimeSession& session, Backend backend) {
  CheckResult result;
  result.prime = session.prime();
  result.check_id = check.id;
  result.modulus_exponent = check.modulus_exponent;
  if (!check.admissible(session.prime())) {
    result.status = CheckStatus::skipped;
    result.message = "requires p >= " + std::to_string(check.min_prime);
    return result;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    std::optional<std::pair<Residue, Residue>> exact, fast;
    if (backend != Backend::fast) exact = detail::eval_exact(check, session);
    if (backend != Backend::exact) fast = detail::eval_fast(check, session);
    const auto& shown = exact ? *exact : *fast;
    result.lhs = shown.first.value();
    result.rhs = shown.second.value();
    if (exact && fast && *exact != *fast) {
      result.status = CheckStatus::backend_mismatch;
      result.message = "fast backend gave lhs=" + std::to_string(fast->first.value()) +
                       " rhs=" + std::to_string(fast->second.value());
    } else {
      result.status = shown.first == shown.second ? CheckStatus::pass : CheckStatus::fail;
    }
  } catch (const std::exception& e) {
    result.status = CheckStatus::error;
    result.lhs.reset();
    result.rhs.reset();
    result.message = e.what();
  }
  result.elapsed_us = static_cast<u64>(
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count());
  return result;
}

// Rejects primes a backend cannot serve: beyond the word-size envelope, or
// beyond the exact Bernoulli cap.
inline void require_supported_prime(u64 p, Backend backend) {
  if (p > kMaxWordPrime && backend != Backend::exact) {
    throw std::invalid_argument("prime " + std::to_string(p) + " exceeds the word-size bound " +
                                std::to_string(kMaxWordPrime));
  }
  if (p > kMaxExactPrime && backend != Backend::fast) {
    throw std::invalid_argument("prime " + std::to_string(p) + " exceeds the exact-backend bound " +
                                std::to_string(kMaxExactPrime));
  }
}

inline CheckResult run_check(const std::vector<CongruenceCheck>& registry, std::string_view id, u64 p, Backend backend,
                             BernoulliCache& bernoulli = shared_bernoulli_cache()) {
  const auto* check = find_check(registry, id);
  if (!check) throw std::invalid_argument("unknown check id '" + std::string(id) + "'");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (!check->admissible(p)) {
    throw std::invalid_argument(check->id + " requires p >= " + std::to_string(check->min_prime));
  }
  require_supported_prime(p, backend);
  PrimeSession session(p, bernoulli);
  return evaluate_check(*check, session, backend);
}

inline CheckResult run_check(std::string_view id, u64 p, Backend backend) {
  return run_check(default_registry(), id, p, backend);
}

// The power-sum Bernoulli route must agree with the exact recurrence, for
// every even index, on the first few primes of a sweep before it is trusted.
inline void bernoulli_preflight(const std::vector<u64>& primes, BernoulliCache& bernoulli, std::size_t how_many = 3) {
  std::size_t done = 0;
  for (u64 p : primes) {
    if (p < 5) continue;
    if (done++ == how_many) break;
    for (u64 m = 2; m + 3 <= p; m += 2) {
      if (bernoulli_mod_p(m, p) != rational_reduce_mod(bernoulli.get(m), p, 1)) {
        throw std::runtime_error("Bernoulli cross-check failed at m=" + std::to_string(m) + ", p=" + std::to_string(p));
      }
    }
  }
}

// Runs the selected checks (all when ids is empty) over the primes. Output is
// sorted by (prime, check id) whatever the worker count.
inline std::vector<CheckResult> run_suite(const std::vector<CongruenceCheck>& registry, const std::vector<u64>& primes,
                                          const std::vector<std::string>& ids, Backend backend, unsigned workers,
                                          BernoulliCache& bernoulli = shared_bernoulli_cache()) {
  std::vector<const CongruenceCheck*> selected;
  if (ids.empty()) {
    for (const auto& c : registry) selected.push_back(&c);
  } else {
    for (const auto& id : ids) {
      const auto* c = find_check(registry, id);
      if (!c) throw std::invalid_argument("unknown check id '" + id + "'");
      if (std::find(selected.begin(), selected.end(), c) == selected.end()) selected.push_back(c);
    }
  }
  for (u64 p : primes) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    require_supported_prime(p, backend);
  }
  if (!primes.empty() && backend != Backend::fast) {
    const u64 top = *std::max_element(primes.begin(), primes.end());
    if (top >= 5) bernoulli.ensure(top - 3);
  }
  if (backend != Backend::exact) bernoulli_preflight(primes, bernoulli);

  std::vector<std::vector<CheckResult>> per_prime(primes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      PrimeSession session(primes[i], bernoulli);
      for (const auto* check : selected) per_prime[i].push_back(evaluate_check(*check, session, backend));
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<CheckResult> out;
  for (auto& batch : per_prime) {
    for (auto& r : batch) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) {
    return a.prime != b.prime ? a.prime < b.prime : a.check_id < b.check_id;
  });
  return out;
}

}  // namespace amhs
