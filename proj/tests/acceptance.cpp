// Acceptance gate: one PASS/FAIL line per criterion.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "amhs/amhs.hpp"

using namespace amhs;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::vector<Signature> grid_signatures(const std::vector<int>& alphabet, std::size_t max_depth) {
  std::vector<Signature> out;
  std::vector<std::vector<int>> layer{{}};
  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      for (int a : alphabet) {
        auto v = w;
        v.push_back(a);
        out.emplace_back(v);
        next.push_back(std::move(v));
      }
    }
    layer = std::move(next);
  }
  return out;
}

int exit_code_of(const std::string& args) {
  const std::string cmd = std::string(AMHS_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome ac1() {
  Outcome o;
  const auto primes = primes_in_range(5, 2000);
  const std::vector<std::string> ids{"T11_MAIN", "T11_HALF"};
  for (unsigned workers : {1u, 8u}) {
    const auto start = Clock::now();
    const auto results = run_suite(default_registry(), primes, ids, Backend::fast, workers);
    const double secs = seconds_since(start);
    o.require(results.size() == 2 * primes.size(), "missing results");
    for (const auto& r : results) o.require(r.pass() && r.modulus_exponent == 3, r.check_id + " at " + std::to_string(r.prime));
    o.require(secs < (workers == 1 ? 120.0 : 30.0), "too slow with " + std::to_string(workers) + " workers");
    o.detail += (o.detail.empty() ? "" : ", ") + std::to_string(workers) + " worker(s) " + std::to_string(secs) + "s";
  }
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto& reg = default_registry();
  const auto primes = primes_in_range(3, 500);
  const auto results = run_suite(reg, primes, {}, Backend::both, default_workers());
  o.require(results.size() == reg.size() * primes.size(), "missing results");
  std::size_t passed = 0, skipped = 0;
  for (const auto& r : results) {
    const bool admissible = find_check(reg, r.check_id)->admissible(r.prime);
    if (admissible) {
      o.require(r.pass(), r.check_id + " at " + std::to_string(r.prime) + ": " + std::string(status_name(r.status)));
      ++passed;
    } else {
      o.require(r.status == CheckStatus::skipped, r.check_id + " not skipped at " + std::to_string(r.prime));
      ++skipped;
    }
  }
  if (o.ok) o.detail = std::to_string(passed) + " pass on both backends, " + std::to_string(skipped) + " admissibility skips";
  return o;
}

Outcome ac3() {
  Outcome o;
  // Brute-force sums, compared with hard-coded golden values.
  BigRational lhs(0);
  for (long k = 1; k < 5; ++k) {
    BigRational c(1);  // (-1)^k C(-1/2, k) built factor by factor
    for (long i = 0; i < k; ++i) c *= BigRational(2 * i + 1, 2 * (i + 1));
    lhs += c / BigRational(k);
  }
  o.require(lhs == BigRational(1321, 1536), "LHS at p=5");
  const BigRational q = fermat_quotient_exact(2, 5);
  const BigRational rhs = BigRational(2) * q - BigRational(5) * q * q + BigRational(2, 3) * BigRational(25) * q * q * q +
                          BigRational(7, 12) * BigRational(25) * bernoulli_exact(2);
  o.require(rhs == BigRational(29767, 72), "closed-form RHS at p=5");
  o.require(rational_padic_valuation(lhs - rhs, 5) == 3, "valuation against the closed form");
  const BigRational half = -(BigRational(1) + BigRational(1, 2));
  o.require(half == BigRational(-3, 2), "-H(1;2)");
  o.require(lhs - half == BigRational(7250, 3072), "difference against -H(1;2)");
  o.require(rational_padic_valuation(lhs - half, 5) == 3, "valuation against -H(1;2)");
  ExactContext ctx(5, shared_bernoulli_cache());
  const auto [lhs_half, rhs_half] = find_check(default_registry(), "T11_HALF")->exact(ctx);
  o.require(lhs_half == lhs && rhs_half == half, "T11_HALF exact values");

  BigRational h(0);
  for (long i = 1; i <= 4; ++i) {
    for (long j = i + 1; j <= 4; ++j) h += BigRational((i + j) % 2 == 0 ? 1 : -1, i * j * j);
  }
  o.require(h == BigRational(-71, 288), "H(-1,-2;4)");
  o.require(rational_reduce_mod(h, 5, 1).value() == 3, "H(-1,-2;4) mod 5");
  o.require(rational_reduce_mod(BigRational(-3, 4) * bernoulli_exact(2), 5, 1).value() == 3, "-(3/4)B_2 mod 5");

  BigInt c105 = 1;
  for (unsigned long i = 1; i <= 5; ++i) c105 = c105 * (5 + i) / i;
  o.require(c105 == 252, "C(10,5)");
  const BigRational l33 = BigRational(2) - BigRational(4, 3) * BigRational(125) * bernoulli_exact(2);
  o.require(rational_padic_valuation(BigRational(c105) - l33, 5) >= 4, "C(10,5) mod 5^4");

  o.require(run_check("T11_MAIN", 5, Backend::both).pass(), "T11_MAIN check");
  o.require(run_check("C24_M1M2", 5, Backend::both).pass(), "C24_M1M2 check");
  o.require(run_check("L33_P", 5, Backend::both).pass(), "L33_P check");
  return o;
}

Outcome ac4() {
  Outcome o;
  const auto start = Clock::now();
  for (long n = 1; n <= 25; ++n) {
    for (long d = 1; d <= n; ++d) o.require(riordan_identity_check(n, d), "riordan " + std::to_string(n) + "," + std::to_string(d));
  }
  for (long n = 1; n <= 30; ++n) o.require(corollary32_check(n), "central series n=" + std::to_string(n));
  for (long k = 1; k <= 40; ++k) o.require(alt_row_check(k), "alternating row k=" + std::to_string(k));
  for (int a = 1; a <= 4; ++a) {
    for (long n = 2; n <= 40; n += 2) o.require(theorem21_exact_check(a, n), "negative index a=" + std::to_string(a));
  }
  const double secs = seconds_since(start);
  o.require(secs < 60.0, "too slow");
  if (o.ok) o.detail = std::to_string(secs) + "s";
  return o;
}

Outcome ac5() {
  Outcome o;
  const auto sigs = grid_signatures({-3, -2, -1, 1, 2, 3}, 3);
  for (const auto& sig : sigs) {
    for (u64 n = 0; n <= 25; ++n) o.require(mhs_exact(sig, n) == naive_mhs(sig, n), "exact vs naive " + sig.to_string());
  }
  for (u64 p : primes_in_range(3, 50)) {
    for (int k = 1; k <= 3; ++k) {
      for (const auto& sig : sigs) {
        for (u64 n : {p / 2, p - 1}) {
          o.require(mhs_mod(sig, n, p, k) == rational_reduce_mod(mhs_exact(sig, n), p, k), "mod vs exact " + sig.to_string());
        }
      }
    }
  }
  std::size_t bern = 0;
  for (u64 p : primes_in_range(5, 200)) {
    for (u64 m = 2; m + 3 <= p; m += 2, ++bern) {
      o.require(bernoulli_mod_p(m, p) == rational_reduce_mod(bernoulli_exact(m), p, 1), "Bernoulli m=" + std::to_string(m));
    }
  }
  if (o.ok) o.detail = std::to_string(sigs.size()) + " signatures, " + std::to_string(bern) + " Bernoulli residues";
  return o;
}

Outcome ac6() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> depth(1, 3), entry(1, 3), sign(0, 1);
  std::uniform_int_distribution<u64> upto(0, 20);
  auto random_sig = [&] {
    std::vector<int> v(static_cast<std::size_t>(depth(rng)));
    for (int& x : v) x = sign(rng) ? entry(rng) : -entry(rng);
    return Signature(v);
  };
  for (int i = 0; i < 1000; ++i) {
    const auto s = random_sig(), t = random_sig();
    const u64 n = upto(rng);
    BigRational sum(0);
    for (const auto& w : stuffle_product(s, t)) sum += mhs_exact(w, n);
    o.require(sum == mhs_exact(s, n) * mhs_exact(t, n), "stuffle " + s.to_string() + "*" + t.to_string());
  }
  std::size_t reversals = 0;
  for (u64 p : primes_in_range(3, 101)) {
    for (const auto& s : grid_signatures({-2, -1, 1, 2}, 3)) {
      if (s.depth() < 2) continue;
      const auto r = reversal_pair(s);
      const auto rhs = mhs_mod(r.signature, p - 1, p, 1);
      o.require(mhs_mod(s, p - 1, p, 1) == (r.sign > 0 ? rhs : -rhs), "reversal " + s.to_string());
      ++reversals;
    }
  }
  const auto primes = primes_in_range(5, 1000);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<i64> arg(1, 100000);
  for (int done = 0; done < 500;) {
    const u64 p = primes[pick(rng)];
    const i64 x = arg(rng), y = arg(rng);
    if (x % static_cast<i64>(p) == 0 || y % static_cast<i64>(p) == 0) continue;
    o.require(fermat_quotient(x * y, p, 1) == fermat_quotient(x, p, 1) + fermat_quotient(y, p, 1), "Fermat quotient");
    ++done;
  }
  if (o.ok) o.detail = "1000 stuffle pairs, " + std::to_string(reversals) + " reversals, 500 Fermat triples";
  return o;
}

Outcome ac7() {
  Outcome o;
  RunConfig config;
  config.primes = primes_in_range(5, 150);
  config.backend = Backend::both;
  config.timing = false;
  std::string reference;
  for (unsigned workers : {1u, 4u, 8u}) {
    config.workers = workers;
    std::ostringstream out, diag;
    o.require(run_verify(config, default_registry(), out, diag) == kExitOk, "clean sweep exit code");
    if (reference.empty()) reference = out.str();
    o.require(out.str() == reference, "report differs with " + std::to_string(workers) + " workers");
  }

  auto mutant = default_registry();
  for (auto& c : mutant) {
    if (c.id != "T11_MAIN") continue;
    const auto exact = c.exact;
    const auto fast = c.fast;
    c.exact = [exact](ExactContext& ctx) {
      auto [l, r] = exact(ctx);
      return std::pair{l, r + ctx.rat(1)};
    };
    c.fast = [fast](FastContext& ctx) {
      auto [l, r] = fast(ctx);
      return std::pair{l, r + ctx.rat(1)};
    };
  }
  config.workers = 1;
  std::ostringstream out, diag;
  o.require(run_verify(config, mutant, out, diag) == kExitFailure, "mutant did not exit 1");

  o.require(exit_code_of("verify --primes 5..x") == kExitUsage, "bad range");
  o.require(exit_code_of("verify --no-such-flag") == kExitUsage, "unknown flag");
  o.require(exit_code_of("verify --checks NO_SUCH_ID") == kExitUsage, "unknown check");
  o.require(exit_code_of("verify --workers 0") == kExitUsage, "zero workers");
  o.require(exit_code_of("verify --primes 5..60 --no-timing") == kExitOk, "clean CLI sweep");
  if (o.ok) o.detail = "identical reports for 1/4/8 workers, mutant exit 1, malformed flags exit 2";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 main congruence sweep, fast backend, p <= 2000", ac1},
      {"AC2 full registry, both backends, p <= 500", ac2},
      {"AC3 spot values at p = 5", ac3},
      {"AC4 exact identity sweeps", ac4},
      {"AC5 oracle equivalences", ac5},
      {"AC6 algebraic property suites", ac6},
      {"AC7 determinism and exit codes", ac7},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << (o.detail.empty() ? "" : "  (" + o.detail + ")") << std::endl;
  }
  return all ? 0 : 1;
}
