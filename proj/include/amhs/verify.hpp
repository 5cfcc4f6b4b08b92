#pragma once

// Driver logic behind the command-line front end, kept here so that tests can
// exercise exit codes without spawning processes.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "amhs/identities.hpp"
#include "amhs/report.hpp"
#include "amhs/suite.hpp"

namespace amhs {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Environment variable supplying the default worker count.
inline constexpr const char* kWorkersEnv = "AMHS_WORKERS";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<u64> primes;
  std::vector<std::string> check_ids;  // empty selects every check
  Backend backend = Backend::both;
  unsigned workers = 1;
  OutputFormat format = OutputFormat::json;
  std::string output_path;  // empty writes to stdout
  bool timing = true;
  long identity_nmax = 25;
};

namespace detail {

inline u64 parse_u64(std::string_view text, std::string_view what) {
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = text.find(sep);
    out.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    text.remove_prefix(pos + 1);
  }
}

}  // namespace detail

inline unsigned default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      const u64 v = detail::parse_u64(env, kWorkersEnv);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const UsageError&) {
    }
  }
  return 1;
}

// "lo..hi" (primes in the range) or "p1,p2,..." (each must be prime). Primes
// below 5 need allow_small; a range's lower bound is raised to 5 with a warning.
inline std::vector<u64> parse_prime_spec(std::string_view text, bool allow_small, std::vector<std::string>& warnings) {
  const u64 floor = allow_small ? 3 : 5;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    u64 lo = detail::parse_u64(text.substr(0, dots), "prime range bound");
    const u64 hi = detail::parse_u64(text.substr(dots + 2), "prime range bound");
    if (lo < floor) {
      warnings.push_back("lower bound " + std::to_string(lo) + " raised to " + std::to_string(floor));
      lo = floor;
    }
    if (hi > kMaxWordPrime) throw UsageError("upper bound exceeds the supported maximum " + std::to_string(kMaxWordPrime));
    auto primes = lo <= hi ? primes_in_range(lo, hi) : std::vector<u64>{};
    if (primes.empty()) warnings.push_back("no primes in range " + std::string(text));
    return primes;
  }
  std::vector<u64> primes;
  for (auto item : detail::split(text, ',')) {
    const u64 p = detail::parse_u64(item, "prime");
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    if (p < floor) throw UsageError("prime " + std::to_string(p) + " is below " + std::to_string(floor));
    if (p > kMaxWordPrime) throw UsageError("prime " + std::to_string(p) + " exceeds " + std::to_string(kMaxWordPrime));
    primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

// "all", or a comma list of ids; an id ending in '*' selects by prefix.
inline std::vector<std::string> select_check_ids(const std::vector<CongruenceCheck>& registry, std::string_view text) {
  if (text == "all") return {};
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (auto item : detail::split(text, ',')) {
    bool matched = false;
    const bool prefix = !item.empty() && item.back() == '*';
    const auto stem = prefix ? item.substr(0, item.size() - 1) : item;
    for (const auto& c : registry) {
      if (prefix ? c.id.starts_with(stem) : c.id == stem) {
        matched = true;
        if (seen.insert(c.id).second) out.push_back(c.id);
      }
    }
    if (!matched) throw UsageError("unknown check id '" + std::string(item) + "'");
  }
  return out;
}

inline Backend parse_backend(std::string_view text) {
  if (text == "exact") return Backend::exact;
  if (text == "fast") return Backend::fast;
  if (text == "both") return Backend::both;
  throw UsageError("backend must be exact, fast or both");
}

inline OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "text") return OutputFormat::text;
  throw UsageError("format must be json, csv or text");
}

struct SuiteSummary {
  std::size_t passed = 0, failed = 0, skipped = 0, mismatched = 0, errored = 0;

  explicit SuiteSummary(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
      switch (r.status) {
        case CheckStatus::pass: ++passed; break;
        case CheckStatus::fail: ++failed; break;
        case CheckStatus::skipped: ++skipped; break;
        case CheckStatus::backend_mismatch: ++mismatched; break;
        case CheckStatus::error: ++errored; break;
      }
    }
  }

  bool clean() const noexcept { return failed == 0 && mismatched == 0 && errored == 0; }
};

// Runs the sweep and writes the report. Returns the process exit code.
inline int run_verify(const RunConfig& config, const std::vector<CongruenceCheck>& registry, std::ostream& out,
                      std::ostream& diag) {
  std::ofstream file;
  if (!config.output_path.empty()) {
    file.open(config.output_path);
    if (!file) {
      diag << "error: cannot write " << config.output_path << "\n";
      return kExitUsage;
    }
  }
  std::vector<CheckResult> results;
  try {
    results = run_suite(registry, config.primes, config.check_ids, config.backend, config.workers);
  } catch (const std::invalid_argument& e) {
    diag << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  write_report(file.is_open() ? file : out, results, config.format, config.timing);
  const SuiteSummary s(results);
  diag << results.size() << " results over " << config.primes.size() << " primes: " << s.passed << " pass, "
       << s.failed << " fail, " << s.skipped << " skipped, " << s.mismatched << " backend_mismatch, " << s.errored
       << " error\n";
  return s.clean() ? kExitOk : kExitFailure;
}

// All exact identity checks up to nmax. Prints one line per check.
inline int run_identity_sweep(long nmax, std::ostream& out) {
  if (nmax < 1) throw UsageError("nmax must be at least 1");
  std::size_t total = 0, failed = 0;
  auto report = [&](const std::string& name, bool ok) {
    ++total;
    if (!ok) ++failed;
    out << name << (ok ? " pass" : " FAIL") << "\n";
  };
  for (long n = 1; n <= nmax; ++n) {
    for (long d = 1; d <= n; ++d) {
      report("riordan n=" + std::to_string(n) + " d=" + std::to_string(d), riordan_identity_check(n, d));
    }
  }
  for (long n = 1; n <= nmax; ++n) report("central_series n=" + std::to_string(n), corollary32_check(n));
  for (long k = 1; k <= nmax; ++k) report("alt_row k=" + std::to_string(k), alt_row_check(k));
  for (int a = 1; a <= 4; ++a) {
    for (long n = 2; n <= nmax; n += 2) {
      report("negative_index a=" + std::to_string(a) + " n=" + std::to_string(n), theorem21_exact_check(a, n));
    }
  }
  out << total << " identity checks, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace amhs
