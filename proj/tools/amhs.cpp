// amhs: verify congruences for alternating multiple harmonic sums over prime
// ranges, and evaluate the underlying quantities.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "amhs/amhs.hpp"

namespace {

using namespace amhs;

struct Modulus {
  u64 p = 0;
  int k = 1;
};

Modulus parse_modulus(const std::string& text) {
  const auto caret = text.find('^');
  Modulus m;
  m.p = detail::parse_u64(std::string_view(text).substr(0, caret), "modulus prime");
  if (caret != std::string::npos) {
    const u64 k = detail::parse_u64(std::string_view(text).substr(caret + 1), "modulus exponent");
    if (k < 1 || k > 4) throw UsageError("modulus exponent must be 1..4");
    m.k = static_cast<int>(k);
  }
  if (!is_prime(m.p)) throw UsageError(std::to_string(m.p) + " is not prime");
  if (m.p > kMaxWordPrime) throw UsageError("modulus prime exceeds " + std::to_string(kMaxWordPrime));
  return m;
}

int cmd_list(const std::string& format) {
  const auto& registry = default_registry();
  if (format == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& c : registry) {
      out.push_back({{"check", c.id},
                     {"modulus", "p^" + std::to_string(c.modulus_exponent)},
                     {"min_prime", c.min_prime},
                     {"description", c.description}});
    }
    std::cout << out.dump(1) << "\n";
  } else if (format == "text") {
    for (const auto& c : registry) {
      std::cout << c.id << "  p^" << c.modulus_exponent << "  p>=" << c.min_prime << "  " << c.description << "\n";
    }
  } else {
    throw UsageError("format must be text or json");
  }
  return kExitOk;
}

int cmd_mhs(const std::string& sig_text, u64 n, const std::string& mod_text) {
  Signature sig = [&] {
    try {
      return Signature::parse(sig_text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  std::string head = sig.to_string();
  head.pop_back();
  std::cout << "H" << head << "; " << n << ") = " << mhs_exact(sig, n).to_string() << "\n";
  if (!mod_text.empty()) {
    const Modulus m = parse_modulus(mod_text);
    if (n >= m.p) throw UsageError("n must be below p when a modulus is given");
    std::cout << mhs_mod(sig, n, m.p, m.k).value() << " (mod " << m.p << "^" << m.k << ")\n";
  }
  return kExitOk;
}

int cmd_bernoulli(u64 n, u64 p) {
  if (n > kDefaultBernoulliCap) throw UsageError("n exceeds " + std::to_string(kDefaultBernoulliCap));
  const BigRational b = bernoulli_exact(n);
  std::cout << "B_" << n << " = " << b.to_string() << "\n";
  if (p == 0) return kExitOk;
  if (!is_prime(p) || p > kMaxWordPrime) throw UsageError("p must be a prime up to " + std::to_string(kMaxWordPrime));
  if (big_mod(b.denominator(), p) == 0) {
    std::cout << "p divides the denominator; no residue mod " << p << "\n";
    return kExitOk;
  }
  const Residue exact = rational_reduce_mod(b, p, 1);
  std::cout << exact.value() << " (mod " << p << ", from the exact value)\n";
  if (p >= 5 && n >= 2 && n % 2 == 0 && n + 3 <= p) {
    const Residue sum = bernoulli_mod_p(n, p);
    std::cout << sum.value() << " (mod " << p << ", from the power sum)\n";
    if (sum != exact) {
      std::cerr << "error: the two routes disagree\n";
      return kExitFailure;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating multiple harmonic sums: congruence verification"};
  app.require_subcommand(1);

  std::string primes_text = "5..100", checks_text = "all", backend_text = "both", format_text = "json", output;
  unsigned workers = default_workers();
  bool no_timing = false, allow_small = false;
  auto* verify = app.add_subcommand("verify", "Run registry checks over a range of primes");
  verify->add_option("--primes", primes_text, "lo..hi or a comma list")->capture_default_str();
  verify->add_option("--checks", checks_text, "all, or a comma list of ids (PREFIX* allowed)")->capture_default_str();
  verify->add_option("--backend", backend_text, "exact, fast or both")->capture_default_str();
  verify->add_option("--workers", workers, std::string("worker threads (default from ") + kWorkersEnv + ")")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", format_text, "json, csv or text")->capture_default_str();
  verify->add_option("--output", output, "report path (default stdout)");
  verify->add_flag("--no-timing", no_timing, "omit elapsed_us");
  verify->add_flag("--allow-small-primes", allow_small, "admit p = 3");

  std::string sig_text, mod_text;
  u64 mhs_n = 0;
  auto* mhs = app.add_subcommand("mhs", "Evaluate H(a_1,...,a_r; n)");
  mhs->add_option("--sig", sig_text, "signature, e.g. -1,-2")->required()->allow_extra_args(false);
  mhs->add_option("--n", mhs_n, "upper limit")->required();
  mhs->add_option("--mod", mod_text, "reduce modulo p^k, e.g. 5^1");

  long nmax = 25;
  auto* identities = app.add_subcommand("identities", "Check the exact binomial identities");
  identities->add_option("--nmax", nmax, "largest n")->capture_default_str();

  u64 bern_n = 0, bern_p = 0;
  auto* bernoulli = app.add_subcommand("bernoulli", "Print B_n, optionally modulo p");
  bernoulli->add_option("--n", bern_n, "index")->required();
  bernoulli->add_option("--p", bern_p, "prime modulus");

  std::string list_format = "text";
  auto* list = app.add_subcommand("list-checks", "List registered checks");
  list->add_option("--format", list_format, "text or json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) {
      RunConfig config;
      std::vector<std::string> warnings;
      config.primes = parse_prime_spec(primes_text, allow_small, warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      config.check_ids = select_check_ids(default_registry(), checks_text);
      config.backend = parse_backend(backend_text);
      config.format = parse_format(format_text);
      config.workers = workers;
      config.output_path = output;
      config.timing = !no_timing;
      return run_verify(config, default_registry(), std::cout, std::cerr);
    }
    if (*mhs) return cmd_mhs(sig_text, mhs_n, mod_text);
    if (*identities) return run_identity_sweep(nmax, std::cout);
    if (*bernoulli) return cmd_bernoulli(bern_n, bern_p);
    if (*list) return cmd_list(list_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
