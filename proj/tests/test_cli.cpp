#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <catch_amalgamated.hpp>
#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run amhs(const std::string& args) {
  const std::string cmd = std::string(AMHS_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("mhs subcommand", "[cli]") {
  auto r = amhs("mhs --sig -1,-2 --n 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("-71/288") != std::string::npos);

  r = amhs("mhs --sig -1,-2 --n 4 --mod 5^1");
  CHECK(r.code == 0);
  CHECK(r.out.find("\n3 (mod 5^1)") != std::string::npos);

  r = amhs("mhs --sig 1 --n 0");
  CHECK(r.code == 0);
  CHECK(r.out.find("= 0\n") != std::string::npos);

  CHECK(amhs("mhs --sig 1 --n 5 --mod 5^1").code == 2);
  CHECK(amhs("mhs --sig 1,0 --n 5").code == 2);
}

TEST_CASE("verify subcommand exit codes", "[cli]") {
  auto r = amhs("verify --primes 4..4");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).empty());

  CHECK(amhs("verify --checks NO_SUCH_ID").code == 2);
  CHECK(amhs("verify --primes 9,11").code == 2);
  CHECK(amhs("verify --primes 3").code == 2);
  CHECK(amhs("verify --primes 5..70000 --backend fast").code == 2);
  CHECK(amhs("verify --primes 5..7 --backend sideways").code == 2);
  CHECK(amhs("verify --primes 5..7 --output /nonexistent/dir/report.json").code == 2);
  CHECK(amhs("verify --workers 0").code == 2);
  CHECK(amhs("verify --unknown-flag").code == 2);
  CHECK(amhs("").code == 2);

  r = amhs("verify --primes 3 --allow-small-primes --checks T11_MAIN --no-timing");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["status"] == "skipped");
}

TEST_CASE("verify report formats", "[cli]") {
  auto r = amhs("verify --primes 5..13 --checks 'C24*' --format csv --no-timing");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("prime,check,modulus,lhs,rhs,status\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 4 * 8);

  r = amhs("verify --primes 5..13 --checks T11_MAIN --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 4);
  for (const auto& row : j) {
    CHECK(row["status"] == "pass");
    CHECK(row.contains("elapsed_us"));
    CHECK(row["lhs"].is_string());
  }
}

TEST_CASE("identities, bernoulli and list-checks subcommands", "[cli]") {
  auto r = amhs("identities --nmax 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("3 identity checks, 0 failed") != std::string::npos);
  CHECK(amhs("identities --nmax 25").code == 0);
  CHECK(amhs("identities --nmax 0").code == 2);

  r = amhs("bernoulli --n 4 --p 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("B_4 = -1/30") != std::string::npos);
  CHECK(r.out.find("3 (mod 7, from the power sum)") != std::string::npos);
  CHECK(amhs("bernoulli --n 4 --p 8").code == 2);

  r = amhs("list-checks --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).size() >= 40);
}
