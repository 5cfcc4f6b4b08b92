#pragma once

// Report writers. Residues are emitted as decimal strings; timing is optional
// so that reports can be compared byte for byte.

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "amhs/suite.hpp"

namespace amhs {

enum class OutputFormat { json, csv, text };

namespace detail {

inline std::string residue_text(const std::optional<u64>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace detail

inline nlohmann::ordered_json result_to_json(const CheckResult& r, bool timing) {
  nlohmann::ordered_json j;
  j["prime"] = r.prime;
  j["check"] = r.check_id;
  j["modulus"] = r.modulus();
  j["lhs"] = detail::residue_text(r.lhs);
  j["rhs"] = detail::residue_text(r.rhs);
  j["status"] = std::string(status_name(r.status));
  if (timing) j["elapsed_us"] = r.elapsed_us;
  if (r.status == CheckStatus::error || r.status == CheckStatus::backend_mismatch) j["message"] = r.message;
  return j;
}

inline void write_json(std::ostream& out, const std::vector<CheckResult>& results, bool timing) {
  out << "[";
  for (std::size_t i = 0; i < results.size(); ++i) {
    out << (i ? ",\n " : "\n ") << result_to_json(results[i], timing).dump();
  }
  out << (results.empty() ? "]\n" : "\n]\n");
}

inline void write_csv(std::ostream& out, const std::vector<CheckResult>& results, bool timing) {
  out << "prime,check,modulus,lhs,rhs,status" << (timing ? ",elapsed_us" : "") << "\n";
  for (const auto& r : results) {
    out << r.prime << ',' << r.check_id << ',' << r.modulus() << ',' << detail::residue_text(r.lhs) << ','
        << detail::residue_text(r.rhs) << ',' << status_name(r.status);
    if (timing) out << ',' << r.elapsed_us;
    out << '\n' << std::flush;
  }
}

inline void write_text(std::ostream& out, const std::vector<CheckResult>& results, bool timing) {
  for (const auto& r : results) {
    out << std::left << std::setw(7) << r.prime << std::setw(20) << r.check_id << std::setw(10) << r.modulus()
        << std::setw(22) << detail::residue_text(r.lhs) << std::setw(22) << detail::residue_text(r.rhs)
        << std::setw(17) << status_name(r.status);
    if (timing) out << r.elapsed_us << "us";
    if (!r.message.empty() && r.status != CheckStatus::pass) out << "  " << r.message;
    out << '\n';
  }
}

inline void write_report(std::ostream& out, const std::vector<CheckResult>& results, OutputFormat format, bool timing) {
  switch (format) {
    case OutputFormat::json: write_json(out, results, timing); break;
    case OutputFormat::csv: write_csv(out, results, timing); break;
    case OutputFormat::text: write_text(out, results, timing); break;
  }
}

}  // namespace amhs
