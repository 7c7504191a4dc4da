#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ekr/group_table.hpp"
#include "report.hpp"

namespace ekr::cli {

enum ExitCode : int { kCertified = 0, kError = 1, kInconclusive = 2 };

struct RunConfig {
  // Group selector: exactly one of family, file, chartab.
  std::string family;  // psl, pgl, sp, psu3, sym, alt
  unsigned n = 2;
  std::uint32_t q = 2;
  std::string action = "plus";  // sp only: plus or minus
  std::string file;
  std::string chartab;

  // "unit", "search", "scheme" (psu3 and sp), "C1,C2,..." or "C1=a,C2=b,...".
  std::string weights = "unit";
  std::size_t cap = kDefaultEnumerationCap;
  std::uint64_t budget = 200'000'000;  // search node expansions
  std::size_t max_order = 400;         // exact coclique search limit
  bool clique = false;                 // run the sharply transitive set search in analyze
  std::string report;                  // JSON destination, stdout when empty

  // Throws std::invalid_argument unless exactly one selector is present.
  void validate() const;
  Json echo() const;
};

// Both write the JSON report and return an ExitCode; errors propagate as
// exceptions and are mapped to kError by the caller.
int cmd_analyze(const RunConfig& config, std::ostream& out);
int cmd_brute(const RunConfig& config, std::ostream& out);

}  // namespace ekr::cli
