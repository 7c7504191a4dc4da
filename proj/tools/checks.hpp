#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ekr::cli {

struct Check {
  std::string scope;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Scopes: small-sporadics, suzuki, ree, psu3, psl, symplectic, all-desk.
// Throws std::invalid_argument for an unknown scope. Each check is printed
// to `out` as soon as it finishes.
std::vector<Check> run_scope(const std::string& scope, std::ostream& out);
const std::vector<std::string>& scope_names();

// verify-paper entry point: 0 when every check passes, 1 otherwise.
int cmd_verify(const std::string& scope, std::ostream& out);

}  // namespace ekr::cli
