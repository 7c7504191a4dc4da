#include "ekr/data_dir.hpp"

#include <cstdlib>

#ifndef EKR_DEFAULT_DATA_DIR
#define EKR_DEFAULT_DATA_DIR "data"
#endif

namespace ekr {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("EKR_DATA_DIR"); env && *env) return env;
  return EKR_DEFAULT_DATA_DIR;
}

std::filesystem::path data_path(std::string_view relative) { return data_dir() / relative; }

}  // namespace ekr
