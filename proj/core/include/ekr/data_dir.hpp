#pragma once

#include <filesystem>
#include <string_view>

namespace ekr {

// EKR_DATA_DIR when set and nonempty, otherwise the data directory of the
// source tree the library was built from.
std::filesystem::path data_dir();
std::filesystem::path data_path(std::string_view relative);

}  // namespace ekr
