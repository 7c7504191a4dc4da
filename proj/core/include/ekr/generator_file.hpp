#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ekr/permutation.hpp"

namespace ekr {

struct GeneratorSet {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

// Parses one permutation in disjoint-cycle notation with 1-based points,
// e.g. "(1,2,3)(4,5)" or "( 1, 9, 5,14)"; "()" or an empty string is the
// identity. Throws DataError on malformed text, out-of-range points, or
// points repeated across cycles.
Permutation parse_cycles(std::string_view text, std::size_t degree);

// Generator file: first content line "degree N", then one generator per line;
// '#' starts a comment, blank lines are ignored. Errors carry line numbers.
GeneratorSet parse_generator_file(std::string_view text);
GeneratorSet load_group_file(const std::filesystem::path& path);
std::string format_generator_file(const GeneratorSet& gens, std::string_view comment = {});

}  // namespace ekr
