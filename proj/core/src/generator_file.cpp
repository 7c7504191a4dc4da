#include "ekr/generator_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ekr/numeric.hpp"

namespace ekr {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view strip(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> img(degree);
  for (std::size_t a = 0; a < degree; ++a) img[a] = static_cast<Point>(a);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw DataError("expected '(' in cycle notation");
    ++i;
    std::vector<std::size_t> cycle;
    skip();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip();
      continue;
    }
    while (true) {
      skip();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw DataError("expected a point number in cycle notation");
      std::size_t v = std::stoul(std::string(text.substr(start, i - start)));
      if (v < 1 || v > degree)
        throw DataError("point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
      if (used[v - 1]) throw DataError("point " + std::to_string(v) + " repeated; images are not a bijection");
      used[v - 1] = true;
      cycle.push_back(v - 1);
      skip();
      if (i >= text.size()) throw DataError("unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      throw DataError(std::string("unexpected character '") + text[i] + "' in cycle notation");
    }
    for (std::size_t j = 0; j < cycle.size(); ++j)
      img[cycle[j]] = static_cast<Point>(cycle[(j + 1) % cycle.size()]);
    skip();
  }
  return Permutation::from_images(std::move(img));
}

GeneratorSet parse_generator_file(std::string_view text) {
  GeneratorSet out;
  bool have_degree = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  // A generator may continue over several lines when GAP wraps long output;
  // continuation is detected by a line ending inside an open cycle.
  std::string pending;
  std::size_t pending_line = 0;
  auto flush = [&] {
    if (pending.empty()) return;
    try {
      out.generators.push_back(parse_cycles(pending, out.degree));
    } catch (const DataError& e) {
      throw DataError("line " + std::to_string(pending_line) + ": " + e.what());
    }
    pending.clear();
  };
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    if (!have_degree) {
      std::istringstream is{std::string(line)};
      std::string word;
      long long n = -1;
      std::string extra;
      if (!(is >> word >> n) || word != "degree" || (is >> extra) || n < 0 ||
          static_cast<unsigned long long>(n) > kMaxDegree)
        throw DataError("line " + std::to_string(line_no) + ": expected 'degree N'");
      out.degree = static_cast<std::size_t>(n);
      have_degree = true;
      continue;
    }
    if (pending.empty()) pending_line = line_no;
    pending += line;
    int depth = 0;
    for (char c : pending) depth += c == '(' ? 1 : (c == ')' ? -1 : 0);
    if (depth == 0 && pending.back() != ',') flush();
    if (pos > text.size()) break;
  }
  if (!pending.empty()) flush();
  if (!have_degree) throw DataError("missing 'degree N' line");
  return out;
}

GeneratorSet load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open generator file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_generator_file(ss.str());
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string format_generator_file(const GeneratorSet& gens, std::string_view comment) {
  std::string out;
  if (!comment.empty()) out += "# " + std::string(comment) + "\n";
  out += "degree " + std::to_string(gens.degree) + "\n";
  for (const auto& g : gens.generators) out += g.cycle_string() + "\n";
  return out;
}

}  // namespace ekr
