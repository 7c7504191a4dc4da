#include "ekr/permutation.hpp"

#include <numeric>

#include "ekr/numeric.hpp"

namespace ekr {

Permutation Permutation::identity(std::size_t degree) {
  if (degree > kMaxDegree) throw DataError("degree exceeds " + std::to_string(kMaxDegree));
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.size() > kMaxDegree) throw DataError("degree exceeds " + std::to_string(kMaxDegree));
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size()) throw DataError("image " + std::to_string(p) + " out of range");
    if (seen[p]) throw DataError("images are not a bijection (repeated " + std::to_string(p + 1) + ")");
    seen[p] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& h) const {
  std::vector<Point> img(images_.size());
  for (std::size_t a = 0; a < images_.size(); ++a) img[a] = h.images_[images_[a]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Point> img(images_.size());
  for (std::size_t a = 0; a < images_.size(); ++a) img[images_[a]] = static_cast<Point>(a);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t a = 0; a < images_.size(); ++a)
    if (images_[a] != a) return false;
  return true;
}

std::size_t Permutation::fixed_points() const {
  std::size_t n = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) n += images_[a] == a;
  return n;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t o = 1;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (seen[a]) continue;
    std::uint64_t len = 0;
    for (std::size_t b = a; !seen[b]; b = images_[b]) {
      seen[b] = true;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (seen[a] || images_[a] == a) continue;
    out += '(';
    bool first = true;
    for (std::size_t b = a; !seen[b]; b = images_[b]) {
      seen[b] = true;
      if (!first) out += ',';
      out += std::to_string(b + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace ekr
