#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ekr {

using Point = std::uint16_t;
inline constexpr std::size_t kMaxDegree = 65535;

// A permutation of {0, ..., n-1} stored as its image array. Composition
// follows the right-action convention: (g * h) maps a to h(g(a)).
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::size_t degree);
  // Validates that images is a bijection; throws DataError otherwise.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t a) const { return images_[a]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& h) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::size_t fixed_points() const;
  std::uint64_t order() const;
  bool operator==(const Permutation&) const = default;

  // Disjoint cycles with 1-based points, "()" for the identity.
  std::string cycle_string() const;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

}  // namespace ekr
