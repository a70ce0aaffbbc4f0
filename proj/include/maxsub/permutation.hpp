#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace maxsub {

/// Points are stored 0-based; all text I/O is 1-based.
using Point = std::uint32_t;

/**
 * A bijection on {0, ..., degree-1}.
 *
 * Composition is left-to-right: `a * b` applies `a` first, then `b`, so the
 * image of x under a*b is (x^a)^b. Cycle notation follows the same rule:
 * "(1 2)(2 3)" parses as the product (1 2) * (2 3) = (1 3 2).
 */
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// From 0-based images; throws Error if `images` is not a bijection.
  static Permutation from_images(std::vector<Point> images);

  /// From 1-based cycles, e.g. {{1,2,3},{4,5}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  /// Parse cycle notation "(1 2 3)(4 5)"; "()" is the identity. Commas are
  /// accepted as separators. With degree 0 the degree is the largest point.
  static Permutation parse(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(Permutation const &rhs) const;
  Permutation &operator*=(Permutation const &rhs);
  Permutation inverse() const;

  /// x^-1 * this * x
  Permutation conjugate(Permutation const &x) const;

  bool is_identity() const;
  std::uint64_t order() const;

  /// Smallest moved point, or degree() if none.
  Point lowest_moved_point() const;

  /// Same permutation on a larger point set (fixes the new points).
  Permutation extended(std::size_t degree) const;

  /// Shift all points by `offset` inside a permutation of degree `degree`.
  Permutation shifted(Point offset, std::size_t degree) const;

  std::string to_cycles() const;

  std::size_t hash() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &a, Permutation const &b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

Permutation commutator(Permutation const &a, Permutation const &b);

std::ostream &operator<<(std::ostream &os, Permutation const &p);

} // namespace maxsub

template <>
struct std::hash<maxsub::Permutation> {
  std::size_t operator()(maxsub::Permutation const &p) const noexcept { return p.hash(); }
};
