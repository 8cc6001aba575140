#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnloops {

/// Thrown when two permutations of different degree are combined.
class DegreeMismatch : public std::invalid_argument {
 public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs);
};

/// A bijection of {0, ..., degree-1}.
///
/// Permutations act on the right: `x^p` is written `p[x]`, and `p * q` applies
/// `p` first, then `q`, so that `x^(pq) = (x^p)^q`. Every formula in the
/// library is transcribed under this convention.
class Perm {
 public:
  using Point = std::uint16_t;
  static constexpr std::size_t kMaxDegree = 65536;

  Perm() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);
  Perm(std::initializer_list<Point> images);

  static Perm identity(std::size_t degree);
  static Perm transposition(std::size_t degree, Point a, Point b);
  /// The cycle 0 -> 1 -> ... -> degree-1 -> 0.
  static Perm cycle(std::size_t degree);
  /// Builds from a point map; validates like the constructor.
  static Perm from_function(std::size_t degree, const auto& fn) {
    std::vector<Point> images(degree);
    for (std::size_t x = 0; x < degree; ++x) images[x] = static_cast<Point>(fn(x));
    return Perm(std::move(images));
  }

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  std::size_t order() const;
  std::size_t fixed_points() const;

  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Trusted {};
  Perm(std::vector<Point> images, Trusted) : images_(std::move(images)) {}
  friend Perm compose(const Perm& p, const Perm& q);

  std::vector<Point> images_;
};

/// Apply `p` first, then `q`. Throws DegreeMismatch.
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

/// p^k for any integer k (negative powers invert).
Perm power(const Perm& p, long long k);

/// p^g = g^-1 p g.
Perm conjugate(const Perm& p, const Perm& g);

/// [a1, ..., ak] = a1^-1 ... ak^-1 a1 ... ak. Requires a nonempty span.
Perm commutator(std::span<const Perm> factors);
Perm commutator(const Perm& a, const Perm& b);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace burnloops
