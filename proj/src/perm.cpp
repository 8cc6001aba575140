#include "burnloops/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace burnloops {

DegreeMismatch::DegreeMismatch(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument("permutation degree mismatch: " + std::to_string(lhs) +
                            " vs " + std::to_string(rhs)) {}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) {
    throw std::invalid_argument("permutation degree exceeds " + std::to_string(kMaxDegree));
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("image sequence is not a bijection");
    }
    seen[x] = true;
  }
}

Perm::Perm(std::initializer_list<Point> images) : Perm(std::vector<Point>(images)) {}

Perm Perm::identity(std::size_t degree) {
  if (degree > kMaxDegree) throw std::invalid_argument("degree too large");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Perm(std::move(images), Trusted{});
}

Perm Perm::transposition(std::size_t degree, Point a, Point b) {
  if (a >= degree || b >= degree) throw std::out_of_range("transposition point out of range");
  auto images = identity(degree).images_;
  std::swap(images[a], images[b]);
  return Perm(std::move(images), Trusted{});
}

Perm Perm::cycle(std::size_t degree) {
  auto images = identity(degree).images_;
  std::rotate(images.begin(), images.begin() + (degree > 0 ? 1 : 0), images.end());
  return Perm(std::move(images), Trusted{});
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = static_cast<Point>(x);
  return Perm(std::move(inv), Trusted{});
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::size_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Perm::fixed_points() const {
  std::size_t count = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) count += images_[x] == x;
  return count;
}

std::string Perm::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t x = 0; x < images_.size(); ++x) out << (x ? " " : "") << images_[x];
  out << ']';
  return out.str();
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  std::vector<Perm::Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = q.images_[p.images_[x]];
  return Perm(std::move(images), Perm::Trusted{});
}

Perm power(const Perm& p, long long k) {
  Perm base = k < 0 ? p.inverse() : p;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  const auto ord = base.order();
  e %= ord;
  Perm result = Perm::identity(p.degree());
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Perm conjugate(const Perm& p, const Perm& g) { return g.inverse() * p * g; }

Perm commutator(std::span<const Perm> factors) {
  if (factors.empty()) throw std::invalid_argument("commutator of no elements");
  Perm inv_part = Perm::identity(factors.front().degree());
  Perm fwd_part = inv_part;
  for (const auto& a : factors) {
    inv_part = inv_part * a.inverse();
    fwd_part = fwd_part * a;
  }
  return inv_part * fwd_part;
}

Perm commutator(const Perm& a, const Perm& b) {
  const Perm pair[] = {a, b};
  return commutator(pair);
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image bytes.
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace burnloops
