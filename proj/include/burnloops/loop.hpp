#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "burnloops/group.hpp"
#include "burnloops/models.hpp"
#include "burnloops/perm.hpp"

namespace burnloops {

/// Thrown for tables that are not loops, or sets that are not subloops.
class InvalidLoop : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a derived structure fails an identity its input should imply.
class IdentityViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A finite loop given by its Cayley table.
class Loop {
 public:
  /// Validates the Latin-square property and a two-sided identity.
  static Loop from_table(const std::vector<std::vector<std::size_t>>& rows,
                         std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t x, std::size_t y) const { return mul_[x * order_ + y]; }
  /// The y with x * y = z.
  std::size_t left_div(std::size_t x, std::size_t z) const { return ldiv_[x * order_ + z]; }
  /// The x with x * y = z.
  std::size_t right_div(std::size_t z, std::size_t y) const { return rdiv_[z * order_ + y]; }
  /// Left inverse: inverse(x) * x = 1.
  std::size_t inverse(std::size_t x) const { return right_div(identity_, x); }

  std::vector<std::vector<std::size_t>> rows() const;
  const std::vector<std::string>& labels() const { return labels_; }
  bool is_associative() const;
  /// Smallest k with x^k = 1, powers taken as x * (x * ...).
  std::size_t power_order(std::size_t x) const;

  friend bool operator==(const Loop& a, const Loop& b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_ && a.mul_ == b.mul_;
  }

 private:
  Loop() = default;
  std::size_t order_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::uint16_t> mul_, ldiv_, rdiv_;
  std::vector<std::string> labels_;
};

inline Loop loop_from_table(const std::vector<std::vector<std::size_t>>& rows) {
  return Loop::from_table(rows);
}

/// Cayley-table text: the order k, then k rows of 0-based indices, each
/// optionally followed by a `# label` comment. Element 0 must be the unit.
std::string write_cayley(const Loop& loop);
/// Blank and comment-only lines are ignored. Throws InvalidLoop.
Loop read_cayley(std::string_view text);

/// x * y = y^(lambda_x), lambda_x the member sending the basepoint to x.
/// Throws InvalidLoop unless the section is sharply transitive.
Loop loop_from_section(const Section& s);
/// The same section read with another point as the unit element.
Loop loop_from_section(const Section& s, Perm::Point basepoint);

struct Translations {
  std::vector<Perm> left;   // left[x] : y -> x * y
  std::vector<Perm> right;  // right[x] : y -> y * x
  std::vector<std::size_t> inverse;
};
Translations translations(const Loop& loop);

/// p_x = lambda_x^-1 rho_x^-1 for every x.
std::vector<Perm> bol_companions(const Loop& loop);

struct IdentityFlags {
  bool left_bol = false;
  bool moufang = false;
  bool left_conjugacy_closed = false;
  bool left_inverse_property = false;
  /// True when triple checks were sampled (order above 64).
  bool sampled = false;
};

IdentityFlags check_identities(const Loop& loop);
bool is_left_bol(const Loop& loop);
bool is_moufang(const Loop& loop);
bool is_left_conjugacy_closed(const Loop& loop);
bool has_left_inverse_property(const Loop& loop);

struct Nuclei {
  std::vector<std::size_t> left, middle, right;
};
Nuclei nuclei(const Loop& loop);

/// Smallest subloop containing `elements`, sorted.
std::vector<std::size_t> generated_subloop(const Loop& loop, std::span<const std::size_t> elements);
bool is_subloop(const Loop& loop, std::span<const std::size_t> subset);
/// The induced table on a subloop, relabelled in sorted order. Throws InvalidLoop.
Loop subloop(const Loop& loop, std::span<const std::size_t> subset);
/// Throws InvalidLoop if `subset` is not a subloop.
bool is_normal_subloop(const Loop& loop, std::span<const std::size_t> subset);
/// The factor loop on the cosets xS, ordered by least member. Throws
/// InvalidLoop if `subset` is not a normal subloop.
Loop quotient_loop(const Loop& loop, std::span<const std::size_t> subset);

struct MultiplicationGroups {
  FiniteGroup left, right, full;
};
MultiplicationGroups multiplication_groups(const Loop& loop);
/// The group of left translations of a loop that is a group; its regular
/// representation.
FiniteGroup left_translation_group(const Loop& loop);

/// The groupoid (L, +) with x + y = x * (y^-1 * x).
class CoreGroupoid {
 public:
  /// Throws IdentityViolation if any of the three core identities fails.
  explicit CoreGroupoid(const Loop& loop);
  std::size_t order() const { return order_; }
  std::size_t plus(std::size_t x, std::size_t y) const { return table_[x * order_ + y]; }
  bool idempotent() const;
  bool left_keyes() const;
  bool left_distributive() const;

 private:
  std::size_t order_;
  std::vector<std::uint16_t> table_;
};

CoreGroupoid core(const Loop& loop);
/// The permutation group generated by x -> a + x, a in L.
FiniteGroup core_group(const Loop& loop);

/// A bijection u with companion c: (c * x^u) * y^u = c * (xy)^u.
struct PseudoAut {
  Perm map;
  std::size_t companion;
};

inline constexpr std::size_t kDefaultLoopBound = 64;

/// Aut(L) acting on the loop elements. Throws BoundExceeded.
FiniteGroup automorphism_group_loop(const Loop& loop, std::size_t bound = kDefaultLoopBound);
/// All left pseudo-automorphisms with their companions, ordered by
/// (companion, map). Throws BoundExceeded.
std::vector<PseudoAut> left_pseudo_automorphisms(const Loop& loop,
                                                 std::size_t bound = kDefaultLoopBound);
/// An isomorphism a -> b as a permutation of element indices, if any.
std::optional<Perm> loops_isomorphic(const Loop& a, const Loop& b,
                                     std::size_t bound = kDefaultLoopBound);

/// Greedy generating set: repeatedly adds the element with the largest
/// generated subloop.
std::vector<std::size_t> greedy_loop_generators(const Loop& loop);

}  // namespace burnloops
