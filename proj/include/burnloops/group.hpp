#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "burnloops/perm.hpp"

namespace burnloops {

/// A permutation group with its full element list.
///
/// Elements are stored sorted lexicographically by image sequence, so the
/// identity is always element 0 and enumeration order is reproducible.
/// Values are immutable and cheap to copy (shared storage).
class FiniteGroup {
 public:
  /// Breadth-first product closure of `generators`. An empty generator list
  /// yields the trivial group of the given degree.
  static FiniteGroup closure(std::size_t degree, std::vector<Perm> generators);
  /// Same, with degree taken from the generators (must be nonempty).
  static FiniteGroup closure(std::vector<Perm> generators);
  static FiniteGroup trivial(std::size_t degree);
  /// The group whose element set is exactly `elements`. Throws
  /// std::invalid_argument if the set is not closed under products.
  static FiniteGroup from_elements(std::size_t degree, std::span<const Perm> elements);

  std::size_t degree() const;
  std::size_t order() const;
  const std::vector<Perm>& generators() const;
  const std::vector<Perm>& elements() const;
  const Perm& identity() const { return elements().front(); }
  const Perm& element(std::size_t index) const { return elements()[index]; }

  bool contains(const Perm& p) const;
  std::optional<std::size_t> index_of(const Perm& p) const;
  /// Index of a member; throws std::out_of_range for non-members.
  std::size_t at(const Perm& p) const;

  bool is_abelian() const;
  bool is_subgroup_of(const FiniteGroup& other) const;

  /// Equality of element sets.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static FiniteGroup build(std::size_t degree, std::vector<Perm> generators,
                           std::vector<Perm> elements);
  std::shared_ptr<const Data> data_;
};

/// Multiplication table of a FiniteGroup over element indices. Index 0 is
/// the identity. Built in O(|G|^2) lookups from generator right-multiplication.
class CayleyTable {
 public:
  static constexpr std::size_t kMaxOrder = 4096;

  explicit CayleyTable(const FiniteGroup& group);

  std::size_t order() const { return order_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  std::size_t element_order(std::uint32_t a) const { return element_order_[a]; }
  bool is_abelian() const;
  /// Number of elements commuting with `a`.
  std::size_t centralizer_size(std::uint32_t a) const;
  /// Size of the subgroup generated by `gens`.
  std::size_t closure_size(std::span<const std::uint32_t> gens) const;
  /// Elements of the subgroup generated by `gens`, as a membership mask.
  std::vector<bool> closure_mask(std::span<const std::uint32_t> gens) const;

 private:
  std::size_t order_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::size_t> element_order_;
};

struct OrbitStabilizer {
  std::vector<Perm::Point> orbit;  // sorted
  FiniteGroup stabilizer;
};

struct Index2Subgroup {
  FiniteGroup subgroup;
  bool abelian;
};

FiniteGroup center(const FiniteGroup& g);
/// Elements of `g` commuting with every member of `s`. Throws DegreeMismatch.
FiniteGroup centralizer(const FiniteGroup& g, std::span<const Perm> s);
FiniteGroup derived_subgroup(const FiniteGroup& g);
/// Smallest normal subgroup of `g` containing `s`.
FiniteGroup normal_closure(const FiniteGroup& g, std::span<const Perm> s);
/// Throws std::invalid_argument if `h` is not contained in `g`.
bool is_normal(const FiniteGroup& g, const FiniteGroup& h);
/// Action of `g` on the right cosets of `n` by right multiplication. Throws
/// std::invalid_argument if `n` is not normal in `g`.
FiniteGroup quotient(const FiniteGroup& g, const FiniteGroup& n);
std::vector<Perm::Point> orbit(const FiniteGroup& g, Perm::Point point);
/// Throws std::out_of_range if `point >= g.degree()`.
OrbitStabilizer orbit_stabilizer(const FiniteGroup& g, Perm::Point point);
/// Kernels of all homomorphisms onto the group of order 2.
std::vector<Index2Subgroup> index2_subgroups(const FiniteGroup& g);
/// Invariant factors d1 | d2 | ... of an abelian group, ascending. Trivial
/// group gives an empty list. Throws std::invalid_argument if non-abelian.
std::vector<std::size_t> abelian_invariants(const FiniteGroup& g);
/// Acts on the disjoint union of the two domains.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Element-order multiset as counts indexed by order.
std::vector<std::size_t> order_spectrum(const FiniteGroup& g);
/// Number of elements of order exactly 2.
std::size_t involution_count(const FiniteGroup& g);

/// A group isomorphism, as a map from source element indices to target
/// element indices.
struct GroupIso {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<std::uint32_t> image;

  const Perm& operator()(const Perm& g) const { return target.element(image[source.at(g)]); }
  /// Checks bijectivity and all |G|^2 products.
  bool verify() const;
};

/// Backtracking isomorphism test: prunes by order, abelianness, order
/// spectrum, center and derived-subgroup orders, then searches images of a
/// greedily chosen generating set.
std::optional<GroupIso> isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// Thrown when a search exceeds its configured size bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Aut(G) as permutations of the element indices of `g`. Throws
/// BoundExceeded if |G| > bound.
FiniteGroup automorphism_group(const FiniteGroup& g, std::size_t bound = 256);

/// Greedy generating set of a group given by its table: repeatedly adds the
/// element whose inclusion yields the largest closure.
std::vector<std::uint32_t> greedy_generators(const CayleyTable& table);

}  // namespace burnloops
