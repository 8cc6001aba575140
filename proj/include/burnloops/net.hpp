#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "burnloops/group.hpp"
#include "burnloops/loop.hpp"
#include "burnloops/perm.hpp"

namespace burnloops {

enum class Direction : std::uint8_t { Vertical = 0, Horizontal = 1, Transversal = 2 };

class NotCollineation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The 3-net of a loop. Point (x, y) has index x * |L| + y; line ids are
/// c for x = c, |L| + c for y = c and 2|L| + c for x * y = c.
class Net {
 public:
  explicit Net(Loop loop);

  const Loop& loop() const { return loop_; }
  std::size_t order() const { return loop_.order(); }
  std::size_t point_count() const { return order() * order(); }
  std::size_t line_count() const { return 3 * order(); }
  std::size_t point(std::size_t x, std::size_t y) const { return x * order() + y; }
  std::pair<std::size_t, std::size_t> coords(std::size_t p) const {
    return {p / order(), p % order()};
  }
  std::size_t line_through(std::size_t p, Direction d) const;
  const std::vector<std::size_t>& line_points(std::size_t line) const { return lines_[line]; }

  /// The induced permutation of line ids, or nullopt if some line is not
  /// mapped onto a line.
  std::optional<Perm> line_action(const Perm& pointmap) const;
  Perm pointmap_from_pair(const Perm& u, const Perm& v) const;
  /// (u, v) of a direction-preserving pointmap; throws NotCollineation
  /// if the map is not of product form.
  std::pair<Perm, Perm> pair_of(const Perm& pointmap) const;

 private:
  Loop loop_;
  std::vector<std::vector<std::size_t>> lines_;
};

struct Collineation {
  Perm pointmap;
  /// direction_action[d] is the pencil that pencil d is mapped onto.
  std::array<Direction, 3> direction_action;
  std::optional<std::pair<Perm, Perm>> uv;

  bool direction_preserving() const { return uv.has_value(); }
};

/// Validates that `pointmap` maps lines onto lines. Throws NotCollineation.
Collineation make_collineation(const Net& net, Perm pointmap);
/// (x, y) -> (x^u, y^v). Throws NotCollineation unless (u, v) extends to an
/// autotopism.
Collineation collineation_from_pair(const Net& net, const Perm& u, const Perm& v);
/// The Bol reflection with axis x = m: (x, y) -> (z, w) with w = m \ (xy)
/// and z * w = m * y. Throws NotCollineation if it fails to be an
/// axis-fixing involutive collineation swapping horizontals and
/// transversals.
Collineation bol_reflection(const Net& net, std::size_t m);

/// True iff every element maps every line onto a line.
bool all_collineations(const Net& net, const FiniteGroup& group);

struct ReflectionGroups {
  std::vector<Perm> reflections;  // sigma_x, indexed by x
  std::vector<Perm> generators;   // sigma_x sigma_1 = (p_x, lambda_x)
  FiniteGroup n;
  FiniteGroup nplus;
};

ReflectionGroups reflection_groups(const Net& net);

/// The v-component of a member of N. Throws std::invalid_argument for
/// non-members.
Perm phi(const Net& net, const FiniteGroup& n, const Perm& c);
/// The u-components of the members of N with trivial v-component.
FiniteGroup ker_phi(const Net& net, const FiniteGroup& n);

inline constexpr std::size_t kDefaultTupleBudget = 10'000'000;

/// H_k: generated by the commutators [l_1, ..., l_k] of section members
/// whose product l_1 ... l_k lies in the section. Throws BoundExceeded if
/// |L|^k exceeds `budget`.
FiniteGroup hk_subgroup(const Loop& loop, std::size_t k,
                        std::size_t budget = kDefaultTupleBudget);
/// [S(N_lambda), G(L)], generated by [lambda_m, g], m in N_lambda.
FiniteGroup nucleus_commutators(const Loop& loop);

enum class AutotopismMethod { Exhaustive, Backtracking };
inline constexpr std::size_t kExhaustiveAutotopismLimit = 8;
inline constexpr std::size_t kBacktrackAutotopismLimit = 24;

/// All autotopisms as direction-preserving pointmaps. Throws BoundExceeded
/// above the limit for the chosen method.
FiniteGroup autotopism_group(const Net& net, AutotopismMethod method);

struct NetOrbits {
  std::size_t y_axis_orbit = 0;           // under N
  std::vector<std::size_t> origin_orbit;  // point indices, under the given group
  std::vector<std::size_t> orbit_f;       // 1^F, F = <p_x>
  std::vector<std::size_t> orbit_u;       // 1^U, U = <lambda_x^2>
};

/// `gamma` may be empty, in which case origin_orbit is left empty.
NetOrbits net_orbits(const Net& net, const FiniteGroup& n, const FiniteGroup* gamma = nullptr);

}  // namespace burnloops
