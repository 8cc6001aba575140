#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnloops/group.hpp"
#include "burnloops/loop.hpp"
#include "burnloops/models.hpp"
#include "burnloops/net.hpp"

namespace burnloops {

/// Everything derived from one (family, n): the coset model, its section,
/// the loop and its net. Loop elements are the coset indices, so G(L)
/// acts on them directly.
struct BurnInstance {
  Family family;
  int n;
  CosetModel model;
  Section section;
  Net net;

  const Loop& loop() const { return net.loop(); }
  const FiniteGroup& gl() const { return model.group; }
  Perm alpha() const { return model.alpha(); }
  Perm beta() const { return model.beta(); }
  Perm gamma() const { return model.gamma(); }
  /// The section member with the given normal form.
  Perm section_perm(NormalForm g) const { return model.act(g); }
};

BurnInstance make_instance(Family f, int n);

/// A structural assertion about the special subgroups failed.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpecialSubgroups {
  FiniteGroup t;        // (lambda_m, id), m in N_lambda
  FiniteGroup lambda0;  // <alpha, gamma> in G(L)
  FiniteGroup lambda;   // Phi^-1(Lambda_0) in N
  FiniteGroup m;        // <T, Lambda>
  FiniteGroup aut;      // Aut(L) on loop elements
  FiniteGroup a;        // (s, s), s in Aut(L)
  FiniteGroup gbar;
  Perm delta;           // (lambda_m^-2, id), m = 1^(alpha^2)
  Perm alpha_bar, beta_bar, gamma_bar;
  /// Lines x = 1 and x = m^(n/2) for C with n = 2 mod 4, else just x = 1.
  std::vector<std::size_t> gbar_lines;
};

/// Throws StructureError if Phi restricted to the chosen complement is not
/// a bijection onto G(L), or a defining element is missing.
SpecialSubgroups special_subgroups(const BurnInstance& inst, const ReflectionGroups& refl,
                                   std::size_t aut_bound = kDefaultLoopBound);

/// The subgroup of `group` whose members satisfy `keep`.
template <typename Pred>
FiniteGroup subgroup_where(const FiniteGroup& group, Pred keep) {
  std::vector<Perm> members;
  for (const auto& g : group.elements()) {
    if (keep(g)) members.push_back(g);
  }
  return FiniteGroup::from_elements(group.degree(), members);
}

struct GammaAnalysis {
  FiniteGroup gamma;
  std::vector<std::size_t> orbit_p;  // origin orbit, point indices
  FiniteGroup origin_stabilizer;
  bool m_normal = false;
  bool m_meets_a_trivially = false;
  bool order_is_product = false;
  bool stabilizer_is_a = false;
  bool m_abelian = false;
  bool m_regular_on_p = false;
  /// P = {(m, y) : m in N_lambda}.
  bool p_is_nucleus_verticals = false;

  bool all() const {
    return m_normal && m_meets_a_trivially && order_is_product && stabilizer_is_a && m_abelian &&
           m_regular_on_p && p_is_nucleus_verticals;
  }
};

GammaAnalysis analyze_gamma(const BurnInstance& inst, const SpecialSubgroups& special);
/// Gamma = <M, A>; throws StructureError if any check of analyze_gamma fails.
FiniteGroup build_gamma(const BurnInstance& inst, const SpecialSubgroups& special);

}  // namespace burnloops
