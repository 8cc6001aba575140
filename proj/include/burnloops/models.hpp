#pragma once

#include <compare>
#include <string>
#include <vector>

#include "burnloops/group.hpp"
#include "burnloops/perm.hpp"

namespace burnloops {

/// B: the group G_8n with beta and gamma commuting.
/// C: the group H_8n, where beta * gamma = gamma * beta * alpha^n.
enum class Family { B, C };

char family_letter(Family f);
/// Accepts "B"/"C" (case-insensitive); throws std::invalid_argument.
Family parse_family(const std::string& text);

/// Throws std::invalid_argument unless n >= 2 (and n even for family C).
void validate_instance(Family f, int n);

/// The element alpha^i beta^j gamma^k, 0 <= i < 2n, j, k in {0, 1}.
struct NormalForm {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;

  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
  std::string to_string() const;
};

/// Reduces exponents into canonical ranges.
NormalForm normalize(int n, NormalForm x);
/// Product a * b in normal form.
///
/// Uses beta alpha = alpha^-1 beta, alpha gamma = gamma alpha, and for
/// family C gamma beta = beta gamma alpha^n with alpha^n central, so that
/// (a^i b^j c^k)(a^x b^y c^z) = a^(i + (-1)^j x + [C] n k y) b^(j+y) c^(k+z).
NormalForm nf_mul(Family f, int n, NormalForm a, NormalForm b);
NormalForm nf_inverse(Family f, int n, NormalForm a);
NormalForm nf_power(Family f, int n, NormalForm a, long long k);
/// All 8n normal forms in lexicographic order.
std::vector<NormalForm> nf_elements(int n);

/// The permutation representation of G_8n / H_8n on the right cosets of
/// <beta>, by right multiplication.
struct CosetModel {
  Family family;
  int n;
  FiniteGroup group;
  /// Lexicographically least normal form in each coset; index 0 is <beta>.
  std::vector<NormalForm> coset_labels;

  std::size_t degree() const { return coset_labels.size(); }
  Perm act(NormalForm h) const;
  std::size_t coset_of(NormalForm g) const;
  Perm alpha() const { return act({1, 0, 0}); }
  Perm beta() const { return act({0, 1, 0}); }
  Perm gamma() const { return act({0, 0, 1}); }
};

/// Throws std::invalid_argument for invalid (family, n), std::logic_error if
/// the action is not faithful.
CosetModel model_group(Family f, int n);

/// A sharply transitive set of permutations containing the identity.
struct Section {
  std::vector<Perm> perms;
  Perm::Point basepoint = 0;
  /// Normal form of each member, with the literal exponents of the listing
  /// alpha^(2i), alpha^(2j+1) beta, alpha^k beta gamma (i, j in 1..n, k in 1..2n).
  std::vector<NormalForm> labels;

  std::size_t size() const { return perms.size(); }
};

bool is_sharply_transitive(const std::vector<Perm>& perms, Perm::Point basepoint);

/// The section S(B_4n) or S(C_4n) as coset permutations. Throws
/// std::logic_error if the listed set fails sharp transitivity.
Section burn_section(Family f, int n);
Section burn_section(const CosetModel& model);

/// Named isomorphism types used as comparison targets.
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Sym3, Units, Product };
  Kind kind = Kind::Cyclic;
  int parameter = 1;  // cyclic order, dihedral order, or modulus
  std::vector<GroupSpec> factors;

  static GroupSpec cyclic(int k) { return {Kind::Cyclic, k, {}}; }
  /// Dihedral group of order `order` (so dihedral(8) = D8).
  static GroupSpec dihedral(int order) { return {Kind::Dihedral, order, {}}; }
  static GroupSpec sym3() { return {Kind::Sym3, 6, {}}; }
  static GroupSpec units_mod(int m) { return {Kind::Units, m, {}}; }
  static GroupSpec product(std::vector<GroupSpec> factors) {
    return {Kind::Product, 0, std::move(factors)};
  }

  std::size_t order() const;
  /// e.g. "Z12* x Z2", "C3", "D8".
  std::string name() const;
};

/// Throws std::invalid_argument when the order exceeds 10^4.
FiniteGroup make_reference(const GroupSpec& spec);

}  // namespace burnloops
