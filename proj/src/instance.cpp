#include "burnloops/instance.hpp"

#include <algorithm>

namespace burnloops {

BurnInstance make_instance(Family f, int n) {
  auto model = model_group(f, n);
  auto section = burn_section(model);
  auto loop = loop_from_section(section);
  if (loop.identity() != 0 || section.basepoint != 0) {
    throw std::logic_error("coset <beta> is expected at index 0");
  }
  std::vector<std::string> labels;
  for (const auto& c : model.coset_labels) labels.push_back(c.to_string());
  loop = Loop::from_table(loop.rows(), std::move(labels));
  return BurnInstance{f, n, std::move(model), std::move(section), Net(std::move(loop))};
}

namespace {

std::size_t x_image(const Net& net, const Perm& g, std::size_t x) {
  const auto e = net.loop().identity();
  return net.coords(g[net.point(x, e)]).first;
}

const Perm& unique_over(const FiniteGroup& gbar, const Net& net, const Perm& target,
                        const char* name) {
  const Perm* found = nullptr;
  for (const auto& g : gbar.elements()) {
    if (net.pair_of(g).second == target) {
      if (found != nullptr) throw StructureError(std::string("two complement elements over ") + name);
      found = &g;
    }
  }
  if (found == nullptr) throw StructureError(std::string("no complement element over ") + name);
  return *found;
}

}  // namespace

SpecialSubgroups special_subgroups(const BurnInstance& inst, const ReflectionGroups& refl,
                                   std::size_t aut_bound) {
  const auto& net = inst.net;
  const auto& L = inst.loop();
  const auto k = L.order();
  const auto e = L.identity();
  const auto id = Perm::identity(k);
  const auto t_left = translations(L).left;

  std::vector<Perm> t_gens;
  for (auto m : nuclei(L).left) t_gens.push_back(net.pointmap_from_pair(t_left[m], id));
  auto t = FiniteGroup::closure(net.point_count(), t_gens);

  auto lambda0 = FiniteGroup::closure(k, {inst.alpha(), inst.gamma()});
  auto lambda = subgroup_where(refl.n, [&](const Perm& g) { return lambda0.contains(net.pair_of(g).second); });

  std::vector<Perm> m_gens = t.generators();
  m_gens.insert(m_gens.end(), lambda.generators().begin(), lambda.generators().end());
  auto m = FiniteGroup::closure(net.point_count(), std::move(m_gens));

  auto aut = automorphism_group_loop(L, aut_bound);
  std::vector<Perm> a_gens;
  for (const auto& s : aut.generators()) a_gens.push_back(net.pointmap_from_pair(s, s));
  auto a = FiniteGroup::closure(net.point_count(), std::move(a_gens));

  std::vector<std::size_t> lines{e};
  if (inst.family == Family::C && inst.n % 4 == 2) lines.push_back(power(inst.alpha(), inst.n)[e]);
  auto in_lines = [&](std::size_t x) { return std::find(lines.begin(), lines.end(), x) != lines.end(); };
  auto gbar = subgroup_where(refl.n, [&](const Perm& g) {
    return std::all_of(lines.begin(), lines.end(), [&](std::size_t x) { return in_lines(x_image(net, g, x)); });
  });
  if (gbar.order() != inst.gl().order()) {
    throw StructureError("complement has order " + std::to_string(gbar.order()) + ", expected " +
                         std::to_string(inst.gl().order()));
  }

  const auto lambda_m = power(inst.alpha(), 2);
  auto delta = net.pointmap_from_pair(power(lambda_m, -2), id);
  if (!refl.n.contains(delta)) throw StructureError("(lambda_m^-2, id) is not in N");

  auto alpha_bar = unique_over(gbar, net, inst.alpha(), "alpha");
  auto beta_bar = unique_over(gbar, net, inst.beta(), "beta");
  auto gamma_bar = unique_over(gbar, net, inst.gamma(), "gamma");
  return SpecialSubgroups{std::move(t),        std::move(lambda0),   std::move(lambda),
                          std::move(m),        std::move(aut),       std::move(a),
                          std::move(gbar),     std::move(delta),     std::move(alpha_bar),
                          std::move(beta_bar), std::move(gamma_bar), std::move(lines)};
}

GammaAnalysis analyze_gamma(const BurnInstance& inst, const SpecialSubgroups& sp) {
  const auto& net = inst.net;
  const auto e = inst.loop().identity();
  const auto origin = static_cast<Perm::Point>(net.point(e, e));

  std::vector<Perm> gens = sp.m.generators();
  gens.insert(gens.end(), sp.a.generators().begin(), sp.a.generators().end());
  auto gamma = FiniteGroup::closure(net.point_count(), std::move(gens));
  auto os = orbit_stabilizer(gamma, origin);

  GammaAnalysis g{gamma, {}, os.stabilizer};
  g.orbit_p.assign(os.orbit.begin(), os.orbit.end());
  g.m_normal = is_normal(gamma, sp.m);
  g.m_meets_a_trivially =
      std::count_if(sp.a.elements().begin(), sp.a.elements().end(),
                    [&](const Perm& x) { return sp.m.contains(x); }) == 1;
  g.order_is_product = gamma.order() == sp.m.order() * sp.a.order();
  g.stabilizer_is_a = os.stabilizer == sp.a;
  g.m_abelian = sp.m.is_abelian();
  const auto m_orbit = orbit(sp.m, origin);
  g.m_regular_on_p = std::equal(m_orbit.begin(), m_orbit.end(), os.orbit.begin(), os.orbit.end()) &&
                     sp.m.order() == os.orbit.size();
  std::vector<std::size_t> verticals;
  for (auto x : nuclei(inst.loop()).left) {
    for (std::size_t y = 0; y < net.order(); ++y) verticals.push_back(net.point(x, y));
  }
  std::sort(verticals.begin(), verticals.end());
  g.p_is_nucleus_verticals = verticals == g.orbit_p;
  return g;
}

FiniteGroup build_gamma(const BurnInstance& inst, const SpecialSubgroups& special) {
  auto analysis = analyze_gamma(inst, special);
  if (!analysis.all()) throw StructureError("Gamma failed a structural check");
  return analysis.gamma;
}

}  // namespace burnloops
