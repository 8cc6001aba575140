#include <doctest.h>

#include "burnloops/instance.hpp"
#include "oracles.hpp"

using namespace burnloops;

namespace {

Net burn_net(Family f, int n) { return make_instance(f, n).net; }

Loop group_loop(const FiniteGroup& g) {
  std::vector<std::vector<std::size_t>> t(g.order(), std::vector<std::size_t>(g.order()));
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) t[i][j] = g.at(g.element(i) * g.element(j));
  return Loop::from_table(t);
}

}  // namespace

TEST_CASE("net geometry") {
  const auto net = burn_net(Family::B, 2);
  CHECK(net.point_count() == 64);
  CHECK(net.line_count() == 24);
  const auto& L = net.loop();
  for (std::size_t p = 0; p < net.point_count(); ++p) {
    const auto [x, y] = net.coords(p);
    CHECK(net.point(x, y) == p);
    CHECK(net.line_through(p, Direction::Vertical) == x);
    CHECK(net.line_through(p, Direction::Horizontal) == 8 + y);
    CHECK(net.line_through(p, Direction::Transversal) == 16 + L.mul(x, y));
  }
  for (std::size_t line = 0; line < net.line_count(); ++line) CHECK(net.line_points(line).size() == 8);
}

TEST_CASE("collineations from pairs") {
  const auto net = burn_net(Family::B, 3);
  const auto& L = net.loop();
  const auto id = Perm::identity(L.order());
  const auto c = collineation_from_pair(net, id, id);
  CHECK(c.pointmap.is_identity());
  CHECK(c.direction_preserving());

  const auto p = bol_companions(L);
  const auto t = translations(L);
  for (std::size_t x = 0; x < L.order(); ++x) {
    CHECK(p[x] == t.left[x].inverse() * t.right[x].inverse());
    CHECK_NOTHROW(collineation_from_pair(net, p[x], t.left[x]));
  }
  const auto net16 = burn_net(Family::C, 4);
  const auto t16 = translations(net16.loop());
  for (auto m : nuclei(net16.loop()).left) {
    CHECK_NOTHROW(collineation_from_pair(net16, t16.left[m], Perm::identity(16)));
  }
  // lambda_x for x outside the nucleus does not give a collineation (lambda_x, id).
  const auto nuc = nuclei(L).left;
  for (std::size_t x = 0; x < L.order(); ++x) {
    if (!std::binary_search(nuc.begin(), nuc.end(), x)) {
      CHECK_THROWS_AS(collineation_from_pair(net, t.left[x], id), NotCollineation);
      break;
    }
  }
  CHECK_THROWS_AS(make_collineation(net, Perm::transposition(net.point_count(), 0, 1)), NotCollineation);
}

TEST_CASE("pair_of inverts pointmap_from_pair") {
  const auto net = burn_net(Family::C, 2);
  const auto t = translations(net.loop());
  const auto p = bol_companions(net.loop());
  for (std::size_t x = 0; x < 8; ++x) {
    const auto g = net.pointmap_from_pair(p[x], t.left[x]);
    CHECK(net.pair_of(g) == std::make_pair(p[x], t.left[x]));
  }
  CHECK_THROWS_AS(net.pair_of(Perm::transposition(64, 0, 9)), NotCollineation);
}

TEST_CASE("Bol reflections") {
  for (const auto& [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 2}, {Family::B, 3}, {Family::C, 4}}) {
    const auto net = burn_net(f, n);
    const auto& L = net.loop();
    const auto e = L.identity();
    const auto s1 = bol_reflection(net, e);
    CHECK((s1.pointmap * s1.pointmap).is_identity());
    for (std::size_t x = 0; x < L.order(); ++x) {
      for (std::size_t y = 0; y < L.order(); ++y) {
        CHECK(s1.pointmap[net.point(x, y)] == net.point(L.inverse(x), L.mul(x, y)));
      }
      CHECK(s1.pointmap[net.point(e, x)] == net.point(e, x));
    }
    CHECK(s1.direction_action[0] == Direction::Vertical);
    CHECK(s1.direction_action[1] == Direction::Transversal);
    CHECK(s1.direction_action[2] == Direction::Horizontal);
    CHECK_FALSE(s1.direction_preserving());

    const auto p = bol_companions(L);
    const auto t = translations(L);
    for (std::size_t m = 0; m < L.order(); ++m) {
      const auto sm = bol_reflection(net, m);
      CHECK((sm.pointmap * sm.pointmap).is_identity());
      for (std::size_t y = 0; y < L.order(); ++y) CHECK(sm.pointmap[net.point(m, y)] == net.point(m, y));
      CHECK(sm.pointmap * s1.pointmap == net.pointmap_from_pair(p[m], t.left[m]));
    }
  }
}

TEST_CASE("reflection groups of a group net") {
  const Net net(Loop::from_table(oracle::cyclic_table(3)));
  const auto r = reflection_groups(net);
  CHECK(r.nplus.order() == 2 * r.n.order());
  CHECK(r.n.order() == 3);
  CHECK(ker_phi(net, r.n).order() == 1);
}

TEST_CASE("reflection groups of Burn nets") {
  const auto net = burn_net(Family::B, 3);
  const auto r = reflection_groups(net);
  CHECK(r.n.order() == 3 * 24);
  CHECK(r.nplus.order() == 144);
  CHECK(is_normal(r.nplus, r.n));

  const auto net16 = burn_net(Family::C, 4);
  const auto r16 = reflection_groups(net16);
  const std::set<Perm> sigma(r16.reflections.begin(), r16.reflections.end());
  for (const auto& g : r16.nplus.generators())
    for (const auto& s : r16.reflections) CHECK(sigma.count(conjugate(s, g)) == 1);
  CHECK(all_collineations(net16, r16.nplus));
}

TEST_CASE("Phi and its kernel") {
  const auto net = burn_net(Family::B, 3);
  const auto r = reflection_groups(net);
  const auto t = translations(net.loop());
  for (std::size_t x = 0; x < 12; ++x) CHECK(phi(net, r.n, r.generators[x]) == t.left[x]);
  CHECK_THROWS_AS(phi(net, r.n, r.reflections[0]), std::invalid_argument);
  const auto k = ker_phi(net, r.n);
  CHECK(isomorphic(k, make_reference(GroupSpec::cyclic(3))));
  const auto nuc = nuclei(net.loop()).left;
  for (const auto& g : k.elements()) {
    CHECK(std::any_of(nuc.begin(), nuc.end(), [&](std::size_t m) { return t.left[m] == g; }));
  }
  for (const auto& a : r.generators)
    for (const auto& b : r.generators) CHECK(phi(net, r.n, a * b) == phi(net, r.n, a) * phi(net, r.n, b));

  const auto net16 = burn_net(Family::C, 4);
  CHECK(isomorphic(ker_phi(net16, reflection_groups(net16).n), make_reference(GroupSpec::cyclic(2))));
}

TEST_CASE("H_k filtration") {
  const auto d8 = group_loop(make_reference(GroupSpec::dihedral(8)));
  CHECK(hk_subgroup(d8, 2) == derived_subgroup(left_translation_group(d8)));

  const auto net = burn_net(Family::B, 3);
  const auto& L = net.loop();
  const auto k = ker_phi(net, reflection_groups(net).n);
  const auto h2 = hk_subgroup(L, 2);
  const auto h3 = hk_subgroup(L, 3);
  CHECK(h3 == k);
  CHECK(h2.is_subgroup_of(h3));
  CHECK(nucleus_commutators(L) == h3);
  CHECK_THROWS_AS(hk_subgroup(L, 3, 100), BoundExceeded);
  CHECK_THROWS_AS(hk_subgroup(L, 1), std::invalid_argument);
}

TEST_CASE("autotopism search") {
  const Net c4(Loop::from_table(oracle::cyclic_table(4)));
  CHECK(autotopism_group(c4, AutotopismMethod::Exhaustive).order() == 32);
  CHECK(autotopism_group(c4, AutotopismMethod::Backtracking).order() == 32);
  const Net trivial(Loop::from_table({{0}}));
  CHECK(autotopism_group(trivial, AutotopismMethod::Exhaustive).order() == 1);
  for (Family f : {Family::B, Family::C}) {
    const auto net = burn_net(f, 2);
    const auto ex = autotopism_group(net, AutotopismMethod::Exhaustive);
    CHECK(ex == autotopism_group(net, AutotopismMethod::Backtracking));
    CHECK(all_collineations(net, ex));
    // The stabilizer of the origin consists of the diagonal automorphisms.
    const auto stab = orbit_stabilizer(ex, static_cast<Perm::Point>(net.point(0, 0))).stabilizer;
    CHECK(stab.order() == automorphism_group_loop(net.loop()).order());
  }
  CHECK_THROWS_AS(autotopism_group(burn_net(Family::B, 3), AutotopismMethod::Exhaustive), BoundExceeded);
  CHECK_THROWS_AS(autotopism_group(burn_net(Family::B, 7), AutotopismMethod::Backtracking), BoundExceeded);
}

TEST_CASE("net orbits") {
  const auto orbit_size = [](Family f, int n) {
    const auto net = burn_net(f, n);
    const auto o = net_orbits(net, reflection_groups(net).n);
    CHECK(o.orbit_f == o.orbit_u);
    return o.y_axis_orbit;
  };
  CHECK(orbit_size(Family::B, 3) == 3);
  CHECK(orbit_size(Family::C, 6) == 6);
  CHECK(orbit_size(Family::B, 4) == 2);
  CHECK(orbit_size(Family::C, 4) == 2);
}
