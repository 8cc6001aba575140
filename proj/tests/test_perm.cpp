#include <doctest.h>

#include <random>

#include "burnloops/instance.hpp"
#include "oracles.hpp"

using namespace burnloops;

namespace {

FiniteGroup d8() { return make_reference(GroupSpec::dihedral(8)); }
FiniteGroup klein() { return make_reference(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)})); }

Perm random_perm(std::size_t degree, std::mt19937_64& rng) {
  std::vector<Perm::Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Perm::Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Perm(images);
}

/// Small random groups: closures of one or two random permutations of
/// degree 3..6, kept when the order is at most 48.
std::vector<FiniteGroup> random_groups(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<FiniteGroup> out;
  while (out.size() < count) {
    const std::size_t degree = 3 + rng() % 4;
    std::vector<Perm> gens{random_perm(degree, rng)};
    if (rng() % 2) gens.push_back(random_perm(degree, rng));
    auto g = FiniteGroup::closure(degree, gens);
    if (g.order() <= 48) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("compose applies the left factor first") {
  const auto p = Perm::transposition(3, 0, 1);
  const auto q = Perm::transposition(3, 1, 2);
  CHECK(compose(p, q)[0] == 2);
  CHECK(p * Perm::identity(3) == p);
  CHECK(p * p.inverse() == Perm::identity(3));
  CHECK_THROWS_AS(compose(p, Perm::identity(4)), DegreeMismatch);
}

TEST_CASE("perm construction rejects non-bijections") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 3}), std::invalid_argument);
  CHECK(Perm::cycle(6).order() == 6);
  CHECK(Perm::identity(5).fixed_points() == 5);
}

TEST_CASE("power, conjugate and commutator follow the right-action formulas") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_perm(7, rng);
    const auto b = random_perm(7, rng);
    const auto c = random_perm(7, rng);
    CHECK(power(a, 3) == a * a * a);
    CHECK(power(a, -2) == a.inverse() * a.inverse());
    CHECK(power(a, 0).is_identity());
    CHECK(conjugate(a, b) == b.inverse() * a * b);
    CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
    const std::vector<Perm> three{a, b, c};
    CHECK(commutator(three) == a.inverse() * b.inverse() * c.inverse() * a * b * c);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("closure examples") {
  CHECK(FiniteGroup::closure({Perm::identity(4)}).order() == 1);
  const auto c6 = FiniteGroup::closure({Perm::cycle(6)});
  CHECK(c6.order() == 6);
  CHECK(c6.is_abelian());
  CHECK(abelian_invariants(c6) == std::vector<std::size_t>{6});

  const auto section = burn_section(Family::B, 2);
  const auto gl = FiniteGroup::closure(8, section.perms);
  CHECK(gl.order() == 16);
  const auto naive = oracle::closure(section.perms, 8);
  CHECK(std::set<Perm>(gl.elements().begin(), gl.elements().end()) == naive);
  CHECK(gl.identity().is_identity());
}

TEST_CASE("closure matches the naive oracle on random groups") {
  for (const auto& g : random_groups(11, 25)) {
    const auto naive = oracle::closure(g.generators(), g.degree());
    CHECK(std::set<Perm>(g.elements().begin(), g.elements().end()) == naive);
    CHECK(FiniteGroup::closure(g.degree(), g.elements()) == g);
  }
}

TEST_CASE("center and centralizer") {
  const auto c6 = make_reference(GroupSpec::cyclic(6));
  CHECK(center(c6) == c6);
  CHECK(center(d8()).order() == 2);
  const std::vector<Perm> id{d8().identity()};
  CHECK(centralizer(d8(), id) == d8());
  CHECK(centralizer(c6, c6.elements()) == c6);
  for (const auto& g : random_groups(3, 15)) {
    const auto z = center(g);
    CHECK(std::set<Perm>(z.elements().begin(), z.elements().end()) == oracle::center(g.elements()));
  }
}

TEST_CASE("derived subgroup and normality") {
  CHECK(derived_subgroup(make_reference(GroupSpec::cyclic(5))).order() == 1);
  CHECK(derived_subgroup(d8()).order() == 2);
  const auto g = d8();
  CHECK(is_normal(g, FiniteGroup::trivial(g.degree())));
  CHECK(is_normal(g, g));
  CHECK(is_normal(g, center(g)));
  const auto reflection = FiniteGroup::closure(g.degree(), {Perm{0, 3, 2, 1}});
  CHECK_FALSE(is_normal(g, reflection));
  CHECK_THROWS_AS(is_normal(make_reference(GroupSpec::cyclic(4)), reflection), std::invalid_argument);
}

TEST_CASE("quotient orders") {
  const auto g = d8();
  CHECK(quotient(g, g).order() == 1);
  CHECK(quotient(g, FiniteGroup::trivial(g.degree())).order() == g.order());
  const auto q = quotient(g, center(g));
  CHECK(q.order() * center(g).order() == g.order());
  CHECK(isomorphic(q, klein()));
  const auto reflection = FiniteGroup::closure(g.degree(), {Perm{0, 3, 2, 1}});
  CHECK_THROWS_AS(quotient(g, reflection), std::invalid_argument);
}

TEST_CASE("orbit-stabilizer counting") {
  const auto trivial = FiniteGroup::trivial(5);
  const auto os = orbit_stabilizer(trivial, 2);
  CHECK(os.orbit == std::vector<Perm::Point>{2});
  CHECK(os.stabilizer == trivial);
  const auto c7 = make_reference(GroupSpec::cyclic(7));
  CHECK(orbit(c7, 0).size() == 7);
  CHECK_THROWS_AS(orbit_stabilizer(c7, 7), std::out_of_range);
  for (const auto& g : random_groups(5, 20)) {
    for (Perm::Point p = 0; p < g.degree(); ++p) {
      const auto r = orbit_stabilizer(g, p);
      CHECK(r.orbit.size() * r.stabilizer.order() == g.order());
      CHECK(r.stabilizer.is_subgroup_of(g));
    }
  }
}

TEST_CASE("isomorphism test") {
  const auto c4 = make_reference(GroupSpec::cyclic(4));
  CHECK_FALSE(isomorphic(c4, klein()));
  const auto self = isomorphic(d8(), d8());
  REQUIRE(self);
  CHECK(self->verify());
  CHECK_FALSE(isomorphic(d8(), make_reference(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(4)}))));
  CHECK_FALSE(isomorphic(make_reference(GroupSpec::sym3()), make_reference(GroupSpec::cyclic(6))));
}

TEST_CASE("isomorphism is reflexive and symmetric on relabelled random groups") {
  std::mt19937_64 rng(99);
  const auto groups = random_groups(17, 30);
  for (const auto& g : groups) {
    const auto r = random_perm(g.degree(), rng);
    std::vector<Perm> gens;
    for (const auto& x : g.generators()) gens.push_back(conjugate(x, r));
    const auto h = FiniteGroup::closure(g.degree(), gens);
    const auto gh = isomorphic(g, h);
    const auto hg = isomorphic(h, g);
    REQUIRE(gh);
    REQUIRE(hg);
    CHECK(gh->verify());
    CHECK(hg->verify());
    CHECK(isomorphic(g, g));
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      CHECK(isomorphic(groups[i], groups[j]).has_value() == isomorphic(groups[j], groups[i]).has_value());
    }
  }
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(make_reference(GroupSpec::cyclic(5))).order() == 4);
  CHECK(automorphism_group(d8()).order() == 8);
  CHECK_THROWS_AS(automorphism_group(make_reference(GroupSpec::cyclic(20)), 10), BoundExceeded);

  const auto check_aut = [](const FiniteGroup& g) {
    const auto aut = automorphism_group(g);
    for (const auto& a : aut.elements()) {
      CHECK(a[0] == 0);
      for (std::size_t x = 0; x < g.order(); ++x) {
        for (std::size_t y = 0; y < g.order(); ++y) {
          CHECK(a[g.at(g.element(x) * g.element(y))] == g.at(g.element(a[x]) * g.element(a[y])));
        }
      }
    }
  };
  check_aut(d8());
  check_aut(model_group(Family::B, 3).group);
}

TEST_CASE("stabilizer of beta in aut(G)") {
  const auto stab = [](Family f, int n) {
    const auto m = model_group(f, n);
    const auto aut = automorphism_group(m.group);
    const auto ib = m.group.at(m.beta());
    return subgroup_where(aut, [&](const Perm& p) { return p[ib] == ib; });
  };
  CHECK(isomorphic(stab(Family::B, 3),
                   make_reference(GroupSpec::product({GroupSpec::units_mod(6), GroupSpec::sym3()}))));
  CHECK(isomorphic(stab(Family::C, 4),
                   make_reference(GroupSpec::product({GroupSpec::units_mod(8), GroupSpec::cyclic(2)}))));
}

TEST_CASE("index-2 subgroups") {
  const auto c4 = index2_subgroups(make_reference(GroupSpec::cyclic(4)));
  REQUIRE(c4.size() == 1);
  CHECK(c4.front().subgroup.order() == 2);
  CHECK(index2_subgroups(klein()).size() == 3);
  CHECK(index2_subgroups(make_reference(GroupSpec::cyclic(5))).empty());

  const auto inst = make_instance(Family::B, 3);
  std::size_t abelian = 0;
  for (const auto& s : index2_subgroups(inst.gl())) {
    CHECK(s.subgroup.order() * 2 == inst.gl().order());
    if (s.abelian) {
      ++abelian;
      CHECK(s.subgroup == FiniteGroup::closure(inst.gl().degree(), {inst.alpha(), inst.gamma()}));
    }
  }
  CHECK(abelian == 1);
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(make_reference(GroupSpec::cyclic(6))) == std::vector<std::size_t>{6});
  CHECK(abelian_invariants(klein()) == std::vector<std::size_t>{2, 2});
  CHECK(abelian_invariants(make_reference(GroupSpec::units_mod(8))) == std::vector<std::size_t>{2, 2});
  CHECK(abelian_invariants(make_reference(GroupSpec::product({GroupSpec::cyclic(4), GroupSpec::cyclic(6)}))) ==
        std::vector<std::size_t>{2, 12});
  CHECK(abelian_invariants(FiniteGroup::trivial(3)).empty());
  CHECK_THROWS_AS(abelian_invariants(d8()), std::invalid_argument);
}

TEST_CASE("Lagrange holds for subgroups of random groups") {
  std::mt19937_64 rng(1);
  for (const auto& g : random_groups(23, 20)) {
    for (int t = 0; t < 5; ++t) {
      const auto h = FiniteGroup::closure(g.degree(), {g.element(rng() % g.order())});
      CHECK(h.is_subgroup_of(g));
      CHECK(g.order() % h.order() == 0);
    }
    CHECK(g.order() % center(g).order() == 0);
    CHECK(g.order() % derived_subgroup(g).order() == 0);
  }
}

TEST_CASE("Cayley table of a group") {
  const auto g = d8();
  const CayleyTable t(g);
  CHECK(t.order() == 8);
  CHECK_FALSE(t.is_abelian());
  for (std::uint32_t a = 0; a < 8; ++a) {
    CHECK(t.mul(a, t.inverse(a)) == 0);
    CHECK(t.element_order(a) == g.element(a).order());
    for (std::uint32_t b = 0; b < 8; ++b) CHECK(g.element(t.mul(a, b)) == g.element(a) * g.element(b));
  }
  const auto gens = greedy_generators(t);
  CHECK(t.closure_size(gens) == 8);
}
