#include <doctest.h>

#include <random>

#include "burnloops/instance.hpp"
#include "oracles.hpp"

using namespace burnloops;

namespace {

NormalForm nf(int a, int b, int c) { return {a, b, c}; }

}  // namespace

TEST_CASE("family parsing and instance validation") {
  CHECK(parse_family("B") == Family::B);
  CHECK(parse_family("c") == Family::C);
  CHECK_THROWS_AS(parse_family("D"), std::invalid_argument);
  CHECK_THROWS_AS(validate_instance(Family::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(validate_instance(Family::C, 3), std::invalid_argument);
  CHECK_NOTHROW(validate_instance(Family::B, 3));
  CHECK_THROWS_AS(model_group(Family::C, 5), std::invalid_argument);
}

TEST_CASE("defining relations hold under nf_mul") {
  for (int n = 2; n <= 10; ++n) {
    for (Family f : {Family::B, Family::C}) {
      if (f == Family::C && n % 2) continue;
      const auto a = nf(1, 0, 0), b = nf(0, 1, 0), c = nf(0, 0, 1), e = nf(0, 0, 0);
      CHECK(nf_power(f, n, a, 2 * n) == e);
      CHECK(nf_power(f, n, a, n) != e);
      CHECK(nf_mul(f, n, b, b) == e);
      CHECK(nf_mul(f, n, c, c) == e);
      const auto ab = nf_mul(f, n, a, b);
      CHECK(nf_mul(f, n, ab, ab) == e);
      CHECK(nf_mul(f, n, a, c) == nf_mul(f, n, c, a));
      const auto bc = nf_mul(f, n, b, c);
      const auto cb = nf_mul(f, n, c, b);
      if (f == Family::B) {
        CHECK(bc == cb);
      } else {
        CHECK(bc == nf_mul(f, n, cb, nf_power(f, n, a, n)));
        // (gamma beta)^2 = alpha^n in H_8n.
        CHECK(nf_mul(f, n, cb, cb) == nf(n, 0, 0));
      }
    }
  }
}

TEST_CASE("nf_mul agrees with letter-by-letter reduction") {
  for (Family f : {Family::B, Family::C}) {
    for (int n : {2, 4, 6}) {
      for (const auto& x : nf_elements(n)) {
        for (const auto& y : nf_elements(n)) {
          auto word = oracle::word_of(x);
          const auto wy = oracle::word_of(y);
          word.insert(word.end(), wy.begin(), wy.end());
          CHECK(nf_mul(f, n, x, y) == oracle::reduce(f, n, word));
        }
      }
    }
  }
}

TEST_CASE("nf_mul is associative") {
  for (Family f : {Family::B, Family::C}) {
    for (int n = 2; n <= 4; ++n) {
      if (f == Family::C && n % 2) continue;
      const auto all = nf_elements(n);
      for (const auto& x : all)
        for (const auto& y : all)
          for (const auto& z : all)
            CHECK(nf_mul(f, n, nf_mul(f, n, x, y), z) == nf_mul(f, n, x, nf_mul(f, n, y, z)));
    }
  }
  std::mt19937_64 rng(0);
  for (int n = 5; n <= 10; ++n) {
    const auto all = nf_elements(n);
    for (Family f : {Family::B, Family::C}) {
      if (f == Family::C && n % 2) continue;
      bool ok = true;
      for (int t = 0; t < 100000 / 6; ++t) {
        const auto& x = all[rng() % all.size()];
        const auto& y = all[rng() % all.size()];
        const auto& z = all[rng() % all.size()];
        ok = ok && nf_mul(f, n, nf_mul(f, n, x, y), z) == nf_mul(f, n, x, nf_mul(f, n, y, z));
      }
      CHECK(ok);
    }
  }
}

TEST_CASE("identity and inverses") {
  std::mt19937_64 rng(4);
  const int n = 6;
  const auto all = nf_elements(n);
  CHECK(all.size() == 48);
  for (int t = 0; t < 100; ++t) {
    const auto& x = all[rng() % all.size()];
    for (Family f : {Family::B, Family::C}) {
      CHECK(nf_mul(f, n, nf(0, 0, 0), x) == x);
      CHECK(nf_mul(f, n, x, nf_inverse(f, n, x)) == nf(0, 0, 0));
    }
  }
  CHECK(normalize(3, nf(-1, 3, 2)) == nf(5, 1, 0));
}

TEST_CASE("coset models") {
  const auto b2 = model_group(Family::B, 2);
  CHECK(b2.group.order() == 16);
  CHECK(b2.degree() == 8);
  CHECK(b2.group == FiniteGroup::closure(8, {b2.alpha(), b2.beta(), b2.gamma()}));
  for (int n = 2; n <= 12; ++n) {
    CHECK(model_group(Family::B, n).degree() == static_cast<std::size_t>(4 * n));
    CHECK(model_group(Family::B, n).group.order() == static_cast<std::size_t>(8 * n));
    if (n % 2 == 0) CHECK(model_group(Family::C, n).group.order() == static_cast<std::size_t>(8 * n));
  }
  const auto c2 = model_group(Family::C, 2);
  CHECK(c2.group.order() == 16);
  CHECK(power(c2.alpha(), 2).fixed_points() == 0);
  CHECK(c2.coset_labels.front() == nf(0, 0, 0));
}

TEST_CASE("act is a homomorphism") {
  for (Family f : {Family::B, Family::C}) {
    const int n = 4;
    const auto m = model_group(f, n);
    for (const auto& x : nf_elements(n)) {
      for (const auto& y : nf_elements(n)) CHECK(m.act(nf_mul(f, n, x, y)) == m.act(x) * m.act(y));
    }
  }
}

TEST_CASE("Burn sections") {
  for (int n = 2; n <= 10; ++n) {
    for (Family f : {Family::B, Family::C}) {
      if (f == Family::C && n % 2) continue;
      const auto s = burn_section(f, n);
      CHECK(s.size() == static_cast<std::size_t>(4 * n));
      CHECK(is_sharply_transitive(s.perms, s.basepoint));
      CHECK(std::count_if(s.perms.begin(), s.perms.end(), [](const Perm& p) { return p.is_identity(); }) == 1);
    }
  }
  const auto involutions = [](Family f, int n) {
    const auto s = burn_section(f, n);
    return std::count_if(s.perms.begin(), s.perms.end(), [](const Perm& p) { return p.order() == 2; });
  };
  CHECK(involutions(Family::B, 3) == 9);
  CHECK(involutions(Family::C, 4) == 5);
  CHECK_FALSE(is_sharply_transitive({Perm::identity(3), Perm{1, 0, 2}}, 0));
}

TEST_CASE("sections are closed under conjugation by G(L)") {
  for (Family f : {Family::B, Family::C}) {
    const auto s = burn_section(f, 4);
    const std::set<Perm> members(s.perms.begin(), s.perms.end());
    const auto g = model_group(f, 4).group;
    for (const auto& x : s.perms)
      for (const auto& h : g.generators()) CHECK(members.count(conjugate(x, h)) == 1);
  }
}

TEST_CASE("reference groups") {
  const auto u8 = make_reference(GroupSpec::units_mod(8));
  CHECK(u8.order() == 4);
  CHECK(abelian_invariants(u8) == std::vector<std::size_t>{2, 2});
  const auto d8 = make_reference(GroupSpec::dihedral(8));
  CHECK_FALSE(d8.is_abelian());
  CHECK(involution_count(d8) == 5);
  CHECK(make_reference(GroupSpec::product({GroupSpec::units_mod(5), GroupSpec::sym3()})).order() == 24);
  CHECK(GroupSpec::product({GroupSpec::units_mod(12), GroupSpec::cyclic(2)}).name() == "Z12* x C2");
  CHECK(make_reference(GroupSpec::units_mod(2)).order() == 1);
  CHECK_THROWS_AS(make_reference(GroupSpec::cyclic(20000)), std::invalid_argument);
}
