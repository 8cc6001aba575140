#include "burnloops/net.hpp"

#include <algorithm>
#include <numeric>

#include "map_search.hpp"

namespace burnloops {

Net::Net(Loop loop) : loop_(std::move(loop)), lines_(3 * loop_.order()) {
  const auto k = order();
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      const auto p = point(x, y);
      for (auto d : {Direction::Vertical, Direction::Horizontal, Direction::Transversal}) {
        lines_[line_through(p, d)].push_back(p);
      }
    }
  }
}

std::size_t Net::line_through(std::size_t p, Direction d) const {
  const auto [x, y] = coords(p);
  switch (d) {
    case Direction::Vertical:
      return x;
    case Direction::Horizontal:
      return order() + y;
    case Direction::Transversal:
      return 2 * order() + loop_.mul(x, y);
  }
  return 0;
}

std::optional<Perm> Net::line_action(const Perm& pointmap) const {
  if (pointmap.degree() != point_count()) throw DegreeMismatch(pointmap.degree(), point_count());
  std::vector<Perm::Point> images(line_count());
  for (std::size_t line = 0; line < line_count(); ++line) {
    const auto& pts = lines_[line];
    const auto first = pointmap[pts[0]];
    const auto second = pointmap[pts[1]];
    std::optional<std::size_t> target;
    for (auto d : {Direction::Vertical, Direction::Horizontal, Direction::Transversal}) {
      if (line_through(first, d) == line_through(second, d)) target = line_through(first, d);
    }
    if (!target) return std::nullopt;
    const auto d = static_cast<Direction>(*target / order());
    for (auto p : pts) {
      if (line_through(pointmap[p], d) != *target) return std::nullopt;
    }
    images[line] = static_cast<Perm::Point>(*target);
  }
  // A pointmap is a bijection, so distinct lines have distinct images.
  return Perm(std::move(images));
}

Perm Net::pointmap_from_pair(const Perm& u, const Perm& v) const {
  if (u.degree() != order()) throw DegreeMismatch(u.degree(), order());
  if (v.degree() != order()) throw DegreeMismatch(v.degree(), order());
  return Perm::from_function(point_count(), [&](std::size_t p) {
    const auto [x, y] = coords(p);
    return point(u[x], v[y]);
  });
}

std::pair<Perm, Perm> Net::pair_of(const Perm& pointmap) const {
  const auto e = loop_.identity();
  std::vector<bool> seen_x(order()), seen_y(order());
  for (std::size_t t = 0; t < order(); ++t) {
    const auto [x, y0] = coords(pointmap[point(t, e)]);
    const auto [x0, y] = coords(pointmap[point(e, t)]);
    if (seen_x[x] || seen_y[y]) throw NotCollineation("pointmap is not of product form");
    seen_x[x] = seen_y[y] = true;
  }
  auto u = Perm::from_function(order(), [&](std::size_t x) { return coords(pointmap[point(x, e)]).first; });
  auto v = Perm::from_function(order(), [&](std::size_t y) { return coords(pointmap[point(e, y)]).second; });
  if (pointmap_from_pair(u, v) != pointmap) throw NotCollineation("pointmap is not of product form");
  return {std::move(u), std::move(v)};
}

Collineation make_collineation(const Net& net, Perm pointmap) {
  const auto lines = net.line_action(pointmap);
  if (!lines) throw NotCollineation("some line is not mapped onto a line");
  const auto k = net.order();
  Collineation c{std::move(pointmap), {}, std::nullopt};
  for (std::size_t d = 0; d < 3; ++d) {
    c.direction_action[d] = static_cast<Direction>((*lines)[d * k] / k);
  }
  if (c.direction_action ==
      std::array{Direction::Vertical, Direction::Horizontal, Direction::Transversal}) {
    c.uv = net.pair_of(c.pointmap);
  }
  return c;
}

Collineation collineation_from_pair(const Net& net, const Perm& u, const Perm& v) {
  auto c = make_collineation(net, net.pointmap_from_pair(u, v));
  if (!c.direction_preserving()) throw NotCollineation("pair does not preserve directions");
  return c;
}

Collineation bol_reflection(const Net& net, std::size_t m) {
  const auto& L = net.loop();
  auto pointmap = Perm::from_function(net.point_count(), [&](std::size_t p) {
    const auto [x, y] = net.coords(p);
    const auto w = L.left_div(m, L.mul(x, y));
    const auto z = L.right_div(L.mul(m, y), w);
    return net.point(z, w);
  });
  if (!compose(pointmap, pointmap).is_identity()) throw NotCollineation("reflection is not involutive");
  for (std::size_t y = 0; y < net.order(); ++y) {
    if (pointmap[net.point(m, y)] != net.point(m, y)) throw NotCollineation("reflection moves its axis");
  }
  auto c = make_collineation(net, std::move(pointmap));
  if (c.direction_action !=
      std::array{Direction::Vertical, Direction::Transversal, Direction::Horizontal}) {
    throw NotCollineation("reflection does not swap horizontals and transversals");
  }
  return c;
}

bool all_collineations(const Net& net, const FiniteGroup& group) {
  return std::all_of(group.elements().begin(), group.elements().end(),
                     [&](const Perm& g) { return net.line_action(g).has_value(); });
}

ReflectionGroups reflection_groups(const Net& net) {
  ReflectionGroups r{{}, {}, FiniteGroup::trivial(net.point_count()),
                     FiniteGroup::trivial(net.point_count())};
  for (std::size_t x = 0; x < net.order(); ++x) r.reflections.push_back(bol_reflection(net, x).pointmap);
  const auto& sigma1 = r.reflections[net.loop().identity()];
  for (const auto& s : r.reflections) r.generators.push_back(s * sigma1);
  r.n = FiniteGroup::closure(net.point_count(), r.generators);
  r.nplus = FiniteGroup::closure(net.point_count(), r.reflections);
  return r;
}

Perm phi(const Net& net, const FiniteGroup& n, const Perm& c) {
  if (!n.contains(c)) throw std::invalid_argument("collineation is not a member of N");
  return net.pair_of(c).second;
}

FiniteGroup ker_phi(const Net& net, const FiniteGroup& n) {
  std::vector<Perm> kernel;
  for (const auto& g : n.elements()) {
    auto [u, v] = net.pair_of(g);
    if (v.is_identity()) kernel.push_back(std::move(u));
  }
  return FiniteGroup::from_elements(net.order(), kernel);
}

// ---------------------------------------------------------------------------

FiniteGroup hk_subgroup(const Loop& loop, std::size_t k, std::size_t budget) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const auto size = loop.order();
  double tuples = 1;
  for (std::size_t i = 0; i < k; ++i) tuples *= static_cast<double>(size);
  if (tuples > static_cast<double>(budget)) {
    throw BoundExceeded("H_k tuple budget exceeded: " + std::to_string(size) + "^" + std::to_string(k));
  }
  const auto t = translations(loop);
  const auto gl = FiniteGroup::closure(size, t.left);
  const CayleyTable table(gl);
  std::vector<std::uint32_t> section(size);
  std::vector<bool> in_section(gl.order(), false);
  for (std::size_t x = 0; x < size; ++x) {
    section[x] = static_cast<std::uint32_t>(gl.at(t.left[x]));
    in_section[section[x]] = true;
  }

  std::vector<bool> seen(gl.order(), false);
  std::vector<std::uint32_t> commutators;
  // Depth-first over tuples, carrying the product l_1...l_j and the
  // product of inverses l_1^-1...l_j^-1.
  std::vector<std::uint32_t> product(k + 1, 0), inverses(k + 1, 0);
  std::vector<std::size_t> index(k, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == k) {
      if (in_section[product[k]]) {
        const auto c = table.mul(inverses[k], product[k]);
        if (!seen[c]) {
          seen[c] = true;
          commutators.push_back(c);
        }
      }
      --depth;
      ++index[depth];
      continue;
    }
    if (index[depth] == size) {
      if (depth == 0) break;
      index[depth] = 0;
      --depth;
      ++index[depth];
      continue;
    }
    const auto s = section[index[depth]];
    product[depth + 1] = table.mul(product[depth], s);
    inverses[depth + 1] = table.mul(inverses[depth], table.inverse(s));
    ++depth;
  }
  std::vector<Perm> gens;
  for (auto c : commutators) gens.push_back(gl.element(c));
  return FiniteGroup::closure(size, std::move(gens));
}

FiniteGroup nucleus_commutators(const Loop& loop) {
  const auto t = translations(loop);
  const auto gl = FiniteGroup::closure(loop.order(), t.left);
  std::vector<Perm> gens;
  for (auto m : nuclei(loop).left) {
    for (const auto& g : gl.elements()) gens.push_back(commutator(t.left[m], g));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return FiniteGroup::closure(loop.order(), std::move(gens));
}

// ---------------------------------------------------------------------------

namespace {

/// Given u and c = v(1), the other components are forced:
/// w(x) = u(x) c and v(y) = u(1) \ w(y).
std::optional<Perm> autotopism_from(const Net& net, const std::vector<std::size_t>& u, std::size_t c) {
  const auto& L = net.loop();
  const auto k = L.order();
  const auto a = u[L.identity()];
  std::vector<std::size_t> v(k);
  for (std::size_t y = 0; y < k; ++y) v[y] = L.left_div(a, L.mul(u[y], c));
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (L.mul(u[x], v[y]) != L.mul(u[L.mul(x, y)], c)) return std::nullopt;
    }
  }
  return Perm::from_function(net.point_count(), [&](std::size_t p) {
    const auto [x, y] = net.coords(p);
    return net.point(u[x], v[y]);
  });
}

}  // namespace

FiniteGroup autotopism_group(const Net& net, AutotopismMethod method) {
  const auto& L = net.loop();
  const auto k = L.order();
  std::vector<Perm> found;
  if (method == AutotopismMethod::Exhaustive) {
    if (k > kExhaustiveAutotopismLimit) {
      throw BoundExceeded("exhaustive autotopism search is limited to order " +
                          std::to_string(kExhaustiveAutotopismLimit));
    }
    std::vector<std::size_t> u(k);
    std::iota(u.begin(), u.end(), 0);
    do {
      for (std::size_t c = 0; c < k; ++c) {
        if (auto p = autotopism_from(net, u, c)) found.push_back(std::move(*p));
      }
    } while (std::next_permutation(u.begin(), u.end()));
  } else {
    if (k > kBacktrackAutotopismLimit) {
      throw BoundExceeded("backtracking autotopism search is limited to order " +
                          std::to_string(kBacktrackAutotopismLimit));
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t c = 0; c < k; ++c) {
        // u(xy) = (u(x) * (a \ (u(y) * c))) / c
        detail::search_maps(
            L, a,
            [&](std::size_t p, std::size_t q) {
              return L.right_div(L.mul(p, L.left_div(a, L.mul(q, c))), c);
            },
            [](std::size_t, std::size_t) { return true; },
            [&](const std::vector<std::size_t>& u) {
              if (auto p = autotopism_from(net, u, c)) found.push_back(std::move(*p));
              return true;
            });
      }
    }
  }
  std::sort(found.begin(), found.end());
  return FiniteGroup::from_elements(net.point_count(), found);
}

NetOrbits net_orbits(const Net& net, const FiniteGroup& n, const FiniteGroup* gamma) {
  const auto& L = net.loop();
  const auto e = L.identity();
  const auto origin = static_cast<Perm::Point>(net.point(e, e));
  NetOrbits result;
  std::vector<bool> axis(net.order(), false);
  for (auto p : orbit(n, origin)) axis[net.coords(p).first] = true;
  result.y_axis_orbit = static_cast<std::size_t>(std::count(axis.begin(), axis.end(), true));
  if (gamma != nullptr) {
    for (auto p : orbit(*gamma, origin)) result.origin_orbit.push_back(p);
  }
  const auto t = translations(L);
  std::vector<Perm> squares;
  for (const auto& l : t.left) squares.push_back(l * l);
  const auto f = FiniteGroup::closure(L.order(), bol_companions(L));
  const auto u = FiniteGroup::closure(L.order(), std::move(squares));
  for (auto p : orbit(f, static_cast<Perm::Point>(e))) result.orbit_f.push_back(p);
  for (auto p : orbit(u, static_cast<Perm::Point>(e))) result.orbit_u.push_back(p);
  return result;
}

}  // namespace burnloops
