#include <algorithm>

#include "burnloops/loop.hpp"
#include "map_search.hpp"

namespace burnloops {

std::vector<std::size_t> greedy_loop_generators(const Loop& loop) {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> current{loop.identity()};
  while (current.size() < loop.order()) {
    std::size_t best = loop.order(), best_size = 0;
    for (std::size_t x = 0; x < loop.order(); ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      auto trial = gens;
      trial.push_back(x);
      const auto size = generated_subloop(loop, trial).size();
      if (size > best_size) {
        best = x;
        best_size = size;
      }
    }
    gens.push_back(best);
    current = generated_subloop(loop, gens);
  }
  return gens;
}

namespace {

void check_bound(const Loop& loop, std::size_t bound) {
  if (loop.order() > bound) {
    throw BoundExceeded("loop search bound exceeded: |L| = " + std::to_string(loop.order()));
  }
}

std::vector<std::size_t> power_orders(const Loop& loop) {
  std::vector<std::size_t> orders(loop.order());
  for (std::size_t x = 0; x < loop.order(); ++x) orders[x] = loop.power_order(x);
  return orders;
}

Perm to_perm(const std::vector<std::size_t>& map) {
  return Perm(std::vector<Perm::Point>(map.begin(), map.end()));
}

}  // namespace

FiniteGroup automorphism_group_loop(const Loop& loop, std::size_t bound) {
  check_bound(loop, bound);
  const auto orders = power_orders(loop);
  std::vector<Perm> autos;
  detail::search_maps(
      loop, loop.identity(), [&](std::size_t a, std::size_t b) { return loop.mul(a, b); },
      [&](std::size_t g, std::size_t c) { return orders[g] == orders[c]; },
      [&](const std::vector<std::size_t>& map) {
        autos.push_back(to_perm(map));
        return true;
      });
  return FiniteGroup::from_elements(loop.order(), autos);
}

std::vector<PseudoAut> left_pseudo_automorphisms(const Loop& loop, std::size_t bound) {
  check_bound(loop, bound);
  std::vector<PseudoAut> result;
  for (std::size_t c = 0; c < loop.order(); ++c) {
    std::vector<Perm> maps;
    detail::search_maps(
        loop, loop.identity(),
        [&](std::size_t a, std::size_t b) { return loop.left_div(c, loop.mul(loop.mul(c, a), b)); },
        [](std::size_t, std::size_t) { return true; },
        [&](const std::vector<std::size_t>& map) {
          maps.push_back(to_perm(map));
          return true;
        });
    std::sort(maps.begin(), maps.end());
    for (auto& m : maps) result.push_back({std::move(m), c});
  }
  return result;
}

std::optional<Perm> loops_isomorphic(const Loop& a, const Loop& b, std::size_t bound) {
  if (a.order() != b.order()) return std::nullopt;
  check_bound(a, bound);
  const auto oa = power_orders(a), ob = power_orders(b);
  {
    auto sa = oa, sb = ob;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::optional<Perm> found;
  detail::search_maps(
      a, b.identity(), [&](std::size_t x, std::size_t y) { return b.mul(x, y); },
      [&](std::size_t g, std::size_t c) { return oa[g] == ob[c]; },
      [&](const std::vector<std::size_t>& map) {
        found = to_perm(map);
        return false;
      });
  return found;
}

}  // namespace burnloops
