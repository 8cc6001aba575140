#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "burnloops/group.hpp"

namespace burnloops {

namespace {

using Signature = std::pair<std::size_t, std::size_t>;  // element order, centralizer size

std::vector<Signature> signatures(const CayleyTable& t) {
  std::vector<Signature> sig(t.order());
  for (std::uint32_t a = 0; a < t.order(); ++a) sig[a] = {t.element_order(a), t.centralizer_size(a)};
  return sig;
}

std::size_t center_size(const CayleyTable& t) {
  std::size_t count = 0;
  for (std::uint32_t a = 0; a < t.order(); ++a) count += t.centralizer_size(a) == t.order();
  return count;
}

std::size_t derived_size(const CayleyTable& t) {
  std::vector<std::uint32_t> comms;
  std::vector<bool> seen(t.order(), false);
  for (std::uint32_t a = 0; a < t.order(); ++a) {
    for (std::uint32_t b = 0; b < t.order(); ++b) {
      auto c = t.mul(t.mul(t.inverse(a), t.inverse(b)), t.mul(a, b));
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  }
  return t.closure_size(comms);
}

/// Enumerates isomorphisms between two groups given by tables, by extending
/// images of `gens` one at a time and checking consistency on the subgroup
/// generated so far.
class IsoSearch {
 public:
  IsoSearch(const CayleyTable& src, const CayleyTable& dst, std::vector<std::uint32_t> gens)
      : src_(src), dst_(dst), gens_(std::move(gens)) {
    auto ssig = signatures(src_);
    auto dsig = signatures(dst_);
    candidates_.resize(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      for (std::uint32_t b = 0; b < dst_.order(); ++b) {
        if (dsig[b] == ssig[gens_[i]]) candidates_[i].push_back(b);
      }
    }
    images_.assign(gens_.size(), 0);
  }

  /// Calls `visit` for each isomorphism; stops when it returns false.
  void run(const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
    stop_ = false;
    descend(0, visit);
  }

 private:
  bool extend(std::size_t depth, std::vector<std::uint32_t>& map) const {
    const auto n = src_.order();
    map.assign(n, UINT32_MAX);
    std::vector<bool> used(dst_.order(), false);
    std::vector<std::uint32_t> queue{0};
    map[0] = 0;
    used[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto e = queue[head];
      for (std::size_t j = 0; j < depth; ++j) {
        const auto f = src_.mul(e, gens_[j]);
        const auto target = dst_.mul(map[e], images_[j]);
        if (map[f] == UINT32_MAX) {
          if (used[target]) return false;
          map[f] = target;
          used[target] = true;
          queue.push_back(f);
        } else if (map[f] != target) {
          return false;
        }
      }
    }
    return true;
  }

  void descend(std::size_t depth,
               const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
    if (stop_) return;
    std::vector<std::uint32_t> map;
    if (depth == gens_.size()) {
      if (extend(depth, map)) stop_ = !visit(map);
      return;
    }
    for (auto c : candidates_[depth]) {
      images_[depth] = c;
      if (!extend(depth + 1, map)) continue;
      descend(depth + 1, visit);
      if (stop_) return;
    }
  }

  const CayleyTable& src_;
  const CayleyTable& dst_;
  std::vector<std::uint32_t> gens_;
  std::vector<std::vector<std::uint32_t>> candidates_;
  std::vector<std::uint32_t> images_;
  bool stop_ = false;
};

}  // namespace

bool GroupIso::verify() const {
  if (source.order() != target.order() || image.size() != source.order()) return false;
  std::vector<bool> hit(target.order(), false);
  for (auto i : image) {
    if (i >= target.order() || hit[i]) return false;
    hit[i] = true;
  }
  for (std::size_t a = 0; a < source.order(); ++a) {
    for (std::size_t b = 0; b < source.order(); ++b) {
      auto ab = source.at(source.element(a) * source.element(b));
      if (target.element(image[a]) * target.element(image[b]) != target.element(image[ab])) {
        return false;
      }
    }
  }
  return true;
}

std::optional<GroupIso> isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.is_abelian() != h.is_abelian()) return std::nullopt;
  if (order_spectrum(g) != order_spectrum(h)) return std::nullopt;
  if (g.order() == 1) return GroupIso{g, h, {0}};

  const CayleyTable tg(g), th(h);
  if (center_size(tg) != center_size(th)) return std::nullopt;
  if (derived_size(tg) != derived_size(th)) return std::nullopt;

  std::optional<GroupIso> found;
  IsoSearch search(tg, th, greedy_generators(tg));
  search.run([&](const std::vector<std::uint32_t>& map) {
    found = GroupIso{g, h, map};
    return false;
  });
  return found;
}

FiniteGroup automorphism_group(const FiniteGroup& g, std::size_t bound) {
  if (g.order() > bound) {
    throw BoundExceeded("automorphism search bound exceeded: |G| = " + std::to_string(g.order()));
  }
  const CayleyTable t(g);
  std::vector<Perm> autos;
  IsoSearch search(t, t, greedy_generators(t));
  search.run([&](const std::vector<std::uint32_t>& map) {
    std::vector<Perm::Point> images(map.begin(), map.end());
    autos.emplace_back(std::move(images));
    return true;
  });
  return FiniteGroup::from_elements(g.order(), autos);
}

}  // namespace burnloops
