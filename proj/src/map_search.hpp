#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "burnloops/loop.hpp"

namespace burnloops::detail {

/// Enumerates bijections u from the elements of `domain` onto {0..k-1} with
/// u(identity) = seed and u(xy) = image(u(x), u(y)) for all x, y.
///
/// The map is fixed by the images of a generating set; everything else is
/// forced by propagation. `accept(g, c)` may reject candidate c for
/// generator g early.
template <typename Image, typename Accept>
class MapSearch {
 public:
  MapSearch(const Loop& domain, std::size_t seed, Image image, Accept accept)
      : domain_(domain),
        seed_(seed),
        image_(image),
        accept_(accept),
        gens_(greedy_loop_generators(domain)),
        map_(domain.order(), kUnset),
        used_(domain.order(), false) {}

  /// Calls visit(map) for each solution until it returns false.
  template <typename Visit>
  void run(Visit&& visit) {
    std::fill(map_.begin(), map_.end(), kUnset);
    std::fill(used_.begin(), used_.end(), false);
    trail_.clear();
    stop_ = false;
    if (!assign(domain_.identity(), seed_)) return;
    descend(0, visit);
  }

 private:
  static constexpr std::uint32_t kUnset = UINT32_MAX;

  bool set(std::size_t e, std::size_t img) {
    if (used_[img]) return false;
    map_[e] = static_cast<std::uint32_t>(img);
    used_[img] = true;
    trail_.push_back(static_cast<std::uint32_t>(e));
    return true;
  }

  bool check(std::size_t e, std::size_t f) {
    const auto p = domain_.mul(e, f);
    const auto target = image_(map_[e], map_[f]);
    if (map_[p] == kUnset) return set(p, target);
    return map_[p] == target;
  }

  /// Maps e to img and closes the partial map under products.
  bool assign(std::size_t e, std::size_t img) {
    if (map_[e] != kUnset) return map_[e] == img;
    std::size_t head = trail_.size();
    if (!set(e, img)) return false;
    for (; head < trail_.size(); ++head) {
      const auto x = trail_[head];
      for (std::size_t i = 0; i <= head; ++i) {
        const auto y = trail_[i];
        if (!check(x, y) || !check(y, x)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto e = trail_.back();
      used_[map_[e]] = false;
      map_[e] = kUnset;
      trail_.pop_back();
    }
  }

  template <typename Visit>
  void descend(std::size_t depth, Visit& visit) {
    if (stop_) return;
    if (depth == gens_.size()) {
      if (trail_.size() == domain_.order()) {
        std::vector<std::size_t> out(map_.begin(), map_.end());
        stop_ = !visit(out);
      }
      return;
    }
    const auto g = gens_[depth];
    if (map_[g] != kUnset) {
      descend(depth + 1, visit);
      return;
    }
    for (std::size_t c = 0; c < domain_.order() && !stop_; ++c) {
      if (used_[c] || !accept_(g, c)) continue;
      const auto mark = trail_.size();
      if (assign(g, c)) descend(depth + 1, visit);
      undo(mark);
    }
  }

  const Loop& domain_;
  std::size_t seed_;
  Image image_;
  Accept accept_;
  std::vector<std::size_t> gens_;
  std::vector<std::uint32_t> map_;
  std::vector<bool> used_;
  std::vector<std::uint32_t> trail_;
  bool stop_ = false;
};

template <typename Image, typename Accept, typename Visit>
void search_maps(const Loop& domain, std::size_t seed, Image image, Accept accept, Visit&& visit) {
  MapSearch<Image, Accept> search(domain, seed, image, accept);
  search.run(visit);
}

}  // namespace burnloops::detail
