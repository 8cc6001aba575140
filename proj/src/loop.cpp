#include "burnloops/loop.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace burnloops {

Loop Loop::from_table(const std::vector<std::vector<std::size_t>>& rows,
                      std::vector<std::string> labels) {
  const std::size_t k = rows.size();
  if (k == 0) throw InvalidLoop("empty table");
  if (k > Perm::kMaxDegree) throw InvalidLoop("table too large");
  if (!labels.empty() && labels.size() != k) throw InvalidLoop("label count does not match order");
  Loop loop;
  loop.order_ = k;
  loop.mul_.resize(k * k);
  loop.ldiv_.assign(k * k, 0);
  loop.rdiv_.assign(k * k, 0);
  std::vector<bool> row_seen(k), col_seen(k * k, false);
  for (std::size_t x = 0; x < k; ++x) {
    if (rows[x].size() != k) throw InvalidLoop("table is not square");
    std::fill(row_seen.begin(), row_seen.end(), false);
    for (std::size_t y = 0; y < k; ++y) {
      const auto z = rows[x][y];
      if (z >= k) throw InvalidLoop("table entry out of range");
      if (row_seen[z]) throw InvalidLoop("row " + std::to_string(x) + " repeats an entry");
      if (col_seen[y * k + z]) throw InvalidLoop("column " + std::to_string(y) + " repeats an entry");
      row_seen[z] = true;
      col_seen[y * k + z] = true;
      loop.mul_[x * k + y] = static_cast<std::uint16_t>(z);
      loop.ldiv_[x * k + z] = static_cast<std::uint16_t>(y);
      loop.rdiv_[z * k + y] = static_cast<std::uint16_t>(x);
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < k && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < k && ok; ++x) ok = rows[e][x] == x && rows[x][e] == x;
    if (ok) {
      loop.identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidLoop("table has no two-sided identity");
  loop.labels_ = std::move(labels);
  return loop;
}

std::vector<std::vector<std::size_t>> Loop::rows() const {
  std::vector<std::vector<std::size_t>> out(order_, std::vector<std::size_t>(order_));
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y) out[x][y] = mul(x, y);
  }
  return out;
}

bool Loop::is_associative() const {
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y) {
      for (std::size_t z = 0; z < order_; ++z) {
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return false;
      }
    }
  }
  return true;
}

std::size_t Loop::power_order(std::size_t x) const {
  std::size_t k = 1;
  for (auto p = x; p != identity_; p = mul(x, p)) ++k;
  return k;
}

Loop loop_from_section(const Section& s, Perm::Point basepoint) {
  if (!is_sharply_transitive(s.perms, basepoint)) {
    throw InvalidLoop("section is not sharply transitive");
  }
  const auto k = s.perms.size();
  std::vector<const Perm*> lambda(k, nullptr);
  for (const auto& p : s.perms) lambda[p[basepoint]] = &p;
  std::vector<std::vector<std::size_t>> rows(k, std::vector<std::size_t>(k));
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) rows[x][y] = (*lambda[x])[y];
  }
  return Loop::from_table(rows);
}

Loop loop_from_section(const Section& s) { return loop_from_section(s, s.basepoint); }

Translations translations(const Loop& loop) {
  const auto k = loop.order();
  Translations t;
  for (std::size_t x = 0; x < k; ++x) {
    t.left.push_back(Perm::from_function(k, [&](std::size_t y) { return loop.mul(x, y); }));
    t.right.push_back(Perm::from_function(k, [&](std::size_t y) { return loop.mul(y, x); }));
    t.inverse.push_back(loop.inverse(x));
  }
  return t;
}

std::vector<Perm> bol_companions(const Loop& loop) {
  auto t = translations(loop);
  std::vector<Perm> p;
  for (std::size_t x = 0; x < loop.order(); ++x) {
    p.push_back(t.left[x].inverse() * t.right[x].inverse());
  }
  return p;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kExhaustiveLimit = 64;
constexpr std::size_t kSampledTriples = 200000;

template <typename Pred>
bool for_all_triples(const Loop& loop, Pred pred) {
  const auto k = loop.order();
  if (k <= kExhaustiveLimit) {
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        for (std::size_t z = 0; z < k; ++z) {
          if (!pred(x, y, z)) return false;
        }
      }
    }
    return true;
  }
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (std::size_t i = 0; i < kSampledTriples; ++i) {
    if (!pred(pick(rng), pick(rng), pick(rng))) return false;
  }
  return true;
}

}  // namespace

bool is_left_bol(const Loop& L) {
  return for_all_triples(L, [&](std::size_t x, std::size_t y, std::size_t z) {
    return L.mul(x, L.mul(y, L.mul(x, z))) == L.mul(L.mul(x, L.mul(y, x)), z);
  });
}

bool is_moufang(const Loop& L) {
  return for_all_triples(L, [&](std::size_t x, std::size_t y, std::size_t z) {
    return L.mul(L.mul(x, y), L.mul(z, x)) == L.mul(L.mul(x, L.mul(y, z)), x);
  });
}

bool has_left_inverse_property(const Loop& L) {
  for (std::size_t x = 0; x < L.order(); ++x) {
    const auto xi = L.inverse(x);
    for (std::size_t y = 0; y < L.order(); ++y) {
      if (L.mul(xi, L.mul(x, y)) != y) return false;
    }
  }
  return true;
}

bool is_left_conjugacy_closed(const Loop& L) {
  const auto t = translations(L);
  std::unordered_set<Perm, PermHash> section(t.left.begin(), t.left.end());
  // G(L) is generated by the left translations themselves.
  for (const auto& g : t.left) {
    const auto gi = g.inverse();
    for (const auto& s : t.left) {
      if (!section.count(gi * s * g)) return false;
    }
  }
  return true;
}

IdentityFlags check_identities(const Loop& loop) {
  IdentityFlags flags;
  flags.left_bol = is_left_bol(loop);
  flags.moufang = is_moufang(loop);
  flags.left_conjugacy_closed = is_left_conjugacy_closed(loop);
  flags.left_inverse_property = has_left_inverse_property(loop);
  flags.sampled = loop.order() > kExhaustiveLimit;
  return flags;
}

Nuclei nuclei(const Loop& L) {
  const auto k = L.order();
  Nuclei nuc;
  for (std::size_t a = 0; a < k; ++a) {
    bool left = true, middle = true, right = true;
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        left = left && L.mul(a, L.mul(x, y)) == L.mul(L.mul(a, x), y);
        middle = middle && L.mul(L.mul(x, a), y) == L.mul(x, L.mul(a, y));
        right = right && L.mul(L.mul(x, y), a) == L.mul(x, L.mul(y, a));
      }
    }
    if (left) nuc.left.push_back(a);
    if (middle) nuc.middle.push_back(a);
    if (right) nuc.right.push_back(a);
  }
  return nuc;
}

std::vector<std::size_t> generated_subloop(const Loop& L, std::span<const std::size_t> elements) {
  std::vector<bool> in(L.order(), false);
  std::vector<std::size_t> members{L.identity()};
  in[L.identity()] = true;
  for (auto e : elements) {
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
    }
  }
  // Close under products; finite closure under products gives a subloop.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (auto p : {L.mul(members[i], members[j]), L.mul(members[j], members[i])}) {
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subloop(const Loop& L, std::span<const std::size_t> subset) {
  std::vector<bool> in(L.order(), false);
  for (auto e : subset) {
    if (e >= L.order()) return false;
    in[e] = true;
  }
  if (!in[L.identity()]) return false;
  for (auto x : subset) {
    for (auto y : subset) {
      if (!in[L.mul(x, y)]) return false;
    }
  }
  return true;
}

Loop subloop(const Loop& L, std::span<const std::size_t> subset) {
  if (!is_subloop(L, subset)) throw InvalidLoop("set is not a subloop");
  std::vector<std::size_t> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<std::size_t> position(L.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) position[members[i]] = i;
  std::vector<std::vector<std::size_t>> rows(members.size(), std::vector<std::size_t>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      rows[i][j] = position[L.mul(members[i], members[j])];
    }
  }
  return Loop::from_table(rows);
}

namespace {

/// Coset id of every element for the left cosets xS, or nullopt if they do
/// not partition L.
std::optional<std::vector<std::size_t>> left_coset_ids(const Loop& L,
                                                       std::span<const std::size_t> subset) {
  std::vector<std::size_t> id(L.order(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t x = 0; x < L.order(); ++x) {
    if (id[x] != SIZE_MAX) continue;
    for (auto s : subset) {
      auto xs = L.mul(x, s);
      if (id[xs] != SIZE_MAX) return std::nullopt;
      id[xs] = next;
    }
    ++next;
  }
  return id;
}

}  // namespace

bool is_normal_subloop(const Loop& L, std::span<const std::size_t> subset) {
  if (!is_subloop(L, subset)) throw InvalidLoop("set is not a subloop");
  auto ids = left_coset_ids(L, subset);
  if (!ids) return false;
  const auto& id = *ids;
  // Sx = xS, and every translation maps blocks onto blocks.
  for (std::size_t x = 0; x < L.order(); ++x) {
    for (auto s : subset) {
      if (id[L.mul(s, x)] != id[x]) return false;
    }
  }
  for (std::size_t z = 0; z < L.order(); ++z) {
    for (std::size_t x = 0; x < L.order(); ++x) {
      for (auto s : subset) {
        const auto xs = L.mul(x, s);
        if (id[L.mul(z, xs)] != id[L.mul(z, x)]) return false;
        if (id[L.mul(xs, z)] != id[L.mul(x, z)]) return false;
      }
    }
  }
  return true;
}

Loop quotient_loop(const Loop& L, std::span<const std::size_t> subset) {
  if (!is_normal_subloop(L, subset)) throw InvalidLoop("quotient by a non-normal subloop");
  const auto id = *left_coset_ids(L, subset);
  const std::size_t count = *std::max_element(id.begin(), id.end()) + 1;
  std::vector<std::size_t> representative(count, SIZE_MAX);
  for (std::size_t x = 0; x < L.order(); ++x) {
    if (representative[id[x]] == SIZE_MAX) representative[id[x]] = x;
  }
  std::vector<std::vector<std::size_t>> rows(count, std::vector<std::size_t>(count));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      rows[a][b] = id[L.mul(representative[a], representative[b])];
    }
  }
  return Loop::from_table(rows);
}

MultiplicationGroups multiplication_groups(const Loop& loop) {
  auto t = translations(loop);
  std::vector<Perm> all = t.left;
  all.insert(all.end(), t.right.begin(), t.right.end());
  return {FiniteGroup::closure(loop.order(), t.left), FiniteGroup::closure(loop.order(), t.right),
          FiniteGroup::closure(loop.order(), all)};
}

FiniteGroup left_translation_group(const Loop& loop) {
  auto group = FiniteGroup::closure(loop.order(), translations(loop).left);
  if (group.order() != loop.order()) throw InvalidLoop("loop is not a group");
  return group;
}

// ---------------------------------------------------------------------------

CoreGroupoid::CoreGroupoid(const Loop& loop) : order_(loop.order()), table_(order_ * order_) {
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y) {
      table_[x * order_ + y] =
          static_cast<std::uint16_t>(loop.mul(x, loop.mul(loop.inverse(y), x)));
    }
  }
  if (!idempotent()) throw IdentityViolation("core is not idempotent");
  if (!left_keyes()) throw IdentityViolation("core violates x + (x + y) = y");
  if (!left_distributive()) throw IdentityViolation("core is not left distributive");
}

bool CoreGroupoid::idempotent() const {
  for (std::size_t x = 0; x < order_; ++x) {
    if (plus(x, x) != x) return false;
  }
  return true;
}

bool CoreGroupoid::left_keyes() const {
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y) {
      if (plus(x, plus(x, y)) != y) return false;
    }
  }
  return true;
}

bool CoreGroupoid::left_distributive() const {
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y) {
      for (std::size_t z = 0; z < order_; ++z) {
        if (plus(x, plus(y, z)) != plus(plus(x, y), plus(x, z))) return false;
      }
    }
  }
  return true;
}

CoreGroupoid core(const Loop& loop) { return CoreGroupoid(loop); }

FiniteGroup core_group(const Loop& loop) {
  const CoreGroupoid c(loop);
  std::vector<Perm> gens;
  for (std::size_t a = 0; a < c.order(); ++a) {
    gens.push_back(Perm::from_function(c.order(), [&](std::size_t x) { return c.plus(a, x); }));
  }
  return FiniteGroup::closure(c.order(), std::move(gens));
}

}  // namespace burnloops
