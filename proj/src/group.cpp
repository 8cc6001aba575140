#include "burnloops/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace burnloops {

struct FiniteGroup::Data {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
};

namespace {

void check_degrees(std::size_t degree, std::span<const Perm> perms) {
  for (const auto& p : perms) {
    if (p.degree() != degree) throw DegreeMismatch(degree, p.degree());
  }
}

std::vector<Perm> bfs_closure(std::size_t degree, const std::vector<Perm>& gens) {
  std::unordered_map<Perm, std::uint32_t, PermHash> seen;
  std::vector<Perm> queue{Perm::identity(degree)};
  seen.emplace(queue.front(), 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      Perm next = queue[head] * g;
      if (seen.emplace(next, 0).second) queue.push_back(std::move(next));
    }
  }
  return queue;
}

}  // namespace

FiniteGroup FiniteGroup::build(std::size_t degree, std::vector<Perm> generators,
                               std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->generators = std::move(generators);
  data->elements = std::move(elements);
  data->index.reserve(data->elements.size() * 2);
  for (std::size_t i = 0; i < data->elements.size(); ++i) {
    data->index.emplace(data->elements[i], static_cast<std::uint32_t>(i));
  }
  return FiniteGroup(std::move(data));
}

FiniteGroup FiniteGroup::closure(std::size_t degree, std::vector<Perm> generators) {
  check_degrees(degree, generators);
  std::vector<Perm> gens;
  for (auto& g : generators) {
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) {
      gens.push_back(std::move(g));
    }
  }
  auto elements = bfs_closure(degree, gens);
  return build(degree, std::move(gens), std::move(elements));
}

FiniteGroup FiniteGroup::closure(std::vector<Perm> generators) {
  if (generators.empty()) throw std::invalid_argument("closure of an empty generator list");
  const auto degree = generators.front().degree();
  return closure(degree, std::move(generators));
}

FiniteGroup FiniteGroup::trivial(std::size_t degree) { return closure(degree, {}); }

FiniteGroup FiniteGroup::from_elements(std::size_t degree, std::span<const Perm> elements) {
  check_degrees(degree, elements);
  std::vector<Perm> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  FiniteGroup current = trivial(degree);
  std::vector<Perm> gens;
  for (const auto& p : sorted) {
    if (current.contains(p)) continue;
    gens.push_back(p);
    current = closure(degree, gens);
    if (current.order() > sorted.size()) break;
  }
  if (current.order() != sorted.size() ||
      !std::equal(sorted.begin(), sorted.end(), current.elements().begin())) {
    throw std::invalid_argument("element set is not a group");
  }
  return current;
}

std::size_t FiniteGroup::degree() const { return data_->degree; }
std::size_t FiniteGroup::order() const { return data_->elements.size(); }
const std::vector<Perm>& FiniteGroup::generators() const { return data_->generators; }
const std::vector<Perm>& FiniteGroup::elements() const { return data_->elements; }

bool FiniteGroup::contains(const Perm& p) const { return data_->index.count(p) > 0; }

std::optional<std::size_t> FiniteGroup::index_of(const Perm& p) const {
  auto it = data_->index.find(p);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::at(const Perm& p) const {
  auto it = data_->index.find(p);
  if (it == data_->index.end()) throw std::out_of_range("permutation is not a group member");
  return it->second;
}

bool FiniteGroup::is_abelian() const {
  const auto& gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_subgroup_of(const FiniteGroup& other) const {
  if (degree() != other.degree() || other.order() % order() != 0) return false;
  return std::all_of(generators().begin(), generators().end(),
                     [&](const Perm& g) { return other.contains(g); });
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  return a.degree() == b.degree() && a.elements() == b.elements();
}

// ---------------------------------------------------------------------------

CayleyTable::CayleyTable(const FiniteGroup& group) : order_(group.order()) {
  if (order_ > kMaxOrder) {
    throw std::invalid_argument("group too large for a Cayley table: " + std::to_string(order_));
  }
  const auto& gens = group.generators();
  // Right multiplication by each generator, and a BFS spanning tree with
  // parent[j] * gens[via[j]] = j.
  std::vector<std::vector<std::uint32_t>> right(gens.size(), std::vector<std::uint32_t>(order_));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (std::size_t i = 0; i < order_; ++i) {
      right[k][i] = static_cast<std::uint32_t>(group.at(group.element(i) * gens[k]));
    }
  }
  std::vector<std::uint32_t> bfs{0};
  std::vector<std::uint32_t> parent(order_, 0), via(order_, 0);
  std::vector<bool> reached(order_, false);
  reached[0] = true;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto next = right[k][bfs[head]];
      if (!reached[next]) {
        reached[next] = true;
        parent[next] = bfs[head];
        via[next] = static_cast<std::uint32_t>(k);
        bfs.push_back(next);
      }
    }
  }
  table_.assign(order_ * order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    auto* row = &table_[a * order_];
    row[0] = static_cast<std::uint32_t>(a);
    for (std::size_t t = 1; t < bfs.size(); ++t) {
      auto j = bfs[t];
      row[j] = right[via[j]][row[parent[j]]];
    }
  }
  inverse_.resize(order_);
  element_order_.resize(order_);
  for (std::uint32_t a = 0; a < order_; ++a) {
    for (std::uint32_t b = 0; b < order_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    std::size_t k = 1;
    for (auto x = a; x != 0; x = mul(x, a)) ++k;
    element_order_[a] = k;
  }
}

bool CayleyTable::is_abelian() const {
  for (std::uint32_t a = 0; a < order_; ++a) {
    for (std::uint32_t b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::size_t CayleyTable::centralizer_size(std::uint32_t a) const {
  std::size_t count = 0;
  for (std::uint32_t b = 0; b < order_; ++b) count += mul(a, b) == mul(b, a);
  return count;
}

std::vector<bool> CayleyTable::closure_mask(std::span<const std::uint32_t> gens) const {
  std::vector<bool> in(order_, false);
  std::vector<std::uint32_t> queue{0};
  in[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto g : gens) {
      auto next = mul(queue[head], g);
      if (!in[next]) {
        in[next] = true;
        queue.push_back(next);
      }
    }
  }
  return in;
}

std::size_t CayleyTable::closure_size(std::span<const std::uint32_t> gens) const {
  auto mask = closure_mask(gens);
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
}

std::vector<std::uint32_t> greedy_generators(const CayleyTable& table) {
  std::vector<std::uint32_t> gens;
  std::size_t current = 1;
  while (current < table.order()) {
    std::uint32_t best = 0;
    std::size_t best_size = current;
    auto mask = table.closure_mask(gens);
    for (std::uint32_t x = 1; x < table.order(); ++x) {
      if (mask[x]) continue;
      gens.push_back(x);
      auto size = table.closure_size(gens);
      gens.pop_back();
      if (size > best_size) {
        best_size = size;
        best = x;
      }
    }
    gens.push_back(best);
    current = best_size;
  }
  return gens;
}

// ---------------------------------------------------------------------------

FiniteGroup centralizer(const FiniteGroup& g, std::span<const Perm> s) {
  check_degrees(g.degree(), s);
  std::vector<Perm> members;
  for (const auto& x : g.elements()) {
    bool commutes = std::all_of(s.begin(), s.end(), [&](const Perm& y) { return x * y == y * x; });
    if (commutes) members.push_back(x);
  }
  return FiniteGroup::from_elements(g.degree(), members);
}

FiniteGroup center(const FiniteGroup& g) { return centralizer(g, g.generators()); }

FiniteGroup normal_closure(const FiniteGroup& g, std::span<const Perm> s) {
  std::vector<Perm> gens(s.begin(), s.end());
  auto current = FiniteGroup::closure(g.degree(), gens);
  bool grown = true;
  while (grown) {
    grown = false;
    for (const auto& x : g.generators()) {
      for (std::size_t i = 0; i < current.generators().size(); ++i) {
        Perm c = conjugate(current.generators()[i], x);
        if (!current.contains(c)) {
          gens.push_back(c);
          current = FiniteGroup::closure(g.degree(), gens);
          grown = true;
        }
      }
    }
  }
  return current;
}

FiniteGroup derived_subgroup(const FiniteGroup& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  }
  return normal_closure(g, comms);
}

bool is_normal(const FiniteGroup& g, const FiniteGroup& h) {
  if (h.degree() != g.degree()) throw DegreeMismatch(g.degree(), h.degree());
  for (const auto& x : h.generators()) {
    if (!g.contains(x)) throw std::invalid_argument("subgroup is not contained in the group");
  }
  for (const auto& x : g.generators()) {
    for (const auto& y : h.generators()) {
      if (!h.contains(conjugate(y, x))) return false;
    }
  }
  return true;
}

FiniteGroup quotient(const FiniteGroup& g, const FiniteGroup& n) {
  if (!is_normal(g, n)) throw std::invalid_argument("quotient by a non-normal subgroup");
  const std::size_t cosets = g.order() / n.order();
  std::vector<std::uint32_t> coset_of(g.order(), UINT32_MAX);
  std::vector<std::uint32_t> representative;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coset_of[i] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(representative.size());
    representative.push_back(static_cast<std::uint32_t>(i));
    for (const auto& m : n.elements()) coset_of[g.at(m * g.element(i))] = id;
  }
  std::vector<Perm> images;
  for (const auto& x : g.generators()) {
    std::vector<Perm::Point> img(cosets);
    for (std::size_t c = 0; c < cosets; ++c) {
      img[c] = static_cast<Perm::Point>(coset_of[g.at(g.element(representative[c]) * x)]);
    }
    images.emplace_back(std::move(img));
  }
  auto result = FiniteGroup::closure(cosets, std::move(images));
  if (result.order() * n.order() != g.order()) {
    throw std::logic_error("quotient order does not match the index");
  }
  return result;
}

std::vector<Perm::Point> orbit(const FiniteGroup& g, Perm::Point point) {
  if (point >= g.degree()) throw std::out_of_range("orbit point out of range");
  std::vector<bool> seen(g.degree(), false);
  std::vector<Perm::Point> result{point};
  seen[point] = true;
  for (std::size_t head = 0; head < result.size(); ++head) {
    for (const auto& x : g.generators()) {
      auto next = x[result[head]];
      if (!seen[next]) {
        seen[next] = true;
        result.push_back(next);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

OrbitStabilizer orbit_stabilizer(const FiniteGroup& g, Perm::Point point) {
  auto orb = orbit(g, point);
  std::vector<Perm> fixing;
  for (const auto& x : g.elements()) {
    if (x[point] == point) fixing.push_back(x);
  }
  auto stab = FiniteGroup::from_elements(g.degree(), fixing);
  if (orb.size() * stab.order() != g.order()) throw std::logic_error("orbit-stabilizer count");
  return {std::move(orb), std::move(stab)};
}

std::vector<Index2Subgroup> index2_subgroups(const FiniteGroup& g) {
  std::vector<Index2Subgroup> result;
  if (g.order() % 2 != 0) return result;
  const auto gens = FiniteGroup::from_elements(g.degree(), g.elements()).generators();
  const std::size_t k = gens.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    // Parity labelling along a BFS tree, then check every edge.
    std::vector<int> parity(g.order(), -1);
    std::vector<std::uint32_t> queue{0};
    parity[0] = 0;
    bool consistent = true;
    for (std::size_t head = 0; head < queue.size() && consistent; ++head) {
      const auto& x = g.element(queue[head]);
      for (std::size_t j = 0; j < k; ++j) {
        auto y = static_cast<std::uint32_t>(g.at(x * gens[j]));
        int p = parity[queue[head]] ^ static_cast<int>((mask >> j) & 1);
        if (parity[y] < 0) {
          parity[y] = p;
          queue.push_back(y);
        } else if (parity[y] != p) {
          consistent = false;
          break;
        }
      }
    }
    if (!consistent) continue;
    std::vector<Perm> kernel;
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (parity[i] == 0) kernel.push_back(g.element(i));
    }
    auto sub = FiniteGroup::from_elements(g.degree(), kernel);
    const bool abelian = sub.is_abelian();
    result.push_back({std::move(sub), abelian});
  }
  return result;
}

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> primes;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace

std::vector<std::size_t> abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw std::invalid_argument("abelian invariants of a non-abelian group");
  std::vector<std::size_t> orders;
  orders.reserve(g.order());
  for (const auto& x : g.elements()) orders.push_back(x.order());

  // For each prime p, |{x : x^(p^k) = 1}| = p^(sum_i min(k, e_i)); the
  // successive differences of the exponents count the cyclic factors of
  // order >= p^k.
  std::vector<std::vector<std::size_t>> prime_parts;  // prime power factors per prime, descending
  for (auto p : prime_factors(g.order())) {
    std::vector<std::size_t> exps;  // sum_i min(k, e_i) for k = 0, 1, ...
    exps.push_back(0);
    std::size_t pk = 1;
    while (true) {
      pk *= p;
      std::size_t count = 0;
      for (auto o : orders) count += (pk % o == 0);
      std::size_t e = 0;
      for (std::size_t c = count; c > 1; c /= p) ++e;
      if (e == exps.back()) break;
      exps.push_back(e);
    }
    // at_least[k] = number of factors with exponent >= k
    std::vector<std::size_t> parts;
    for (std::size_t k = exps.size() - 1; k >= 1; --k) {
      std::size_t at_least_k = exps[k] - exps[k - 1];
      std::size_t at_least_next = k + 1 < exps.size() ? exps[k + 1] - exps[k] : 0;
      std::size_t value = 1;
      for (std::size_t i = 0; i < k; ++i) value *= p;
      for (std::size_t i = 0; i < at_least_k - at_least_next; ++i) parts.push_back(value);
    }
    prime_parts.push_back(std::move(parts));
  }
  std::size_t count = 0;
  for (const auto& parts : prime_parts) count = std::max(count, parts.size());
  std::vector<std::size_t> factors(count, 1);
  for (const auto& parts : prime_parts) {
    // parts is descending; the largest prime powers go to the largest factor
    for (std::size_t i = 0; i < parts.size(); ++i) factors[count - 1 - i] *= parts[i];
  }
  return factors;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const auto da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (const auto& x : a.generators()) {
    gens.push_back(Perm::from_function(da + db, [&](std::size_t p) {
      return p < da ? x[p] : p;
    }));
  }
  for (const auto& y : b.generators()) {
    gens.push_back(Perm::from_function(da + db, [&](std::size_t p) {
      return p < da ? p : da + y[p - da];
    }));
  }
  return FiniteGroup::closure(da + db, std::move(gens));
}

std::vector<std::size_t> order_spectrum(const FiniteGroup& g) {
  std::vector<std::size_t> spectrum(g.order() + 1, 0);
  for (const auto& x : g.elements()) ++spectrum[x.order()];
  return spectrum;
}

std::size_t involution_count(const FiniteGroup& g) {
  auto spectrum = order_spectrum(g);
  return spectrum.size() > 2 ? spectrum[2] : 0;
}

}  // namespace burnloops
