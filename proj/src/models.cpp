#include "burnloops/models.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace burnloops {

char family_letter(Family f) { return f == Family::B ? 'B' : 'C'; }

Family parse_family(const std::string& text) {
  if (text.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c == 'B') return Family::B;
    if (c == 'C') return Family::C;
  }
  throw std::invalid_argument("unknown family '" + text + "' (expected B or C)");
}

void validate_instance(Family f, int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (f == Family::C && n % 2 != 0) throw std::invalid_argument("family C requires even n");
  if (n > 1000) throw std::invalid_argument("n too large");
}

std::string NormalForm::to_string() const {
  std::ostringstream out;
  out << "a^" << alpha << " b^" << beta << " c^" << gamma;
  return out.str();
}

NormalForm normalize(int n, NormalForm x) {
  auto mod = [](int v, int m) { return ((v % m) + m) % m; };
  return {mod(x.alpha, 2 * n), mod(x.beta, 2), mod(x.gamma, 2)};
}

NormalForm nf_mul(Family f, int n, NormalForm a, NormalForm b) {
  a = normalize(n, a);
  b = normalize(n, b);
  int shift = a.beta == 0 ? b.alpha : -b.alpha;
  if (f == Family::C) shift += n * a.gamma * b.beta;
  return normalize(n, {a.alpha + shift, a.beta + b.beta, a.gamma + b.gamma});
}

NormalForm nf_power(Family f, int n, NormalForm a, long long k) {
  if (k < 0) return nf_power(f, n, nf_inverse(f, n, a), -k);
  NormalForm result{};
  for (long long i = 0; i < k % (8LL * n); ++i) result = nf_mul(f, n, result, a);
  return result;
}

NormalForm nf_inverse(Family f, int n, NormalForm a) {
  for (const auto& x : nf_elements(n)) {
    if (nf_mul(f, n, a, x) == NormalForm{}) return x;
  }
  throw std::logic_error("normal form without inverse");
}

std::vector<NormalForm> nf_elements(int n) {
  std::vector<NormalForm> all;
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) all.push_back({i, j, k});
    }
  }
  return all;
}

std::size_t CosetModel::coset_of(NormalForm g) const {
  const NormalForm beta{0, 1, 0};
  g = normalize(n, g);
  const auto label = std::min(g, nf_mul(family, n, beta, g));
  auto it = std::lower_bound(coset_labels.begin(), coset_labels.end(), label);
  if (it == coset_labels.end() || *it != label) throw std::logic_error("unknown coset");
  return static_cast<std::size_t>(it - coset_labels.begin());
}

Perm CosetModel::act(NormalForm h) const {
  return Perm::from_function(degree(), [&](std::size_t c) {
    return coset_of(nf_mul(family, n, coset_labels[c], h));
  });
}

CosetModel model_group(Family f, int n) {
  validate_instance(f, n);
  const NormalForm beta{0, 1, 0};
  std::vector<NormalForm> labels;
  for (const auto& g : nf_elements(n)) {
    labels.push_back(std::min(g, nf_mul(f, n, beta, g)));
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  CosetModel model{f, n, FiniteGroup::trivial(labels.size()), std::move(labels)};
  model.group = FiniteGroup::closure({model.alpha(), model.beta(), model.gamma()});
  if (model.group.order() != static_cast<std::size_t>(8 * n)) {
    throw std::logic_error("coset action is not faithful");
  }
  return model;
}

bool is_sharply_transitive(const std::vector<Perm>& perms, Perm::Point basepoint) {
  if (perms.empty()) return false;
  const auto degree = perms.front().degree();
  if (perms.size() != degree || basepoint >= degree) return false;
  std::vector<bool> hit(degree, false);
  for (const auto& p : perms) {
    if (p.degree() != degree || hit[p[basepoint]]) return false;
    hit[p[basepoint]] = true;
  }
  return true;
}

Section burn_section(const CosetModel& model) {
  const int n = model.n;
  Section s;
  s.basepoint = static_cast<Perm::Point>(model.coset_of({0, 0, 0}));
  for (int i = 1; i <= n; ++i) s.labels.push_back({2 * i, 0, 0});
  for (int j = 1; j <= n; ++j) s.labels.push_back({2 * j + 1, 1, 0});
  for (int k = 1; k <= 2 * n; ++k) s.labels.push_back({k, 1, 1});
  for (const auto& label : s.labels) s.perms.push_back(model.act(label));
  if (!is_sharply_transitive(s.perms, s.basepoint)) {
    throw std::logic_error("section is not sharply transitive");
  }
  return s;
}

Section burn_section(Family f, int n) { return burn_section(model_group(f, n)); }

// ---------------------------------------------------------------------------

namespace {

std::vector<int> units(int m) {
  std::vector<int> result;
  for (int u = 1; u < std::max(m, 2); ++u) {
    if (std::gcd(u, m) == 1) result.push_back(u);
  }
  if (m <= 2) result = {1};
  return result;
}

}  // namespace

std::size_t GroupSpec::order() const {
  switch (kind) {
    case Kind::Cyclic:
    case Kind::Dihedral:
    case Kind::Sym3:
      return static_cast<std::size_t>(parameter);
    case Kind::Units:
      return units(parameter).size();
    case Kind::Product: {
      std::size_t total = 1;
      for (const auto& f : factors) total *= f.order();
      return total;
    }
  }
  return 0;
}

std::string GroupSpec::name() const {
  switch (kind) {
    case Kind::Cyclic:
      return "C" + std::to_string(parameter);
    case Kind::Dihedral:
      return "D" + std::to_string(parameter);
    case Kind::Sym3:
      return "S3";
    case Kind::Units:
      return "Z" + std::to_string(parameter) + "*";
    case Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " x " : "") + factors[i].name();
      return out;
    }
  }
  return {};
}

FiniteGroup make_reference(const GroupSpec& spec) {
  if (spec.order() > 10000) throw std::invalid_argument("reference group too large");
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: {
      if (spec.parameter < 1) throw std::invalid_argument("cyclic order must be positive");
      if (spec.parameter == 1) return FiniteGroup::trivial(1);
      return FiniteGroup::closure({Perm::cycle(static_cast<std::size_t>(spec.parameter))});
    }
    case GroupSpec::Kind::Dihedral: {
      const int order = spec.parameter;
      if (order < 2 || order % 2 != 0) throw std::invalid_argument("dihedral order must be even");
      const int k = order / 2;
      if (k == 1) return make_reference(GroupSpec::cyclic(2));
      if (k == 2) {
        return FiniteGroup::closure({Perm{1, 0, 3, 2}, Perm{2, 3, 0, 1}});
      }
      const auto size = static_cast<std::size_t>(k);
      auto reflection = Perm::from_function(size, [&](std::size_t x) { return (k - x) % size; });
      return FiniteGroup::closure({Perm::cycle(size), reflection});
    }
    case GroupSpec::Kind::Sym3:
      return FiniteGroup::closure({Perm{1, 2, 0}, Perm{1, 0, 2}});
    case GroupSpec::Kind::Units: {
      const int m = spec.parameter;
      if (m < 1) throw std::invalid_argument("modulus must be positive");
      const auto us = units(m);
      if (us.size() == 1) return FiniteGroup::trivial(1);
      std::map<int, std::size_t> position;
      for (std::size_t i = 0; i < us.size(); ++i) position[us[i]] = i;
      std::vector<Perm> gens;
      for (int u : us) {
        gens.push_back(Perm::from_function(us.size(), [&](std::size_t i) {
          return position.at(static_cast<int>((static_cast<long long>(us[i]) * u) % m));
        }));
      }
      return FiniteGroup::closure(us.size(), std::move(gens));
    }
    case GroupSpec::Kind::Product: {
      FiniteGroup result = FiniteGroup::trivial(0);
      for (const auto& f : spec.factors) result = direct_product(result, make_reference(f));
      return result;
    }
  }
  throw std::invalid_argument("unknown group spec");
}

}  // namespace burnloops
