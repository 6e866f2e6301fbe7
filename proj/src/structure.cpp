#include "engel/structure.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>

#include "engel/engel.hpp"
#include "engel/error.hpp"
#include "engel/field.hpp"

namespace engel {

// ---------------------------------------------------------------------------------------------
// Central series

CentralSeries upper_central_series(const Group& g) {
  CentralSeries series;
  series.terms.push_back(trivial_subgroup(g));
  std::vector<bool> mask(g.order(), false);
  mask[g.identity_index()] = true;
  const auto& gens = g.generators();
  while (true) {
    auto members = scan_elements(g, [&](const Element& h) {
      for (const auto& s : gens) {
        ElemIndex c = g.index_of(g.commutator(h, s));
        if (c == kNoIndex || !mask[c]) return false;
      }
      return true;
    });
    if (members.size() == series.terms.back().order()) break;
    for (auto i : members) mask[i] = true;
    series.terms.push_back(Subgroup::from_members(g, std::move(members)));
  }
  return series;
}

Subgroup center(const Group& g) {
  const auto& gens = g.generators();
  auto members = scan_elements(g, [&](const Element& h) {
    for (const auto& s : gens)
      if (g.mul(h, s) != g.mul(s, h)) return false;
    return true;
  });
  return Subgroup::from_members(g, std::move(members));
}

Subgroup hypercenter(const Group& g) { return upper_central_series(g).hypercenter(); }

// ---------------------------------------------------------------------------------------------
// Sylow subgroups, cores, Fitting subgroup

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

}  // namespace

Subgroup sylow(const Group& g, std::uint64_t p, std::uint64_t seed) {
  if (!is_prime(p)) throw InvalidArgument("sylow: " + std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(g.order(), p);
  if (target == 1) return trivial_subgroup(g);
  const auto& orders = g.element_orders();
  std::vector<ElemIndex> p_elements;
  for (ElemIndex i = 0; i < orders.size(); ++i)
    if (orders[i] > 1 && is_power_of(orders[i], p)) p_elements.push_back(i);

  std::mt19937_64 rng(seed);
  auto pick = [&](const std::vector<ElemIndex>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  std::vector<Element> gens{g.element(pick(p_elements))};
  Subgroup s = subgroup_closure(g, gens);
  // A p-subgroup that is not Sylow is properly contained in its normalizer inside a Sylow
  // p-subgroup, so a normalizing p-element outside it always exists.
  while (s.order() < target) {
    const auto mask = s.mask();
    std::vector<ElemIndex> candidates;
    for (ElemIndex y : p_elements) {
      if (mask[y]) continue;
      const Element ye = g.element(y);
      bool normalizes = true;
      for (const auto& t : s.generators()) {
        if (!mask[g.index_of(g.conjugate(t, ye))]) {
          normalizes = false;
          break;
        }
      }
      if (normalizes) candidates.push_back(y);
    }
    if (candidates.empty()) throw Error("sylow: no normalizing p-element found (group table inconsistent)");
    gens.push_back(g.element(pick(candidates)));
    s = subgroup_closure(g, gens);
  }
  return s;
}

Subgroup p_core(const Group& g, std::uint64_t p) {
  Subgroup P = sylow(g, p);
  std::vector<ElemIndex> cur = P.members();
  const std::size_t ngens = g.generators().size();
  while (true) {
    std::vector<bool> mask(g.order(), false);
    for (auto i : cur) mask[i] = true;
    std::vector<ElemIndex> next;
    for (auto i : cur) {
      bool keep = true;
      for (std::size_t s = 0; s < ngens && keep; ++s) keep = mask[g.conjugation_action(s)[i]];
      if (keep) next.push_back(i);
    }
    if (next.size() == cur.size()) break;
    cur = std::move(next);
  }
  return Subgroup::from_members(g, std::move(cur));
}

Subgroup fitting(const Group& g) {
  std::vector<Element> gens;
  for (auto p : prime_divisors(g.order())) {
    auto core = p_core(g, p);
    gens.insert(gens.end(), core.generators().begin(), core.generators().end());
  }
  return subgroup_closure(g, gens);
}

// ---------------------------------------------------------------------------------------------
// Nilpotency and solubility

Subgroup normal_closure(const Group& g, std::span<const Element> seeds) {
  std::vector<Element> gens(seeds.begin(), seeds.end());
  Subgroup s = subgroup_closure(g, gens);
  bool grown = true;
  while (grown) {
    grown = false;
    for (const auto& a : std::vector<Element>(s.generators())) {
      for (const auto& t : g.generators()) {
        Element c = g.conjugate(a, t);
        if (!s.contains(c)) {
          gens.push_back(c);
          s = subgroup_closure(g, gens);
          grown = true;
        }
      }
    }
  }
  return s;
}

Subgroup derived_subgroup(const Group& g) {
  std::vector<Element> seeds;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(g.commutator(gens[i], gens[j]));
  return normal_closure(g, seeds);
}

bool is_nilpotent(const Group& g) { return hypercenter(g).order() == g.order(); }
bool is_nilpotent(const Subgroup& s) { return is_nilpotent(s.as_group()); }

std::optional<unsigned> nilpotency_class(const Group& g) {
  auto series = upper_central_series(g);
  if (series.hypercenter().order() != g.order()) return std::nullopt;
  return static_cast<unsigned>(series.terms.size() - 1);
}

bool is_soluble(const Group& g) {
  Group cur = g;
  while (cur.order() > 1) {
    Subgroup d = derived_subgroup(cur);
    if (d.order() == cur.order()) return false;
    cur = d.as_group();
  }
  return true;
}

bool is_soluble(const Subgroup& s) { return is_soluble(s.as_group()); }

// ---------------------------------------------------------------------------------------------
// Frobenius test

FrobeniusVerdict is_frobenius(const Group& g) {
  FrobeniusVerdict verdict;
  Subgroup k = fitting(g);
  if (k.order() == 1 || k.order() == g.order()) return verdict;
  const auto kmask = k.mask();
  std::vector<Element> kernel_elements;
  for (auto i : k.members())
    if (i != g.identity_index()) kernel_elements.push_back(g.element(i));
  std::atomic<bool> violated{false};
  scan_elements(g, [&](const Element& h) {
    if (violated.load(std::memory_order_relaxed) || kmask[g.index_of(h)]) return false;
    for (const auto& e : kernel_elements) {
      if (g.mul(h, e) == g.mul(e, h)) {
        violated = true;
        return false;
      }
    }
    return false;
  });
  if (!violated) {
    verdict.frobenius = true;
    verdict.kernel = std::move(k);
  }
  return verdict;
}

// ---------------------------------------------------------------------------------------------
// Engel element sets

namespace {

enum class Side { left, right };

std::vector<ElemIndex> engel_set(const Group& g, Side side, std::uint64_t exhaustive_limit) {
  const auto& table = g.elements();
  const bool per_class = g.order() > exhaustive_limit;
  std::vector<ElemIndex> candidates;
  if (per_class) {
    candidates = g.classes().representatives;
  } else {
    candidates.resize(table.size());
    std::iota(candidates.begin(), candidates.end(), ElemIndex{0});
  }
  std::vector<char> keep(candidates.size(), 0);
  parallel_for(candidates.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t c = b; c < e; ++c) {
      const Element& a = table[candidates[c]];
      bool all = true;
      for (const auto& other : table) {
        bool adj = side == Side::left ? eng(g, other, a).adjacent : eng(g, a, other).adjacent;
        if (!adj) {
          all = false;
          break;
        }
      }
      keep[c] = all;
    }
  });
  std::vector<ElemIndex> out;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (!keep[c]) continue;
    if (per_class) {
      const auto& mem = g.classes().members[g.classes().class_of[candidates[c]]];
      out.insert(out.end(), mem.begin(), mem.end());
    } else {
      out.push_back(candidates[c]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ElemIndex> left_engel_set(const Group& g, std::uint64_t exhaustive_limit) {
  return engel_set(g, Side::left, exhaustive_limit);
}

std::vector<ElemIndex> right_engel_set(const Group& g, std::uint64_t exhaustive_limit) {
  return engel_set(g, Side::right, exhaustive_limit);
}

// ---------------------------------------------------------------------------------------------
// Prime graph

PrimeGraph prime_graph(const Group& g) {
  PrimeGraph pg;
  pg.primes = prime_divisors(g.order());
  const std::size_t k = pg.primes.size();
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
  std::vector<std::uint32_t> distinct(g.element_orders());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (auto o : distinct)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (o % pg.primes[i] == 0 && o % pg.primes[j] == 0) adj[i][j] = adj[j][i] = true;

  std::vector<std::size_t> comp(k);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!adj[i][j]) continue;
      pg.edges.emplace_back(pg.primes[i], pg.primes[j]);
      comp[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::uint64_t>> groups(k);
  for (std::size_t i = 0; i < k; ++i) groups[find(i)].push_back(pg.primes[i]);
  for (auto& c : groups)
    if (!c.empty()) pg.components.push_back(std::move(c));
  std::sort(pg.components.begin(), pg.components.end());
  return pg;
}

}  // namespace engel
