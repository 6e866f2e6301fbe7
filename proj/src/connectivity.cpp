#include "engel/connectivity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "engel/error.hpp"
#include "engel/field.hpp"
#include "engel/structure.hpp"

namespace engel {

// ---------------------------------------------------------------------------------------------
// Balls

Ball ball(const Group& g, const VertexSet& vs, const GraphMode& mode, const Element& x, unsigned radius,
          BallDirection direction, std::uint64_t expansion_budget) {
  const ElemIndex xi = g.index_of(x);
  if (xi == kNoIndex || !vs.contains(xi)) throw VertexError("ball centre is not a vertex: " + g.format(x));

  const bool share_classes = direction == BallDirection::out_of && g.stored();
  std::map<ElemIndex, std::vector<ElemIndex>> rep_out;  // class representative -> out-neighbours
  auto neighbours = [&](ElemIndex v) -> std::vector<ElemIndex> {
    const Element ve = g.element(v);
    if (direction == BallDirection::into) return in_neighbors(g, vs, ve, mode);
    if (!share_classes) return out_neighbors(g, vs, ve, mode, false);
    const auto& cp = g.classes();
    const ElemIndex r = cp.representatives[cp.class_of[v]];
    auto it = rep_out.find(r);
    if (it == rep_out.end()) it = rep_out.emplace(r, out_neighbors(g, vs, g.element(r), mode, false)).first;
    if (r == v) return it->second;
    // walk the transport tree from the representative down to v
    std::vector<std::uint16_t> vias;
    for (ElemIndex i = v; cp.parent[i] != i; i = cp.parent[i]) vias.push_back(cp.via[i]);
    std::vector<ElemIndex> out = it->second;
    for (auto vi = vias.rbegin(); vi != vias.rend(); ++vi) {
      const auto& act = g.conjugation_action(*vi);
      for (auto& y : out) y = act[y];
    }
    return out;
  };

  Ball b;
  std::set<ElemIndex> seen{xi};
  std::vector<ElemIndex> frontier{xi};
  b.layer_sizes.push_back(1);
  std::uint64_t expansions = 0;
  while (b.radius < radius && !frontier.empty()) {
    std::vector<ElemIndex> next;
    for (auto v : frontier) {
      if (expansions == expansion_budget) {
        b.complete = false;
        b.members.assign(seen.begin(), seen.end());
        return b;
      }
      ++expansions;
      for (auto y : neighbours(v))
        if (seen.insert(y).second) next.push_back(y);
    }
    ++b.radius;
    if (next.empty()) {
      b.radius = radius;
      break;
    }
    std::sort(next.begin(), next.end());
    b.layer_sizes.push_back(static_cast<std::uint32_t>(next.size()));
    frontier = std::move(next);
  }
  b.members.assign(seen.begin(), seen.end());
  return b;
}

// ---------------------------------------------------------------------------------------------
// Seed condensation

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::uint32_t> seed_condensation(const EngelGraph& eg) {
  const Group& g = eg.group;
  const auto& table = g.elements();
  const std::size_t nv = eg.vertex_elements.size();
  UnionFind uf(nv);
  auto unite_elements = [&](ElemIndex a, ElemIndex b) {
    const std::int32_t la = eg.local_of[a], lb = eg.local_of[b];
    if (la >= 0 && lb >= 0) uf.unite(static_cast<std::uint32_t>(la), static_cast<std::uint32_t>(lb));
  };

  // Commuting clusters: C(r^h) = C(r)^h along the class transport tree.
  const auto& cp = g.classes();
  std::vector<std::vector<ElemIndex>> cent(table.size());
  for (auto r : cp.representatives) {
    const Element& re = table[r];
    for (ElemIndex y = 0; y < table.size(); ++y)
      if (g.mul(re, table[y]) == g.mul(table[y], re)) cent[r].push_back(y);
  }
  for (ElemIndex child : cp.bfs_order) {
    const ElemIndex parent = cp.parent[child];
    if (parent != child) {
      const auto& act = g.conjugation_action(cp.via[child]);
      cent[child].reserve(cent[parent].size());
      for (auto y : cent[parent]) cent[child].push_back(act[y]);
    }
  }
  for (ElemIndex x = 0; x < table.size(); ++x) {
    if (eg.local_of[x] < 0) continue;
    for (auto y : cent[x]) unite_elements(x, y);
    std::vector<ElemIndex>().swap(cent[x]);
  }

  // Sylow subgroups: nilpotent, so their elements are pairwise Engel-adjacent.
  for (auto p : prime_divisors(g.order())) {
    Subgroup P = sylow(g, p);
    if (eg.mode.bounded()) {
      auto cls = nilpotency_class(P.as_group());
      if (!cls || *cls > eg.mode.n) continue;
    }
    std::set<std::vector<ElemIndex>> seen{P.members()};
    std::vector<std::vector<ElemIndex>> queue{P.members()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::vector<ElemIndex> cur = queue[head];
      ElemIndex first = kNoIndex;
      for (auto m : cur) {
        if (m == g.identity_index()) continue;
        if (first == kNoIndex)
          first = m;
        else
          unite_elements(first, m);
      }
      for (std::size_t s = 0; s < g.generators().size(); ++s) {
        const auto& act = g.conjugation_action(s);
        std::vector<ElemIndex> conj;
        conj.reserve(cur.size());
        for (auto m : cur) conj.push_back(act[m]);
        std::sort(conj.begin(), conj.end());
        if (seen.insert(conj).second) queue.push_back(std::move(conj));
      }
    }
  }

  std::vector<std::uint32_t> cluster(nv);
  std::vector<std::uint32_t> id(nv, std::numeric_limits<std::uint32_t>::max());
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < nv; ++v) {
    const std::uint32_t root = uf.find(v);
    if (id[root] == std::numeric_limits<std::uint32_t>::max()) id[root] = next++;
    cluster[v] = id[root];
  }
  return cluster;
}

SccResult graph_scc(const EngelGraph& eg, bool condensed) {
  if (!condensed || eg.digraph.size() == 0) return scc(eg.digraph);
  auto clusters = seed_condensation(eg);
  return scc_condensed(eg.digraph, clusters);
}

// ---------------------------------------------------------------------------------------------
// Analysis

std::string Diameter::text() const {
  if (!computed) return "not computed";
  if (!value) return "unreachable";
  return std::to_string(*value);
}

Analysis analyze_graph(const EngelGraph& eg, const AnalysisOptions& options) {
  Analysis a;
  a.order = eg.group.order();
  a.vertex_count = eg.digraph.size();
  if (a.vertex_count == 0) {
    a.verdict = "empty graph";
    a.undirected = {true, 0};
    a.directed = {true, 0};
    return a;
  }
  a.edge_count = eg.digraph.edge_count();
  SccResult comps = graph_scc(eg, options.condensation);
  a.scc_count = comps.count;
  a.strongly_connected = comps.count == 1;
  a.weakly_connected = a.strongly_connected || is_weakly_connected(eg.digraph);
  if (options.diameters && a.vertex_count <= options.diameter_vertex_limit) {
    std::span<const std::uint32_t> sources;
    if (options.equivariance) sources = eg.class_sources;
    a.undirected.computed = true;
    a.undirected.value = undirected_diameter(eg.digraph, sources);
    a.directed.computed = true;
    if (a.strongly_connected) a.directed.value = directed_diameter(eg.digraph, sources);
  }
  if (a.strongly_connected)
    a.verdict = "strongly connected";
  else if (a.weakly_connected)
    a.verdict = "weakly connected, not strongly connected";
  else
    a.verdict = "not weakly connected";
  return a;
}

Analysis analyze(const Group& g, const GraphMode& mode, const AnalysisOptions& options, const Limits& limits) {
  EngelGraph eg = build_engel_graph(g, mode, GraphOptions{options.equivariance}, limits);
  return analyze_graph(eg, options);
}

bool is_strongly_connected(const Group& g, const GraphMode& mode, const GraphOptions& options, const Limits& limits) {
  EngelGraph eg = build_engel_graph(g, mode, options, limits);
  return is_strongly_connected(eg.digraph);
}

}  // namespace engel
