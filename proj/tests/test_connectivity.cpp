#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "engel/catalog.hpp"
#include "engel/connectivity.hpp"
#include "engel/digraph.hpp"
#include "engel/verify.hpp"

using namespace engel;

namespace {

// reach[u][v]: v reachable from u, by repeated DFS.
std::vector<std::vector<bool>> closure(const Digraph& d) {
  const std::size_t n = d.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    reach[s][s] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (d.has_edge(u, v) && !reach[s][v]) {
          reach[s][v] = true;
          stack.push_back(v);
        }
    }
  }
  return reach;
}

void check_scc(const Digraph& d, const SccResult& r) {
  const auto reach = closure(d);
  const std::size_t n = d.size();
  REQUIRE(r.component.size() == n);
  std::set<std::uint32_t> ids(r.component.begin(), r.component.end());
  CHECK(ids.size() == r.count);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      CHECK((r.component[u] == r.component[v]) == (reach[u][v] && reach[v][u]));
      if (d.has_edge(u, v) && r.component[u] != r.component[v]) CHECK(r.component[u] > r.component[v]);
    }
}

// All-pairs BFS by plain queues over the adjacency test.
std::optional<std::uint32_t> oracle_diameter(const Digraph& d) {
  const std::size_t n = d.size();
  std::uint32_t best = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<std::size_t> queue{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (std::size_t v = 0; v < n; ++v)
        if (d.has_edge(queue[h], v) && dist[v] < 0) {
          dist[v] = dist[queue[h]] + 1;
          queue.push_back(v);
        }
    for (int x : dist) {
      if (x < 0) return std::nullopt;
      best = std::max(best, static_cast<std::uint32_t>(x));
    }
  }
  return best;
}

// Component labels may differ; the partitions must not.
bool same_partition(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return false;
  std::map<std::uint32_t, std::uint32_t> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ab.emplace(a[i], b[i]).first->second != b[i]) return false;
    if (ba.emplace(b[i], a[i]).first->second != a[i]) return false;
  }
  return true;
}

Digraph random_digraph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Digraph d(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (coin(rng)) d.add_edge(u, v);
  return d;
}

Analysis run(const GroupSpecExpr& e, const GraphMode& mode, bool diameters = false) {
  AnalysisOptions o;
  o.diameters = diameters;
  return analyze(make_group(e), mode, o);
}

}  // namespace

TEST_CASE("Tarjan agrees with mutual reachability on random digraphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 90;
    const double p = (trial % 3 == 0) ? 0.01 : (trial % 3 == 1 ? 0.03 : 0.1);
    Digraph d = random_digraph(n, p, rng);
    SccResult r = scc(d);
    check_scc(d, r);
    CHECK(is_strongly_connected(d) == (r.count == 1));
    CHECK(is_weakly_connected(d) == (scc(d.symmetrized()).count == 1));
    for (const auto& [a, b] : r.condensation_edges) CHECK(a > b);
  }
  // a long path must not overflow any stack
  Digraph path(20000);
  for (std::size_t i = 0; i + 1 < 20000; ++i) path.add_edge(i, i + 1);
  CHECK(scc(path).count == 20000);
  path.add_edge(19999, 0);
  CHECK(scc(path).count == 1);
}

TEST_CASE("SCCs of Engel graphs agree with the reachability oracle") {
  for (const auto& e : small_corpus()) {
    Group g = make_group(e);
    for (const auto& mode : {GraphMode::gamma(), GraphMode::gamma_n(2)}) {
      EngelGraph eg = build_engel_graph(g, mode);
      SccResult plain = graph_scc(eg, false);
      SccResult condensed = graph_scc(eg, true);
      check_scc(eg.digraph, plain);
      check_scc(eg.digraph, condensed);
      CHECK(plain.count == condensed.count);
    }
  }
}

TEST_CASE("condensation clusters lie inside strong components") {
  for (const auto& e : medium_corpus()) {
    Group g = make_group(e);
    for (const auto& mode : {GraphMode::gamma(), GraphMode::gamma_n(2), GraphMode::gamma_n(3)}) {
      EngelGraph eg = build_engel_graph(g, mode);
      auto cluster = seed_condensation(eg);
      SccResult plain = graph_scc(eg, false);
      REQUIRE(cluster.size() == eg.digraph.size());
      std::map<std::uint32_t, std::uint32_t> comp_of_cluster;
      for (std::size_t v = 0; v < cluster.size(); ++v) {
        auto [it, fresh] = comp_of_cluster.emplace(cluster[v], plain.component[v]);
        CHECK(it->second == plain.component[v]);
      }
      CHECK(same_partition(graph_scc(eg, true).component, plain.component));
    }
  }
}

TEST_CASE("diameters match all-pairs BFS") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Digraph d = random_digraph(2 + rng() % 40, 0.15, rng);
    CHECK(directed_diameter(d) == oracle_diameter(d));
    CHECK(undirected_diameter(d) == oracle_diameter(d.symmetrized()));
  }
  for (const auto& e : small_corpus()) {
    Group g = make_group(e);
    EngelGraph eg = build_engel_graph(g, GraphMode::gamma());
    const auto directed = oracle_diameter(eg.digraph);
    const auto undirected = oracle_diameter(eg.digraph.symmetrized());
    CHECK(directed_diameter(eg.digraph, eg.class_sources) == directed);
    CHECK(undirected_diameter(eg.digraph, eg.class_sources) == undirected);
    AnalysisOptions o;
    o.diameters = true;
    Analysis a = analyze_graph(eg, o);
    if (eg.digraph.size() == 0) continue;
    CHECK(a.directed.computed);
    CHECK(a.directed.value == directed);
    CHECK(a.undirected.value == undirected);
  }
}

TEST_CASE("diameter text") {
  Diameter none;
  CHECK(none.text() == "not computed");
  Diameter inf{true, std::nullopt};
  CHECK(inf.text() == "unreachable");
  Diameter three{true, 3};
  CHECK(three.text() == "3");
}

TEST_CASE("connectivity verdicts") {
  Analysis s4 = run({"S", {4}}, GraphMode::gamma(), true);
  CHECK(s4.strongly_connected);
  CHECK(s4.verdict == "strongly connected");
  CHECK(s4.undirected.value == 2u);
  CHECK(s4.directed.value == 3u);

  Analysis a5 = run({"A", {5}}, GraphMode::gamma());
  CHECK_FALSE(a5.strongly_connected);
  CHECK(a5.weakly_connected);
  CHECK(a5.scc_count == 7);
  CHECK(a5.verdict == "weakly connected, not strongly connected");

  CHECK(run({"GL", {2, 3}}, GraphMode::gamma()).strongly_connected);
  CHECK(run({"GL", {2, 3}}, GraphMode::gamma_n(3)).strongly_connected);
  CHECK_FALSE(run({"GL", {2, 3}}, GraphMode::gamma_n(2)).strongly_connected);

  CHECK_FALSE(run({"A", {6}}, GraphMode::gamma_n(2)).strongly_connected);
  CHECK(run({"A", {6}}, GraphMode::gamma_n(3)).strongly_connected);
  CHECK(run({"S", {5}}, GraphMode::gamma_n(2)).strongly_connected);
  CHECK(run({"PSL", {2, 7}}, GraphMode::gamma()).strongly_connected);
  CHECK_FALSE(run({"PSL", {2, 8}}, GraphMode::gamma()).strongly_connected);
  CHECK_FALSE(run({"Frob", {19, 6}}, GraphMode::gamma()).strongly_connected);

  Analysis c6 = run({"C", {6}}, GraphMode::gamma(), true);
  CHECK(c6.vertex_count == 0);
  CHECK(c6.verdict == "empty graph");
  CHECK_FALSE(c6.strongly_connected);
  CHECK_FALSE(c6.weakly_connected);
  CHECK(c6.directed.value == 0u);

  // the verdict is the same with every speed-up switched off
  AnalysisOptions plain;
  plain.equivariance = false;
  plain.condensation = false;
  for (const auto& e : small_corpus()) {
    Group g = make_group(e);
    Analysis a = analyze(g, GraphMode::gamma()), b = analyze(g, GraphMode::gamma(), plain);
    CHECK(a.scc_count == b.scc_count);
    CHECK(a.strongly_connected == b.strongly_connected);
    CHECK(a.weakly_connected == b.weakly_connected);
    CHECK(a.edge_count == b.edge_count);
    CHECK(is_strongly_connected(g, GraphMode::gamma()) == a.strongly_connected);
  }
}

TEST_CASE("A5: 5-cycles and involutions are in different components") {
  Group a5 = make_alternating(5);
  EngelGraph eg = build_engel_graph(a5, GraphMode::gamma());
  SccResult r = graph_scc(eg);
  for (std::size_t u = 0; u < eg.vertex_elements.size(); ++u)
    for (std::size_t v = 0; v < eg.vertex_elements.size(); ++v) {
      const auto ou = a5.elem_order(a5.element(eg.vertex_elements[u]));
      const auto ov = a5.elem_order(a5.element(eg.vertex_elements[v]));
      if (ou == 5 && ov == 2) CHECK(r.component[u] != r.component[v]);
    }
}

TEST_CASE("balls") {
  Group g = make_linear(LinearKind::GL, 2, 3);
  const GraphMode mode = GraphMode::gamma();
  VertexSet vs = vertex_set(g, mode);
  EngelGraph eg = build_engel_graph(g, mode);
  const Element x = g.element(vs.list()[5]);
  const std::size_t lx = eg.local_of[g.index_of(x)];

  for (auto dir : {BallDirection::into, BallDirection::out_of}) {
    Digraph d = dir == BallDirection::out_of ? eg.digraph : eg.digraph.reversed();
    auto dist = bfs_distances(d, lx);
    Ball b0 = ball(g, vs, mode, x, 0, dir);
    CHECK(b0.members == std::vector<ElemIndex>{g.index_of(x)});
    CHECK(b0.layer_sizes == std::vector<std::uint32_t>{1});
    std::size_t previous = 0;
    for (unsigned r = 0; r <= 6; ++r) {
      Ball b = ball(g, vs, mode, x, r, dir);
      CHECK(b.complete);
      CHECK(b.members.size() >= previous);
      previous = b.members.size();
      std::vector<ElemIndex> expected;
      for (std::size_t v = 0; v < dist.size(); ++v)
        if (dist[v] && *dist[v] <= r) expected.push_back(eg.vertex_elements[v]);
      std::sort(expected.begin(), expected.end());
      CHECK(b.members == expected);
      std::uint64_t total = 0;
      for (auto s : b.layer_sizes) total += s;
      CHECK(total == b.members.size());
    }
  }
  Ball cut = ball(g, vs, mode, x, 10, BallDirection::out_of, 2);
  CHECK_FALSE(cut.complete);
}

TEST_CASE("bounded graphs grow with n") {
  Group g = make_alternating(6);
  VertexSet v2 = vertex_set(g, GraphMode::gamma_n(2));
  std::mt19937 rng(3);
  for (int i = 0; i < 3000; ++i) {
    const Element x = g.element(rng() % g.order()), y = g.element(rng() % g.order());
    for (unsigned n = 1; n < 5; ++n)
      if (engel_edge(g.arithmetic(), x, y, GraphMode::gamma_n(n)))
        CHECK(engel_edge(g.arithmetic(), x, y, GraphMode::gamma_n(n + 1)));
    if (engel_edge(g.arithmetic(), x, y, GraphMode::gamma_n(4))) CHECK(engel_edge(g.arithmetic(), x, y, GraphMode::gamma()));
  }
  CHECK(v2.size() == g.order() - 1);
}
