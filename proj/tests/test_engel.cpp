#include <doctest.h>

#include <algorithm>
#include <random>

#include "engel/catalog.hpp"
#include "engel/engel.hpp"
#include "engel/error.hpp"
#include "engel/structure.hpp"
#include "engel/verify.hpp"

using namespace engel;

namespace {

// Least n >= 1 with [x,_n y] = 1 by direct evaluation, or 0 if none up to `cap`.
std::uint64_t direct_bound(const Arithmetic& ar, const Element& x, const Element& y, std::uint64_t cap) {
  for (std::uint64_t n = 1; n <= cap; ++n)
    if (ar.is_identity(engel_word(ar, x, y, n))) return n;
  return 0;
}

std::vector<ElemIndex> brute_out(const Group& g, const VertexSet& vs, const Element& x, const GraphMode& mode) {
  std::vector<ElemIndex> out;
  for (ElemIndex i = 0; i < g.order(); ++i)
    if (vs.contains(i) && g.element(i) != x && engel_edge(g.arithmetic(), x, g.element(i), mode)) out.push_back(i);
  return out;
}

bool same_rows(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (!std::equal(a.row(r).begin(), a.row(r).end(), b.row(r).begin())) return false;
  return true;
}

}  // namespace

TEST_CASE("engel words by hand") {
  PermutationArithmetic ar(3);
  Element x = ar.from_cycles({{1, 2}}), y = ar.from_cycles({{1, 2, 3}});
  // [x,y] = x^-1 y^-1 x y
  Element c = ar.mul(ar.mul(ar.inv(x), ar.inv(y)), ar.mul(x, y));
  CHECK(engel_word(ar, x, y, 1) == c);
  CHECK(engel_word(ar, x, y, 2) == ar.commutator(c, y));
  CHECK(engel_word(ar, x, y, 0) == x);
}

TEST_CASE("commuting pairs have trail length 1") {
  Group s4 = make_symmetric(4);
  for (const auto& x : s4.elements())
    for (const auto& y : s4.elements()) {
      if (s4.mul(x, y) != s4.mul(y, x)) continue;
      EngelTrace t = eng(s4, x, y);
      CHECK(t.adjacent);
      CHECK(t.trail_length == 1);
      CHECK(t.trail.empty());
    }
}

TEST_CASE("trail length agrees with direct evaluation") {
  for (const auto& g : {make_symmetric(4), make_linear(LinearKind::GL, 2, 3), make_alternating(5),
                        make_frobenius_metacyclic(19, 6)}) {
    std::mt19937 rng(static_cast<unsigned>(g.order()));
    const auto& el = g.elements();
    for (int i = 0; i < 400; ++i) {
      const Element& x = el[rng() % el.size()];
      const Element& y = el[rng() % el.size()];
      EngelTrace t = eng(g, x, y);
      const std::uint64_t n = direct_bound(g.arithmetic(), x, y, 2 * g.order());
      CHECK(t.adjacent == (n != 0));
      if (t.adjacent) {
        CHECK(t.trail_length == n);
        CHECK(g.arithmetic().is_identity(t.terminal));
      } else {
        CHECK_FALSE(g.arithmetic().is_identity(t.terminal));
      }
      for (std::size_t k = 0; k < t.trail.size(); ++k) CHECK(t.trail[k] == engel_word(g.arithmetic(), x, y, k + 1));
    }
  }
}

TEST_CASE("GL(2,3) has pairs needing three steps") {
  Group gl = make_linear(LinearKind::GL, 2, 3);
  std::size_t longest = 0;
  for (const auto& x : gl.elements())
    for (const auto& y : gl.elements()) {
      EngelTrace t = eng(gl, x, y);
      if (t.adjacent) longest = std::max(longest, t.trail_length);
    }
  CHECK(longest == 3);
}

TEST_CASE("a 5-cycle and a 3-cycle in A5 are not adjacent") {
  Group a5 = make_alternating(5);
  PermutationArithmetic ar(5);
  Element x = ar.from_cycles({{1, 2, 3, 4, 5}}), y = ar.from_cycles({{1, 2, 3}});
  CHECK_FALSE(eng(a5, x, y).adjacent);
  CHECK(direct_bound(ar, x, y, 200) == 0);
}

TEST_CASE("left Engel targets: y in the Fitting subgroup") {
  for (const auto& e : small_corpus()) {
    Group g = make_group(e);
    Subgroup f = fitting(g);
    for (const auto& x : g.elements())
      for (const auto& y : f.elements()) CHECK(eng(g, x, y).adjacent);
  }
}

TEST_CASE("Frobenius kernel elements have no edge into a complement") {
  Group g = make_frobenius_metacyclic(19, 6);
  auto v = is_frobenius(g);
  REQUIRE(v.frobenius);
  for (const auto& k : v.kernel->elements()) {
    if (g.arithmetic().is_identity(k)) continue;
    for (const auto& h : g.elements()) {
      if (v.kernel->contains(h)) continue;
      CHECK_FALSE(eng(g, k, h).adjacent);
      CHECK(eng(g, h, k).adjacent);
    }
  }
}

TEST_CASE("graph modes") {
  CHECK(GraphMode::parse("gamma", 0) == GraphMode::gamma());
  CHECK(GraphMode::parse("gamma_n", 3) == GraphMode::gamma_n(3));
  CHECK(GraphMode::parse("lambda", 0) == GraphMode::lambda());
  CHECK(GraphMode::parse("delta", 0) == GraphMode::delta());
  CHECK_THROWS_AS(GraphMode::gamma_n(0), InvalidArgument);
  CHECK_THROWS_AS(GraphMode::parse("omega", 0), InvalidArgument);
  for (const auto& m : {GraphMode::gamma(), GraphMode::gamma_n(2), GraphMode::lambda(), GraphMode::delta()})
    CHECK(GraphMode::parse(m.name(), m.n) == m);

  Group gl = make_linear(LinearKind::GL, 2, 3);
  for (const auto& x : gl.elements())
    for (const auto& y : gl.elements()) {
      const std::uint64_t n = direct_bound(gl.arithmetic(), x, y, 100);
      CHECK(engel_edge(gl.arithmetic(), x, y, GraphMode::gamma()) == (n != 0));
      for (unsigned b = 1; b <= 4; ++b)
        CHECK(engel_edge(gl.arithmetic(), x, y, GraphMode::gamma_n(b)) == (n != 0 && n <= b));
    }
}

TEST_CASE("vertex sets") {
  Group a5 = make_alternating(5);
  Group gl = make_linear(LinearKind::GL, 2, 3);
  CHECK(vertex_set(a5, GraphMode::gamma()).size() == 59);
  CHECK(vertex_set(gl, GraphMode::gamma()).size() == 46);
  CHECK(vertex_set(gl, GraphMode::lambda()).size() == 48);
  CHECK(vertex_set(gl, GraphMode::delta()).size() == 47);
  CHECK(vertex_set(gl, GraphMode::gamma()).removed() == hypercenter(gl).members());
  CHECK_FALSE(vertex_set(gl, GraphMode::delta()).contains(gl.identity_index()));

  for (const auto& e : small_corpus()) {
    Group g = make_group(e);
    for (unsigned n = 1; n <= 3; ++n) {
      // I_n by brute force: elements x with [x,_n y] = [y,_n x] = 1 for every y
      std::vector<ElemIndex> removed;
      for (ElemIndex i = 0; i < g.order(); ++i) {
        bool all = true;
        for (const auto& y : g.elements()) {
          all = all && engel_edge(g.arithmetic(), g.element(i), y, GraphMode::gamma_n(n)) &&
                engel_edge(g.arithmetic(), y, g.element(i), GraphMode::gamma_n(n));
          if (!all) break;
        }
        if (all) removed.push_back(i);
      }
      CHECK(vertex_set(g, GraphMode::gamma_n(n)).removed() == removed);
      CHECK(vertex_set(g, GraphMode::gamma_n(n), false).removed() == removed);
    }
  }
}

TEST_CASE("universal sets with and without equivariance") {
  for (const auto& e : small_corpus()) {
    Group g = make_group(e);
    for (unsigned n = 1; n <= 3; ++n) {
      UniversalSets a = engel_universal_sets(g, n, true), b = engel_universal_sets(g, n, false);
      CHECK(a.right == b.right);
      CHECK(a.left == b.left);
      CHECK(a.both == b.both);
      std::vector<ElemIndex> right;
      for (ElemIndex i = 0; i < g.order(); ++i) {
        bool all = true;
        for (const auto& y : g.elements())
          if (!engel_edge(g.arithmetic(), g.element(i), y, GraphMode::gamma_n(n))) {
            all = false;
            break;
          }
        if (all) right.push_back(i);
      }
      CHECK(a.right == right);
    }
  }
}

TEST_CASE("edge checks its arguments") {
  Group gl = make_linear(LinearKind::GL, 2, 3);
  VertexSet vs = vertex_set(gl, GraphMode::gamma());
  const Element central = gl.element(vs.removed().back());
  const Element v = gl.element(vs.list().front());
  const Element w = gl.element(vs.list().back());
  CHECK_THROWS_AS(edge(gl, vs, central, v, GraphMode::gamma()), VertexError);
  CHECK_THROWS_AS(edge(gl, vs, v, central, GraphMode::gamma()), VertexError);
  CHECK_THROWS_AS(edge(gl, vs, v, v, GraphMode::gamma()), InvalidArgument);
  CHECK(edge(gl, vs, v, w, GraphMode::gamma()) == eng(gl, v, w).adjacent);
}

TEST_CASE("neighbourhoods match brute force") {
  for (const auto& e : small_corpus()) {
    Group g = make_group(e);
    for (const auto& mode : {GraphMode::gamma(), GraphMode::gamma_n(2), GraphMode::delta()}) {
      VertexSet vs = vertex_set(g, mode);
      for (ElemIndex i : vs.list()) {
        const Element x = g.element(i);
        const auto expected = brute_out(g, vs, x, mode);
        CHECK(out_neighbors(g, vs, x, mode, true) == expected);
        CHECK(out_neighbors(g, vs, x, mode, false) == expected);
        std::vector<ElemIndex> in;
        for (ElemIndex j : vs.list())
          if (j != i && engel_edge(g.arithmetic(), g.element(j), x, mode)) in.push_back(j);
        CHECK(in_neighbors(g, vs, x, mode) == in);
      }
    }
  }
}

TEST_CASE("depths to a fixed target") {
  for (const auto& g : {make_symmetric(4), make_linear(LinearKind::GL, 2, 3), make_alternating(5)}) {
    for (ElemIndex yi = 0; yi < g.order(); yi += 3) {
      const Element y = g.element(yi);
      auto depth = engel_depths_to(g, y);
      REQUIRE(depth.size() == g.order());
      for (ElemIndex i = 0; i < g.order(); ++i) {
        const Element x = g.element(i);
        if (g.arithmetic().is_identity(x)) {
          CHECK(depth[i] == 0);
          continue;
        }
        const std::uint64_t n = direct_bound(g.arithmetic(), x, y, 2 * g.order());
        CHECK(depth[i] == (n ? n : kNoDepth));
      }
    }
  }
}

TEST_CASE("graphs are the same with and without equivariance") {
  for (const auto& e : medium_corpus()) {
    Group g = make_group(e);
    if (g.order() > 800) continue;
    for (const auto& mode : {GraphMode::gamma(), GraphMode::gamma_n(2)}) {
      EngelGraph a = build_engel_graph(g, mode, GraphOptions{true});
      EngelGraph b = build_engel_graph(g, mode, GraphOptions{false});
      CHECK(a.vertex_elements == b.vertex_elements);
      CHECK(same_rows(a.digraph.out_rows(), b.digraph.out_rows()));
      CHECK(b.class_sources.empty());
      CHECK(a.class_sources.size() <= g.classes().count());
    }
  }
}

TEST_CASE("graph edges match the edge relation") {
  Group g = make_linear(LinearKind::SL, 2, 3);
  EngelGraph eg = build_engel_graph(g, GraphMode::gamma());
  for (std::size_t u = 0; u < eg.digraph.size(); ++u)
    for (std::size_t v = 0; v < eg.digraph.size(); ++v) {
      if (u == v) continue;
      CHECK(eg.digraph.has_edge(u, v) ==
            eng(g, g.element(eg.vertex_elements[u]), g.element(eg.vertex_elements[v])).adjacent);
    }
  for (std::size_t u = 0; u < eg.vertex_elements.size(); ++u)
    CHECK(eg.local_of[eg.vertex_elements[u]] == static_cast<std::int32_t>(u));
}

TEST_CASE("dense storage respects the memory budget") {
  Group a6 = make_alternating(6);
  Limits tiny = default_limits();
  tiny.memory_budget_mb = 0;
  CHECK_THROWS_AS(build_engel_graph(a6, GraphMode::gamma(), {}, tiny), CapExceeded);
}
