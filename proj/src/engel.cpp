#include "engel/engel.hpp"

#include <algorithm>
#include <unordered_set>

#include "engel/error.hpp"
#include "engel/structure.hpp"

namespace engel {

// ---------------------------------------------------------------------------------------------
// Commutator iteration

EngelTrace eng(const Arithmetic& arith, const Element& x, const Element& y) {
  constexpr std::size_t kLinearScan = 32;
  EngelTrace t;
  std::unordered_set<Element, ElementHash> seen;
  auto visited = [&](const Element& z) {
    if (t.trail.size() <= kLinearScan) return std::find(t.trail.begin(), t.trail.end(), z) != t.trail.end();
    return seen.count(z) > 0;
  };
  Element z = arith.commutator(x, y);
  while (!arith.is_identity(z) && !visited(z)) {
    t.trail.push_back(z);
    if (t.trail.size() == kLinearScan + 1)
      seen.insert(t.trail.begin(), t.trail.end());
    else if (t.trail.size() > kLinearScan + 1)
      seen.insert(z);
    z = arith.commutator(z, y);
  }
  t.adjacent = arith.is_identity(z);
  t.terminal = std::move(z);
  t.trail_length = t.trail.size() + 1;
  return t;
}

Element engel_word(const Arithmetic& arith, const Element& x, const Element& y, std::uint64_t n) {
  Element z = x;
  for (std::uint64_t i = 0; i < n; ++i) z = arith.commutator(z, y);
  return z;
}

GraphMode GraphMode::gamma_n(unsigned n) {
  if (n < 1) throw InvalidArgument("gamma_n needs n >= 1");
  return {Kind::gamma_n, n};
}

GraphMode GraphMode::parse(const std::string& name, unsigned n) {
  if (name == "gamma") return gamma();
  if (name == "gamma_n") return gamma_n(n);
  if (name == "lambda") return lambda();
  if (name == "delta") return delta();
  throw InvalidArgument("unknown graph mode '" + name + "' (expected gamma, gamma_n, lambda or delta)");
}

std::string GraphMode::name() const {
  switch (kind) {
    case Kind::gamma: return "gamma";
    case Kind::gamma_n: return "gamma_n";
    case Kind::lambda: return "lambda";
    case Kind::delta: return "delta";
  }
  return "gamma";
}

bool engel_edge(const Arithmetic& arith, const Element& x, const Element& y, const GraphMode& mode) {
  if (!mode.bounded()) return eng(arith, x, y).adjacent;
  // trail_length <= n  <=>  [x,_k y] = 1 for some k <= n
  Element z = x;
  for (unsigned k = 0; k < mode.n; ++k) {
    z = arith.commutator(z, y);
    if (arith.is_identity(z)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------------------------
// Depths of the map z -> [z, y]

std::vector<std::uint32_t> engel_depths_to(const Group& g, const Element& y) {
  constexpr std::uint32_t kUnknown = kNoDepth - 1;
  constexpr std::uint32_t kOnPath = kNoDepth - 2;
  const std::uint64_t n = g.order();
  std::vector<std::uint32_t> depth(n, kUnknown);
  depth[g.identity_index()] = 0;
  const Arithmetic& arith = g.arithmetic();
  const std::vector<Element>* table = g.stored() ? &g.elements() : nullptr;
  std::vector<ElemIndex> path;
  for (ElemIndex start = 0; start < n; ++start) {
    if (depth[start] != kUnknown) continue;
    path.clear();
    ElemIndex cur = start;
    Element ce = table ? (*table)[start] : g.element(start);
    while (depth[cur] == kUnknown) {
      depth[cur] = kOnPath;
      path.push_back(cur);
      ce = arith.commutator(ce, y);
      cur = g.index_of(ce);
      if (cur == kNoIndex) throw InvalidArgument("engel_depths_to: y does not normalize the group");
    }
    if (depth[cur] == kOnPath || depth[cur] == kNoDepth) {
      for (auto p : path) depth[p] = kNoDepth;
    } else {
      std::uint32_t d = depth[cur];
      for (auto it = path.rbegin(); it != path.rend(); ++it) depth[*it] = ++d;
    }
  }
  return depth;
}

namespace {

bool within(std::uint32_t depth, std::optional<unsigned> bound) {
  return depth != kNoDepth && (!bound || depth <= *bound);
}

// g = element(r) ^ h where r is the class representative of element(i).
Element conjugator_from_rep(const Group& g, ElemIndex i) {
  const auto& cp = g.classes();
  std::vector<std::uint16_t> vias;
  while (cp.parent[i] != i) {
    vias.push_back(cp.via[i]);
    i = cp.parent[i];
  }
  Element h = g.identity();
  for (auto it = vias.rbegin(); it != vias.rend(); ++it) h = g.mul(h, g.generators()[*it]);
  return h;
}

std::vector<ElemIndex> all_indices(const Group& g) {
  std::vector<ElemIndex> v(g.order());
  for (ElemIndex i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

}  // namespace

UniversalSets engel_universal_sets(const Group& g, unsigned n, bool equivariance) {
  const std::uint64_t order = g.order();
  if (equivariance && !g.stored()) equivariance = false;
  const std::vector<ElemIndex> ys = equivariance ? g.classes().representatives : all_indices(g);

  std::vector<char> right(order, 1), left_ok(ys.size(), 0);
  for (std::size_t k = 0; k < ys.size(); ++k) {
    auto depth = engel_depths_to(g, g.element(ys[k]));
    bool all = true;
    for (std::uint64_t x = 0; x < order; ++x) {
      if (within(depth[x], n)) continue;
      all = false;
      right[x] = 0;
    }
    left_ok[k] = all;
  }
  UniversalSets u;
  if (equivariance) {
    // The right set is a union of classes: drop every class with a member outside it.
    const auto& cp = g.classes();
    std::vector<char> class_ok(cp.count(), 1);
    for (std::uint64_t x = 0; x < order; ++x)
      if (!right[x]) class_ok[cp.class_of[x]] = 0;
    for (std::size_t c = 0; c < cp.count(); ++c) {
      if (class_ok[c]) u.right.insert(u.right.end(), cp.members[c].begin(), cp.members[c].end());
      if (left_ok[c]) u.left.insert(u.left.end(), cp.members[c].begin(), cp.members[c].end());
    }
    std::sort(u.right.begin(), u.right.end());
    std::sort(u.left.begin(), u.left.end());
  } else {
    for (std::uint64_t x = 0; x < order; ++x)
      if (right[x]) u.right.push_back(static_cast<ElemIndex>(x));
    for (std::size_t k = 0; k < ys.size(); ++k)
      if (left_ok[k]) u.left.push_back(ys[k]);
  }
  std::set_intersection(u.right.begin(), u.right.end(), u.left.begin(), u.left.end(), std::back_inserter(u.both));
  return u;
}

// ---------------------------------------------------------------------------------------------
// Vertex sets and neighbourhoods

VertexSet::VertexSet(std::uint64_t group_order, std::vector<ElemIndex> removed)
    : order_(group_order), removed_(std::move(removed)) {
  std::sort(removed_.begin(), removed_.end());
}

bool VertexSet::contains(ElemIndex i) const {
  return i < order_ && !std::binary_search(removed_.begin(), removed_.end(), i);
}

std::vector<ElemIndex> VertexSet::list() const {
  std::vector<ElemIndex> out;
  out.reserve(size());
  auto it = removed_.begin();
  for (ElemIndex i = 0; i < order_; ++i) {
    if (it != removed_.end() && *it == i) {
      ++it;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

VertexSet vertex_set(const Group& g, const GraphMode& mode, bool equivariance) {
  switch (mode.kind) {
    case GraphMode::Kind::gamma: return VertexSet(g.order(), hypercenter(g).members());
    case GraphMode::Kind::gamma_n: return VertexSet(g.order(), engel_universal_sets(g, mode.n, equivariance).both);
    case GraphMode::Kind::lambda: return VertexSet(g.order(), {});
    case GraphMode::Kind::delta: return VertexSet(g.order(), {g.identity_index()});
  }
  return VertexSet(g.order(), {});
}

namespace {

ElemIndex require_vertex(const Group& g, const VertexSet& vs, const Element& e, const char* role) {
  ElemIndex i = g.index_of(e);
  if (i == kNoIndex) throw VertexError(std::string(role) + " is not an element of the group: " + g.format(e));
  if (!vs.contains(i)) throw VertexError(std::string(role) + " is not a vertex of the graph: " + g.format(e));
  return i;
}

}  // namespace

bool edge(const Group& g, const VertexSet& vs, const Element& x, const Element& y, const GraphMode& mode) {
  ElemIndex xi = require_vertex(g, vs, x, "source");
  ElemIndex yi = require_vertex(g, vs, y, "target");
  if (xi == yi) throw InvalidArgument("edge: loops are not part of the graph (x == y)");
  return engel_edge(g.arithmetic(), x, y, mode);
}

std::vector<ElemIndex> out_neighbors(const Group& g, const VertexSet& vs, const Element& x, const GraphMode& mode,
                                     bool equivariance) {
  const ElemIndex xi = require_vertex(g, vs, x, "vertex");
  const Arithmetic& arith = g.arithmetic();
  auto scan_from = [&](ElemIndex from) {
    const Element fe = g.element(from);
    auto found = scan_elements(g, [&](const Element& y) { return engel_edge(arith, fe, y, mode); });
    std::vector<ElemIndex> out;
    for (auto y : found)
      if (y != from && vs.contains(y)) out.push_back(y);
    return out;
  };
  if (!equivariance || !g.stored()) return scan_from(xi);

  const ElemIndex r = g.classes().representatives[g.classes().class_of[xi]];
  if (r == xi) return scan_from(xi);
  // x -> y iff x^h -> y^h, and the vertex set is closed under conjugation.
  const Element h = conjugator_from_rep(g, xi);
  std::vector<ElemIndex> out;
  for (auto y : scan_from(r)) out.push_back(g.index_of(g.conjugate(g.element(y), h)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemIndex> in_neighbors(const Group& g, const VertexSet& vs, const Element& y, const GraphMode& mode) {
  const ElemIndex yi = require_vertex(g, vs, y, "vertex");
  auto depth = engel_depths_to(g, y);
  std::optional<unsigned> bound;
  if (mode.bounded()) bound = mode.n;
  std::vector<ElemIndex> out;
  for (ElemIndex x = 0; x < depth.size(); ++x)
    if (x != yi && within(depth[x], bound) && vs.contains(x)) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------------------------
// Whole graphs

BitMatrix engel_in_matrix(const Group& g, std::optional<unsigned> bound, const GraphOptions& options,
                          const Limits& limits) {
  if (!g.stored()) throw CapExceeded("adjacency matrix needs a stored group (order " + std::to_string(g.order()) + ")");
  const std::size_t n = g.order();
  const std::uint64_t bytes = BitMatrix::bytes_for(n, n);
  if (bytes > limits.memory_budget_mb * 1024ull * 1024ull)
    throw CapExceeded("adjacency matrix of order " + std::to_string(n) + " needs " + std::to_string(bytes >> 20) +
                      " MB, over the " + std::to_string(limits.memory_budget_mb) + " MB budget");
  BitMatrix m(n, n);
  const auto& table = g.elements();
  auto fill_row = [&](ElemIndex y) {
    auto depth = engel_depths_to(g, table[y]);
    for (std::size_t x = 0; x < n; ++x)
      if (within(depth[x], bound)) m.set(y, x);
  };

  if (!options.equivariance) {
    parallel_for(n, [&](std::size_t b, std::size_t e) {
      for (std::size_t y = b; y < e; ++y) fill_row(static_cast<ElemIndex>(y));
    }, limits.thread_count());
    return m;
  }

  const auto& cp = g.classes();
  parallel_for(cp.count(), [&](std::size_t b, std::size_t e) {
    for (std::size_t c = b; c < e; ++c) fill_row(cp.representatives[c]);
  }, limits.thread_count());
  // x -> y iff x^h -> y^h: row(child) is row(parent) conjugated by the tree generator.
  for (ElemIndex child : cp.bfs_order) {
    const ElemIndex parent = cp.parent[child];
    if (parent == child) continue;
    const auto& act = g.conjugation_action(cp.via[child]);
    m.for_each_in_row(parent, [&](std::size_t x) { m.set(child, act[x]); });
  }
  return m;
}

EngelGraph build_engel_graph(const Group& g, const GraphMode& mode, const GraphOptions& options, const Limits& limits) {
  std::optional<unsigned> bound;
  if (mode.bounded()) bound = mode.n;
  BitMatrix in = engel_in_matrix(g, bound, options, limits);
  const std::size_t n = g.order();

  EngelGraph eg{g, mode, {}, {}, {}, {}, {}};
  if (mode.kind == GraphMode::Kind::gamma_n) {
    // Universal vertices read off the matrix: full in-rows (left) and full columns (right).
    std::vector<char> col_full(n, 1);
    std::vector<ElemIndex> removed;
    for (std::size_t y = 0; y < n; ++y) {
      auto row = in.row(y);
      for (std::size_t w = 0; w < row.size(); ++w) {
        std::uint64_t missing = ~row[w];
        if (w + 1 == row.size() && n % 64) missing &= (std::uint64_t{1} << (n % 64)) - 1;
        while (missing) {
          col_full[w * 64 + static_cast<std::size_t>(__builtin_ctzll(missing))] = 0;
          missing &= missing - 1;
        }
      }
    }
    for (std::size_t y = 0; y < n; ++y)
      if (col_full[y] && in.row_count(y) == n) removed.push_back(static_cast<ElemIndex>(y));
    eg.vertices = VertexSet(n, std::move(removed));
  } else {
    eg.vertices = vertex_set(g, mode, options.equivariance);
  }

  eg.vertex_elements = eg.vertices.list();
  eg.local_of.assign(n, -1);
  for (std::size_t l = 0; l < eg.vertex_elements.size(); ++l)
    eg.local_of[eg.vertex_elements[l]] = static_cast<std::int32_t>(l);

  const std::size_t v = eg.vertex_elements.size();
  if (BitMatrix::bytes_for(v, v) + BitMatrix::bytes_for(n, n) > limits.memory_budget_mb * 1024ull * 1024ull)
    throw CapExceeded("graph on " + std::to_string(v) + " vertices exceeds the memory budget");
  Digraph d(v);
  for (std::size_t ly = 0; ly < v; ++ly) {
    in.for_each_in_row(eg.vertex_elements[ly], [&](std::size_t x) {
      std::int32_t lx = eg.local_of[x];
      if (lx >= 0) d.add_edge(static_cast<std::size_t>(lx), ly);
    });
  }
  eg.digraph = std::move(d);

  if (options.equivariance) {
    for (auto r : g.classes().representatives)
      if (eg.local_of[r] >= 0) eg.class_sources.push_back(static_cast<std::uint32_t>(eg.local_of[r]));
  }
  return eg;
}

}  // namespace engel
