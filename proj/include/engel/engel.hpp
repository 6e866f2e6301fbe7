#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "engel/config.hpp"
#include "engel/digraph.hpp"
#include "engel/group.hpp"

namespace engel {

// Result of iterating z -> [z, y] from z = [x, y].
struct EngelTrace {
  // Identity when x -> y; otherwise the first non-identity value seen twice.
  Element terminal;
  // The non-identity values [x,y], [x,_2 y], ... in the order they were produced.
  std::vector<Element> trail;
  // Size of the visited list, counting the identity it starts from. When adjacent this is the
  // least n >= 1 with [x,_n y] = 1.
  std::size_t trail_length = 0;
  bool adjacent = false;
};

EngelTrace eng(const Arithmetic& arith, const Element& x, const Element& y);
inline EngelTrace eng(const Group& g, const Element& x, const Element& y) { return eng(g.arithmetic(), x, y); }

// [x,_n y] evaluated directly.
Element engel_word(const Arithmetic& arith, const Element& x, const Element& y, std::uint64_t n);

struct GraphMode {
  enum class Kind { gamma, gamma_n, lambda, delta };
  Kind kind = Kind::gamma;
  unsigned n = 0;  // used by gamma_n only

  static GraphMode gamma() { return {Kind::gamma, 0}; }
  static GraphMode gamma_n(unsigned n);
  static GraphMode lambda() { return {Kind::lambda, 0}; }
  static GraphMode delta() { return {Kind::delta, 0}; }
  // "gamma", "gamma_n", "lambda", "delta"; n is taken from the second argument for gamma_n.
  static GraphMode parse(const std::string& name, unsigned n);

  bool bounded() const { return kind == Kind::gamma_n; }
  std::string name() const;
  bool operator==(const GraphMode&) const = default;
};

// Edge x -> y under the mode's bound, with trail semantics matching eng().
bool engel_edge(const Arithmetic& arith, const Element& x, const Element& y, const GraphMode& mode);

inline constexpr std::uint32_t kNoDepth = std::numeric_limits<std::uint32_t>::max();
// depth[i] = least n >= 0 with [element(i),_n y] = 1, or kNoDepth. Every element of g is
// visited once: the map z -> [z, y] is walked as a functional graph with memoized depths.
std::vector<std::uint32_t> engel_depths_to(const Group& g, const Element& y);

// Universal vertices of the bounded relation [x,_n y] = 1 on all of g.
struct UniversalSets {
  std::vector<ElemIndex> right;   // {g : [g,_n x] = 1 for all x}
  std::vector<ElemIndex> left;    // {g : [x,_n g] = 1 for all x}
  std::vector<ElemIndex> both;    // right ∩ left
};
UniversalSets engel_universal_sets(const Group& g, unsigned n, bool equivariance = true);

// Vertex set of a mode: the group minus a removed set (sorted element indices).
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::uint64_t group_order, std::vector<ElemIndex> removed);

  std::uint64_t size() const { return order_ - removed_.size(); }
  bool contains(ElemIndex i) const;
  const std::vector<ElemIndex>& removed() const { return removed_; }
  std::vector<ElemIndex> list() const;

 private:
  std::uint64_t order_ = 0;
  std::vector<ElemIndex> removed_;
};

// gamma: G \ Z_inf(G); gamma_n: G \ I_n(G); lambda: G; delta: G \ {1}.
VertexSet vertex_set(const Group& g, const GraphMode& mode, bool equivariance = true);

// Edge test with vertex checks; throws VertexError when x or y is not a vertex and
// InvalidArgument when x == y.
bool edge(const Group& g, const VertexSet& vs, const Element& x, const Element& y, const GraphMode& mode);

// Exact neighbour sets (element indices, sorted) among the vertices, excluding x itself.
// With equivariance on a stored group, out-neighbours of x = r^h are the conjugates by h of the
// out-neighbours of its class representative r.
std::vector<ElemIndex> out_neighbors(const Group& g, const VertexSet& vs, const Element& x, const GraphMode& mode,
                                     bool equivariance = true);
std::vector<ElemIndex> in_neighbors(const Group& g, const VertexSet& vs, const Element& y, const GraphMode& mode);

struct GraphOptions {
  bool equivariance = true;
};

// The whole graph of a stored group for one mode.
struct EngelGraph {
  Group group;
  GraphMode mode;
  VertexSet vertices;
  std::vector<ElemIndex> vertex_elements;  // local vertex id -> element index
  std::vector<std::int32_t> local_of;      // element index -> local id or -1
  Digraph digraph;
  // One local vertex id per conjugacy class of vertices (empty when equivariance is off).
  std::vector<std::uint32_t> class_sources;
};

// Adjacency [x -> y] on all of g as in-rows: row y holds every x with x -> y (including
// x = y). Throws CapExceeded past the memory budget.
BitMatrix engel_in_matrix(const Group& g, std::optional<unsigned> bound, const GraphOptions& options = {},
                          const Limits& limits = default_limits());

EngelGraph build_engel_graph(const Group& g, const GraphMode& mode, const GraphOptions& options = {},
                             const Limits& limits = default_limits());

}  // namespace engel
