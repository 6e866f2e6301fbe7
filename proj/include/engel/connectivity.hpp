#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "engel/digraph.hpp"
#include "engel/engel.hpp"

namespace engel {

// `into`: vertices with a path of length <= radius to x. `out_of`: vertices reachable from x.
enum class BallDirection { into, out_of };

struct Ball {
  std::vector<ElemIndex> members;          // sorted element indices, x included
  std::vector<std::uint32_t> layer_sizes;  // new vertices per distance, starting with {1}
  unsigned radius = 0;                     // radius actually completed
  bool complete = true;                    // false when the expansion budget ran out first
};

// Layered BFS in the graph of `mode` restricted to `vs`. Each expanded vertex costs one
// neighbourhood scan; at most `expansion_budget` scans are made. Radius 0 gives {x}. On stored
// groups out-neighbourhoods are shared across a conjugacy class.
Ball ball(const Group& g, const VertexSet& vs, const GraphMode& mode, const Element& x, unsigned radius,
          BallDirection direction,
          std::uint64_t expansion_budget = std::numeric_limits<std::uint64_t>::max());

// Cluster id per local vertex of eg. Commuting vertices share a cluster, and so do the
// non-trivial vertices of each Sylow subgroup (when the mode's bound allows it: Gamma_n needs
// n >= the nilpotency class of the Sylow subgroup). Each cluster lies inside one strong component.
std::vector<std::uint32_t> seed_condensation(const EngelGraph& eg);

struct AnalysisOptions {
  bool equivariance = true;
  bool condensation = true;
  bool diameters = false;
  // Diameters are computed only up to this many vertices.
  std::uint64_t diameter_vertex_limit = 20000;
};

// A diameter that is not computed is nullopt; a computed one is either a value or unreachable.
struct Diameter {
  bool computed = false;
  std::optional<std::uint32_t> value;  // nullopt when computed and some pair is unreachable
  std::string text() const;
};

struct Analysis {
  std::uint64_t order = 0;
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  bool strongly_connected = false;
  bool weakly_connected = false;
  std::uint32_t scc_count = 0;
  Diameter undirected, directed;
  std::string verdict;
};

Analysis analyze_graph(const EngelGraph& eg, const AnalysisOptions& options = {});
Analysis analyze(const Group& g, const GraphMode& mode, const AnalysisOptions& options = {},
                 const Limits& limits = default_limits());

bool is_strongly_connected(const Group& g, const GraphMode& mode, const GraphOptions& options = {},
                           const Limits& limits = default_limits());

// SCCs of the graph, via seed_condensation when `condensed`.
SccResult graph_scc(const EngelGraph& eg, bool condensed = true);

}  // namespace engel
