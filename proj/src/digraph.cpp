#include "engel/digraph.hpp"

#include <algorithm>
#include <limits>

#include "engel/error.hpp"

namespace engel {

// ---------------------------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

std::uint64_t BitMatrix::bytes_for(std::size_t rows, std::size_t cols) {
  return static_cast<std::uint64_t>(rows) * ((cols + 63) / 64) * 8;
}

std::size_t BitMatrix::row_count(std::size_t r) const {
  std::size_t n = 0;
  for (auto w : row(r)) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) for_each_in_row(r, [&](std::size_t c) { t.set(c, r); });
  return t;
}

// ---------------------------------------------------------------------------------------------
// Digraph

Digraph::Digraph(BitMatrix out) : out_(std::move(out)) {
  if (out_.rows() != out_.cols()) throw InvalidArgument("digraph adjacency must be square");
  for (std::size_t v = 0; v < out_.rows(); ++v) out_.reset(v, v);
}

std::vector<std::uint32_t> Digraph::out_neighbors(std::size_t u) const {
  std::vector<std::uint32_t> out;
  out_.for_each_in_row(u, [&](std::size_t v) { out.push_back(static_cast<std::uint32_t>(v)); });
  return out;
}

std::uint64_t Digraph::edge_count() const {
  std::uint64_t n = 0;
  for (std::size_t u = 0; u < size(); ++u) n += out_.row_count(u);
  return n;
}

Digraph Digraph::reversed() const { return Digraph(out_.transposed()); }

Digraph Digraph::symmetrized() const {
  BitMatrix sym = out_.transposed();
  for (std::size_t u = 0; u < size(); ++u) {
    auto dst = sym.row(u);
    auto src = out_.row(u);
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
  }
  return Digraph(std::move(sym));
}

// ---------------------------------------------------------------------------------------------
// Strong components

SccResult scc(const Digraph& d) {
  const std::size_t n = d.size();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  const BitMatrix& adj = d.out_rows();
  const std::size_t words = adj.words_per_row();

  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  SccResult res;
  res.component.assign(n, kUnvisited);

  struct Frame {
    std::uint32_t v;
    std::size_t word;
    std::uint64_t bits;
  };
  std::vector<Frame> call;
  std::uint32_t counter = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    call.push_back({root, 0, words ? adj.row(root)[0] : 0});

    while (!call.empty()) {
      Frame& f = call.back();
      // advance to the next successor of f.v
      while (f.bits == 0 && f.word + 1 < words) {
        ++f.word;
        f.bits = adj.row(f.v)[f.word];
      }
      if (f.bits != 0) {
        int b = __builtin_ctzll(f.bits);
        f.bits &= f.bits - 1;
        auto w = static_cast<std::uint32_t>(f.word * 64 + static_cast<std::size_t>(b));
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0, words ? adj.row(w)[0] : 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      // all successors done
      std::uint32_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          res.component[w] = res.count;
        } while (w != v);
        ++res.count;
      }
    }
  }

  for (std::uint32_t u = 0; u < n; ++u) {
    adj.for_each_in_row(u, [&](std::size_t v) {
      if (res.component[u] != res.component[v]) res.condensation_edges.emplace_back(res.component[u], res.component[v]);
    });
  }
  std::sort(res.condensation_edges.begin(), res.condensation_edges.end());
  res.condensation_edges.erase(std::unique(res.condensation_edges.begin(), res.condensation_edges.end()),
                               res.condensation_edges.end());
  return res;
}

SccResult scc_condensed(const Digraph& d, std::span<const std::uint32_t> cluster_of) {
  const std::size_t n = d.size();
  if (cluster_of.size() != n) throw InvalidArgument("cluster map size does not match the graph");
  std::uint32_t clusters = 0;
  for (auto c : cluster_of) clusters = std::max(clusters, c + 1);
  Digraph quotient(clusters);
  for (std::size_t u = 0; u < n; ++u)
    d.out_rows().for_each_in_row(u, [&](std::size_t v) { quotient.add_edge(cluster_of[u], cluster_of[v]); });
  SccResult q = scc(quotient);
  SccResult res;
  res.count = q.count;
  res.component.resize(n);
  for (std::size_t u = 0; u < n; ++u) res.component[u] = q.component[cluster_of[u]];
  res.condensation_edges = std::move(q.condensation_edges);
  return res;
}

bool is_strongly_connected(const Digraph& d) {
  if (d.size() == 0) return false;
  auto fwd = reachable_from(d, 0);
  std::uint64_t total = 0;
  for (auto x : fwd) total += x;
  if (total != d.size()) return false;
  auto bwd = reachable_from(d.reversed(), 0);
  total = 0;
  for (auto x : bwd) total += x;
  return total == d.size();
}

bool is_weakly_connected(const Digraph& d) {
  if (d.size() == 0) return false;
  auto layers = reachable_from(d.symmetrized(), 0);
  std::uint64_t total = 0;
  for (auto x : layers) total += x;
  return total == d.size();
}

// ---------------------------------------------------------------------------------------------
// Breadth-first search

std::vector<std::uint32_t> reachable_from(const Digraph& d, std::size_t source) {
  const BitMatrix& adj = d.out_rows();
  const std::size_t words = adj.words_per_row();
  std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
  visited[source >> 6] |= std::uint64_t{1} << (source & 63);
  frontier = visited;
  std::vector<std::uint32_t> layers{1};
  while (true) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t bits = frontier[i];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        auto r = adj.row(i * 64 + static_cast<std::size_t>(b));
        for (std::size_t k = 0; k < words; ++k) next[k] |= r[k];
      }
    }
    std::uint32_t added = 0;
    for (std::size_t k = 0; k < words; ++k) {
      next[k] &= ~visited[k];
      visited[k] |= next[k];
      added += static_cast<std::uint32_t>(__builtin_popcountll(next[k]));
    }
    if (added == 0) break;
    layers.push_back(added);
    frontier.swap(next);
  }
  return layers;
}

std::vector<std::optional<std::uint32_t>> bfs_distances(const Digraph& d, std::size_t source) {
  std::vector<std::optional<std::uint32_t>> dist(d.size());
  std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(source)};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t u = queue[head];
    d.out_rows().for_each_in_row(u, [&](std::size_t v) {
      if (!dist[v]) {
        dist[v] = *dist[u] + 1;
        queue.push_back(static_cast<std::uint32_t>(v));
      }
    });
  }
  return dist;
}

namespace {

std::optional<std::uint32_t> max_eccentricity(const Digraph& d, std::span<const std::uint32_t> sources) {
  if (d.size() == 0) return 0;
  std::vector<std::uint32_t> all;
  if (sources.empty()) {
    all.resize(d.size());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    sources = all;
  }
  std::uint32_t best = 0;
  for (auto s : sources) {
    auto layers = reachable_from(d, s);
    std::uint64_t total = 0;
    for (auto x : layers) total += x;
    if (total != d.size()) return std::nullopt;
    best = std::max(best, static_cast<std::uint32_t>(layers.size() - 1));
  }
  return best;
}

}  // namespace

std::optional<std::uint32_t> directed_diameter(const Digraph& d, std::span<const std::uint32_t> sources) {
  return max_eccentricity(d, sources);
}

std::optional<std::uint32_t> undirected_diameter(const Digraph& d, std::span<const std::uint32_t> sources) {
  return max_eccentricity(d.symmetrized(), sources);
}

}  // namespace engel
