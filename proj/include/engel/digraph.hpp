#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace engel {

// Square bit matrix with 64-bit word rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  // Bytes needed for a rows x cols matrix.
  static std::uint64_t bytes_for(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool test(std::size_t r, std::size_t c) const { return (data_[r * words_ + (c >> 6)] >> (c & 63)) & 1u; }
  void set(std::size_t r, std::size_t c) { data_[r * words_ + (c >> 6)] |= std::uint64_t{1} << (c & 63); }
  void reset(std::size_t r, std::size_t c) { data_[r * words_ + (c >> 6)] &= ~(std::uint64_t{1} << (c & 63)); }
  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * words_, words_}; }
  std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * words_, words_}; }
  std::size_t row_count(std::size_t r) const;

  // Calls f(c) for every set column of row r, in increasing order.
  template <typename F>
  void for_each_in_row(std::size_t r, F&& f) const {
    auto w = row(r);
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t bits = w[i];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(i * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  BitMatrix transposed() const;

 private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> data_;
};

// Loop-free directed graph on vertices 0..n-1 stored as dense out-rows.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : out_(n, n) {}
  explicit Digraph(BitMatrix out);

  std::size_t size() const { return out_.rows(); }
  bool has_edge(std::size_t u, std::size_t v) const { return out_.test(u, v); }
  // Self-loops are ignored.
  void add_edge(std::size_t u, std::size_t v) {
    if (u != v) out_.set(u, v);
  }
  const BitMatrix& out_rows() const { return out_; }
  std::vector<std::uint32_t> out_neighbors(std::size_t u) const;
  std::uint64_t edge_count() const;
  Digraph reversed() const;
  // Underlying undirected graph, as a symmetric digraph.
  Digraph symmetrized() const;

 private:
  BitMatrix out_;
};

struct SccResult {
  // Component ids are in reverse topological order: an edge between different components always
  // goes from a higher id to a lower id.
  std::vector<std::uint32_t> component;
  std::uint32_t count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> condensation_edges;  // sorted, unique
};

// Iterative Tarjan (no recursion).
SccResult scc(const Digraph& d);
// SCCs computed on a quotient graph whose clusters are known to lie inside single components.
SccResult scc_condensed(const Digraph& d, std::span<const std::uint32_t> cluster_of);

bool is_strongly_connected(const Digraph& d);
bool is_weakly_connected(const Digraph& d);

// Breadth-first distances from `source`; nullopt = unreachable.
std::vector<std::optional<std::uint32_t>> bfs_distances(const Digraph& d, std::size_t source);
// Bitset BFS layers: layer sizes out to full reachability.
std::vector<std::uint32_t> reachable_from(const Digraph& d, std::size_t source);

// Longest shortest path. nullopt when some ordered pair is unreachable. When `sources` is
// non-empty only those vertices are used as BFS sources; the caller guarantees that every
// vertex shares its eccentricity with one of them (e.g. conjugacy-class representatives).
std::optional<std::uint32_t> directed_diameter(const Digraph& d, std::span<const std::uint32_t> sources = {});
std::optional<std::uint32_t> undirected_diameter(const Digraph& d, std::span<const std::uint32_t> sources = {});

}  // namespace engel
