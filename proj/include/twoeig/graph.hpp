#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twoeig {

// Subset of the vertices {0, ..., capacity-1} of a host graph, as a bit mask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int capacity);
  static VertexSet full(int capacity);

  int capacity() const { return cap_; }
  void add(int v);
  void remove(int v);
  bool contains(int v) const;
  int count() const;
  std::vector<int> vertices() const;  // ascending
  int smallest() const;               // -1 if empty
  const uint64_t* words() const { return w_.data(); }
  int word_count() const { return static_cast<int>(w_.size()); }

  bool operator==(const VertexSet&) const = default;

 private:
  int cap_ = 0;
  std::vector<uint64_t> w_;
};

// Simple undirected graph on 1..512 vertices; adjacency stored as packed bit
// rows. Operations below treat graphs as values and return new ones.
class Graph {
 public:
  static constexpr int kMaxOrder = 512;

  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  long edge_count() const;
  bool edge(int u, int v) const;
  void add_edge(int u, int v);
  void toggle_edge(int u, int v);
  int degree(int v) const;
  std::vector<int> degrees() const;
  const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
  int row_words() const { return words_; }

  bool operator==(const Graph&) const = default;  // labeled equality

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

// graph6 serialization, one graph per line (no trailing newline here).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph add_isolated_edges(const Graph& g, int alpha);
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// First witness (in lexicographic order of candidate assignments) of an
// induced subgraph of g isomorphic to h, or nullopt.
std::optional<VertexSet> contains_induced(const Graph& g, const Graph& h);
// Every distinct witness vertex set, in discovery order.
std::vector<VertexSet> all_induced_witnesses(const Graph& g, const Graph& h);

// Exact isomorphism test by iterated color refinement plus backtracking.
bool are_isomorphic(const Graph& g, const Graph& h);

// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Canonical form for small graphs (order <= 11): upper-triangle bits of the
// minimal relabeling reachable by individualization-refinement, packed into a
// single word. Equal codes exactly for isomorphic graphs.
uint64_t canonical_code_small(const Graph& g);

}  // namespace twoeig
