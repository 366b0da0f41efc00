#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace csbm {

// Sorted list of distinct vertex ids.
using VertexSet = std::vector<int>;

// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable after finalize(); edge lookup is a binary search.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}

  // Validating constructor: rejects self-loops, duplicates, out-of-range ids.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(adj_.size()); }
  int degree(int v) const;
  const VertexSet& neighbors(int v) const;
  bool has_edge(int i, int j) const;
  long long edge_count() const;

  // Builder path for generators that produce known-clean edges.
  void push_edge_unchecked(int i, int j) {
    adj_[i].push_back(j);
    adj_[j].push_back(i);
  }
  void finalize();

 private:
  std::vector<VertexSet> adj_;
};

// Partial injective vertex correspondence (M, mu) with images in 0..n-1.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int n) : map_(n, -1), image_used_(n, 0) {}
  Matching(int n, const std::vector<std::pair<int, int>>& pairs);

  static Matching identity(int n);
  static Matching from_permutation(const std::vector<int>& pi);
  // pi restricted to the vertex set m.
  static Matching restriction(const std::vector<int>& pi, const VertexSet& m);

  int domain_size() const { return static_cast<int>(map_.size()); }
  int size() const { return matched_; }
  bool empty() const { return matched_ == 0; }
  bool contains(int i) const { return map_[i] >= 0; }
  int image_of(int i) const { return map_[i]; }
  bool image_used(int j) const { return image_used_[j] != 0; }
  VertexSet members() const;

  // Throws if i is matched already, j is taken, or ids are out of range.
  void insert(int i, int j);

 private:
  std::vector<int> map_;         // -1 = unmatched
  std::vector<char> image_used_;
  int matched_ = 0;
};

// The unique maximal vertex set whose induced subgraph has min degree >= k,
// computed by FIFO peeling of under-degree vertices.
VertexSet k_core(const Graph& g, int k);

struct InducedSubgraph {
  Graph graph;                   // on |s| vertices
  std::vector<int> to_original;  // new id -> original id
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Matching-relative combinators. Outputs keep the full 0..n-1 vertex range;
// vertices outside M are isolated. Edge {i,j} (both in M, G1 labels) exists iff
//   intersection: A_ij = 1 and B_{mu(i)mu(j)} = 1
//   union:        A_ij + B_{mu(i)mu(j)} >= 1
//   difference:   A_ij = 1 and B_{mu(i)mu(j)} = 0
Graph intersection_graph(const Graph& g1, const Graph& g2, const Matching& m);
Graph union_graph(const Graph& g1, const Graph& g2, const Matching& m);
Graph difference_graph(const Graph& g1, const Graph& g2, const Matching& m);

// Edge-list format: header "n=<int>", then "i j" per line with i < j.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace csbm
