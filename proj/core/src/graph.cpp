#include "csbm/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace csbm {

namespace {

void check_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n) {
    throw std::out_of_range(std::string(what) + ": vertex id " +
                            std::to_string(v) + " out of range [0," +
                            std::to_string(n) + ")");
  }
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  Graph g(n);
  for (const auto& [i, j] : edges) {
    check_vertex(i, n, "Graph::from_edges");
    check_vertex(j, n, "Graph::from_edges");
    if (i == j) throw std::invalid_argument("Graph::from_edges: self-loop");
    g.push_edge_unchecked(i, j);
  }
  g.finalize();
  for (int v = 0; v < n; ++v) {
    const auto& nb = g.adj_[v];
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw std::invalid_argument("Graph::from_edges: duplicate edge");
    }
  }
  return g;
}

int Graph::degree(int v) const {
  check_vertex(v, size(), "Graph::degree");
  return static_cast<int>(adj_[v].size());
}

const VertexSet& Graph::neighbors(int v) const {
  check_vertex(v, size(), "Graph::neighbors");
  return adj_[v];
}

bool Graph::has_edge(int i, int j) const {
  check_vertex(i, size(), "Graph::has_edge");
  check_vertex(j, size(), "Graph::has_edge");
  const auto& a = adj_[i].size() <= adj_[j].size() ? adj_[i] : adj_[j];
  const int t = adj_[i].size() <= adj_[j].size() ? j : i;
  return std::binary_search(a.begin(), a.end(), t);
}

long long Graph::edge_count() const {
  long long deg_sum = 0;
  for (const auto& nb : adj_) deg_sum += static_cast<long long>(nb.size());
  return deg_sum / 2;
}

void Graph::finalize() {
  for (auto& nb : adj_) {
    if (!std::is_sorted(nb.begin(), nb.end())) {
      std::sort(nb.begin(), nb.end());
    }
  }
}

Matching::Matching(int n, const std::vector<std::pair<int, int>>& pairs)
    : Matching(n) {
  for (const auto& [i, j] : pairs) insert(i, j);
}

Matching Matching::identity(int n) {
  Matching m(n);
  for (int i = 0; i < n; ++i) m.insert(i, i);
  return m;
}

Matching Matching::from_permutation(const std::vector<int>& pi) {
  Matching m(static_cast<int>(pi.size()));
  for (int i = 0; i < static_cast<int>(pi.size()); ++i) m.insert(i, pi[i]);
  return m;
}

Matching Matching::restriction(const std::vector<int>& pi, const VertexSet& s) {
  Matching m(static_cast<int>(pi.size()));
  for (int i : s) m.insert(i, pi[i]);
  return m;
}

VertexSet Matching::members() const {
  VertexSet out;
  out.reserve(matched_);
  for (int i = 0; i < domain_size(); ++i) {
    if (map_[i] >= 0) out.push_back(i);
  }
  return out;
}

void Matching::insert(int i, int j) {
  check_vertex(i, domain_size(), "Matching::insert");
  check_vertex(j, domain_size(), "Matching::insert");
  if (map_[i] >= 0) throw std::invalid_argument("Matching::insert: vertex already matched");
  if (image_used_[j]) throw std::invalid_argument("Matching::insert: image already taken");
  map_[i] = j;
  image_used_[j] = 1;
  ++matched_;
}

VertexSet k_core(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k_core: k must be >= 1");
  const int n = g.size();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < k) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u : g.neighbors(v)) {
      if (removed[u]) continue;
      if (--deg[u] < k) {
        removed[u] = 1;
        queue.push_back(u);
      }
    }
  }
  VertexSet core;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) core.push_back(v);
  }
  return core;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  const int n = g.size();
  std::vector<int> new_id(n, -1);
  for (int idx = 0; idx < static_cast<int>(s.size()); ++idx) {
    check_vertex(s[idx], n, "induced_subgraph");
    new_id[s[idx]] = idx;
  }
  Graph sub(static_cast<int>(s.size()));
  for (int v : s) {
    for (int u : g.neighbors(v)) {
      if (u > v && new_id[u] >= 0) {
        sub.push_edge_unchecked(new_id[v], new_id[u]);
      }
    }
  }
  sub.finalize();
  return {std::move(sub), s};
}

namespace {

enum class Combine { Intersection, Union, Difference };

Graph combine(const Graph& g1, const Graph& g2, const Matching& m, Combine op) {
  const int n = g1.size();
  if (g2.size() != n || m.domain_size() != n) {
    throw std::invalid_argument("graph combinator: size mismatch");
  }
  Graph out(n);
  // Edges from G1 within M, filtered by the G2 condition.
  for (int i = 0; i < n; ++i) {
    if (!m.contains(i)) continue;
    for (int j : g1.neighbors(i)) {
      if (j <= i || !m.contains(j)) continue;
      const bool in_g2 = g2.has_edge(m.image_of(i), m.image_of(j));
      const bool keep = op == Combine::Intersection ? in_g2
                      : op == Combine::Difference   ? !in_g2
                                                    : true;
      if (keep) out.push_edge_unchecked(i, j);
    }
  }
  if (op == Combine::Union) {
    // G2-only edges, pulled back through mu.
    std::vector<int> preimage(n, -1);
    for (int i = 0; i < n; ++i) {
      if (m.contains(i)) preimage[m.image_of(i)] = i;
    }
    for (int a = 0; a < n; ++a) {
      const int i = preimage[a];
      if (i < 0) continue;
      for (int b : g2.neighbors(a)) {
        const int j = preimage[b];
        if (j < 0 || j <= i) continue;
        if (!g1.has_edge(i, j)) out.push_edge_unchecked(i, j);
      }
    }
  }
  out.finalize();
  return out;
}

}  // namespace

Graph intersection_graph(const Graph& g1, const Graph& g2, const Matching& m) {
  return combine(g1, g2, m, Combine::Intersection);
}

Graph union_graph(const Graph& g1, const Graph& g2, const Matching& m) {
  return combine(g1, g2, m, Combine::Union);
}

Graph difference_graph(const Graph& g1, const Graph& g2, const Matching& m) {
  return combine(g1, g2, m, Combine::Difference);
}

Graph read_edge_list(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("n=", 0) != 0) {
    throw std::runtime_error("edge list: missing 'n=<int>' header");
  }
  const int n = std::stoi(header.substr(2));
  std::vector<std::pair<int, int>> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int i, j;
    if (!(ls >> i >> j)) throw std::runtime_error("edge list: malformed line: " + line);
    if (i >= j) throw std::runtime_error("edge list: expected i < j: " + line);
    edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n=" << g.size() << "\n";
  for (int i = 0; i < g.size(); ++i) {
    for (int j : g.neighbors(i)) {
      if (i < j) out << i << " " << j << "\n";
    }
  }
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_edge_list(out, g);
}

}  // namespace csbm
