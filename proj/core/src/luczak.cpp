#include "csbm/luczak.hpp"

#include <set>
#include <stdexcept>

namespace csbm {

VertexSet luczak_expand(const Graph& g, const VertexSet& u) {
  const int n = g.size();
  std::vector<char> inside(n, 0);
  for (int v : u) {
    if (v < 0 || v >= n) throw std::out_of_range("luczak_expand: vertex out of range");
    inside[v] = 1;
  }
  std::vector<int> inside_neighbors(n, 0);
  std::set<int> eligible;  // outside vertices with >= 2 inside neighbors
  for (int v : u) {
    for (int w : g.neighbors(v)) {
      if (inside[w]) continue;
      if (++inside_neighbors[w] == 2) eligible.insert(w);
    }
  }
  while (!eligible.empty()) {
    const int v = *eligible.begin();
    eligible.erase(eligible.begin());
    inside[v] = 1;
    for (int w : g.neighbors(v)) {
      if (inside[w]) continue;
      if (++inside_neighbors[w] == 2) eligible.insert(w);
    }
  }
  VertexSet out;
  for (int v = 0; v < n; ++v) {
    if (inside[v]) out.push_back(v);
  }
  return out;
}

}  // namespace csbm
