#include "gt/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "gt/errors.hpp"

namespace gt {

Graph Graph::build(const std::vector<std::string>& vertices,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
  Graph g;
  for (const auto& label : vertices) {
    if (g.index_.count(label))
      throw ValidationError("DuplicateVertex", "vertex '" + label + "' listed twice");
    g.index_[label] = static_cast<int>(g.labels_.size());
    g.labels_.push_back(label);
  }
  g.adjacency_.resize(g.labels_.size());

  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    auto ia = g.index_.find(a);
    auto ib = g.index_.find(b);
    if (ia == g.index_.end())
      throw ValidationError("UnknownEndpoint", "edge endpoint '" + a + "' is not a vertex");
    if (ib == g.index_.end())
      throw ValidationError("UnknownEndpoint", "edge endpoint '" + b + "' is not a vertex");
    int u = ia->second, v = ib->second;
    if (u == v) throw ValidationError("SelfLoop", "self-loop at '" + a + "'");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw ValidationError("DuplicateEdge", "edge {" + a + "," + b + "} listed twice");
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
    g.edges_.push_back({u, v});
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

int Graph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    throw ValidationError("UnknownVertex", "no vertex labelled '" + label + "'");
  return it->second;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const {
  int m = 0;
  for (const auto& nbrs : adjacency_) m = std::max(m, static_cast<int>(nbrs.size()));
  return m;
}

std::vector<std::optional<int>> Graph::bfs_distances(int from) const {
  std::vector<std::optional<int>> dist(labels_.size());
  std::deque<int> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : adjacency_[x]) {
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::optional<int> Graph::bfs_distance(int from, int to) const {
  return bfs_distances(from)[to];
}

Potential Potential::build(const Graph& g, const std::map<std::string, double>& values) {
  std::vector<double> v(g.size());
  for (const auto& [label, value] : values) {
    (void)g.index_of(label);  // UnknownVertex on stray labels
  }
  for (int i = 0; i < g.size(); ++i) {
    auto it = values.find(g.label(i));
    if (it == values.end())
      throw ValidationError("MissingPotential", "no potential for vertex '" + g.label(i) + "'");
    v[i] = it->second;
  }
  return from_values(g, std::move(v));
}

Potential Potential::from_values(const Graph& g, std::vector<double> values) {
  if (static_cast<int>(values.size()) != g.size())
    throw ValidationError("MissingPotential", "potential size does not match vertex count");
  for (int i = 0; i < g.size(); ++i)
    if (values[i] < 0.0)
      throw ValidationError("NegativePotential",
                            "V(" + g.label(i) + ") = " + std::to_string(values[i]));
  Potential p;
  p.values_ = std::move(values);
  return p;
}

bool Potential::is_simple() const {
  for (double v : values_)
    if (v != 0.0 && v != 1.0) return false;
  return true;
}

WellSet WellSet::detect(const Graph& g, const Potential& v) {
  WellSet w;
  w.member_.assign(g.size(), false);
  for (int i = 0; i < g.size(); ++i) {
    if (v.is_well(i)) {
      w.wells_.push_back(i);
      w.member_[i] = true;
    }
  }
  for (const auto& [a, b] : g.edges()) {
    if (w.member_[a] && w.member_[b])
      throw ValidationError("AdjacentWells",
                            "wells '" + g.label(a) + "' and '" + g.label(b) + "' are adjacent");
  }
  const int n = w.count();
  w.distances_.assign(n, std::vector<std::optional<int>>(n));
  for (int i = 0; i < n; ++i) {
    const auto dist = g.bfs_distances(w.wells_[i]);
    for (int j = 0; j < n; ++j) w.distances_[i][j] = dist[w.wells_[j]];
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.distances_[i][j])
        w.separation_ = w.separation_ ? std::min(*w.separation_, *w.distances_[i][j])
                                      : *w.distances_[i][j];
  return w;
}

}  // namespace gt
