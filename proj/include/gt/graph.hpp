#ifndef GT_GRAPH_HPP
#define GT_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gt {

// Finite undirected graph with string labels.  Vertices are indexed in input
// order; adjacency lists are kept sorted so everything downstream (path
// enumeration in particular) is deterministic.
class Graph {
 public:
  static Graph build(const std::vector<std::string>& vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_[v]; }
  int index_of(const std::string& label) const;  // UnknownVertex if absent

  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Hop distances; nullopt when unreachable.
  std::vector<std::optional<int>> bfs_distances(int from) const;
  std::optional<int> bfs_distance(int from, int to) const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edges_;
};

// Potential V >= 0 on the vertices.  Wells are the exact zeros.
class Potential {
 public:
  static Potential build(const Graph& g, const std::map<std::string, double>& values);
  static Potential from_values(const Graph& g, std::vector<double> values);

  double value(int v) const { return values_[v]; }
  const std::vector<double>& values() const { return values_; }
  bool is_well(int v) const { return values_[v] == 0.0; }
  bool is_simple() const;  // every value exactly 0 or 1

 private:
  std::vector<double> values_;
};

class WellSet {
 public:
  // Rejects adjacent wells: the whole interaction framework assumes the
  // minimal well separation is at least 2.
  static WellSet detect(const Graph& g, const Potential& v);

  const std::vector<int>& wells() const { return wells_; }
  int count() const { return static_cast<int>(wells_.size()); }
  bool is_well(int v) const { return member_[v]; }
  const std::vector<bool>& mask() const { return member_; }

  // Pairwise hop distances between wells, indexed like wells().
  const std::vector<std::vector<std::optional<int>>>& pair_distances() const {
    return distances_;
  }
  // Minimal pairwise separation S0; nullopt with fewer than two wells or when
  // all pairs are unreachable.
  std::optional<int> separation() const { return separation_; }

 private:
  std::vector<int> wells_;
  std::vector<bool> member_;
  std::vector<std::vector<std::optional<int>>> distances_;
  std::optional<int> separation_;
};

}  // namespace gt

#endif
