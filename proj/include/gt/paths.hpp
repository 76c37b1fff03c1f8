#ifndef GT_PATHS_HPP
#define GT_PATHS_HPP

#include <cstdint>
#include <vector>

#include "gt/graph.hpp"
#include "gt/linalg.hpp"

namespace gt {

// A path here is a walk (vertices may repeat) whose interior, meaning every
// vertex strictly between the endpoints, avoids the wells.  Endpoints are free.
using Path = std::vector<int>;

struct WeightParams {
  double hbar;
  double lambda;
};

// All walks from `from` to `to` of length 1..max_len, in lexicographic order
// of their vertex sequences.  Enumeration aborts (PathLimitExceeded) if the
// result would exceed max_count walks; the default keeps worst-case memory
// in the hundreds of megabytes.
std::vector<Path> enumerate_paths(const Graph& g, const WellSet& wells, int from, int to,
                                  int max_len, std::int64_t max_count = 10'000'000);

// s(P) = hbar^(2|P|) * prod_{l=0..|P|-1} (V(x_l) - lambda)^{-1}; the product
// runs over every vertex except the final endpoint.  A vanishing factor is a
// pole (PoleAtVertex).
double path_weight(const Path& p, const Graph& g, const Potential& v, const WeightParams& w);

struct LoopCounts {
  int well;
  // counts[k] = number of interior-well-free loops of length k at the well,
  // k = 0..max_len (counts[0] = counts[1] = 0).
  std::vector<std::int64_t> counts;
};

// By explicit enumeration.
LoopCounts loop_counts(const Graph& g, const WellSet& wells, int well, int max_len);

// Independent route for the same numbers: with A_int the adjacency among
// non-wells and b the neighbor row of the well, counts[k] = b A_int^(k-2) b^T.
// Kept deliberately separate from loop_counts so the two can cross-check.
std::vector<std::int64_t> transfer_matrix_loop_counts(const Graph& g, const WellSet& wells,
                                                      int well, int max_len);

// sums[k][x] = sum over interior-well-free walks source -> x of length k of
// the product of interior_factor over interior vertices only (endpoints
// excluded).  sums[0] is identically zero; k runs to max_len.  This is the
// streaming evaluation behind every weighted path sum in the project.
std::vector<Vector> interior_weighted_walk_sums(const Graph& g, const std::vector<bool>& wells,
                                                int source, int max_len,
                                                const Vector& interior_factor);

// Convergence ratio of the dominating geometric series:
// rho = hbar^2 * max_degree / min over non-wells of |V - lambda|.
double series_ratio(const Graph& g, const Potential& v, double hbar, double lambda);

enum class SeriesKind {
  kPathSum,   // sums of s(P): one weight factor per step, endpoint included
  kLoopAtWell // loop sums at a well: extra 1/|lambda| endpoint factor
};

// Geometric tail bound rho^(K+1)/(1-rho) for truncation at length K, times
// the modulus of the endpoint factor.  rho >= 1 raises SeriesMayDiverge.
double truncation_bound(const Graph& g, const Potential& v, const WeightParams& w, int max_len,
                        SeriesKind kind);

}  // namespace gt

#endif
