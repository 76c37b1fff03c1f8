#include "gt/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gt/errors.hpp"

namespace gt {

namespace {

// Minimum of |V - lambda| over non-wells; a well has V = 0 and is never an
// interior vertex, so it never enters the bound.
double min_nonwell_gap(const Graph& g, const Potential& v, double lambda) {
  double m = std::numeric_limits<double>::infinity();
  for (int x = 0; x < g.size(); ++x)
    if (!v.is_well(x)) m = std::min(m, std::abs(v.value(x) - lambda));
  return m;
}

// Depth-first in sorted neighbor order, recording a walk whenever it reaches
// `to` and recursing past non-well vertices only.  Prefixes come out before
// their extensions, so the result is lexicographic on vertex sequences.
void extend(const Graph& g, const WellSet& wells, int to, int max_len, std::int64_t max_count,
            Path& current, std::vector<Path>& out) {
  if (static_cast<int>(current.size()) > max_len) return;
  for (int next : g.neighbors(current.back())) {
    const bool hit_well = wells.is_well(next);
    if (hit_well && next != to) continue;  // wells may appear only as the endpoint
    current.push_back(next);
    if (next == to) {
      if (static_cast<std::int64_t>(out.size()) >= max_count)
        throw NumericalError("PathLimitExceeded",
                             "more than " + std::to_string(max_count) + " walks");
      out.push_back(current);
    }
    // A non-well endpoint reached mid-walk may still be extended further.
    if (!hit_well) extend(g, wells, to, max_len, max_count, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Path> enumerate_paths(const Graph& g, const WellSet& wells, int from, int to,
                                  int max_len, std::int64_t max_count) {
  std::vector<Path> out;
  if (max_len < 1) return out;
  Path current{from};
  extend(g, wells, to, max_len, max_count, current, out);
  return out;
}

double path_weight(const Path& p, const Graph& g, const Potential& v, const WeightParams& w) {
  if (p.size() < 2) throw ValidationError("NotAPath", "need at least one step");
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1]))
      throw ValidationError("NotAPath", "consecutive vertices are not adjacent");
  const std::size_t len = p.size() - 1;
  double weight = std::pow(w.hbar * w.hbar, static_cast<double>(len));
  for (std::size_t i = 0; i < len; ++i) {  // all vertices except the final endpoint
    const double denom = v.value(p[i]) - w.lambda;
    if (denom == 0.0)
      throw NumericalError("PoleAtVertex", "V - lambda vanishes at '" + g.label(p[i]) + "'");
    weight /= denom;
  }
  return weight;
}

LoopCounts loop_counts(const Graph& g, const WellSet& wells, int well, int max_len) {
  LoopCounts lc;
  lc.well = well;
  lc.counts.assign(static_cast<std::size_t>(max_len) + 1, 0);
  for (const Path& p : enumerate_paths(g, wells, well, well, max_len))
    ++lc.counts[p.size() - 1];
  return lc;
}

std::vector<std::int64_t> transfer_matrix_loop_counts(const Graph& g, const WellSet& wells,
                                                      int well, int max_len) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(max_len) + 1, 0);
  std::vector<int> interior;
  for (int x = 0; x < g.size(); ++x)
    if (!wells.is_well(x)) interior.push_back(x);
  const std::size_t m = interior.size();
  std::vector<std::int64_t> b(m, 0);
  for (std::size_t i = 0; i < m; ++i) b[i] = g.has_edge(well, interior[i]) ? 1 : 0;
  // state[i] = number of interior walks from the well of the current length
  // ending at interior[i]; advancing one step multiplies by A_int.
  std::vector<std::int64_t> state = b;
  for (int k = 2; k <= max_len; ++k) {
    std::int64_t closing = 0;
    for (std::size_t i = 0; i < m; ++i) closing += state[i] * b[i];
    counts[k] = closing;
    std::vector<std::int64_t> next(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (state[i] == 0) continue;
      for (int y : g.neighbors(interior[i])) {
        if (wells.is_well(y)) continue;
        const auto j = std::lower_bound(interior.begin(), interior.end(), y) - interior.begin();
        next[static_cast<std::size_t>(j)] += state[i];
      }
    }
    state = std::move(next);
  }
  return counts;
}

std::vector<Vector> interior_weighted_walk_sums(const Graph& g, const std::vector<bool>& wells,
                                                int source, int max_len,
                                                const Vector& interior_factor) {
  const std::size_t n = static_cast<std::size_t>(g.size());
  std::vector<Vector> sums(static_cast<std::size_t>(max_len) + 1, Vector(n, 0.0));
  if (max_len < 1) return sums;
  for (int y : g.neighbors(source)) sums[1][y] = 1.0;
  for (int k = 2; k <= max_len; ++k) {
    // Append one step: the previous endpoint becomes interior and picks up
    // its factor; wells cannot become interior.
    Vector carried(n, 0.0);
    for (std::size_t z = 0; z < n; ++z)
      if (!wells[z] && sums[k - 1][z] != 0.0) carried[z] = sums[k - 1][z] * interior_factor[z];
    for (std::size_t y = 0; y < n; ++y) {
      double acc = 0.0;
      for (int z : g.neighbors(static_cast<int>(y))) acc += carried[z];
      sums[k][y] = acc;
    }
  }
  return sums;
}

double series_ratio(const Graph& g, const Potential& v, double hbar, double lambda) {
  const double gap = min_nonwell_gap(g, v, lambda);
  if (gap == 0.0) throw NumericalError("PoleAtVertex", "V - lambda vanishes on a non-well");
  if (!std::isfinite(gap)) return 0.0;  // no non-wells: no interior walks at all
  return hbar * hbar * g.max_degree() / gap;
}

double truncation_bound(const Graph& g, const Potential& v, const WeightParams& w, int max_len,
                        SeriesKind kind) {
  const double rho = series_ratio(g, v, w.hbar, w.lambda);
  if (rho >= 1.0)
    throw NumericalError("SeriesMayDiverge", "rho = " + std::to_string(rho) +
                                                 " >= 1 at hbar = " + std::to_string(w.hbar));
  if (rho == 0.0) return 0.0;  // hbar = 0 or no non-wells: nothing beyond any truncation
  double bound = std::pow(rho, max_len + 1) / (1.0 - rho);
  if (kind == SeriesKind::kLoopAtWell) {
    // Loop weights carry (V(well) - lambda)^{-1} = -1/lambda at the base in
    // place of one interior factor.
    if (w.lambda == 0.0)
      throw NumericalError("PoleAtVertex", "loop-sum tail undefined at lambda = 0");
    bound *= min_nonwell_gap(g, v, w.lambda) / std::abs(w.lambda);
  }
  return bound;
}

}  // namespace gt
