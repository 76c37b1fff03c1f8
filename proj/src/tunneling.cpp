#include "gt/tunneling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "gt/errors.hpp"
#include "gt/hamiltonian.hpp"

namespace gt {

namespace {

constexpr int kMaxFixedPointIterations = 100;

// 1/(V(x) - lambda) on the non-wells; wells get 0 (never consulted by the
// walk sums, which only weight interior vertices).
Vector resolvent_factors(const Graph& g, const Potential& v, const WellSet& wells,
                         double lambda) {
  Vector factor(g.size(), 0.0);
  for (int x = 0; x < g.size(); ++x) {
    if (wells.is_well(x)) continue;
    const double gap = v.value(x) - lambda;
    if (gap == 0.0)
      throw NumericalError("PoleAtVertex", "V - lambda vanishes at " + g.label(x));
    factor[x] = 1.0 / gap;
  }
  return factor;
}

void require_well(const WellSet& wells, const Graph& g, int well) {
  if (well < 0 || well >= g.size() || !wells.is_well(well))
    throw ValidationError("NotAWell", "vertex index " + std::to_string(well) +
                                          " is not a well");
}

// Right side of the expanded implicit equation at the given mu.
double loop_series(const Graph& g, const Potential& v, const WellSet& wells, int well,
                   double hbar, int max_len, double mu) {
  const Vector factor = resolvent_factors(g, v, wells, mu);
  const auto sums = interior_weighted_walk_sums(g, wells.mask(), well, max_len, factor);
  double next = 0.0;
  for (int k = 2; k <= max_len; ++k) next -= hbar_power(hbar, 2 * k) * sums[k][well];
  return next;
}

}  // namespace

int default_truncation_len(std::optional<int> s0) { return s0 ? 2 * *s0 + 6 : 10; }

WellEigenvalue solve_mu(const Graph& g, const Potential& v, const WellSet& wells, int well,
                        double hbar, int max_len) {
  require_well(wells, g, well);
  if (hbar < 0.0) throw ValidationError("InvalidHbar", "hbar must be nonnegative");
  if (max_len < 0) throw ValidationError("BadTruncation", "max_len must be nonnegative");
  // The iteration only contracts inside the convergent regime; mu stays <= 0,
  // so the ratio at lambda = 0 is the worst case.
  const double rho = series_ratio(g, v, hbar, 0.0);
  if (rho >= 1.0)
    throw NumericalError("SeriesMayDiverge", "rho = " + std::to_string(rho) +
                                                 " >= 1 at hbar = " + std::to_string(hbar));

  WellEigenvalue out;
  out.well = well;
  out.truncation_len = max_len;

  double mu = 0.0;
  bool converged = false;
  for (int iter = 1; iter <= kMaxFixedPointIterations; ++iter) {
    const double next = loop_series(g, v, wells, well, hbar, max_len, mu);
    const double step = std::abs(next - mu);
    mu = next;
    out.iterations = iter;
    if (step <= 1e-14 * std::max(1.0, std::abs(mu))) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw NumericalError("NoConvergence", "mu iteration did not settle in " +
                                              std::to_string(kMaxFixedPointIterations) +
                                              " steps at hbar = " + std::to_string(hbar));
  out.mu = mu;
  if (mu == 0.0) {
    // Empty loop set (isolated well) or hbar = 0: the equation degenerates
    // and there is nothing left to bound.
    out.residual = 0.0;
    out.tail_bound = 0.0;
    return out;
  }
  // Each loop weight s_mu(P) carries the starting factor 1/(V(j)-mu) = -1/mu,
  // so the truncated sum of s_mu(P) over loops is F(mu)/mu.
  out.residual = std::abs(loop_series(g, v, wells, well, hbar, max_len, mu) / mu - 1.0);
  out.tail_bound = truncation_bound(g, v, {hbar, mu}, max_len, SeriesKind::kLoopAtWell);
  return out;
}

QuasimodeVector psi_lambda_pathsum(const Graph& g, const Potential& v, const WellSet& wells,
                                   int well, double lambda, double hbar, int max_len) {
  require_well(wells, g, well);
  if (hbar < 0.0) throw ValidationError("InvalidHbar", "hbar must be nonnegative");
  if (max_len < 0) throw ValidationError("BadTruncation", "max_len must be nonnegative");

  QuasimodeVector out;
  out.well = well;
  out.lambda_used = lambda;
  out.tail_bound = truncation_bound(g, v, {hbar, lambda}, max_len, SeriesKind::kPathSum);

  const Vector factor = resolvent_factors(g, v, wells, lambda);
  const auto sums = interior_weighted_walk_sums(g, wells.mask(), well, max_len, factor);

  out.values.assign(g.size(), 0.0);
  out.values[well] = 1.0;
  for (int x = 0; x < g.size(); ++x) {
    if (wells.is_well(x)) continue;
    // Walks x -> well and their reversals weigh the same; the reversed walk
    // starts at the well, so the only factor outside the interior is x's own.
    double acc = 0.0;
    for (int k = 1; k <= max_len; ++k) acc += hbar_power(hbar, 2 * k) * sums[k][x];
    out.values[x] = acc * factor[x];
  }
  return out;
}

QuasimodeVector psi_lambda_exact(const Graph& g, const Potential& v, const WellSet& wells,
                                 int well, double lambda, double hbar) {
  require_well(wells, g, well);
  if (hbar < 0.0) throw ValidationError("InvalidHbar", "hbar must be nonnegative");

  QuasimodeVector out;
  out.well = well;
  out.lambda_used = lambda;
  out.values.assign(g.size(), 0.0);
  out.values[well] = 1.0;

  std::vector<int> free_rows;
  for (int x = 0; x < g.size(); ++x)
    if (!wells.is_well(x)) free_rows.push_back(x);
  if (free_rows.empty()) return out;

  const int m = static_cast<int>(free_rows.size());
  Matrix a(m, m);
  Vector b(m, 0.0);
  const Matrix h = build_hamiltonian(g, v, hbar);
  for (int r = 0; r < m; ++r) {
    const int x = free_rows[r];
    for (int c = 0; c < m; ++c) {
      const int y = free_rows[c];
      a(r, c) = h(x, y) - (x == y ? lambda : 0.0);
    }
    // Pinned values: 1 at the well, 0 at the other wells.
    b[r] = -h(x, well);
  }
  const Vector sol = solve_linear(a, b);
  for (int r = 0; r < m; ++r) out.values[free_rows[r]] = sol[r];
  return out;
}

DecayReport decay_report(const Graph& g, const WellSet& wells,
                         const std::vector<DecaySample>& samples) {
  if (samples.size() < 3)
    throw ValidationError("TooFewSamples", "need at least 3 hbar samples, got " +
                                               std::to_string(samples.size()));
  const int well = samples.front().psi.well;
  for (const auto& s : samples) {
    if (s.psi.well != well)
      throw ValidationError("WellMismatch", "samples mix different wells");
    if (static_cast<int>(s.psi.values.size()) != g.size())
      throw ValidationError("DimensionMismatch", "psi length does not match the graph");
  }

  DecayReport report;
  report.well = well;
  const auto dist = g.bfs_distances(well);
  Vector hbars(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) hbars[i] = samples[i].hbar;

  for (int x = 0; x < g.size(); ++x) {
    if (wells.is_well(x) && x != well) continue;  // pinned to zero
    if (!dist[x]) continue;                       // unreachable, psi vanishes
    Vector mags(samples.size());
    bool usable = true;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      mags[i] = std::abs(samples[i].psi.values[x]);
      if (mags[i] == 0.0) usable = false;
    }
    if (!usable) continue;
    const LineFit fit = fit_loglog(hbars, mags);
    report.rows.push_back({x, *dist[x], fit.slope, fit.slope - 2.0 * *dist[x]});
  }
  return report;
}

Matrix InteractionMatrix::full() const {
  const int n = static_cast<int>(wells.size());
  Matrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = offdiag(i, j);
    out(i, i) = diag[i].mu;
  }
  return out;
}

InteractionMatrix interaction_matrix_leading(const Graph& g, const Potential& v,
                                             const WellSet& wells, double hbar, int max_len) {
  if (wells.count() < 1) throw ValidationError("NoWells", "need at least one well");

  InteractionMatrix out;
  out.wells = wells.wells();
  out.s0 = wells.separation();
  out.mode = InteractionMode::kLeading;
  const int n = wells.count();
  out.offdiag = Matrix(n, n);

  out.diag.reserve(n);
  for (int i = 0; i < n; ++i)
    out.diag.push_back(solve_mu(g, v, wells, out.wells[i], hbar, max_len));

  const auto& dist = wells.pair_distances();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!dist[i][j] || (out.s0 && *dist[i][j] > *out.s0)) out.pairs_beyond_s0.push_back({i, j});

  if (!out.s0) return out;  // fewer than two reachable wells: diagonal matrix

  const int s0 = *out.s0;
  const Vector inverse_v = resolvent_factors(g, v, wells, 0.0);
  const double scale = hbar_power(hbar, 2 * s0);
  for (int i = 0; i < n; ++i) {
    const auto sums = interior_weighted_walk_sums(g, wells.mask(), out.wells[i], s0, inverse_v);
    for (int j = i + 1; j < n; ++j) {
      // Computed once per pair and mirrored: path reversal makes r symmetric,
      // and mirroring keeps it exactly so in floating point.
      const double r = -(scale * sums[s0][out.wells[j]]);
      out.offdiag(i, j) = r;
      out.offdiag(j, i) = r;
    }
  }
  return out;
}

double SimplePotentialReport::mu_from_counts(int well_index, double hbar) const {
  const auto& counts = loop_counts.at(well_index).counts;
  double mu = 0.0;
  for (int iter = 1; iter <= kMaxFixedPointIterations; ++iter) {
    double next = 0.0;
    for (int k = 2; k < static_cast<int>(counts.size()); ++k) {
      if (counts[k] == 0) continue;
      next -= hbar_power(hbar, 2 * k) * std::pow(1.0 - mu, 1 - k) *
              static_cast<double>(counts[k]);
    }
    const double step = std::abs(next - mu);
    mu = next;
    if (step <= 1e-14 * std::max(1.0, std::abs(mu))) return mu;
  }
  throw NumericalError("NoConvergence", "combinatorial mu iteration did not settle");
}

double SimplePotentialReport::r_from_counts(int i, int j, double hbar) const {
  if (i == j || !s0) return 0.0;
  return -(hbar_power(hbar, 2 * *s0) * static_cast<double>(s0_path_counts[i][j]));
}

SimplePotentialReport simple_potential_specialize(const Graph& g, const Potential& v,
                                                  const WellSet& wells, int max_len) {
  if (!v.is_simple())
    throw ValidationError("NotSimplePotential", "potential values must all be 0 or 1");
  for (int x = 0; x < g.size(); ++x)
    if (g.degree(x) != g.degree(0))
      throw ValidationError("NotConstantDegree",
                            "degree differs at " + g.label(x) + " vs " + g.label(0));

  SimplePotentialReport out;
  out.wells = wells.wells();
  out.truncation_len = max_len;
  out.s0 = wells.separation();

  for (int w : out.wells)
    out.loop_counts.push_back({w, transfer_matrix_loop_counts(g, wells, w, max_len)});

  const int n = wells.count();
  out.s0_path_counts.assign(n, std::vector<std::int64_t>(n, 0));
  if (!out.s0) return out;
  const int s0 = *out.s0;

  for (int i = 0; i < n; ++i) {
    // Integer analogue of the weighted walk sums: counts[k][y] over
    // interior-well-free walks well_i -> y.
    std::vector<std::vector<std::int64_t>> counts(
        s0 + 1, std::vector<std::int64_t>(g.size(), 0));
    for (int y : g.neighbors(out.wells[i])) counts[1][y] = 1;
    for (int k = 2; k <= s0; ++k)
      for (int y = 0; y < g.size(); ++y)
        for (int z : g.neighbors(y))
          if (!wells.is_well(z)) counts[k][y] += counts[k - 1][z];
    for (int j = 0; j < n; ++j)
      if (j != i) out.s0_path_counts[i][j] = counts[s0][out.wells[j]];
  }
  return out;
}

OrderFitReport verify_order(const Graph& g, const Potential& v, const WellSet& wells,
                            const std::vector<double>& hbar_grid) {
  if (hbar_grid.size() < 4)
    throw ValidationError("BadGrid", "need at least 4 hbar values, got " +
                                         std::to_string(hbar_grid.size()));
  for (std::size_t i = 0; i < hbar_grid.size(); ++i) {
    if (hbar_grid[i] <= 0.0) throw ValidationError("BadGrid", "hbar values must be positive");
    if (i > 0 && hbar_grid[i] >= hbar_grid[i - 1])
      throw ValidationError("BadGrid", "hbar values must be strictly decreasing");
  }
  if (!wells.separation())
    throw ValidationError("NoSeparation", "need at least two mutually reachable wells");

  OrderFitReport report;
  report.hbars = hbar_grid;
  report.s0 = wells.separation();
  report.threshold = 2.0 * *report.s0 + 2.0 - 0.25;
  const int k = default_truncation_len(report.s0);
  const int n = wells.count();

  for (double hbar : hbar_grid) {
    const InteractionMatrix im = interaction_matrix_leading(g, v, wells, hbar, k);
    Vector approx = sym_eigen(im.full()).eigenvalues;
    Vector exact_all = sym_eigen(build_hamiltonian(g, v, hbar)).eigenvalues;
    report.interaction_eigs.push_back(approx);
    report.exact_eigs.push_back(Vector(exact_all.begin(), exact_all.begin() + n));
  }

  report.pass = true;
  for (int idx = 0; idx < n; ++idx) {
    OrderIndexFit fit;
    fit.index = idx;
    Vector xs, ys;
    for (std::size_t p = 0; p < hbar_grid.size(); ++p) {
      const double err = std::abs(report.interaction_eigs[p][idx] - report.exact_eigs[p][idx]);
      fit.errors.push_back(err);
      if (err >= 1e-14) {  // below that, the oracle itself is all roundoff
        xs.push_back(hbar_grid[p]);
        ys.push_back(err);
      }
    }
    fit.exact = xs.size() < 2;
    if (fit.exact) {
      fit.slope = 0.0;
      fit.pass = true;
    } else {
      fit.slope = fit_loglog(xs, ys).slope;
      fit.pass = fit.slope >= report.threshold;
    }
    report.pass = report.pass && fit.pass;
    report.fits.push_back(fit);
  }
  return report;
}

}  // namespace gt
