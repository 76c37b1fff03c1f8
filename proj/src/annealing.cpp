#include "gt/annealing.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gt/errors.hpp"
#include "gt/hamiltonian.hpp"

namespace gt {

namespace {

void require_temperature(double t) {
  if (!(t > 0.0))
    throw ValidationError("InvalidTemperature", "temperature must be positive");
}

}  // namespace

Landscape Landscape::build(Graph g, std::vector<int> energy) {
  if (static_cast<int>(energy.size()) != g.size())
    throw ValidationError("InvalidLandscape", "one energy per vertex required");
  for (int x = 0; x < g.size(); ++x)
    if (energy[x] < 0)
      throw ValidationError("InvalidLandscape",
                            "negative energy at " + g.label(x));
  for (const auto& [u, w] : g.edges())
    if (std::abs(energy[u] - energy[w]) != 1)
      throw ValidationError("InvalidLandscape",
                            "energy must change by exactly 1 across {" + g.label(u) + ", " +
                                g.label(w) + "}");

  Landscape l;
  l.energy_ = std::move(energy);
  l.n_plus_.assign(g.size(), 0);
  l.n_minus_.assign(g.size(), 0);
  for (int x = 0; x < g.size(); ++x)
    for (int y : g.neighbors(x)) {
      if (l.energy_[y] < l.energy_[x])
        ++l.n_plus_[x];
      else
        ++l.n_minus_[x];
    }
  l.graph_ = std::move(g);
  return l;
}

std::vector<int> Landscape::minima() const {
  std::vector<int> out;
  for (int x = 0; x < graph_.size(); ++x)
    if (n_plus_[x] == 0) out.push_back(x);
  return out;
}

ThermalModel ThermalModel::build(const Landscape& l, double t) {
  require_temperature(t);
  ThermalModel m;
  m.temperature = t;
  m.eps = std::exp(-0.5 / t);
  m.gibbs.resize(l.graph().size());
  m.z = 0.0;
  for (int x = 0; x < l.graph().size(); ++x) {
    m.gibbs[x] = std::exp(-l.energy(x) / t);
    m.z += m.gibbs[x];
  }
  for (double& g : m.gibbs) g /= m.z;
  return m;
}

Matrix build_generator(const Landscape& l, double t) {
  require_temperature(t);
  const Graph& g = l.graph();
  const double uphill = std::exp(-1.0 / t);
  Matrix lambda(g.size(), g.size());
  for (int x = 0; x < g.size(); ++x) {
    double total = 0.0;
    // neighbors() is ascending, which fixes the accumulation order the
    // zero-row-sum guarantee refers to.
    for (int y : g.neighbors(x)) {
      const double rate = l.energy(y) < l.energy(x) ? 1.0 : uphill;
      lambda(x, y) = rate;
      total += rate;
    }
    lambda(x, x) = -total;
  }
  return lambda;
}

double check_stationarity(const Landscape& l, double t) {
  const ThermalModel m = ThermalModel::build(l, t);
  const Matrix lambda = build_generator(l, t);
  const int n = l.graph().size();
  double worst = 0.0;
  for (int y = 0; y < n; ++y) {
    double acc = 0.0;
    for (int x = 0; x < n; ++x) acc += m.gibbs[x] * lambda(x, y);
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

ConjugationReport conjugated_operator(const Landscape& l, double t) {
  require_temperature(t);
  const Graph& g = l.graph();
  const int n = g.size();

  ConjugationReport report;
  report.eps = std::exp(-0.5 / t);
  const double eps2 = report.eps * report.eps;

  report.h_formula = Matrix(n, n);
  for (int x = 0; x < n; ++x) {
    report.h_formula(x, x) = l.n_plus(x) + eps2 * l.n_minus(x);
    for (int y : g.neighbors(x)) report.h_formula(x, y) = -report.eps;
  }

  const ThermalModel m = ThermalModel::build(l, t);
  Vector u(n);
  for (int x = 0; x < n; ++x) u[x] = std::sqrt(m.z) * std::exp(0.5 * l.energy(x) / t);
  const Matrix lambda = build_generator(l, t);
  report.h_conjugated = Matrix(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      report.h_conjugated(x, y) = -lambda(x, y) * u[y] / u[x];

  const double scale = std::max(max_abs(report.h_formula), 1e-300);
  report.max_relative_difference =
      max_abs_diff(report.h_formula, report.h_conjugated) / scale;
  return report;
}

Vector zero_mode(const Landscape& l, double t) {
  require_temperature(t);
  const double eps = std::exp(-0.5 / t);
  Vector f(l.graph().size());
  for (int x = 0; x < l.graph().size(); ++x)
    f[x] = std::pow(eps, static_cast<double>(l.energy(x)));
  return f;
}

double quadratic_form_downhill(const Landscape& l, double t, const Vector& f) {
  require_temperature(t);
  if (f.size() != static_cast<std::size_t>(l.graph().size()))
    throw ValidationError("DimensionMismatch", "vector length does not match the landscape");
  const double eps = std::exp(-0.5 / t);
  double q = 0.0;
  for (const auto& [u, w] : l.graph().edges()) {
    const int hi = l.energy(u) > l.energy(w) ? u : w;
    const int lo = hi == u ? w : u;
    const double d = f[hi] - eps * f[lo];
    q += d * d;
  }
  return q;
}

SpectralGap spectral_gap(const Landscape& l, double t) {
  const ConjugationReport conj = conjugated_operator(l, t);
  const Vector eigs = sym_eigen(conj.h_formula).eigenvalues;

  SpectralGap out;
  out.temperature = t;
  out.eps = conj.eps;
  out.lambda1 = eigs[0];
  if (eigs.size() < 2)
    throw ValidationError("InvalidLandscape", "need at least two vertices for a gap");
  out.gap = eigs[1];
  if (out.gap <= 1e-13)
    throw NumericalError("GapCollision",
                         "second eigenvalue " + std::to_string(out.gap) +
                             " is numerically zero: a second zero mode (disconnected "
                             "landscape?)");
  return out;
}

GapReport gap_order_fit(const Landscape& l, const std::vector<double>& t_grid) {
  if (t_grid.size() < 4)
    throw ValidationError("BadGrid", "need at least 4 temperatures, got " +
                                         std::to_string(t_grid.size()));
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0))
      throw ValidationError("BadGrid", "temperatures must be positive");
    if (i > 0 && t_grid[i] >= t_grid[i - 1])
      throw ValidationError("BadGrid", "temperatures must be strictly decreasing");
  }

  GapReport report;
  Vector xs, ys;
  for (double t : t_grid) {
    report.points.push_back(spectral_gap(l, t));
    xs.push_back(report.points.back().eps);
    ys.push_back(report.points.back().gap);
  }
  const LineFit fit = fit_loglog(xs, ys);
  report.fitted_exponent = fit.slope;
  report.fitted_exponent_alt = 0.5 * fit.slope;
  report.rounded_even_exponent = 2 * static_cast<int>(std::llround(fit.slope / 2.0));
  report.fit_residual = fit.rms_residual;
  return report;
}

AnnealBridge anneal_to_tunneling_bridge(const Landscape& l, double t) {
  const ConjugationReport conj = conjugated_operator(l, t);

  AnnealBridge bridge;
  bridge.temperature = t;
  bridge.eps = conj.eps;
  bridge.hbar = std::sqrt(conj.eps);
  bridge.wells = l.minima();
  bridge.wells_exact = false;
  bridge.h_t = conj.h_formula;
  bridge.v_eps.resize(l.graph().size());
  for (int x = 0; x < l.graph().size(); ++x) bridge.v_eps[x] = bridge.h_t(x, x);
  return bridge;
}

QuasimodeFamily bridge_family(const AnnealBridge& bridge) {
  if (bridge.wells.empty())
    throw ValidationError("NoWells", "landscape has no minima");
  const int n = bridge.h_t.rows();
  const int count = static_cast<int>(bridge.wells.size());

  const Vector spectrum = sym_eigen(bridge.h_t).eigenvalues;
  const double delta = std::max(bridge.eps * bridge.eps, 1e-12);
  const double alpha = spectrum.front() - delta;
  const double beta =
      count < n ? 0.5 * (spectrum[count - 1] + spectrum[count]) : spectrum.back() + delta;

  std::vector<Vector> psis;
  Vector mus;
  for (int well : bridge.wells) {
    const GroundState gs = ground_state_with_wells(bridge.h_t, bridge.wells, well);
    psis.push_back(gs.psi);
    mus.push_back(gs.mu);
  }
  return make_quasimode_family(bridge.h_t, alpha, beta, std::move(psis), std::move(mus));
}

}  // namespace gt
