#ifndef GT_ANNEALING_HPP
#define GT_ANNEALING_HPP

#include <vector>

#include "gt/graph.hpp"
#include "gt/linalg.hpp"
#include "gt/quasimodes.hpp"

namespace gt {

// Integer energy landscape with |energy(x) - energy(y)| = 1 across every
// edge.  n_plus counts downhill neighbors, n_minus uphill; local minima are
// exactly the vertices with n_plus = 0.
class Landscape {
 public:
  static Landscape build(Graph g, std::vector<int> energy);  // InvalidLandscape

  const Graph& graph() const { return graph_; }
  int energy(int x) const { return energy_[x]; }
  const std::vector<int>& energies() const { return energy_; }
  int n_plus(int x) const { return n_plus_[x]; }
  int n_minus(int x) const { return n_minus_[x]; }
  std::vector<int> minima() const;

 private:
  Graph graph_;
  std::vector<int> energy_;
  std::vector<int> n_plus_;
  std::vector<int> n_minus_;
};

struct ThermalModel {
  double temperature = 0.0;
  double eps = 0.0;  // e^{-1/2T}
  double z = 0.0;    // partition function
  Vector gibbs;      // z^{-1} e^{-energy/T}, sums to 1

  static ThermalModel build(const Landscape& l, double t);  // InvalidTemperature
};

// Metropolis-style generator: rate 1 downhill, e^{-1/T} uphill, diagonal the
// negated row sum.  The diagonal accumulates the off-diagonal entries in
// ascending column order, so summing a row in that order and adding the
// diagonal last gives exactly zero.
Matrix build_generator(const Landscape& l, double t);

// ||gibbs^T Lambda_T||_inf; detailed balance makes this roundoff-sized.
double check_stationarity(const Landscape& l, double t);

struct ConjugationReport {
  double eps = 0.0;
  Matrix h_formula;     // -eps A + V_eps, V_eps = n_plus + eps^2 n_minus
  Matrix h_conjugated;  // -U^{-1} Lambda_T U with (Uf)(x) = sqrt(Z) e^{energy(x)/2T} f(x)
  double max_relative_difference = 0.0;
};

// Both constructions of the thermal Hamiltonian H_T; they must agree
// entrywise (the conjugation is exact, only roundoff separates them).
ConjugationReport conjugated_operator(const Landscape& l, double t);

// The exact zero mode of H_T: f(x) = eps^{energy(x)}.
Vector zero_mode(const Landscape& l, double t);

// Q_T(f) = sum over edges, x the higher end, of (f(x) - eps f(y))^2; equals
// f^T H_T f.
double quadratic_form_downhill(const Landscape& l, double t, const Vector& f);

struct SpectralGap {
  double temperature = 0.0;
  double eps = 0.0;
  double lambda1 = 0.0;  // smallest eigenvalue of H_T, zero up to roundoff
  double gap = 0.0;      // second smallest; GapCollision when it hits zero too
};

SpectralGap spectral_gap(const Landscape& l, double t);

struct GapReport {
  std::vector<SpectralGap> points;
  double fitted_exponent = 0.0;      // of the gap as a power of eps = e^{-1/2T}
  double fitted_exponent_alt = 0.0;  // same fit as a power of e^{-1/T}: half of the above
  int rounded_even_exponent = 0;     // nearest even integer to fitted_exponent
  double fit_residual = 0.0;         // rms residual of the log-log fit
};

// Fit the gap order over >= 4 decreasing temperatures.  Both epsilon
// conventions appear in the report: an even power of e^{-1/2T} is an integer
// power of e^{-1/T}, which is how the two phrasings reconcile.
GapReport gap_order_fit(const Landscape& l, const std::vector<double>& t_grid);

struct AnnealBridge {
  double temperature = 0.0;
  double eps = 0.0;
  double hbar = 0.0;        // sqrt(eps)
  Vector v_eps;             // the hbar-dependent potential on the diagonal
  std::vector<int> wells;   // the landscape minima
  bool wells_exact = false; // V_eps = eps^2 n_minus there: approximate zeros only
  Matrix h_t;               // hbar^2 (-A) + V_eps, built with eps directly
};

// Packages H_T as a tunneling problem with hbar = sqrt(eps).  Because the
// wells are only approximate zeros, the closed-form leading machinery does
// not apply; quasimodes come from Dirichlet restrictions of H_T instead.
AnnealBridge anneal_to_tunneling_bridge(const Landscape& l, double t);

// Dirichlet ground states of H_T at the minima, wrapped as a quasimode
// family over the well cluster of the spectrum.
QuasimodeFamily bridge_family(const AnnealBridge& bridge);

}  // namespace gt

#endif
