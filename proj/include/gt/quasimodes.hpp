#ifndef GT_QUASIMODES_HPP
#define GT_QUASIMODES_HPP

#include <vector>

#include "gt/graph.hpp"
#include "gt/linalg.hpp"

namespace gt {

// Spectral subspace of a symmetric matrix over a closed interval.
struct SpectralSubspace {
  Vector eigenvalues;        // the included eigenvalues, ascending
  std::vector<Vector> basis; // matching orthonormal eigenvectors
  // Distance from {alpha, beta} to the nearest excluded eigenvalue; with
  // nothing excluded, the distance from the included ones to the endpoints.
  double gap = 0.0;
  int count = 0;
};

// Errors: EmptyInterval when no eigenvalue lies in [alpha, beta];
// NoSpectralGap when an eigenvalue sits within 1e-13*||A||_F of an endpoint.
SpectralSubspace spectral_subspace(const Matrix& a, double alpha, double beta);

// N quasimodes (mu_j, psi_j) for a symmetric A with ||(A-mu_j) psi_j|| small,
// together with the spectral subspace their interval carves out.
struct QuasimodeFamily {
  Matrix a;
  std::vector<Vector> psis;
  Vector mus;
  double alpha = 0.0, beta = 0.0;
  SpectralSubspace subspace;
  double gap = 0.0;       // copy of subspace.gap, the `a` of the distance bound
  double lambda_s = 0.0;  // smallest eigenvalue of the Gram matrix of the psis
  double eps = 0.0;       // max_j ||(A - mu_j) psi_j||
  double eta = 0.0;       // max_j |<psi_j|psi_j> - 1|
  double offdiag = 0.0;   // max_{i != j} |<psi_i|psi_j>|
};

// Validates mu_j in [alpha, beta] (MuOutsideInterval) and the Gram matrix
// (GramNotPD), and computes every derived quantity.
QuasimodeFamily make_quasimode_family(Matrix a, double alpha, double beta,
                                      std::vector<Vector> psis, Vector mus);

// The tunneling application: A = H, quasimodes from the path-sum machinery
// (mu_j from solve_mu, psi_j from the exact linear solve at lambda = mu_j).
// Interval: alpha = lambda_min - max(hbar^4, 1e-12), beta = midpoint between
// the N-th and (N+1)-th eigenvalues (N = number of wells), which isolates the
// well cluster and maximizes the gap.
QuasimodeFamily tunneling_family(const Graph& g, const Potential& v, const WellSet& wells,
                                 double hbar, int max_len);

struct LemmaDistReport {
  double dist = 0.0;   // d(F, E) between span(psis) and the spectral subspace
  double bound = 0.0;  // eps * sqrt(N) / (gap * sqrt(lambda_s))
  bool pass = false;   // dist <= bound + 1e-12
};

LemmaDistReport check_lemma_dist(const QuasimodeFamily& fam);

struct InteractionReport {
  Matrix a_exact;       // a_ij = <A e_i | e_j> in the orthonormalized basis
  Matrix a_approx;      // mu_i delta_ij + (⟨r_i|psi_j⟩ + ⟨r_j|psi_i⟩)/2
  double max_difference = 0.0;
  std::vector<Vector> basis_e;  // the e_i
  Matrix sigma;                 // Gram matrix of the projected normalized psis
  Matrix kappa;                 // sigma^{-1/2}
  double dist_fe = 0.0;
  double dist_bound = 0.0;
  Vector eig_errors;                 // |lambda_j(A on I) - eig_j(a_approx)| per index
  double corollary_reference = 0.0;  // eps * (eps + eta)
};

// Appendix-A interaction matrix: project the normalized quasimodes onto the
// spectral subspace, orthonormalize through Sigma^{-1/2}, and compare the
// exact matrix elements with the first-order cross-term approximation.
// Errors: DimensionMismatch (dim E != N); SigmaNotPD (lambda_min <= 1e-13).
InteractionReport build_interaction_appendixA(const QuasimodeFamily& fam);

struct CorollaryReport {
  Vector approx_eigs;  // eigenvalues of the approximate interaction matrix
  Vector exact_eigs;   // eigenvalues of A inside the interval
  Vector errors;       // per-index absolute difference
  double reference = 0.0;  // eps * (eps + eta)
};

CorollaryReport eig_compare_corollary(const QuasimodeFamily& fam);

}  // namespace gt

#endif
