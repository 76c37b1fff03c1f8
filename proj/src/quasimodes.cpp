#include "gt/quasimodes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gt/errors.hpp"
#include "gt/hamiltonian.hpp"
#include "gt/tunneling.hpp"

namespace gt {

namespace {

Vector residual_vector(const Matrix& a, double mu, const Vector& psi) {
  Vector r = a * psi;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= mu * psi[i];
  return r;
}

Matrix gram(const std::vector<Vector>& vs) {
  const int n = static_cast<int>(vs.size());
  Matrix s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      s(i, j) = dot(vs[i], vs[j]);
      s(j, i) = s(i, j);
    }
  return s;
}

// mu_i delta_ij + (<r_i|psi_j> + <r_j|psi_i>)/2 with the raw, unnormalized
// quasimodes, exactly as the first-order formula is stated.
Matrix approx_interaction(const QuasimodeFamily& fam) {
  const int n = static_cast<int>(fam.psis.size());
  std::vector<Vector> residuals;
  residuals.reserve(n);
  for (int i = 0; i < n; ++i)
    residuals.push_back(residual_vector(fam.a, fam.mus[i], fam.psis[i]));
  Matrix approx(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      approx(i, j) =
          0.5 * (dot(residuals[i], fam.psis[j]) + dot(residuals[j], fam.psis[i]));
      if (i == j) approx(i, j) += fam.mus[i];
    }
  return approx;
}

}  // namespace

SpectralSubspace spectral_subspace(const Matrix& a, double alpha, double beta) {
  if (alpha > beta)
    throw ValidationError("EmptyInterval", "alpha exceeds beta");
  const EigenDecomposition eig = sym_eigen(a);
  const double collision_tol = 1e-13 * frobenius_norm(a);

  SpectralSubspace out;
  double excluded_gap = std::numeric_limits<double>::infinity();
  double included_gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
    const double lambda = eig.eigenvalues[k];
    const double to_edge = std::min(std::abs(lambda - alpha), std::abs(lambda - beta));
    if (to_edge <= collision_tol)
      throw NumericalError("NoSpectralGap", "eigenvalue " + std::to_string(lambda) +
                                                " collides with an interval endpoint");
    if (alpha <= lambda && lambda <= beta) {
      out.eigenvalues.push_back(lambda);
      out.basis.push_back(eig.eigenvectors.column(static_cast<int>(k)));
      included_gap = std::min(included_gap, to_edge);
    } else {
      excluded_gap = std::min(excluded_gap, to_edge);
    }
  }
  out.count = static_cast<int>(out.eigenvalues.size());
  if (out.count == 0)
    throw ValidationError("EmptyInterval", "no eigenvalue in [" + std::to_string(alpha) +
                                               ", " + std::to_string(beta) + "]");
  out.gap = std::isinf(excluded_gap) ? included_gap : excluded_gap;
  return out;
}

QuasimodeFamily make_quasimode_family(Matrix a, double alpha, double beta,
                                      std::vector<Vector> psis, Vector mus) {
  if (psis.empty() || psis.size() != mus.size())
    throw ValidationError("DimensionMismatch", "need equally many psis and mus, nonzero");
  for (const auto& p : psis)
    if (static_cast<int>(p.size()) != a.rows())
      throw ValidationError("DimensionMismatch", "psi length does not match the matrix");
  for (double mu : mus)
    if (mu < alpha || mu > beta)
      throw ValidationError("MuOutsideInterval",
                            "mu = " + std::to_string(mu) + " outside [" +
                                std::to_string(alpha) + ", " + std::to_string(beta) + "]");

  QuasimodeFamily fam;
  fam.subspace = spectral_subspace(a, alpha, beta);
  fam.a = std::move(a);
  fam.psis = std::move(psis);
  fam.mus = std::move(mus);
  fam.alpha = alpha;
  fam.beta = beta;
  fam.gap = fam.subspace.gap;

  const Matrix s = gram(fam.psis);
  fam.lambda_s = sym_eigen(s).eigenvalues.front();
  if (fam.lambda_s <= 0.0)
    throw NumericalError("GramNotPD", "Gram matrix of the quasimodes is not positive "
                                      "definite; lambda_S = " +
                                          std::to_string(fam.lambda_s));

  for (std::size_t j = 0; j < fam.psis.size(); ++j) {
    fam.eps = std::max(fam.eps, norm2(residual_vector(fam.a, fam.mus[j], fam.psis[j])));
    for (std::size_t i = 0; i <= j; ++i) {
      if (i == j)
        fam.eta = std::max(fam.eta, std::abs(s(j, j) - 1.0));
      else
        fam.offdiag = std::max(fam.offdiag, std::abs(s(i, j)));
    }
  }
  return fam;
}

QuasimodeFamily tunneling_family(const Graph& g, const Potential& v, const WellSet& wells,
                                 double hbar, int max_len) {
  const Matrix h = build_hamiltonian(g, v, hbar);
  const Vector spectrum = sym_eigen(h).eigenvalues;
  const int n = g.size();
  const int count = wells.count();
  if (count < 1) throw ValidationError("NoWells", "need at least one well");

  const double delta = std::max(hbar * hbar * hbar * hbar, 1e-12);
  const double alpha = spectrum.front() - delta;
  const double beta =
      count < n ? 0.5 * (spectrum[count - 1] + spectrum[count]) : spectrum.back() + delta;

  std::vector<Vector> psis;
  Vector mus;
  for (int well : wells.wells()) {
    const WellEigenvalue we = solve_mu(g, v, wells, well, hbar, max_len);
    psis.push_back(psi_lambda_exact(g, v, wells, well, we.mu, hbar).values);
    mus.push_back(we.mu);
  }
  return make_quasimode_family(h, alpha, beta, std::move(psis), std::move(mus));
}

LemmaDistReport check_lemma_dist(const QuasimodeFamily& fam) {
  LemmaDistReport report;
  report.dist = subspace_distance(fam.psis, fam.subspace.basis);
  report.bound = fam.eps * std::sqrt(static_cast<double>(fam.psis.size())) /
                 (fam.gap * std::sqrt(fam.lambda_s));
  report.pass = report.dist <= report.bound + 1e-12;
  return report;
}

InteractionReport build_interaction_appendixA(const QuasimodeFamily& fam) {
  const int n = static_cast<int>(fam.psis.size());
  if (fam.subspace.count != n)
    throw ValidationError("DimensionMismatch",
                          "spectral subspace dimension " + std::to_string(fam.subspace.count) +
                              " != number of quasimodes " + std::to_string(n));
  const int dim = fam.a.rows();

  InteractionReport report;

  // V_i = Pi (psi_i / ||psi_i||), expanded in the subspace basis to keep the
  // projector implicit: V_i = sum_k <b_k|Psi_i> b_k.
  std::vector<Vector> projected(n, Vector(dim, 0.0));
  for (int i = 0; i < n; ++i) {
    const double scale = 1.0 / norm2(fam.psis[i]);
    for (const Vector& b : fam.subspace.basis) {
      double coeff = 0.0;
      for (int x = 0; x < dim; ++x) coeff += b[x] * fam.psis[i][x] * scale;
      for (int x = 0; x < dim; ++x) projected[i][x] += coeff * b[x];
    }
  }

  report.sigma = gram(projected);
  const EigenDecomposition sig = sym_eigen(report.sigma);
  if (sig.eigenvalues.front() <= 1e-13)
    throw NumericalError("SigmaNotPD", "lambda_min(Sigma) = " +
                                           std::to_string(sig.eigenvalues.front()));
  report.kappa = Matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k)
        acc += sig.eigenvectors(i, k) * sig.eigenvectors(j, k) /
               std::sqrt(sig.eigenvalues[k]);
      report.kappa(i, j) = acc;
    }

  report.basis_e.assign(n, Vector(dim, 0.0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int x = 0; x < dim; ++x)
        report.basis_e[i][x] += report.kappa(i, k) * projected[k][x];

  // Exact matrix elements, kept unsymmetrized: their symmetry is a property
  // to verify, not to enforce.
  report.a_exact = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    const Vector ae = fam.a * report.basis_e[i];
    for (int j = 0; j < n; ++j) report.a_exact(i, j) = dot(ae, report.basis_e[j]);
  }

  report.a_approx = approx_interaction(fam);
  report.max_difference = max_abs_diff(report.a_exact, report.a_approx);

  const LemmaDistReport lemma = check_lemma_dist(fam);
  report.dist_fe = lemma.dist;
  report.dist_bound = lemma.bound;

  const Vector approx_eigs = sym_eigen(report.a_approx).eigenvalues;
  report.eig_errors.resize(n);
  for (int j = 0; j < n; ++j)
    report.eig_errors[j] = std::abs(approx_eigs[j] - fam.subspace.eigenvalues[j]);
  report.corollary_reference = fam.eps * (fam.eps + fam.eta);
  return report;
}

CorollaryReport eig_compare_corollary(const QuasimodeFamily& fam) {
  const int n = static_cast<int>(fam.psis.size());
  if (fam.subspace.count != n)
    throw ValidationError("DimensionMismatch",
                          "spectral subspace dimension " + std::to_string(fam.subspace.count) +
                              " != number of quasimodes " + std::to_string(n));

  CorollaryReport report;
  report.approx_eigs = sym_eigen(approx_interaction(fam)).eigenvalues;
  report.exact_eigs = fam.subspace.eigenvalues;
  report.errors.resize(n);
  for (int j = 0; j < n; ++j)
    report.errors[j] = std::abs(report.approx_eigs[j] - report.exact_eigs[j]);
  report.reference = fam.eps * (fam.eps + fam.eta);
  return report;
}

}  // namespace gt
