#include "gt/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gt/errors.hpp"

namespace gt {

Matrix build_hamiltonian(const Graph& g, const Potential& v, double hbar) {
  if (!(hbar >= 0.0)) throw ValidationError("InvalidHbar", "hbar must be >= 0");
  const std::size_t n = static_cast<std::size_t>(g.size());
  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) h(i, i) = v.value(static_cast<int>(i));
  const double t = hbar * hbar;
  for (const auto& [a, b] : g.edges()) {
    h(a, b) = -t;
    h(b, a) = -t;
  }
  return h;
}

DirichletOperator dirichlet_restriction(const Graph& g, const Potential& v, const WellSet& wells,
                                        int well, double hbar) {
  if (!wells.is_well(well))
    throw ValidationError("NotAWell", "'" + g.label(well) + "' is not a well");
  const Matrix h = build_hamiltonian(g, v, hbar);
  DirichletOperator op;
  op.well = well;
  op.full_size = g.size();
  for (int i = 0; i < g.size(); ++i)
    if (!wells.is_well(i) || i == well) op.rows.push_back(i);
  const std::size_t m = op.rows.size();
  op.matrix = Matrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) op.matrix(i, j) = h(op.rows[i], op.rows[j]);
  return op;
}

namespace {

GroundState ground_state_impl(const Matrix& sub, const std::vector<int>& rows, int well,
                              int full_size) {
  const auto eig = sym_eigen(sub);
  const double scale = std::max(frobenius_norm(sub), 1.0);
  if (eig.eigenvalues.size() > 1) {
    const double gap = eig.eigenvalues[1] - eig.eigenvalues[0];
    if (gap <= 1e-12 * scale)
      throw NumericalError("DegenerateGroundState",
                           "ground gap " + std::to_string(gap) + " too small");
  }
  std::size_t well_row = 0;
  while (rows[well_row] != well) ++well_row;
  const double at_well = eig.eigenvectors(well_row, 0);
  if (std::abs(at_well) <= 1e-12)
    throw NumericalError("VanishingAtWell", "ground state vanishes at the well");

  GroundState gs;
  gs.mu = eig.eigenvalues[0];
  gs.residual = eig.residual;
  gs.gap = eig.eigenvalues.size() > 1 ? eig.eigenvalues[1] - eig.eigenvalues[0]
                                      : std::numeric_limits<double>::infinity();
  gs.psi.assign(full_size, 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    gs.psi[rows[i]] = eig.eigenvectors(i, 0) / at_well;
  return gs;
}

}  // namespace

GroundState dirichlet_ground_state(const DirichletOperator& op) {
  return ground_state_impl(op.matrix, op.rows, op.well, op.full_size);
}

GroundState ground_state_with_wells(const Matrix& full, const std::vector<int>& wells, int well) {
  const int n = static_cast<int>(full.rows());
  std::vector<bool> removed(n, false);
  bool listed = false;
  for (int w : wells) {
    if (w == well)
      listed = true;
    else
      removed[w] = true;
  }
  if (!listed) throw ValidationError("NotAWell", "vertex is not in the well list");
  std::vector<int> rows;
  for (int i = 0; i < n; ++i)
    if (!removed[i]) rows.push_back(i);
  Matrix sub(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) sub(i, j) = full(rows[i], rows[j]);
  return ground_state_impl(sub, rows, well, n);
}

}  // namespace gt
