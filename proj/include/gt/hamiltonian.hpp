#ifndef GT_HAMILTONIAN_HPP
#define GT_HAMILTONIAN_HPP

#include <vector>

#include "gt/graph.hpp"
#include "gt/linalg.hpp"

namespace gt {

// H = hbar^2 * Delta + V with (Delta f)(x) = -sum_{y~x} f(y): the diagonal is
// exactly V, the off-diagonal is -hbar^2 on edges.  hbar = 0 is allowed (the
// classical limit, useful in tests); negative hbar is not.
Matrix build_hamiltonian(const Graph& g, const Potential& v, double hbar);

// H restricted to functions vanishing on every well except `well`
// (a principal submatrix; `rows[k]` is the original vertex of row k).
struct DirichletOperator {
  Matrix matrix;
  std::vector<int> rows;
  int well;
  int full_size;
};

DirichletOperator dirichlet_restriction(const Graph& g, const Potential& v, const WellSet& wells,
                                        int well, double hbar);

struct GroundState {
  double mu;        // lowest eigenvalue of the restricted operator
  Vector psi;       // on the full vertex set, zero on the removed wells, psi[well] = 1
  double residual;  // eigensolver residual for the ground pair
  double gap;       // distance to the next eigenvalue of the restriction
};

// Ground state normalized at the well.  Degenerate ground energy or a ground
// vector vanishing at the well (both happen when hbar leaves the
// semiclassical regime) are reported as numerical errors.
GroundState dirichlet_ground_state(const DirichletOperator& op);

// Same computation for an explicitly given symmetric matrix: delete the rows
// and columns of every listed well except `well`.  Used by the annealing
// bridge, where the operator does not come from a Potential.
GroundState ground_state_with_wells(const Matrix& full, const std::vector<int>& wells, int well);

}  // namespace gt

#endif
