#ifndef GT_LINALG_HPP
#define GT_LINALG_HPP

#include <cstddef>
#include <vector>

namespace gt {

using Vector = std::vector<double>;

// Dense row-major matrix.  Everything in this project is small and symmetric,
// so no attempt is made at sparsity or blocking.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Vector column(std::size_t j) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix transpose(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& v);
// Matrix norms are Frobenius unless a function says otherwise.
double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);

struct EigenDecomposition {
  Vector eigenvalues;   // ascending, ties in sweep order
  Matrix eigenvectors;  // column k pairs with eigenvalues[k]
  double residual;      // max_k ||A v_k - lambda_k v_k||_2 against the symmetrized input
  int sweeps;
};

// Cyclic Jacobi for symmetric matrices.  The input is symmetrized first;
// asymmetry beyond 1e-12*||A|| is an error (NotSymmetric).  Sweeps stop when
// the off-diagonal Frobenius mass drops below 1e-14*||A||; more than 100
// sweeps raises NoConvergence.  Serves as the exact oracle for every
// eigenvalue claim in this project, so it post-checks its own residual.
EigenDecomposition sym_eigen(const Matrix& a);

// Gaussian elimination with partial pivoting; a pivot below 1e-14*||A||
// raises Singular.
Vector solve_linear(Matrix a, Vector b);

// Modified Gram-Schmidt with a second re-orthogonalization pass.  A vector
// whose residual drops below 1e-12 of its original norm raises
// RankDeficientBasis.
std::vector<Vector> orthonormalize(const std::vector<Vector>& basis);

// d(F, E) = sup over unit x in span(F) of the distance from x to the nearest
// unit vector in span(E), computed from the singular values s_k of the
// cross-Gram matrix of orthonormalized bases: d = max_k sqrt(2 - 2 s_k).
// Symmetric in its arguments when the spans have equal dimension.  Identical
// spans give 0, orthogonal lines give sqrt(2).  Small angles are evaluated
// without cancellation, so exact-eigenvector inputs come out near 1e-16
// rather than at a square-root roundoff floor.
double subspace_distance(const std::vector<Vector>& f_basis,
                         const std::vector<Vector>& e_basis);

struct LineFit {
  double slope;
  double intercept;
  double rms_residual;  // of the least-squares line, in the fitted coordinates
};

LineFit fit_line(const Vector& x, const Vector& y);
// Least-squares slope of log(y) against log(x); inputs must be positive.
LineFit fit_loglog(const Vector& x, const Vector& y);

}  // namespace gt

#endif
