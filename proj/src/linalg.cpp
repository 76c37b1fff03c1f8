#include "gt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gt/errors.hpp"

namespace gt {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kOffDiagTol = 1e-14;
constexpr double kPivotTol = 1e-14;
constexpr double kGramSchmidtTol = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
  Vector y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vector& v) { return std::sqrt(dot(v, v)); }

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

EigenDecomposition sym_eigen(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw ValidationError("NotSquare", "sym_eigen needs a square matrix");

  const double scale = frobenius_norm(a);
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) asym = std::max(asym, std::abs(a(i, j) - a(j, i)));
  if (asym > kSymmetryTol * std::max(scale, 1.0))
    throw NumericalError("NotSymmetric",
                         "asymmetry " + std::to_string(asym) + " exceeds tolerance");

  // Work on the symmetrized copy; it is also the reference for the residual.
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = 0.5 * (a(i, j) + a(j, i));
  const Matrix reference = s;

  Matrix v = Matrix::identity(n);
  const double threshold = kOffDiagTol * scale;
  int sweeps = 0;
  while (off_diagonal_norm(s) > threshold) {
    if (++sweeps > kMaxSweeps)
      throw NumericalError("NoConvergence",
                           "Jacobi sweeps exceeded " + std::to_string(kMaxSweeps));
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = s(p, q);
        if (apq == 0.0) continue;
        const double tau = (s(q, q) - s(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double skp = s(k, p), skq = s(k, q);
          s(k, p) = c * skp - sn * skq;
          s(k, q) = sn * skp + c * skq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double spk = s(p, k), sqk = s(q, k);
          s(p, k) = c * spk - sn * sqk;
          s(q, k) = sn * spk + c * sqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return s(i, i) < s(j, j); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = s(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  out.sweeps = sweeps;

  double residual = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double avi = 0.0;
      for (std::size_t j = 0; j < n; ++j) avi += reference(i, j) * out.eigenvectors(j, k);
      const double diff = avi - out.eigenvalues[k] * out.eigenvectors(i, k);
      r2 += diff * diff;
    }
    residual = std::max(residual, std::sqrt(r2));
  }
  out.residual = residual;
  if (residual > 1e-10 * std::max(scale, 1.0))
    throw NumericalError("NoConvergence", "eigen residual " + std::to_string(residual) +
                                              " exceeds certification threshold");
  return out;
}

Vector solve_linear(Matrix a, Vector b) {
  const std::size_t n = a.rows();
  if (n != a.cols() || b.size() != n)
    throw ValidationError("ShapeMismatch", "solve_linear needs square A and matching b");
  const double scale = std::max(frobenius_norm(a), 1e-300);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > best) {
        best = std::abs(a(r, col));
        pivot_row = r;
      }
    }
    if (best < kPivotTol * scale)
      throw NumericalError("Singular", "pivot " + std::to_string(best) + " below threshold");
    if (pivot_row != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot_row, j));
      std::swap(b[col], b[pivot_row]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      b[r] -= f * b[col];
    }
  }
  Vector x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

std::vector<Vector> orthonormalize(const std::vector<Vector>& basis) {
  std::vector<Vector> q;
  q.reserve(basis.size());
  for (const Vector& input : basis) {
    const double original = norm2(input);
    Vector v = input;
    for (int pass = 0; pass < 2; ++pass)
      for (const Vector& u : q) {
        const double c = dot(v, u);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
      }
    const double rem = norm2(v);
    if (rem <= kGramSchmidtTol * std::max(original, 1e-300))
      throw NumericalError("RankDeficientBasis",
                           "vector " + std::to_string(q.size()) + " is dependent");
    for (double& c : v) c /= rem;
    q.push_back(std::move(v));
  }
  return q;
}

double subspace_distance(const std::vector<Vector>& f_basis,
                         const std::vector<Vector>& e_basis) {
  const auto qf = orthonormalize(f_basis);
  const auto qe = orthonormalize(e_basis);
  // Project each qf_i off span(E).  The Gram matrix of the residuals equals
  // I - M M^T with M the cross-Gram, so its eigenvalues are the squared sines
  // of the principal angles.  Forming the residuals explicitly keeps small
  // angles accurate to ~1e-16 absolute, where 1 - cos^2 would lose half the
  // digits and put an O(1e-8) floor under the result.
  std::vector<Vector> r = qf;
  for (auto& ri : r)
    for (const auto& e : qe) {
      const double c = dot(e, ri);
      for (std::size_t k = 0; k < ri.size(); ++k) ri[k] -= c * e[k];
    }
  Matrix g(r.size(), r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) g(i, j) = dot(r[i], r[j]);
  const auto eig = sym_eigen(g);
  const double s2 = std::clamp(eig.eigenvalues.back(), 0.0, 1.0);
  // Chord form 2 - 2 cos, rearranged to avoid cancellation: largest chord
  // over the principal angles, sqrt(2) between orthogonal lines.
  const double cosine = std::sqrt(1.0 - s2);
  return std::sqrt(2.0 * s2 / (1.0 + cosine));
}

LineFit fit_line(const Vector& x, const Vector& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ValidationError("FitTooFewPoints", "need at least 2 points");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw ValidationError("FitDegenerate", "all abscissae equal");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double r2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    r2 += r * r;
  }
  fit.rms_residual = std::sqrt(r2 / n);
  return fit;
}

LineFit fit_loglog(const Vector& x, const Vector& y) {
  Vector lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw ValidationError("FitNonPositive", "log-log fit needs positive data");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  return fit_line(lx, ly);
}

}  // namespace gt
