#ifndef LJSEP_LINALG_HPP
#define LJSEP_LINALG_HPP

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

namespace ljsep {

/// Solves a tridiagonal system in place (Thomas algorithm). `lower[i]`
/// couples row i to i-1 (lower[0] unused), `upper[i]` row i to i+1
/// (upper[n-1] unused). Stable for diagonally dominant systems.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> solve_tridiagonal(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& lower,
                                                          const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& diag,
                                                          const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& upper,
                                                          Eigen::Matrix<Scalar, Eigen::Dynamic, 1> rhs) {
  const Eigen::Index n = diag.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> c(n);
  Scalar denom = diag[0];
  if (denom == Scalar(0)) throw std::runtime_error("solve_tridiagonal: zero pivot");
  c[0] = n > 1 ? upper[0] / denom : Scalar(0);
  rhs[0] /= denom;
  for (Eigen::Index i = 1; i < n; ++i) {
    denom = diag[i] - lower[i] * c[i - 1];
    if (denom == Scalar(0)) throw std::runtime_error("solve_tridiagonal: zero pivot");
    c[i] = i + 1 < n ? upper[i] / denom : Scalar(0);
    rhs[i] = (rhs[i] - lower[i] * rhs[i - 1]) / denom;
  }
  for (Eigen::Index i = n - 2; i >= 0; --i) rhs[i] -= c[i] * rhs[i + 1];
  if (!rhs.allFinite()) throw std::runtime_error("solve_tridiagonal: non-finite solution");
  return rhs;
}

/// exp(A) by scaling and squaring of a truncated Taylor series.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> expm(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Scalar norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > Scalar(0.5)) squarings = static_cast<int>(std::ceil(std::log2(norm / Scalar(0.5))));
  const Mat scaled = a / std::pow(Scalar(2), squarings);
  Mat term = Mat::Identity(a.rows(), a.cols());
  Mat sum = term;
  // ||scaled|| <= 1/2: 20 terms reach well below double rounding.
  for (int k = 1; k <= 20; ++k) {
    term = (term * scaled) / Scalar(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace ljsep

#endif  // LJSEP_LINALG_HPP
