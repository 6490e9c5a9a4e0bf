#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qcw {

template <typename Scalar>
using CVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
template <typename Scalar>
using CMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ComplexVector = CVector<double>;
using ComplexMatrix = CMatrix<double>;
using Complex = std::complex<double>;

/// |<a|b>|, conjugate-linear in the first argument.
template <typename DerivedA, typename DerivedB>
auto overlap(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return std::abs(a.dot(b));
}

/// |<a|b>|^2.
template <typename DerivedA, typename DerivedB>
auto fidelity(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return std::norm(a.dot(b));
}

/// Computational basis vector |k> in dimension d.
template <typename Scalar>
CVector<Scalar> basis_ket(Eigen::Index d, Eigen::Index k) {
  return CVector<Scalar>::Unit(d, k);
}

}  // namespace qcw
