#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcw/graph.hpp"
#include "qcw/linalg.hpp"

namespace qcw {

/// Measurement vectors (one per vertex) and the measured state.
///
/// Vectors are stored normalized; the rank-one projector of vertex i is
/// |v_i><v_i| and is formed on demand.
template <typename Scalar>
struct MeasurementFamily {
  int n = 0;
  int d = 0;
  CVector<Scalar> state;
  std::map<Vertex, CVector<Scalar>> vectors;

  const CVector<Scalar>& vector(Vertex v) const {
    auto it = vectors.find(v);
    if (it == vectors.end()) throw std::out_of_range("no vector for vertex " + std::to_string(v));
    return it->second;
  }
  CMatrix<Scalar> projector(Vertex v) const {
    const auto& x = vector(v);
    return x * x.adjoint();
  }
};

using Family = MeasurementFamily<double>;

/// Rows of a centered regular simplex: m rows in dimension m - 1 with every
/// pair of rows having dot product `pairwise` and every column summing to 0.
///
/// Built recursively: the first row is (-r, 0, ..., 0) and the remaining rows
/// are (r / (m-1), s * U) where U is the unit simplex on m - 1 rows. For
/// pairwise = -2 this reproduces the standard N = 7 and N = 9 matrices exactly.
template <typename Scalar = double>
RMatrix<Scalar> simplex_rows(int m, Scalar pairwise) {
  if (m < 1) throw std::invalid_argument("simplex_rows needs m >= 1");
  if (!(pairwise < Scalar(0))) throw std::invalid_argument("simplex_rows needs a negative pairwise product");

  // Unit-norm rows with pairwise dot -1/(k-1).
  RMatrix<Scalar> unit = RMatrix<Scalar>::Zero(1, 0);
  for (int k = 2; k <= m; ++k) {
    const Scalar a = Scalar(1) / Scalar(k - 1);
    const Scalar s = std::sqrt(Scalar(1) - a * a);
    RMatrix<Scalar> next = RMatrix<Scalar>::Zero(k, k - 1);
    next(0, 0) = Scalar(-1);
    next.block(1, 0, k - 1, 1).setConstant(a);
    next.block(1, 1, k - 1, k - 2) = s * unit;
    unit = std::move(next);
  }
  if (m == 1) return unit;
  return std::sqrt(-pairwise * Scalar(m - 1)) * unit;
}

/// The flip X = sum_i |i><d-1-i|, an involution that reverses amplitudes.
class FlipOperator {
 public:
  explicit FlipOperator(int d) : d_(d) {
    if (d < 1) throw std::invalid_argument("flip operator needs d >= 1");
  }
  int dimension() const { return d_; }

  template <typename Derived>
  auto operator()(const Eigen::MatrixBase<Derived>& v) const {
    if (v.size() != d_)
      throw std::invalid_argument("flip operator of dimension " + std::to_string(d_) +
                                  " applied to vector of size " + std::to_string(v.size()));
    return v.reverse().eval();
  }

  template <typename Scalar = double>
  CMatrix<Scalar> matrix() const {
    return CMatrix<Scalar>::Identity(d_, d_).rowwise().reverse();
  }

 private:
  int d_;
};

/// Expression form of the flip, for use inside larger expressions.
template <typename Derived>
auto flip(const Eigen::MatrixBase<Derived>& v) {
  return v.reverse();
}

/// Vertex of V_B paired with vertex i of V_A by the flip (i <-> n + 2 - i).
inline Vertex flip_partner(int n, Vertex i) { return n + 2 - i; }

/// Orthonormal representation and state exhibiting the Hardy-like paradox on
/// build_family_graph(n), in dimension d = n - 2.
template <typename Scalar = double>
MeasurementFamily<Scalar> build_measurements(int n) {
  if (n < 6) throw std::invalid_argument("measurement construction requires n >= 6, got " + std::to_string(n));
  using C = std::complex<Scalar>;
  const int d = n - 2;
  const int top = n - 3;
  const Scalar sqrt2 = std::sqrt(Scalar(2));
  auto ket = [d](int k) { return basis_ket<Scalar>(d, k); };

  MeasurementFamily<Scalar> fam;
  fam.n = n;
  fam.d = d;
  fam.vectors[2] = ket(0);
  fam.vectors[n] = ket(top);

  // Templates for V_A \ {2} (odd) or V_A \ {2, n/2+1} (even); V_B gets flips.
  std::vector<CVector<Scalar>> templates;
  if (n % 2 == 1) {
    const int mid = (n - 3) / 2;
    fam.state = (ket(0) + ket(mid) + ket(top)) / std::sqrt(Scalar(3));
    fam.vectors[1] = (ket(0) - ket(mid) + ket(top)) / std::sqrt(Scalar(3));
    const int rows = (n - 3) / 2;
    const RMatrix<Scalar> coeff = simplex_rows<Scalar>(rows, Scalar(-2));
    for (int r = 0; r < rows; ++r) {
      CVector<Scalar> v = ket(mid) + ket(top);
      for (int c = 0; c < coeff.cols(); ++c) v(mid + 1 + c) += C(coeff(r, c));
      templates.push_back(std::move(v));
    }
  } else {
    const int lo = n / 2 - 2;
    fam.state = (sqrt2 * ket(0) + ket(lo) + ket(lo + 1) + sqrt2 * ket(top)) / std::sqrt(Scalar(6));
    fam.vectors[1] = (sqrt2 * ket(0) - ket(lo) - ket(lo + 1) + sqrt2 * ket(top)) / std::sqrt(Scalar(6));
    fam.vectors[n / 2 + 1] = (ket(lo + 1) - ket(lo)) / sqrt2;
    const int rows = n / 2 - 2;
    const RMatrix<Scalar> coeff = simplex_rows<Scalar>(rows, Scalar(-4));
    for (int r = 0; r < rows; ++r) {
      CVector<Scalar> v = ket(lo) + ket(lo + 1) + sqrt2 * ket(top);
      for (int c = 0; c < coeff.cols(); ++c) v(lo + 2 + c) += C(coeff(r, c));
      templates.push_back(std::move(v));
    }
  }

  for (std::size_t r = 0; r < templates.size(); ++r) {
    const Vertex i = 3 + static_cast<Vertex>(r);
    const CVector<Scalar> v = templates[r].normalized();
    fam.vectors[flip_partner(n, i)] = flip(v);
    fam.vectors[i] = v;
  }
  return fam;
}

template <typename Scalar>
struct Decomposition {
  CVector<Scalar> coefficients;
  Scalar residual = 0;
};

/// Least-squares expansion of `state` over the vectors of `subset`, with the
/// Euclidean norm of what the span leaves unexplained.
template <typename Scalar>
Decomposition<Scalar> decompose_state(const CVector<Scalar>& state, const MeasurementFamily<Scalar>& fam,
                                      const std::vector<Vertex>& subset) {
  if (subset.empty()) throw std::invalid_argument("decompose_state needs a nonempty subset");
  CMatrix<Scalar> basis(state.size(), static_cast<Eigen::Index>(subset.size()));
  for (std::size_t k = 0; k < subset.size(); ++k) {
    const auto& v = fam.vector(subset[k]);
    if (v.size() != state.size()) throw std::invalid_argument("dimension mismatch in decompose_state");
    basis.col(static_cast<Eigen::Index>(k)) = v;
  }
  Decomposition<Scalar> out;
  out.coefficients = basis.completeOrthogonalDecomposition().solve(state);
  out.residual = (state - basis * out.coefficients).norm();
  return out;
}

}  // namespace qcw
