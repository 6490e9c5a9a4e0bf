#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "qcw/construction.hpp"

namespace qcw {

/// S = sum_i |v_i><v_i| over `vertices` (all vertices when empty).
template <typename Scalar>
CMatrix<Scalar> projector_sum(const MeasurementFamily<Scalar>& fam,
                              const std::optional<std::vector<Vertex>>& vertices = std::nullopt) {
  CMatrix<Scalar> s = CMatrix<Scalar>::Zero(fam.d, fam.d);
  if (vertices) {
    for (Vertex v : *vertices) s.noalias() += fam.projector(v);
  } else {
    for (const auto& [v, vec] : fam.vectors) s.noalias() += vec * vec.adjoint();
  }
  return s;
}

struct PowerIterationOptions {
  int restarts = 8;
  int iters = 10000;
  double tol = 1e-14;
  std::uint64_t seed = 0;
};

template <typename Scalar>
struct EigenOptimum {
  Scalar lambda_max = 0;
  CVector<Scalar> state;
  int restarts_used = 0;
  bool converged = false;
  int iterations = 0;
};

/// Top eigenpair of a positive semidefinite Hermitian operator by power
/// iteration from seeded complex Gaussian starts. Each restart runs until
/// successive Rayleigh quotients differ by at most `tol`; the best restart
/// wins, ties going to the lowest index.
template <typename Scalar>
EigenOptimum<Scalar> dominant_eigenpair(const CMatrix<Scalar>& op, const PowerIterationOptions& opts) {
  using C = std::complex<Scalar>;
  if (opts.restarts < 1) throw std::invalid_argument("power iteration needs at least one restart");
  if (op.rows() != op.cols() || op.rows() == 0) throw std::invalid_argument("operator must be square and nonempty");

  EigenOptimum<Scalar> best;
  best.lambda_max = -std::numeric_limits<Scalar>::infinity();
  bool all_converged = true;
  for (int r = 0; r < opts.restarts; ++r) {
    std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(r));
    std::normal_distribution<double> normal;
    CVector<Scalar> x(op.rows());
    for (auto& c : x) c = C(Scalar(normal(rng)), Scalar(normal(rng)));
    x.normalize();

    Scalar rq = std::real(x.dot(op * x));
    bool converged = false;
    int it = 0;
    for (; it < opts.iters; ++it) {
      CVector<Scalar> y = op * x;
      const Scalar norm = y.norm();
      if (norm == Scalar(0)) {
        // Start orthogonal to the range; the zero operator is the only way here.
        rq = 0;
        converged = true;
        break;
      }
      x = y / norm;
      const Scalar next = std::real(x.dot(op * x));
      const bool done = std::abs(next - rq) <= Scalar(opts.tol);
      rq = next;
      if (done) {
        converged = true;
        break;
      }
    }
    all_converged = all_converged && converged;
    best.iterations += it;
    if (rq > best.lambda_max) {
      best.lambda_max = rq;
      best.state = x;
    }
  }
  best.restarts_used = opts.restarts;
  best.converged = all_converged;
  return best;
}

/// Largest KCBS value reachable by any state with the measurements held fixed.
template <typename Scalar>
EigenOptimum<Scalar> max_violation_state(const MeasurementFamily<Scalar>& fam, const PowerIterationOptions& opts = {}) {
  return dominant_eigenpair<Scalar>(projector_sum(fam), opts);
}

}  // namespace qcw
