#pragma once

// Test-only reference computations, deliberately independent of the
// library's algorithms.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qcw/graph.hpp"
#include "qcw/linalg.hpp"

namespace qcw::oracle {

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations on the real
/// symmetric embedding [[A, -B], [B, A]] of H = A + iB. Every eigenvalue of H
/// appears twice in the embedding; the duplicates are dropped.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  const int d = static_cast<int>(h.rows());
  const int m = 2 * d;
  std::vector<std::vector<double>> a(m, std::vector<double>(m));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      a[i][j] = a[i + d][j + d] = h(i, j).real();
      a[i + d][j] = h(i, j).imag();
      a[i][j + d] = -h(i, j).imag();
    }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (int k = 0; k < m; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < m; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(m);
  for (int i = 0; i < m; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end(), std::greater<>());
  std::vector<double> out;
  for (int i = 0; i < m; i += 2) out.push_back(ev[i]);
  return out;
}

/// Brute force over all 2^n subsets.
struct BruteForce {
  int max_ones = 0;
  bool hardy_with_x1 = false;
};

inline BruteForce enumerate_all_subsets(const Graph& g) {
  BruteForce out;
  const auto n = static_cast<std::uint32_t>(g.n());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& [u, v] : g.edges())
      if ((mask >> (u - 1) & 1u) && (mask >> (v - 1) & 1u)) ok = false;
    if (!ok) continue;
    out.max_ones = std::max(out.max_ones, static_cast<int>(__builtin_popcount(mask)));
    auto any_in = [&](const std::vector<Vertex>& part) {
      return std::any_of(part.begin(), part.end(), [&](Vertex v) { return (mask >> (v - 1)) & 1u; });
    };
    if ((mask & 1u) && any_in(g.part_a()) && any_in(g.part_b())) out.hardy_with_x1 = true;
  }
  return out;
}

/// Distance from `x` to span(cols) by classical Gram-Schmidt.
inline double distance_to_span(const ComplexVector& x, const std::vector<ComplexVector>& cols) {
  std::vector<ComplexVector> q;
  for (const auto& c : cols) {
    ComplexVector w = c;
    for (const auto& e : q) w -= e.dot(w) * e;
    if (w.norm() > 1e-12) q.push_back(w / w.norm());
  }
  ComplexVector r = x;
  for (const auto& e : q) r -= e.dot(r) * e;
  return r.norm();
}

}  // namespace qcw::oracle
