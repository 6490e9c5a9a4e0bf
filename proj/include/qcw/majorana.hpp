#pragma once

#include <complex>
#include <vector>

#include "qcw/linalg.hpp"

namespace qcw {

/// Point on the unit sphere with a multiplicity. theta is the colatitude in
/// [0, pi], phi the azimuth in (-pi, pi].
struct SpherePoint {
  double theta = 0;
  double phi = 0;
  int mult = 1;

  Eigen::Vector3d cartesian() const;
};

/// Majorana stars of a d-dimensional pure state. Roots at infinity are kept
/// separately as `south_pole_count`; `points` never contains theta = pi.
struct Constellation {
  int d = 0;
  std::vector<SpherePoint> points;
  int south_pole_count = 0;

  int total_points() const;
  /// One unit vector per star, south-pole stars included.
  std::vector<Eigen::Vector3d> expanded() const;
};

/// Angular distance between two points of the unit sphere.
double angular_distance(const Eigen::Vector3d& a, const Eigen::Vector3d& b);

/// Coefficient k is sqrt(binom(d-1, k)) * a_k; trailing zeros are kept.
std::vector<Complex> majorana_polynomial(const ComplexVector& state);

struct PolynomialRoots {
  std::vector<Complex> roots;
  /// (coefficient count - 1) minus the actual degree.
  int deficiency = 0;
};

/// Roots of sum_k c_k z^k. Coefficients with magnitude <= tol * max|c_k| are
/// treated as zero. Uses Aberth-Ehrlich simultaneous iteration from a
/// perturbed ring followed by a Newton polish; every root is checked against
/// the backward-error bound |f(r)| / max(1, |r|)^k <= tol * max|c_k|.
PolynomialRoots polynomial_roots(const std::vector<Complex>& coeffs, double tol = 1e-10);

/// Stars of `state`; stars closer than `merge_tol` radians are merged.
Constellation constellation(const ComplexVector& state, double merge_tol = 1e-6);

/// Inverse of constellation(): normalized, first nonzero amplitude real positive.
ComplexVector reconstruct_state(const Constellation& c);

/// Image of the constellation under the flip X: (theta, phi) -> (pi - theta, -phi).
Constellation flip_constellation(const Constellation& c);

/// Worst distance of a greedy nearest-neighbour matching between the two star
/// multisets. Infinite when the star counts differ.
double constellation_distance(const Constellation& a, const Constellation& b);

/// Global-phase-insensitive fidelity |<a|b>| of two normalized vectors.
double state_fidelity(const ComplexVector& a, const ComplexVector& b);

}  // namespace qcw
