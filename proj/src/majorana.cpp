#include "qcw/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace qcw {

namespace {

constexpr double kPi = std::numbers::pi;

double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Horner evaluation of p and p' at z.
void evaluate(const std::vector<Complex>& p, Complex z, Complex& f, Complex& df) {
  f = p.back();
  df = 0;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    df = df * z + f;
    f = f * z + p[i];
  }
}

double normalize_phi(double phi) {
  if (phi <= -kPi) phi += 2 * kPi;
  if (phi > kPi) phi -= 2 * kPi;
  return phi;
}

std::vector<Complex> aberth(const std::vector<Complex>& p) {
  const int k = static_cast<int>(p.size()) - 1;
  if (k == 1) return {-p[0] / p[1]};

  const double radius = std::pow(std::abs(p.front() / p.back()), 1.0 / k);
  std::mt19937_64 rng(0x5EEDu + static_cast<unsigned>(k));
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);
  std::vector<Complex> z(k);
  for (int j = 0; j < k; ++j) {
    const double angle = 2 * kPi * j / k + 0.4 + jitter(rng);
    z[j] = std::polar(radius * (1 + jitter(rng)), angle);
  }

  constexpr int kMaxSweeps = 2000;
  constexpr double kStep = 4 * std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double largest = 0;
    for (int j = 0; j < k; ++j) {
      Complex f;
      Complex df;
      evaluate(p, z[j], f, df);
      if (f == Complex(0)) continue;
      Complex repulsion = 0;
      for (int m = 0; m < k; ++m)
        if (m != j) repulsion += 1.0 / (z[j] - z[m]);
      Complex w;
      if (df == Complex(0)) {
        w = -1.0 / repulsion;
      } else {
        const Complex ratio = f / df;
        w = ratio / (1.0 - ratio * repulsion);
      }
      z[j] -= w;
      largest = std::max(largest, std::abs(w) / std::max(1.0, std::abs(z[j])));
    }
    if (largest <= kStep) break;
  }

  // Newton polish, kept only where it lowers the residual.
  for (auto& r : z) {
    Complex f;
    Complex df;
    evaluate(p, r, f, df);
    if (df == Complex(0)) continue;
    const Complex candidate = r - f / df;
    Complex f2;
    Complex df2;
    evaluate(p, candidate, f2, df2);
    if (std::abs(f2) < std::abs(f)) r = candidate;
  }
  return z;
}

}  // namespace

Eigen::Vector3d SpherePoint::cartesian() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

int Constellation::total_points() const {
  int total = south_pole_count;
  for (const auto& p : points) total += p.mult;
  return total;
}

std::vector<Eigen::Vector3d> Constellation::expanded() const {
  std::vector<Eigen::Vector3d> out;
  for (const auto& p : points)
    for (int m = 0; m < p.mult; ++m) out.push_back(p.cartesian());
  for (int m = 0; m < south_pole_count; ++m) out.emplace_back(0.0, 0.0, -1.0);
  return out;
}

double angular_distance(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return 2 * std::asin(std::min(1.0, (a - b).norm() / 2));
}

std::vector<Complex> majorana_polynomial(const ComplexVector& state) {
  const int d = static_cast<int>(state.size());
  if (d < 2) throw std::invalid_argument("Majorana polynomial needs d >= 2, got " + std::to_string(d));
  std::vector<Complex> coeffs(d);
  for (int k = 0; k < d; ++k) coeffs[k] = std::sqrt(binomial(d - 1, k)) * state(k);
  return coeffs;
}

PolynomialRoots polynomial_roots(const std::vector<Complex>& coeffs, double tol) {
  double scale = 0;
  for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
  if (coeffs.empty() || scale == 0) throw std::invalid_argument("polynomial has no nonzero coefficient");

  const double zero = tol * scale;
  int hi = static_cast<int>(coeffs.size()) - 1;
  while (std::abs(coeffs[hi]) <= zero) --hi;
  int lo = 0;
  while (std::abs(coeffs[lo]) <= zero) ++lo;

  PolynomialRoots out;
  out.deficiency = static_cast<int>(coeffs.size()) - 1 - hi;
  out.roots.assign(lo, Complex(0));
  if (hi == lo) return out;

  const std::vector<Complex> reduced(coeffs.begin() + lo, coeffs.begin() + hi + 1);
  const auto finite = aberth(reduced);
  for (const auto& r : finite) {
    Complex f;
    Complex df;
    evaluate(reduced, r, f, df);
    const double backward = std::abs(f) * std::pow(std::abs(r), lo) / std::pow(std::max(1.0, std::abs(r)), hi);
    if (!(backward <= zero))
      throw std::runtime_error("root residual " + std::to_string(backward) + " above tolerance");
  }
  out.roots.insert(out.roots.end(), finite.begin(), finite.end());
  return out;
}

Constellation constellation(const ComplexVector& state, double merge_tol) {
  const auto roots = polynomial_roots(majorana_polynomial(state));
  Constellation c;
  c.d = static_cast<int>(state.size());
  c.south_pole_count = roots.deficiency;

  std::vector<SpherePoint> stars;
  for (const auto& alpha : roots.roots) {
    const double mag = std::abs(alpha);
    if (mag == 0) {
      stars.push_back({0.0, 0.0, 1});
    } else {
      stars.push_back({2 * std::atan(mag), normalize_phi(-std::arg(alpha)), 1});
    }
  }
  std::sort(stars.begin(), stars.end(), [](const SpherePoint& a, const SpherePoint& b) {
    return a.theta != b.theta ? a.theta < b.theta : a.phi < b.phi;
  });
  for (const auto& s : stars) {
    auto it = std::find_if(c.points.begin(), c.points.end(), [&](const SpherePoint& p) {
      return angular_distance(p.cartesian(), s.cartesian()) <= merge_tol;
    });
    if (it != c.points.end()) {
      ++it->mult;
    } else {
      c.points.push_back(s);
    }
  }
  return c;
}

ComplexVector reconstruct_state(const Constellation& c) {
  if (c.d < 2 || c.total_points() != c.d - 1)
    throw std::invalid_argument("constellation must carry d - 1 stars");
  // Expand prod (z - alpha_i) in ascending powers.
  std::vector<Complex> poly{Complex(1)};
  for (const auto& p : c.points) {
    const Complex alpha = p.theta == 0 ? Complex(0) : std::polar(std::tan(p.theta / 2), -p.phi);
    for (int m = 0; m < p.mult; ++m) {
      std::vector<Complex> next(poly.size() + 1, Complex(0));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i];
        next[i] -= alpha * poly[i];
      }
      poly = std::move(next);
    }
  }
  ComplexVector state = ComplexVector::Zero(c.d);
  for (std::size_t k = 0; k < poly.size(); ++k)
    state(static_cast<Eigen::Index>(k)) = poly[k] / std::sqrt(binomial(c.d - 1, static_cast<int>(k)));
  state.normalize();

  const double cutoff = 1e-14 * state.cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < state.size(); ++k) {
    if (std::abs(state(k)) > cutoff) {
      state *= std::conj(state(k)) / std::abs(state(k));
      break;
    }
  }
  return state;
}

Constellation flip_constellation(const Constellation& c) {
  Constellation out;
  out.d = c.d;
  int north = c.south_pole_count;
  for (const auto& p : c.points) {
    if (p.theta == 0) {
      out.south_pole_count += p.mult;
    } else {
      out.points.push_back({kPi - p.theta, normalize_phi(-p.phi), p.mult});
    }
  }
  if (north > 0) out.points.insert(out.points.begin(), {0.0, 0.0, north});
  std::sort(out.points.begin(), out.points.end(), [](const SpherePoint& a, const SpherePoint& b) {
    return a.theta != b.theta ? a.theta < b.theta : a.phi < b.phi;
  });
  return out;
}

double constellation_distance(const Constellation& a, const Constellation& b) {
  const auto xs = a.expanded();
  auto ys = b.expanded();
  if (xs.size() != ys.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(ys.size(), false);
  double worst = 0;
  for (const auto& x : xs) {
    std::size_t pick = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (used[j]) continue;
      const double dist = angular_distance(x, ys[j]);
      if (dist < best) {
        best = dist;
        pick = j;
      }
    }
    used[pick] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

double state_fidelity(const ComplexVector& a, const ComplexVector& b) { return std::abs(a.dot(b)); }

}  // namespace qcw
