#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcw/construction.hpp"
#include "qcw/graph.hpp"

namespace qcw {

struct OncThreshold {
  int n = 0;
  double delta = 0;
  double epsilon_bound = 0;
};

/// Largest per-vertex context disagreement still ruling out an ε-ONC model:
/// delta / n for odd n, delta / (n + 3) for even n.
OncThreshold onc_threshold(int n, double delta);

/// Deterministic stream derivation: SplitMix64 finalizer over (seed, ids).
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

/// One measurement vector per (context, position), allowing the same vertex to
/// be realized slightly differently in each context it belongs to.
struct ContextMeasurements {
  int n = 0;
  int d = 0;
  std::vector<Context> contexts;
  /// vectors[c][k] realizes contexts[c].vertices[k].
  std::vector<std::vector<ComplexVector>> vectors;
};

/// Exact family copied into every maximal clique of `g`.
ContextMeasurements context_measurements(const Graph& g, const Family& fam);

/// Each (vertex, context) copy becomes normalize(v + eta * g) with g a seeded
/// standard complex Gaussian vector, independently per copy.
ContextMeasurements perturb_family(const Graph& g, const Family& fam, double eta, std::uint64_t seed);

struct ContextOutcome {
  Context context;
  /// Joint outcome bit strings in clique order; all zeros is the no-click outcome.
  std::map<std::string, std::uint64_t> histogram;
  /// Empirical P(X_i = 1 | C), aligned with context.vertices.
  std::vector<double> yes_probability;
  std::uint64_t multi_click = 0;

  std::uint64_t no_click() const;
};

struct SimulationResult {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::vector<ContextOutcome> contexts;
  double empirical_beta = 0;
  /// Largest fraction of shots in any context with two or more yes outcomes.
  double empirical_exclusivity_violation = 0;
  /// Max over vertices and context pairs of |P(X_i=1|C) - P(X_i=1|C')|; a
  /// total-variation proxy for the ε of ε-ONC.
  double epsilon_estimate = 0;
  /// Born-rule value of the beta estimator and its standard deviation at this shot count.
  double expected_beta = 0;
  double beta_sigma = 0;

  friend bool operator==(const SimulationResult&, const SimulationResult&) = default;
};

inline bool operator==(const ContextOutcome& a, const ContextOutcome& b) {
  return a.context == b.context && a.histogram == b.histogram && a.yes_probability == b.yes_probability &&
         a.multi_click == b.multi_click;
}

/// Finite-shot simulation of every context. Rank-one tests are applied in
/// clique order with collapse after each, the complement outcome last.
SimulationResult simulate_contexts(const ContextMeasurements& meas, const ComplexVector& state,
                                   std::uint64_t shots, std::uint64_t seed);

}  // namespace qcw
