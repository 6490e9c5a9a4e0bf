#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qcw/construction.hpp"
#include "qcw/graph.hpp"

namespace qcw {

inline constexpr double kPhysicsTol = 1e-9;

struct EdgeOverlap {
  Edge edge;
  double overlap = 0;
};

struct OrthogonalityAudit {
  bool ok = false;
  double worst_edge_overlap = 0;
  /// Smallest |<v_i|v_j>| over non-adjacent pairs; diagnostic only.
  double min_nonedge_overlap = 0;
  /// Edges sorted by decreasing overlap, at most kMaxOffenders.
  std::vector<EdgeOverlap> worst_edges;

  static constexpr std::size_t kMaxOffenders = 5;
};

struct ClassicalAnalysis {
  int alpha = 0;
  /// Whether some exclusivity-respecting assignment has X_1 = 1 together with
  /// a yes in V_A and a yes in V_B. Empty when the graph has no partitions.
  std::optional<bool> hardy_possible_with_x1;
  std::uint64_t assignments = 0;
};

struct VerificationReport {
  int n = 0;
  int d = 0;
  double tol = kPhysicsTol;

  OrthogonalityAudit exclusivity;

  bool hardy_applicable = false;
  bool hardy_conditions_ok = false;
  double residual_a = 0;
  double residual_b = 0;

  double p11 = 0;
  double beta = 0;
  double sum_a = 0;
  double sum_b = 0;

  int classical_alpha = 0;
  std::optional<bool> classical_hardy_possible;
  /// 0 when every non-contextual assignment forces P(1|1) = 0, empty otherwise.
  std::optional<double> classical_hardy_p11;

  bool kcbs_violated() const { return beta > classical_alpha + tol; }
  /// Exclusivity and Hardy spans hold, P(1|1) > 0, and the classical side forces 0.
  bool paradox_exhibited() const;
  bool passed() const { return exclusivity.ok && paradox_exhibited(); }
};

OrthogonalityAudit audit_orthogonality(const Graph& g, const Family& fam, double tol = kPhysicsTol);

/// Fills the quantum-side fields: Hardy span residuals, P(1|1), partition sums.
VerificationReport hardy_quantum_report(const Graph& g, const Family& fam, double tol = kPhysicsTol);

/// sum_i |<v_i|psi>|^2 over every vertex.
double kcbs_value(const Family& fam);

/// Exhaustive enumeration of exclusivity-respecting 0/1 assignments.
ClassicalAnalysis classical_analysis(const Graph& g);

/// All quantum and classical checks together.
VerificationReport verify(const Graph& g, const Family& fam, double tol = kPhysicsTol);

}  // namespace qcw
