#include "qcw/verification.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace qcw {

namespace {

void check_family_matches(const Graph& g, const Family& fam) {
  if (fam.n != g.n())
    throw std::invalid_argument("family has n=" + std::to_string(fam.n) + " but graph has n=" +
                                std::to_string(g.n()));
  for (Vertex v = 1; v <= g.n(); ++v)
    if (fam.vector(v).size() != fam.d) throw std::invalid_argument("vector dimension mismatch");
  if (fam.state.size() != fam.d) throw std::invalid_argument("state dimension mismatch");
}

std::uint32_t mask_of(const std::vector<Vertex>& vs) {
  std::uint32_t m = 0;
  for (Vertex v : vs) m |= std::uint32_t{1} << (v - 1);
  return m;
}

struct Enumerator {
  std::vector<std::uint32_t> earlier_nbr;
  std::uint32_t part_a = 0;
  std::uint32_t part_b = 0;
  int n = 0;
  ClassicalAnalysis result;
  bool hardy = false;

  void visit(int idx, std::uint32_t ones) {
    if (idx == n) {
      ++result.assignments;
      result.alpha = std::max(result.alpha, std::popcount(ones));
      if ((ones & 1u) && (ones & part_a) && (ones & part_b)) hardy = true;
      return;
    }
    visit(idx + 1, ones);
    if ((ones & earlier_nbr[idx]) == 0) visit(idx + 1, ones | (std::uint32_t{1} << idx));
  }
};

}  // namespace

bool VerificationReport::paradox_exhibited() const {
  return hardy_applicable && hardy_conditions_ok && p11 > tol && classical_hardy_possible.has_value() &&
         !*classical_hardy_possible;
}

OrthogonalityAudit audit_orthogonality(const Graph& g, const Family& fam, double tol) {
  check_family_matches(g, fam);
  OrthogonalityAudit audit;
  audit.min_nonedge_overlap = std::numeric_limits<double>::infinity();
  std::vector<EdgeOverlap> all;
  for (Vertex i = 1; i <= g.n(); ++i) {
    for (Vertex j = i + 1; j <= g.n(); ++j) {
      const double ov = overlap(fam.vector(i), fam.vector(j));
      if (g.adjacent(i, j)) {
        all.push_back({{i, j}, ov});
        audit.worst_edge_overlap = std::max(audit.worst_edge_overlap, ov);
      } else {
        audit.min_nonedge_overlap = std::min(audit.min_nonedge_overlap, ov);
      }
    }
  }
  if (!std::isfinite(audit.min_nonedge_overlap)) audit.min_nonedge_overlap = 0;
  std::stable_sort(all.begin(), all.end(),
                   [](const EdgeOverlap& a, const EdgeOverlap& b) { return a.overlap > b.overlap; });
  if (all.size() > OrthogonalityAudit::kMaxOffenders) all.resize(OrthogonalityAudit::kMaxOffenders);
  audit.worst_edges = std::move(all);
  audit.ok = audit.worst_edge_overlap <= tol;
  return audit;
}

double kcbs_value(const Family& fam) {
  double beta = 0;
  for (const auto& [v, vec] : fam.vectors) beta += fidelity(vec, fam.state);
  return beta;
}

VerificationReport hardy_quantum_report(const Graph& g, const Family& fam, double tol) {
  check_family_matches(g, fam);
  VerificationReport r;
  r.n = fam.n;
  r.d = fam.d;
  r.tol = tol;
  r.p11 = fidelity(fam.vector(1), fam.state);
  r.beta = kcbs_value(fam);
  r.hardy_applicable = g.has_partitions();
  if (r.hardy_applicable) {
    r.residual_a = decompose_state(fam.state, fam, g.part_a()).residual;
    r.residual_b = decompose_state(fam.state, fam, g.part_b()).residual;
    r.hardy_conditions_ok = r.residual_a <= tol && r.residual_b <= tol;
    for (Vertex v : g.part_a()) r.sum_a += fidelity(fam.vector(v), fam.state);
    for (Vertex v : g.part_b()) r.sum_b += fidelity(fam.vector(v), fam.state);
  }
  return r;
}

ClassicalAnalysis classical_analysis(const Graph& g) {
  if (g.n() > kMaxExhaustiveVertices)
    throw std::invalid_argument("classical enumeration limited to " +
                                std::to_string(kMaxExhaustiveVertices) + " vertices");
  Enumerator e;
  e.n = g.n();
  e.earlier_nbr.assign(g.n(), 0);
  for (const auto& [u, v] : g.edges()) e.earlier_nbr[v - 1] |= std::uint32_t{1} << (u - 1);
  e.part_a = mask_of(g.part_a());
  e.part_b = mask_of(g.part_b());
  e.visit(0, 0);
  if (g.has_partitions()) e.result.hardy_possible_with_x1 = e.hardy;
  return e.result;
}

VerificationReport verify(const Graph& g, const Family& fam, double tol) {
  VerificationReport r = hardy_quantum_report(g, fam, tol);
  r.exclusivity = audit_orthogonality(g, fam, tol);
  const ClassicalAnalysis classical = classical_analysis(g);
  r.classical_alpha = classical.alpha;
  r.classical_hardy_possible = classical.hardy_possible_with_x1;
  if (classical.hardy_possible_with_x1 == false) r.classical_hardy_p11 = 0.0;
  return r;
}

}  // namespace qcw
