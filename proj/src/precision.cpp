#include "qcw/precision.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qcw {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Probabilities of every joint outcome of the sequential measurement,
// indexed by the bit mask of yes answers.
void outcome_tree(const std::vector<ComplexVector>& tests, std::size_t step, const ComplexVector& branch,
                  std::uint32_t mask, std::vector<double>& probs) {
  if (step == tests.size()) {
    probs[mask] = branch.squaredNorm();
    return;
  }
  const auto& v = tests[step];
  const Complex amp = v.dot(branch);
  const ComplexVector yes = amp * v;
  const ComplexVector no = branch - yes;
  if (yes.squaredNorm() > 0) outcome_tree(tests, step + 1, yes, mask | (1u << step), probs);
  if (no.squaredNorm() > 0) outcome_tree(tests, step + 1, no, mask, probs);
}

std::string bits_of(std::uint32_t mask, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t k = 0; k < width; ++k)
    if (mask & (1u << k)) s[k] = '1';
  return s;
}

}  // namespace

OncThreshold onc_threshold(int n, double delta) {
  if (n < 5) throw std::invalid_argument("ONC threshold needs n >= 5");
  if (!(delta >= 0)) throw std::invalid_argument("ONC threshold needs delta >= 0");
  const double denom = (n % 2 == 1) ? n : n + 3;
  return {n, delta, delta / denom};
}

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ (b * 0xD1B54A32D192ED03ULL));
}

ContextMeasurements context_measurements(const Graph& g, const Family& fam) {
  if (g.n() != fam.n) throw std::invalid_argument("graph and family sizes differ");
  ContextMeasurements m;
  m.n = fam.n;
  m.d = fam.d;
  m.contexts = maximal_cliques(g);
  for (const auto& c : m.contexts) {
    std::vector<ComplexVector> vs;
    for (Vertex v : c.vertices) vs.push_back(fam.vector(v));
    m.vectors.push_back(std::move(vs));
  }
  return m;
}

ContextMeasurements perturb_family(const Graph& g, const Family& fam, double eta, std::uint64_t seed) {
  if (!(eta >= 0)) throw std::invalid_argument("noise eta must be >= 0");
  ContextMeasurements m = context_measurements(g, fam);
  if (eta == 0) return m;
  const double inv_sqrt2 = 1 / std::sqrt(2.0);
  for (std::size_t c = 0; c < m.contexts.size(); ++c) {
    for (std::size_t k = 0; k < m.contexts[c].vertices.size(); ++k) {
      const auto vertex = static_cast<std::uint64_t>(m.contexts[c].vertices[k]);
      std::mt19937_64 rng(derive_stream(seed, c + 1, vertex));
      std::normal_distribution<double> normal;
      ComplexVector noise(m.d);
      for (auto& z : noise) z = Complex(normal(rng), normal(rng)) * inv_sqrt2;
      m.vectors[c][k] = (m.vectors[c][k] + eta * noise).normalized();
    }
  }
  return m;
}

std::uint64_t ContextOutcome::no_click() const {
  auto it = histogram.find(std::string(context.vertices.size(), '0'));
  return it == histogram.end() ? 0 : it->second;
}

SimulationResult simulate_contexts(const ContextMeasurements& meas, const ComplexVector& state,
                                   std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("simulation needs at least one shot");
  if (state.size() != meas.d) throw std::invalid_argument("state dimension mismatch");
  if (std::abs(state.norm() - 1) > 1e-9) throw std::domain_error("state is not normalized");

  SimulationResult result;
  result.shots = shots;
  result.seed = seed;

  std::map<Vertex, int> context_count;
  for (const auto& c : meas.contexts)
    for (Vertex v : c.vertices) ++context_count[v];

  double variance = 0;
  for (std::size_t ci = 0; ci < meas.contexts.size(); ++ci) {
    const auto& ctx = meas.contexts[ci];
    const auto& tests = meas.vectors[ci];
    const std::size_t width = tests.size();
    if (width > 20) throw std::invalid_argument("context too large to simulate");

    std::vector<double> probs(std::size_t{1} << width, 0.0);
    outcome_tree(tests, 0, state, 0, probs);
    double total = 0;
    for (double p : probs) total += p;
    if (std::abs(total - 1) > 1e-9)
      throw std::domain_error("context outcome probabilities sum to " + std::to_string(total));

    // Born-rule mean and variance of this context's share of the beta estimator.
    double mean = 0;
    double second = 0;
    for (std::uint32_t mask = 0; mask < probs.size(); ++mask) {
      double y = 0;
      for (std::size_t k = 0; k < width; ++k)
        if (mask & (1u << k)) y += 1.0 / context_count[ctx.vertices[k]];
      mean += probs[mask] * y;
      second += probs[mask] * y * y;
    }
    result.expected_beta += mean;
    variance += std::max(0.0, second - mean * mean);

    std::vector<std::uint32_t> support;
    std::vector<double> cdf;
    double acc = 0;
    for (std::uint32_t mask = 0; mask < probs.size(); ++mask) {
      if (probs[mask] <= 0) continue;
      acc += probs[mask];
      support.push_back(mask);
      cdf.push_back(acc);
    }

    std::vector<std::uint64_t> counts(support.size(), 0);
    std::mt19937_64 rng(derive_stream(seed, 0x5157ULL, ci));
    for (std::uint64_t s = 0; s < shots; ++s) {
      const double u = uniform01(rng) * acc;
      auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
      ++counts[std::min(idx, counts.size() - 1)];
    }

    ContextOutcome out;
    out.context = ctx;
    out.yes_probability.assign(width, 0.0);
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (counts[i] == 0) continue;
      const std::uint32_t mask = support[i];
      out.histogram[bits_of(mask, width)] += counts[i];
      if (std::popcount(mask) >= 2) out.multi_click += counts[i];
      for (std::size_t k = 0; k < width; ++k)
        if (mask & (1u << k)) out.yes_probability[k] += static_cast<double>(counts[i]);
    }
    for (auto& p : out.yes_probability) p /= static_cast<double>(shots);
    result.empirical_exclusivity_violation =
        std::max(result.empirical_exclusivity_violation,
                 static_cast<double>(out.multi_click) / static_cast<double>(shots));
    result.contexts.push_back(std::move(out));
  }
  result.beta_sigma = std::sqrt(variance / static_cast<double>(shots));

  // Per-vertex yes-probabilities, one entry per context containing the vertex.
  std::map<Vertex, std::vector<double>> per_vertex;
  for (const auto& out : result.contexts)
    for (std::size_t k = 0; k < out.context.vertices.size(); ++k)
      per_vertex[out.context.vertices[k]].push_back(out.yes_probability[k]);
  for (const auto& [v, ps] : per_vertex) {
    double sum = 0;
    for (double p : ps) sum += p;
    result.empirical_beta += sum / static_cast<double>(ps.size());
    const auto [lo, hi] = std::minmax_element(ps.begin(), ps.end());
    result.epsilon_estimate = std::max(result.epsilon_estimate, *hi - *lo);
  }
  return result;
}

}  // namespace qcw
