#include <doctest.h>

#include <cmath>

#include "qcw/precision.hpp"
#include "qcw/verification.hpp"

using namespace qcw;

TEST_CASE("onc_threshold closed form") {
  CHECK(onc_threshold(7, 1.0 / 9).epsilon_bound == 1.0 / 63);
  CHECK(onc_threshold(8, 1.0 / 9).epsilon_bound == (1.0 / 9) / 11);
  CHECK(onc_threshold(7, 0).epsilon_bound == 0.0);
  for (int n = 5; n <= 40; ++n) {
    CAPTURE(n);
    const double delta = 0.25 + n * 1e-3;
    const auto t = onc_threshold(n, delta);
    CHECK(t.n == n);
    CHECK(t.delta == delta);
    CHECK(t.epsilon_bound == (n % 2 == 1 ? delta / n : delta / (n + 3)));
    CHECK(t.epsilon_bound > 0);
  }
  CHECK_THROWS_AS(onc_threshold(4, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(onc_threshold(7, -0.1), std::invalid_argument);
}

TEST_CASE("perturb_family") {
  const Graph g = build_family_graph(7);
  const Family fam = build_measurements(7);

  const auto exact = perturb_family(g, fam, 0.0, 1);
  CHECK(exact.contexts == maximal_cliques(g));
  for (std::size_t c = 0; c < exact.contexts.size(); ++c)
    for (std::size_t k = 0; k < exact.contexts[c].vertices.size(); ++k)
      CHECK(exact.vectors[c][k] == fam.vector(exact.contexts[c].vertices[k]));

  const auto a = perturb_family(g, fam, 1e-3, 42);
  const auto b = perturb_family(g, fam, 1e-3, 42);
  const auto other = perturb_family(g, fam, 1e-3, 43);
  CHECK(a.vectors == b.vectors);
  CHECK(a.vectors != other.vectors);

  // Same vertex, different contexts: distinct copies.
  const auto& ctx = a.contexts;
  bool found_pair = false;
  for (std::size_t c1 = 0; c1 < ctx.size() && !found_pair; ++c1)
    for (std::size_t c2 = c1 + 1; c2 < ctx.size() && !found_pair; ++c2)
      for (std::size_t k1 = 0; k1 < ctx[c1].vertices.size(); ++k1)
        for (std::size_t k2 = 0; k2 < ctx[c2].vertices.size(); ++k2)
          if (ctx[c1].vertices[k1] == ctx[c2].vertices[k2]) {
            CHECK(a.vectors[c1][k1] != a.vectors[c2][k2]);
            found_pair = true;
          }
  CHECK(found_pair);

  // Fidelity with the original over 100 seeds.
  double worst = 1;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto m = perturb_family(g, fam, 1e-3, seed);
    for (std::size_t c = 0; c < m.contexts.size(); ++c)
      for (std::size_t k = 0; k < m.contexts[c].vertices.size(); ++k) {
        CHECK(std::abs(m.vectors[c][k].norm() - 1) < 1e-12);
        worst = std::min(worst, fidelity(m.vectors[c][k], fam.vector(m.contexts[c].vertices[k])));
      }
  }
  CHECK(worst >= 1 - 1e-4);
  CHECK_THROWS_AS(perturb_family(g, fam, -1.0, 0), std::invalid_argument);
}

TEST_CASE("exact simulation of n=7 and n=8") {
  for (int n : {7, 8}) {
    CAPTURE(n);
    const Graph g = build_family_graph(n);
    const Family fam = build_measurements(n);
    const std::uint64_t shots = 200000;
    const auto r = simulate_contexts(context_measurements(g, fam), fam.state, shots, 9);
    CHECK(r.empirical_exclusivity_violation == 0.0);
    CHECK(std::abs(r.expected_beta - (2 + 1.0 / 9)) < 1e-12);
    const double band = 5 * std::sqrt(r.expected_beta * (n - r.expected_beta) / shots);
    CHECK(std::abs(r.empirical_beta - (2 + 1.0 / 9)) <= band);
    CHECK(r.epsilon_estimate < 0.02);
    for (const auto& c : r.contexts) {
      std::uint64_t total = 0;
      for (const auto& [bits, count] : c.histogram) {
        CHECK(bits.size() == c.context.vertices.size());
        total += count;
      }
      CHECK(total == shots);
      CHECK(c.multi_click == 0);
      for (double p : c.yes_probability) CHECK((p >= 0 && p <= 1));
    }
  }
}

TEST_CASE("simulation is reproducible and seed-sensitive") {
  const Graph g = build_family_graph(7);
  const Family fam = build_measurements(7);
  const auto meas = perturb_family(g, fam, 1e-2, 3);
  const auto a = simulate_contexts(meas, fam.state, 5000, 77);
  const auto b = simulate_contexts(meas, fam.state, 5000, 77);
  const auto c = simulate_contexts(meas, fam.state, 5000, 78);
  CHECK(a == b);
  CHECK_FALSE(a == c);
}

TEST_CASE("epsilon estimate shrinks with shots at eta = 0") {
  const Graph g = build_family_graph(7);
  const Family fam = build_measurements(7);
  const auto meas = context_measurements(g, fam);
  double small = 0;
  double large = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    small += simulate_contexts(meas, fam.state, 1000, seed).epsilon_estimate;
    large += simulate_contexts(meas, fam.state, 100000, seed).epsilon_estimate;
  }
  CHECK(large < small);
}

TEST_CASE("epsilon estimate trend over noise levels") {
  const Graph g = build_family_graph(7);
  const Family fam = build_measurements(7);
  const std::vector<double> etas{0.0, 1e-3, 1e-2, 1e-1};
  std::vector<double> means;
  for (double eta : etas) {
    double sum = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto meas = perturb_family(g, fam, eta, 1000 + seed);
      sum += simulate_contexts(meas, fam.state, 100000, seed).epsilon_estimate;
    }
    means.push_back(sum / 20);
  }
  CAPTURE(means[0]);
  CAPTURE(means[1]);
  CAPTURE(means[2]);
  CAPTURE(means[3]);
  for (std::size_t i = 1; i < means.size(); ++i) CHECK(means[i] >= means[i - 1]);
}

TEST_CASE("perturbed contexts see exclusivity violations") {
  const Graph g = build_family_graph(7);
  const Family fam = build_measurements(7);
  const auto r = simulate_contexts(perturb_family(g, fam, 0.2, 5), fam.state, 100000, 5);
  CHECK(r.empirical_exclusivity_violation > 0);
}

TEST_CASE("simulation input errors") {
  const Graph g = build_family_graph(7);
  const Family fam = build_measurements(7);
  const auto meas = context_measurements(g, fam);
  CHECK_THROWS_AS(simulate_contexts(meas, fam.state, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(simulate_contexts(meas, ComplexVector(2 * fam.state), 10, 1), std::domain_error);
  CHECK_THROWS_AS(simulate_contexts(meas, ComplexVector::Zero(3), 10, 1), std::invalid_argument);
}
