#include <cmath>
#include <optional>
#include <vector>

#include "doctest.h"
#include "gt/errors.hpp"
#include "gt/graph.hpp"
#include "gt/hamiltonian.hpp"
#include "gt/linalg.hpp"
#include "gt/tunneling.hpp"
#include "test_util.hpp"

using gtt::throws_with_code;

namespace {

struct Fixture {
  gt::Graph g;
  gt::Potential v;
  gt::WellSet w;
  Fixture(gt::Graph graph, std::vector<double> vals)
      : g(std::move(graph)),
        v(gt::Potential::from_values(g, std::move(vals))),
        w(gt::WellSet::detect(g, v)) {}
};

Fixture p3() { return {gtt::path_graph(3), {0.0, 1.0, 0.0}}; }
Fixture p5() { return {gtt::path_graph(5), {0.0, 1.0, 1.0, 1.0, 0.0}}; }
Fixture c6_alternating() {
  return {gtt::cycle_graph(6), {0.0, 1.0, 0.0, 1.0, 0.0, 1.0}};
}

// P5 plus an unreachable extra well.
Fixture three_level() {
  auto g = gt::Graph::build({"v0", "v1", "v2", "v3", "v4", "w"},
                            {{"v0", "v1"}, {"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}});
  return {std::move(g), {0.0, 1.0, 1.0, 1.0, 0.0, 0.0}};
}

double p3_closed_mu(double hbar) {
  return 0.5 * (1.0 - std::sqrt(1.0 + 4.0 * std::pow(hbar, 4)));
}

}  // namespace

TEST_CASE("default truncation length follows the separation") {
  CHECK(gt::default_truncation_len(2) == 10);
  CHECK(gt::default_truncation_len(3) == 12);
  CHECK(gt::default_truncation_len(std::nullopt) == 10);
}

TEST_CASE("solve_mu reproduces the closed form on the three-vertex path") {
  auto f = p3();
  for (double hbar : {0.2, 0.1, 0.05}) {
    auto we = gt::solve_mu(f.g, f.v, f.w, 0, hbar, 10);
    CHECK(std::abs(we.mu - p3_closed_mu(hbar)) <= 1e-15);
    CHECK(we.mu < 0.0);
    CHECK(we.iterations >= 2);
    CHECK(we.residual <= 1e-14);
    CHECK(we.tail_bound > 0.0);
    CHECK(we.tail_bound < 1e-8);
    CHECK(we.truncation_len == 10);
    CHECK(we.well == 0);
  }
}

TEST_CASE("solve_mu agrees with the dirichlet ground state") {
  for (auto f : {p3(), p5(), c6_alternating()}) {
    for (double hbar : {0.2, 0.1}) {
      for (int well : f.w.wells()) {
        auto we = gt::solve_mu(f.g, f.v, f.w, well, hbar, 12);
        auto gs =
            gt::dirichlet_ground_state(gt::dirichlet_restriction(f.g, f.v, f.w, well, hbar));
        CHECK(std::abs(we.mu - gs.mu) <= 1e-12);
      }
    }
  }
}

TEST_CASE("solve_mu edge cases and validation") {
  auto f = p3();
  CHECK(throws_with_code(
      [&] { gt::solve_mu(f.g, f.v, f.w, 0, -0.1, 10); }, "InvalidHbar"));
  CHECK(throws_with_code(
      [&] { gt::solve_mu(f.g, f.v, f.w, 0, 0.1, -1); }, "BadTruncation"));
  CHECK(throws_with_code(
      [&] { gt::solve_mu(f.g, f.v, f.w, 1, 0.1, 10); }, "NotAWell"));
  CHECK(throws_with_code(
      [&] { gt::solve_mu(f.g, f.v, f.w, 0, 10.0, 10); }, "SeriesMayDiverge"));

  // hbar = 0: the well decouples entirely.
  auto frozen = gt::solve_mu(f.g, f.v, f.w, 0, 0.0, 10);
  CHECK(frozen.mu == 0.0);
  CHECK(frozen.residual == 0.0);
  CHECK(frozen.tail_bound == 0.0);

  // An isolated well has no loops at any length.
  auto g1 = gt::Graph::build({"x"}, {});
  auto v1 = gt::Potential::from_values(g1, {0.0});
  auto w1 = gt::WellSet::detect(g1, v1);
  auto iso = gt::solve_mu(g1, v1, w1, 0, 0.3, 10);
  CHECK(iso.mu == 0.0);
  CHECK(iso.residual == 0.0);
}

TEST_CASE("solve_mu is stable under the truncation length") {
  auto f = p5();
  for (double hbar : {0.2, 0.1}) {
    auto a = gt::solve_mu(f.g, f.v, f.w, 0, hbar, 10);
    auto b = gt::solve_mu(f.g, f.v, f.w, 0, hbar, 12);
    CHECK(std::abs(a.mu - b.mu) <= a.tail_bound + 1e-16);
  }
}

TEST_CASE("pathsum quasimode matches the resolvent closed form") {
  auto f = p3();
  const double hbar = 0.1, lambda = -0.05;
  auto psi = gt::psi_lambda_pathsum(f.g, f.v, f.w, 0, lambda, hbar, 10);
  REQUIRE(psi.values.size() == 3);
  CHECK(psi.values[0] == 1.0);
  CHECK(psi.values[2] == 0.0);
  // Single crossing-free walk b -> a: psi(b) = hbar^2 / (V(b) - lambda).
  CHECK(psi.values[1] == doctest::Approx(hbar * hbar / (1.0 - lambda)).epsilon(1e-13));
  CHECK(psi.lambda_used == lambda);
  CHECK(psi.tail_bound > 0.0);
  CHECK(psi.well == 0);
}

TEST_CASE("exact quasimode solves the pinned linear system") {
  for (auto f : {p3(), p5(), c6_alternating(), three_level()}) {
    auto h = gt::build_hamiltonian(f.g, f.v, 0.1);
    for (int well : f.w.wells()) {
      const double lambda = -1e-4;
      auto psi = gt::psi_lambda_exact(f.g, f.v, f.w, well, lambda, 0.1);
      CHECK(psi.values[well] == 1.0);
      CHECK(psi.tail_bound == 0.0);
      for (int other : f.w.wells())
        if (other != well) CHECK(psi.values[other] == 0.0);
      for (int x = 0; x < f.g.size(); ++x) {
        if (f.w.is_well(x)) continue;
        double r = -lambda * psi.values[x];
        for (int y = 0; y < f.g.size(); ++y) r += h(x, y) * psi.values[y];
        CHECK(std::abs(r) <= 1e-12);
      }
    }
  }
}

TEST_CASE("pathsum and exact quasimodes agree within the tail bound") {
  for (auto f : {p3(), p5(), c6_alternating()}) {
    for (double hbar : {0.2, 0.1}) {
      for (double lambda : {0.0, -std::pow(hbar, 4)}) {
        for (int well : f.w.wells()) {
          auto a = gt::psi_lambda_pathsum(f.g, f.v, f.w, well, lambda, hbar, 10);
          auto b = gt::psi_lambda_exact(f.g, f.v, f.w, well, lambda, hbar);
          for (int x = 0; x < f.g.size(); ++x)
            CHECK(std::abs(a.values[x] - b.values[x]) <= a.tail_bound + 1e-13);
        }
      }
    }
  }
}

TEST_CASE("quasimode at hbar = 0 is the well indicator") {
  auto f = p5();
  auto psi = gt::psi_lambda_exact(f.g, f.v, f.w, 0, 0.0, 0.0);
  for (int x = 0; x < 5; ++x) CHECK(psi.values[x] == (x == 0 ? 1.0 : 0.0));
  auto ps = gt::psi_lambda_pathsum(f.g, f.v, f.w, 0, 0.0, 0.0, 8);
  for (int x = 0; x < 5; ++x) CHECK(ps.values[x] == (x == 0 ? 1.0 : 0.0));
}

TEST_CASE("decay report recovers 2 * distance on the five-vertex path") {
  auto f = p5();
  std::vector<gt::DecaySample> samples;
  for (double hbar : {0.2, 0.1, 0.05}) {
    auto mu = gt::solve_mu(f.g, f.v, f.w, 0, hbar, 10);
    samples.push_back({hbar, gt::psi_lambda_exact(f.g, f.v, f.w, 0, mu.mu, hbar)});
  }
  auto rep = gt::decay_report(f.g, f.w, samples);
  CHECK(rep.well == 0);
  REQUIRE(rep.rows.size() == 4);  // v4 is pinned to zero and skipped
  for (const auto& row : rep.rows) {
    CHECK(row.distance == row.vertex);  // on the path, distance = index
    CHECK(std::abs(row.deviation) <= 0.02);
    CHECK(row.slope == doctest::Approx(2.0 * row.distance).epsilon(0.01));
  }
}

TEST_CASE("decay report input validation") {
  auto f = p5();
  auto mu = gt::solve_mu(f.g, f.v, f.w, 0, 0.1, 10);
  auto psi0 = gt::psi_lambda_exact(f.g, f.v, f.w, 0, mu.mu, 0.1);
  CHECK(throws_with_code(
      [&] { gt::decay_report(f.g, f.w, {{0.2, psi0}, {0.1, psi0}}); }, "TooFewSamples"));
  auto psi4 = gt::psi_lambda_exact(f.g, f.v, f.w, 4, mu.mu, 0.1);
  CHECK(throws_with_code(
      [&] {
        gt::decay_report(f.g, f.w, {{0.2, psi0}, {0.1, psi4}, {0.05, psi0}});
      },
      "WellMismatch"));
}

TEST_CASE("leading interaction matrix on the three-vertex path") {
  auto f = p3();
  const double hbar = 0.1;
  auto im = gt::interaction_matrix_leading(f.g, f.v, f.w, hbar, 10);
  CHECK(im.wells == std::vector<int>{0, 2});
  CHECK(im.mode == gt::InteractionMode::kLeading);
  REQUIRE(im.s0.has_value());
  CHECK(*im.s0 == 2);
  CHECK(im.pairs_beyond_s0.empty());
  // One length-2 crossing with trivial interior product: r = -hbar^(2 S0) exactly.
  CHECK(im.offdiag(0, 1) == -gt::hbar_power(hbar, 4));
  CHECK(im.offdiag(0, 1) == im.offdiag(1, 0));
  CHECK(im.offdiag(0, 0) == 0.0);
  CHECK(im.diag[0].mu == doctest::Approx(p3_closed_mu(hbar)).epsilon(1e-14));

  // full() = Diag(mu) + r has eigenvalues mu -+ hbar^4 by symmetry.
  auto eig = gt::sym_eigen(im.full());
  CHECK(eig.eigenvalues[0] ==
        doctest::Approx(im.diag[0].mu - std::pow(hbar, 4)).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] ==
        doctest::Approx(im.diag[0].mu + std::pow(hbar, 4)).epsilon(1e-14));
}

TEST_CASE("leading interaction matrix on the alternating hexagon") {
  auto f = c6_alternating();
  auto im = gt::interaction_matrix_leading(f.g, f.v, f.w, 0.1, 10);
  REQUIRE(im.wells.size() == 3);
  CHECK(*im.s0 == 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j)
        CHECK(im.offdiag(i, j) == 0.0);
      else
        CHECK(im.offdiag(i, j) == -gt::hbar_power(0.1, 4));
    }
}

TEST_CASE("interaction pairs beyond the minimal separation") {
  auto f = three_level();
  auto im = gt::interaction_matrix_leading(f.g, f.v, f.w, 0.1, 12);
  CHECK(im.wells == std::vector<int>{0, 4, 5});
  REQUIRE(im.s0.has_value());
  CHECK(*im.s0 == 4);
  // v0 -- v4 at distance exactly S0; the detached well never couples.
  CHECK(im.offdiag(0, 1) == -gt::hbar_power(0.1, 8));
  CHECK(im.offdiag(0, 2) == 0.0);
  CHECK(im.offdiag(1, 2) == 0.0);
  REQUIRE(im.pairs_beyond_s0.size() == 2);
  CHECK(im.pairs_beyond_s0[0] == std::pair<int, int>{0, 2});
  CHECK(im.pairs_beyond_s0[1] == std::pair<int, int>{1, 2});
}

TEST_CASE("a single well yields a 1x1 interaction matrix") {
  auto g = gtt::path_graph(3);
  auto v = gt::Potential::from_values(g, {0.0, 1.0, 2.0});
  auto w = gt::WellSet::detect(g, v);
  auto im = gt::interaction_matrix_leading(g, v, w, 0.1, 10);
  CHECK(im.wells == std::vector<int>{0});
  CHECK(!im.s0.has_value());
  CHECK(im.offdiag.rows() == 1);
  CHECK(im.offdiag(0, 0) == 0.0);
  auto full = im.full();
  CHECK(full(0, 0) == im.diag[0].mu);

  auto v2 = gt::Potential::from_values(g, {1.0, 1.0, 2.0});
  auto w2 = gt::WellSet::detect(g, v2);
  CHECK(throws_with_code(
      [&] { gt::interaction_matrix_leading(g, v2, w2, 0.1, 10); }, "NoWells"));
}

TEST_CASE("combinatorial specialization is bit-identical on couplings") {
  auto f = c6_alternating();
  auto rep = gt::simple_potential_specialize(f.g, f.v, f.w, 10);
  CHECK(rep.wells == f.w.wells());
  REQUIRE(rep.s0.has_value());
  CHECK(*rep.s0 == 2);
  for (int i = 0; i < 3; ++i) {
    CHECK(rep.loop_counts[i].counts[2] == 2);
    for (int j = 0; j < 3; ++j)
      CHECK(rep.s0_path_counts[i][j] == (i == j ? 0 : 1));
  }
  for (double hbar : {0.2, 0.1, 0.05}) {
    auto im = gt::interaction_matrix_leading(f.g, f.v, f.w, hbar, 10);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        // Same expression, same inputs: the doubles must be identical.
        CHECK(rep.r_from_counts(i, j, hbar) == im.offdiag(i, j));
      }
      double mu_counts = rep.mu_from_counts(i, hbar);
      CHECK(std::abs(mu_counts - im.diag[i].mu) <=
            1e-15 * std::max(1.0, std::abs(mu_counts)));
    }
  }
}

TEST_CASE("combinatorial specialization rejects unsuitable inputs") {
  auto f5 = p5();
  CHECK(throws_with_code(
      [&] { gt::simple_potential_specialize(f5.g, f5.v, f5.w, 10); }, "NotConstantDegree"));
  auto g = gtt::cycle_graph(6);
  auto v = gt::Potential::from_values(g, {0.0, 0.5, 0.0, 0.5, 0.0, 0.5});
  auto w = gt::WellSet::detect(g, v);
  CHECK(throws_with_code(
      [&] { gt::simple_potential_specialize(g, v, w, 10); }, "NotSimplePotential"));
}

TEST_CASE("verify_order passes with the expected slope on the three-vertex path") {
  auto f = p3();
  auto rep = gt::verify_order(f.g, f.v, f.w, {0.2, 0.1, 0.05, 0.025});
  CHECK(rep.pass);
  CHECK(*rep.s0 == 2);
  CHECK(rep.threshold == doctest::Approx(5.75).epsilon(1e-15));
  REQUIRE(rep.fits.size() == 2);
  REQUIRE(rep.interaction_eigs.size() == 4);
  REQUIRE(rep.exact_eigs.size() == 4);
  for (const auto& fit : rep.fits) {
    CHECK(fit.pass);
    REQUIRE(fit.errors.size() == 4);
    if (!fit.exact) {
      // The next correction is two powers beyond the leading term.
      CHECK(fit.slope > 7.5);
      CHECK(fit.slope < 8.5);
    }
  }
}

TEST_CASE("verify_order passes on the five-vertex path") {
  auto f = p5();
  auto rep = gt::verify_order(f.g, f.v, f.w, {0.2, 0.1, 0.05, 0.025});
  CHECK(rep.pass);
  CHECK(*rep.s0 == 4);
  CHECK(rep.threshold == doctest::Approx(9.75).epsilon(1e-15));
  for (const auto& fit : rep.fits) CHECK(fit.pass);
}

TEST_CASE("verify_order validates its grid") {
  auto f = p3();
  CHECK(throws_with_code(
      [&] { gt::verify_order(f.g, f.v, f.w, {0.2, 0.1, 0.05}); }, "BadGrid"));
  CHECK(throws_with_code(
      [&] { gt::verify_order(f.g, f.v, f.w, {0.2, 0.2, 0.1, 0.05}); }, "BadGrid"));
  CHECK(throws_with_code(
      [&] { gt::verify_order(f.g, f.v, f.w, {0.2, 0.1, 0.05, -0.025}); }, "BadGrid"));
  CHECK(throws_with_code(
      [&] { gt::verify_order(f.g, f.v, f.w, {10.0, 5.0, 2.0, 1.0}); }, "SeriesMayDiverge"));

  auto g = gtt::path_graph(3);
  auto v = gt::Potential::from_values(g, {0.0, 1.0, 2.0});
  auto w = gt::WellSet::detect(g, v);
  CHECK(throws_with_code(
      [&] { gt::verify_order(g, v, w, {0.2, 0.1, 0.05, 0.025}); }, "NoSeparation"));
}
