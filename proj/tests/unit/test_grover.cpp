#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "ctcog/errors.hpp"
#include "ctcog/grover.hpp"

using namespace ctcog;
using namespace ctcog::grover;

namespace {

SearchConfig textbook(std::size_t n, std::size_t m, std::size_t iters) {
  SearchConfig cfg;
  cfg.item_count = n;
  for (std::size_t i = 0; i < m; ++i) {
    cfg.marked.push_back(i);
  }
  cfg.iterations = iters;
  return cfg;
}

}  // namespace

TEST_SUITE("grover") {

TEST_CASE("config validation rejects malformed searches") {
  CHECK_THROWS_AS(run(textbook(3, 1, 1)), DimensionError);
  CHECK_THROWS_AS(run(textbook(0, 0, 1)), DimensionError);
  CHECK_THROWS_AS(run(textbook(4, 0, 1)), DimensionError);
  CHECK_THROWS_AS(run(textbook(4, 4, 1)), DimensionError);
  CHECK_THROWS_AS(run(textbook(1 << 15, 1, 1)), ResourceLimit);
  CHECK_THROWS_AS(run(textbook(4, 1, kMaxIterations + 1)), ResourceLimit);

  auto out_of_range = textbook(4, 1, 1);
  out_of_range.marked = {7};
  CHECK_THROWS_AS(run(out_of_range), DimensionError);
  auto duplicate = textbook(4, 1, 1);
  duplicate.marked = {1, 1};
  CHECK_THROWS_AS(run(duplicate), DimensionError);
}

TEST_CASE("success follows the closed form at matched angles") {
  for (const std::size_t n : {4u, 64u, 1024u}) {
    for (const std::size_t m : {1u, 2u}) {
      const auto trace = run(textbook(n, m, 100));
      const double angle =
          std::asin(std::sqrt(static_cast<double>(m) / n));
      for (std::size_t j = 0; j <= 100; ++j) {
        const double expected = std::pow(std::sin((2.0 * j + 1.0) * angle), 2);
        CHECK(std::abs(trace.success[j] - expected) <= 1e-9);
        CHECK(std::abs(matched_success(n, m, j) - expected) <= 1e-12);
      }
    }
  }
}

TEST_CASE("a four item search finds one marked item in a single sweep") {
  const auto trace = run(textbook(4, 1, 3));
  CHECK(trace.success[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(trace.success[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trace.peak_iteration == 1);
  CHECK(trace.peak_success == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two items and half marked sit at the fixed point") {
  // Both settings keep the marked mass at one half forever: the start state
  // already lies at the invariant angle.
  const auto two = run(textbook(2, 1, 3));
  for (const double s : two.success) {
    CHECK(s == doctest::Approx(0.5).epsilon(1e-12));
  }
  const auto half = run(textbook(4, 2, 5));
  for (const double s : half.success) {
    CHECK(s == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("both operator routes walk the same trajectory") {
  SearchConfig cfg = textbook(64, 2, 40);
  cfg.marked = {3, 17};
  cfg.theta = 2.1;
  cfg.phi = 0.7;

  const auto trace = run(cfg);
  auto psi = uniform_state(cfg.item_count);
  const auto sweep = build_iteration_operator(cfg);
  for (std::size_t j = 0; j <= cfg.iterations; ++j) {
    CHECK(std::abs(marked_mass(psi, cfg.marked) - trace.success[j]) <= 1e-12);
    double norm = 0.0;
    for (const auto& amp : psi) {
      norm += std::norm(amp);
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    sweep(psi);
  }
}

TEST_CASE("unmatched rotation angles freeze or degrade the search") {
  // theta = 0 leaves the mixing step inert, so nothing ever moves.
  SearchConfig inert = textbook(16, 1, 8);
  inert.theta = 0.0;
  inert.phi = 0.0;
  const auto frozen = run(inert);
  for (const double s : frozen.success) {
    CHECK(s == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
  }
  CHECK(frozen.peak_iteration == 0);

  SearchConfig skew = textbook(64, 1, 24);
  skew.phi = std::numbers::pi / 4;
  const auto degraded = run(skew);
  const auto matched = run(textbook(64, 1, 24));
  CHECK(degraded.peak_success < matched.peak_success - 0.2);
}

TEST_CASE("optimal iteration counts scale with the square root") {
  CHECK(optimal_iterations(4, 1) == 1);
  CHECK(optimal_iterations(1024, 1) == 25);
  CHECK(optimal_iterations(4096, 1) == 50);

  for (const std::size_t n : {256u, 1024u, 4096u}) {
    const double ratio =
        static_cast<double>(optimal_iterations(4 * n, 1)) /
        static_cast<double>(optimal_iterations(n, 1));
    CHECK(ratio >= 1.9);
    CHECK(ratio <= 2.1);
  }
}

TEST_CASE("phase scan is grid ordered and thread count independent") {
  const std::vector<double> thetas{0.0, 1.0, 2.0};
  const std::vector<double> phis{0.5, 1.5};

  const auto serial = phase_scan(16, 1, thetas, phis, 10, 1);
  const auto parallel = phase_scan(16, 1, thetas, phis, 10, 5);
  REQUIRE(serial.size() == 6);
  REQUIRE(parallel.size() == 6);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].theta == thetas[i / phis.size()]);
    CHECK(serial[i].phi == phis[i % phis.size()]);
    CHECK(serial[i].peak_success == parallel[i].peak_success);
    CHECK(serial[i].peak_iteration == parallel[i].peak_iteration);
  }
}

TEST_CASE("matched phases dominate the scan diagonal") {
  std::vector<double> grid;
  for (int i = 0; i < 11; ++i) {
    grid.push_back(2 * std::numbers::pi * i / 10.0);
  }
  const auto points = phase_scan(64, 1, grid, grid, 24, 2);

  double best = 0.0;
  double best_diag = 0.0;
  for (const auto& p : points) {
    best = std::max(best, p.peak_success);
    if (p.theta == p.phi) {
      best_diag = std::max(best_diag, p.peak_success);
    }
  }
  CHECK(best == best_diag);

  for (const auto& p : points) {
    if (std::abs(p.theta - p.phi) >= std::numbers::pi / 2) {
      CHECK(p.peak_success < best);
    }
  }
}

TEST_CASE("mood congruent items crowd out the rest at matched phases") {
  const std::vector<char> tags{'+', '-', '-', '-', '+', '-', '-', '-',
                               '-', '-', '-', '-', '-', '-', '-', '-'};
  const auto recall = mood_congruent_recall(tags, '+', std::numbers::pi,
                                            std::numbers::pi, 4);
  CHECK(recall.peak_iteration == 2);
  CHECK(recall.peak_congruent > 0.9);
  CHECK(recall.congruent_count == 2);
  CHECK(recall.congruent[2] + recall.incongruent[2] ==
        doctest::Approx(1.0).epsilon(1e-9));

  const auto mismatched = mood_congruent_recall(tags, '+', std::numbers::pi,
                                                std::numbers::pi / 4, 8);
  CHECK(mismatched.congruent[2] < 0.6);

  const std::vector<char> all{'+', '+'};
  const auto trivial = mood_congruent_recall(all, '+', std::numbers::pi,
                                             std::numbers::pi, 3);
  for (const double c : trivial.congruent) {
    CHECK(c == doctest::Approx(1.0).epsilon(1e-12));
  }

  CHECK_THROWS_AS(mood_congruent_recall(tags, 'z', std::numbers::pi,
                                        std::numbers::pi, 2),
                  NoCongruentItems);
}

}  // TEST_SUITE
