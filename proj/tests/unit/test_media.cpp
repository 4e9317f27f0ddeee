#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "ctcog/classical_medium.hpp"
#include "ctcog/coherent_medium.hpp"
#include "ctcog/errors.hpp"
#include "ctcog/media_analysis.hpp"
#include "ctcog/partition.hpp"
#include "ctcog/standard_media.hpp"

using namespace ctcog;

TEST_SUITE("media") {

TEST_CASE("partition of unity validates its weights") {
  CHECK_THROWS_AS(PartitionOfUnity({"a", "b"}, {0.6, 0.6}), ArityError);
  CHECK_THROWS_AS(PartitionOfUnity({"a", "b"}, {-0.1, 1.1}), ArityError);
  CHECK_THROWS_AS(PartitionOfUnity({"a"}, {0.5, 0.5}), ArityError);

  const PartitionOfUnity p({"a", "b"}, {0.25, 0.75});
  CHECK(p.value_of("b") == 0.75);
  CHECK_THROWS_AS(p.value_of("zz"), NotMeasurable);
  CHECK_FALSE(p.is_sharp());
  CHECK(PartitionOfUnity({"a", "b"}, {1.0, 0.0}).is_sharp());
}

TEST_CASE("theta parametrization matches the half angle squares") {
  const auto third = partition_of_theta(std::numbers::pi / 3.0);
  CHECK(third[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(third[1] == doctest::Approx(0.25).epsilon(1e-12));

  for (int i = 0; i <= 100; ++i) {
    const double theta = std::numbers::pi * i / 100.0;
    const auto p = partition_of_theta(theta);
    CHECK(std::abs(p[0] - std::cos(theta / 2) * std::cos(theta / 2)) <=
          1e-12);
    CHECK(std::abs(p[1] - std::sin(theta / 2) * std::sin(theta / 2)) <=
          1e-12);
    CHECK(std::abs(theta_of_partition(p) - theta) <= 1e-9);
  }

  // Angles above pi label the same readout as their reflection.
  const auto high = partition_of_theta(1.5 * std::numbers::pi);
  CHECK(theta_of_partition(high) ==
        doctest::Approx(0.5 * std::numbers::pi).epsilon(1e-9));

  CHECK_THROWS_AS(theta_of_partition(PartitionOfUnity({"a", "b", "c"},
                                                      {0.2, 0.3, 0.5})),
                  NonBinary);
}

TEST_CASE("classical states validate and normalize") {
  const auto s = make_classical_state({{"a", 1.0}, {"b", 3.0}});
  CHECK(s.weight_of("a") == doctest::Approx(0.25));
  CHECK(s.weight_of("zz") == 0.0);
  CHECK_FALSE(s.sharp());
  CHECK(make_classical_state({{"a", 2.0}}).sharp());

  ClassicalState bad{{{"a", 0.5}, {"b", 0.6}}};
  CHECK_THROWS_AS(bad.validate(), ArityError);
  ClassicalState negative{{{"a", -0.2}, {"b", 1.2}}};
  CHECK_THROWS_AS(negative.validate(), ArityError);
}

TEST_CASE("classical readout conditions without disturbing the ensemble") {
  const auto c = make_classical_affect_analogue();
  const auto& m = c.medium;

  CHECK(m.exact_partition(m.prepare(c.x0), c.x).is_sharp());

  const auto mix = make_classical_state(
      {{"x0", 0.3}, {"x1", 0.2}, {"a+", 0.4}, {"a-", 0.1}});
  // Restriction and renormalization, then remixing, reproduces the state.
  std::map<std::string, double> rebuilt;
  const auto coarse =
      Variable("xa", {Attribute("xs", {"x0", "x1"}),
                      Attribute("as", {"a+", "a-"})});
  ClassicalMedium wide(m.labels(), {coarse});
  const auto part = wide.exact_partition(mix, coarse);
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    const auto post =
        std::get<ClassicalState>(wide.conditioned(mix, coarse, i));
    for (const auto& [label, w] : post.weights) {
      rebuilt[label] += part[i] * w;
    }
  }
  for (const auto& [label, w] : mix.weights) {
    CHECK(rebuilt[label] == doctest::Approx(w).epsilon(1e-12));
  }

  CHECK_THROWS_AS(wide.conditioned(wide.prepare(coarse.at(0)), coarse, 1),
                  PreconditionFailed);
}

TEST_CASE("classical overlap counts shared labels") {
  const auto ce = make_symmetry_counterexample();
  // x0 = {s0,s1,s2} sits inside a_plus = {s0..s4}: 9 shared pairs over 15.
  CHECK(ce.medium.overlap(ce.x0, ce.a_plus) ==
        doctest::Approx(9.0 / 15.0).epsilon(1e-12));
  CHECK(ce.medium.overlap(ce.x0, ce.x0) == doctest::Approx(1.0));
  CHECK(ce.medium.distinguishable(ce.x.at(0), ce.x.at(1)));
  CHECK_FALSE(ce.medium.distinguishable(ce.x0, ce.a_plus));
}

TEST_CASE("classical exchange relabels the ensemble") {
  const auto c = make_classical_affect_analogue();
  const auto mix = make_classical_state({{"x0", 0.7}, {"x1", 0.3}});
  const auto swapped = std::get<ClassicalState>(
      c.medium.apply_exchange(mix, c.x0, c.x1));
  CHECK(swapped.weight_of("x0") == doctest::Approx(0.3));
  CHECK(swapped.weight_of("x1") == doctest::Approx(0.7));
  CHECK(c.medium.permutation_allowed(c.x));
  CHECK(c.medium.clone_allowed(c.x));
}

TEST_CASE("coherent readout of the other variable is balanced") {
  const auto q = make_affect_qubit();
  const auto sharp_x0 = q.medium.prepare(q.x0);

  const auto in_a = q.medium.exact_partition(sharp_x0, q.a);
  CHECK(in_a[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(in_a[1] == doctest::Approx(0.5).epsilon(1e-9));

  // Conditioning on the affect readout perturbs the prepared sharp state.
  const auto post = q.medium.conditioned(sharp_x0, q.a, 0);
  const auto back = q.medium.exact_partition(post, q.x);
  CHECK(back[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(back[1] == doctest::Approx(0.5).epsilon(1e-9));

  CHECK(q.medium.overlap(q.x0, q.a_plus) ==
        doctest::Approx(0.5).epsilon(1e-9));
  CHECK_FALSE(q.medium.distinguishable(q.x0, q.a_plus));
  CHECK(q.medium.distinguishable(q.x0, q.x1));

  const Attribute both("both", {"x0", "x1"});
  CHECK_THROWS_AS(q.medium.prepare(both), NotPreparable);
  CHECK_THROWS_AS(q.medium.prepare(Attribute("ghost", {"zz"})),
                  NotPreparable);
}

TEST_CASE("coherent medium rejects malformed constructions") {
  CHECK_THROWS_AS(CoherentMedium(3, {{"a", {1.0, 0.0, 0.0}}}, {}),
                  ArityError);
  CHECK_THROWS_AS(CoherentMedium(2, {{"a", {0.5, 0.5}}}, {}), ArityError);
  // Variables must name orthonormal members.
  const std::map<std::string, Amplitudes> vecs{
      {"p", {1.0, 0.0}},
      {"q", {std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0}}};
  CHECK_THROWS_AS(
      CoherentMedium(2, vecs,
                     {Variable("v", {Attribute("p", {"p"}),
                                     Attribute("q", {"q"})})}),
      ArityError);
}

TEST_CASE("coherent exchange swaps orthogonal arms only") {
  const auto q = make_affect_qubit();
  const auto tilted = theta_state(q.medium, 1.1, 0.4);
  const auto swapped = std::get<CoherentState>(
      q.medium.apply_exchange(tilted, q.x0, q.x1));
  CHECK(std::abs(swapped.amplitudes[0] - tilted.amplitudes[1]) <= 1e-12);
  CHECK(std::abs(swapped.amplitudes[1] - tilted.amplitudes[0]) <= 1e-12);

  CHECK_THROWS_AS(q.medium.apply_exchange(tilted, q.x0, q.a_plus),
                  PreconditionFailed);
  CHECK(q.medium.permutation_allowed(q.x));
  CHECK(q.medium.permutation_allowed(q.a));
  CHECK(q.medium.clone_allowed(q.x));
}

TEST_CASE("counting task tracks the exact readout within four sigma") {
  const auto q = make_affect_qubit();
  const auto state = theta_state(q.medium, 1.234);
  const auto exact = q.medium.exact_partition(state, q.x);

  const std::uint64_t n = 100000;
  const auto counted = counting_task(q.medium, state, q.x, n, 20240817);
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double sigma = std::sqrt(exact[i] * (1.0 - exact[i]) / n);
    CHECK(std::abs(counted[i] - exact[i]) <= 4.0 * sigma);
  }

  // Same seed, same frequencies; the estimate is a pure function of it.
  const auto again = counting_task(q.medium, state, q.x, n, 20240817);
  CHECK(counted.values() == again.values());

  CHECK_THROWS_AS(counting_task(q.medium, state, q.x, 0, 1),
                  PreconditionFailed);
}

TEST_CASE("superinformation detection separates the two media") {
  const auto c = make_classical_affect_analogue();
  const auto classical = detect_superinformation(c.medium, c.x, c.a);
  CHECK_FALSE(classical.superinformation);

  const auto q = make_affect_qubit();
  const auto coherent = detect_superinformation(q.medium, q.x, q.a);
  CHECK(coherent.superinformation);
  CHECK(coherent.overlap == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(coherent.first_attribute == "x0");
  CHECK(coherent.second_attribute == "a+");

  // Sharing labels across the two variables is a caller error.
  const std::vector<std::string> labels{"l0", "l1", "l2", "l3"};
  const Variable v1("v1", {Attribute("p", {"l0", "l1"}),
                           Attribute("q", {"l2", "l3"})});
  const Variable v2("v2", {Attribute("r", {"l0", "l2"}),
                           Attribute("s", {"l1", "l3"})});
  const ClassicalMedium shared(labels, {v1, v2});
  CHECK_THROWS_AS(detect_superinformation(shared, v1, v2),
                  PreconditionFailed);
}

TEST_CASE("attribute partition demands agreement across members") {
  const auto ce = make_symmetry_counterexample();

  const auto agreeing = attribute_partition(ce.medium, ce.x0, ce.a);
  REQUIRE(agreeing.has_value());
  CHECK((*agreeing)[0] == doctest::Approx(1.0));

  // a_plus straddles x0 and x1, so its members disagree about x.
  const auto straddling = attribute_partition(ce.medium, ce.a_plus, ce.x);
  CHECK_FALSE(straddling.has_value());
}

TEST_CASE("decision conditions hold on the balanced coherent pair only") {
  const auto q = make_affect_qubit();
  const auto coherent = check_decision_conditions(q.medium, q.x, q.a);
  CHECK(coherent.unsharp_cross_readout);
  CHECK(coherent.exchange_fixes_other);
  CHECK(coherent.equal_weights);
  CHECK(coherent.all());
  CHECK(coherent.values.at("f[a+|x0]") == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(coherent.values.at("f[x1|a-]") == doctest::Approx(0.5).epsilon(1e-9));

  const auto c = make_classical_affect_analogue();
  const auto flat = check_decision_conditions(c.medium, c.x, c.a);
  CHECK_FALSE(flat.unsharp_cross_readout);
  CHECK_FALSE(flat.all());

  // Joint ensemble: every affect attribute splits across sharp x members,
  // so no member-wise readout exists either.
  const auto pair = make_classical_affect_pair();
  const auto joint = check_decision_conditions(pair.medium, pair.x, pair.a);
  CHECK_FALSE(joint.unsharp_cross_readout);

  const auto ce = make_symmetry_counterexample();
  const Variable wide("w", {Attribute("a", {"s0"}), Attribute("b", {"s1"}),
                            Attribute("c", {"s2"})});
  CHECK_THROWS_AS(check_decision_conditions(ce.medium, wide, wide),
                  NonBinary);
}

TEST_CASE("information variable needs cloning and relabeling") {
  const auto q = make_affect_qubit();
  CHECK(is_information_variable(q.medium, q.x));
  CHECK(is_information_variable(q.medium, q.a));

  const Variable mixed("m", {Attribute("x0", {"x0"}),
                             Attribute("a+", {"a+"})});
  CHECK_FALSE(is_information_variable(q.medium, mixed));
}

}  // TEST_SUITE
