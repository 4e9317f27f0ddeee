#include <doctest.h>

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "ctcog/errors.hpp"
#include "ctcog/judgement.hpp"
#include "ctcog/rng.hpp"
#include "ctcog/standard_media.hpp"

using namespace ctcog;

namespace {

ClassicalState random_mixture(const std::vector<std::string>& labels,
                              CounterRng& rng) {
  std::map<std::string, double> weights;
  for (const auto& l : labels) {
    weights[l] = 0.05 + rng.uniform();
  }
  return make_classical_state(std::move(weights));
}

Variable random_binary_variable(const std::string& id,
                                const std::vector<std::string>& labels,
                                CounterRng& rng) {
  std::vector<std::string> lo;
  std::vector<std::string> hi;
  for (const auto& l : labels) {
    (rng.uniform() < 0.5 ? lo : hi).push_back(l);
  }
  if (lo.empty()) {
    lo.push_back(hi.back());
    hi.pop_back();
  }
  if (hi.empty()) {
    hi.push_back(lo.back());
    lo.pop_back();
  }
  return Variable(id, {Attribute(id + "0", std::move(lo)),
                       Attribute(id + "1", std::move(hi))});
}

}  // namespace

TEST_SUITE("judgement") {

TEST_CASE("judge reads the weight of an attribute") {
  const auto q = make_affect_qubit();
  const auto s = q.medium.prepare(q.x0);

  CHECK(judge(q.medium, s, q.x, q.x0) == doctest::Approx(1.0));
  CHECK(judge(q.medium, s, q.a_plus) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_THROWS_AS(judge(q.medium, s, q.x, q.a_plus), NotMeasurable);

  const auto counted =
      judge(q.medium, s, q.a_plus, JudgeMode::counted(100000, 7));
  CHECK(std::abs(counted - 0.5) <= 4.0 * std::sqrt(0.25 / 100000.0));
}

TEST_CASE("sequential judgement multiplies conditioned readouts") {
  const auto pair = make_classical_affect_pair();
  const auto s = make_classical_state({{"(x0,a+)", 0.4},
                                       {"(x0,a-)", 0.1},
                                       {"(x1,a+)", 0.2},
                                       {"(x1,a-)", 0.3}});
  const auto& x0 = pair.x.at(0);
  const auto& a_plus = pair.a.at(0);

  // P(x0) * P(a+ | x0) is the joint mass of (x0, a+).
  CHECK(judge_sequential(pair.medium, s, x0, a_plus) ==
        doctest::Approx(0.4).epsilon(1e-12));
  CHECK(judge_sequential(pair.medium, s, a_plus, x0) ==
        doctest::Approx(0.4).epsilon(1e-12));

  // A zero first readout short-circuits to zero.
  const auto corner = make_classical_state({{"(x1,a+)", 1.0}});
  CHECK(judge_sequential(pair.medium, corner, x0, a_plus) == 0.0);
}

TEST_CASE("conjunction bound holds on a thousand seeded ensembles") {
  const std::vector<std::string> labels{"l0", "l1", "l2", "l3", "l4", "l5"};
  const ClassicalMedium ensemble(labels, {});

  std::size_t violations = 0;
  std::size_t checked = 0;
  for (std::size_t k = 0; k < 1000; ++k) {
    CounterRng rng(20240817, k);
    const std::vector<MediumState> states{random_mixture(labels, rng)};
    const auto v1 = random_binary_variable("p", labels, rng);
    const auto v2 = random_binary_variable("q", labels, rng);
    const auto report = conjunction_check(ensemble, v1, v2, states);
    violations += static_cast<std::size_t>(report.values.at("violations"));
    checked += static_cast<std::size_t>(report.values.at("pairs_checked"));
  }
  CHECK(violations == 0);
  CHECK(checked == 8000);
}

TEST_CASE("conjunction witness exceeds the bound on the coherent medium") {
  const auto q = make_affect_qubit();
  const std::vector<MediumState> states{q.medium.prepare(q.x1)};
  const std::vector<std::string> names{"sharp x1"};

  const auto report = conjunction_check(q.medium, q.x, q.a, states, names);
  CHECK(report.classification == MediumClass::superinformation);
  CHECK(report.values.at("violations") == 2.0);
  CHECK(report.values.at("witness_excess") ==
        doctest::Approx(0.25).epsilon(1e-9));
  REQUIRE(report.witness.has_value());

  // The witness pair: reading a+ first then x0 succeeds a quarter of the
  // time although x0 alone is judged impossible.
  bool found = false;
  for (const auto& rec : report.inequalities) {
    if (rec.name.find("J(a+ then x0)") != std::string::npos) {
      found = true;
      CHECK(rec.lhs == doctest::Approx(0.25).epsilon(1e-9));
      CHECK(rec.rhs == doctest::Approx(0.0).epsilon(1e-9));
      CHECK_FALSE(rec.holds);
    }
  }
  CHECK(found);
}

TEST_CASE("independence holds on seeded ensemble mixtures") {
  const auto pair = make_classical_affect_pair();
  const auto& x0 = pair.x.at(0);

  std::size_t violations = 0;
  for (std::size_t k = 0; k < 1000; ++k) {
    CounterRng rng(99, k);
    const auto z = random_mixture(pair.medium.labels(), rng);
    const auto report = independence_check(pair.medium, x0, pair.a, z);
    if (report.classification == MediumClass::superinformation) {
      ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("equal conditionals with a moved mean flag superinformation") {
  const auto q = make_affect_qubit();
  const auto z = q.medium.prepare(q.x0);

  const auto report = independence_check(q.medium, q.x0, q.a, z);
  CHECK(report.classification == MediumClass::superinformation);
  CHECK(report.values.at("J(x0|given state)") ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(report.values.at("J(x0|a+)") == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(report.values.at("J(x0|a-)") == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_FALSE(report.all_hold());

  CHECK_THROWS_AS(independence_check(q.medium, q.x0, q.a,
                                     q.medium.prepare(q.a_plus)),
                  NotAMixture);
}

TEST_CASE("conditional judgements are symmetric on the balanced pair") {
  const auto q = make_affect_qubit();
  for (const auto* x : {&q.x0, &q.x1}) {
    for (const auto* a : {&q.a_plus, &q.a_minus}) {
      const auto report = symmetry_check(q.medium, *x, *a);
      CHECK(report.all_hold());
      CHECK(report.classification == MediumClass::superinformation);
      CHECK(std::abs(report.values.at("J(" + x->id() + "|" + a->id() + ")") -
                     report.values.at("J(" + a->id() + "|" + x->id() + ")")) <=
            1e-9);
    }
  }
}

TEST_CASE("a lopsided ensemble breaks the symmetry heuristic") {
  const auto ce = make_symmetry_counterexample();
  const auto report = symmetry_check(ce.medium, ce.x0, ce.a_plus);

  CHECK_FALSE(report.all_hold());
  CHECK(report.classification == MediumClass::information);
  CHECK(report.values.at("J(x0|a+)") == doctest::Approx(0.6).epsilon(1e-9));
  CHECK(report.values.at("J(a+|x0)") == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("categorize sums beliefs over selected attributes") {
  const auto c = make_classical_affect_analogue();
  const Variable all("all",
                     {c.x0, c.x1, c.a_plus, c.a_minus});
  const auto uniform = c.medium.uniform_state();

  const auto is_x = [](const Attribute& a) {
    return a.id().rfind("x", 0) == 0;
  };
  CHECK(categorize(c.medium, uniform, all, is_x) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(categorize(c.medium, uniform, all,
                   [](const Attribute&) { return true; }) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("infusion level tracks the report classification") {
  const auto q = make_affect_qubit();
  const auto high = symmetry_check(q.medium, q.x0, q.a_plus);
  CHECK(classify_infusion(high) == InfusionLevel::high);

  const auto ce = make_symmetry_counterexample();
  const auto low = symmetry_check(ce.medium, ce.x0, ce.a_plus);
  CHECK(classify_infusion(low) == InfusionLevel::low);

  CHECK_THROWS_AS(classify_infusion(JudgementReport{}), EmptyReport);

  CHECK(to_string(MediumClass::superinformation) == "superinformation");
  CHECK(to_string(InfusionLevel::low) == "low");
}

}  // TEST_SUITE
