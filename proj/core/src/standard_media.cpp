#include "ctcog/standard_media.hpp"

#include <cmath>

#include "ctcog/errors.hpp"

namespace ctcog {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Amplitudes tensor(const Amplitudes& u, const Amplitudes& v) {
  Amplitudes out;
  out.reserve(u.size() * v.size());
  for (const auto& a : u) {
    for (const auto& b : v) {
      out.push_back(a * b);
    }
  }
  return out;
}
}  // namespace

AffectQubit make_affect_qubit() {
  std::map<std::string, Amplitudes> vectors{
      {"x0", {1.0, 0.0}},
      {"x1", {0.0, 1.0}},
      {"a+", {kInvSqrt2, kInvSqrt2}},
      {"a-", {kInvSqrt2, -kInvSqrt2}},
  };
  Attribute x0("x0", {"x0"});
  Attribute x1("x1", {"x1"});
  Attribute ap("a+", {"a+"});
  Attribute am("a-", {"a-"});
  Variable x("X", {x0, x1});
  Variable a("A", {ap, am});
  CoherentMedium medium(2, std::move(vectors), {x, a}, {"x0", "x1"});
  return AffectQubit{std::move(medium), std::move(x), std::move(a),
                     std::move(x0),     std::move(x1), std::move(ap),
                     std::move(am)};
}

ClassicalAffectAnalogue make_classical_affect_analogue() {
  Attribute x0("x0", {"x0"});
  Attribute x1("x1", {"x1"});
  Attribute ap("a+", {"a+"});
  Attribute am("a-", {"a-"});
  Variable x("X", {x0, x1});
  Variable a("A", {ap, am});
  ClassicalMedium medium({"x0", "x1", "a+", "a-"}, {x, a});
  return ClassicalAffectAnalogue{std::move(medium), std::move(x), std::move(a),
                                 std::move(x0),     std::move(x1),
                                 std::move(ap),     std::move(am)};
}

ClassicalAffectPair make_classical_affect_pair() {
  const std::vector<std::string> xs{"x0", "x1"};
  const std::vector<std::string> as{"a+", "a-"};
  std::vector<std::string> labels;
  for (const auto& xl : xs) {
    for (const auto& al : as) {
      labels.push_back(pair_label(xl, al));
    }
  }
  std::vector<Attribute> x_attrs;
  for (const auto& xl : xs) {
    std::vector<std::string> members;
    for (const auto& al : as) {
      members.push_back(pair_label(xl, al));
    }
    x_attrs.emplace_back(xl, std::move(members));
  }
  std::vector<Attribute> a_attrs;
  for (const auto& al : as) {
    std::vector<std::string> members;
    for (const auto& xl : xs) {
      members.push_back(pair_label(xl, al));
    }
    a_attrs.emplace_back(al, std::move(members));
  }
  Variable x("X", std::move(x_attrs));
  Variable a("A", std::move(a_attrs));
  ClassicalMedium medium(std::move(labels), {x, a});
  return ClassicalAffectPair{std::move(medium), std::move(x), std::move(a)};
}

SymmetryCounterexample make_symmetry_counterexample() {
  std::vector<std::string> labels;
  for (int i = 0; i < 10; ++i) {
    labels.push_back("s" + std::to_string(i));
  }
  Attribute x0("x0", {"s0", "s1", "s2"});
  Attribute x1("x1", {"s3", "s4", "s5", "s6", "s7", "s8", "s9"});
  Attribute ap("a+", {"s0", "s1", "s2", "s3", "s4"});
  Attribute am("a-", {"s5", "s6", "s7", "s8", "s9"});
  Variable x("X", {x0, x1});
  Variable a("A", {ap, am});
  ClassicalMedium medium(std::move(labels), {x, a});
  return SymmetryCounterexample{std::move(medium), std::move(x), std::move(a),
                                std::move(x0), std::move(ap)};
}

AffectQubitPair make_affect_qubit_pair() {
  const Amplitudes x0{1.0, 0.0};
  const Amplitudes x1{0.0, 1.0};
  const Amplitudes ap{kInvSqrt2, kInvSqrt2};
  const Amplitudes am{kInvSqrt2, -kInvSqrt2};

  std::map<std::string, Amplitudes> vectors;
  const std::vector<std::pair<std::string, Amplitudes>> singles{
      {"x0", x0}, {"x1", x1}, {"a+", ap}, {"a-", am}};
  for (const auto& [l1, v1] : singles) {
    for (const auto& [l2, v2] : singles) {
      vectors[pair_label(l1, l2)] = tensor(v1, v2);
    }
  }

  auto span_first = [](const std::string& l) {
    return std::vector<std::string>{pair_label(l, "x0"), pair_label(l, "x1")};
  };
  auto span_second = [](const std::string& l) {
    return std::vector<std::string>{pair_label("x0", l), pair_label("x1", l)};
  };
  auto span_first_a = [](const std::string& l) {
    return std::vector<std::string>{pair_label(l, "a+"), pair_label(l, "a-")};
  };
  auto span_second_a = [](const std::string& l) {
    return std::vector<std::string>{pair_label("a+", l), pair_label("a-", l)};
  };

  Variable x_first("X1", {Attribute("x0.", span_first("x0")),
                          Attribute("x1.", span_first("x1"))});
  Variable x_second("X2", {Attribute(".x0", span_second("x0")),
                           Attribute(".x1", span_second("x1"))});
  Variable a_first("A1", {Attribute("a+.", span_first_a("a+")),
                          Attribute("a-.", span_first_a("a-"))});
  Variable a_second("A2", {Attribute(".a+", span_second_a("a+")),
                           Attribute(".a-", span_second_a("a-"))});

  std::vector<std::string> tags{pair_label("x0", "x0"), pair_label("x0", "x1"),
                                pair_label("x1", "x0"),
                                pair_label("x1", "x1")};
  CoherentMedium medium(4, std::move(vectors),
                        {x_first, x_second, a_first, a_second},
                        std::move(tags));
  CoherentState shared =
      medium.state_from_amplitudes({kInvSqrt2, 0.0, 0.0, kInvSqrt2});
  return AffectQubitPair{std::move(medium),   std::move(x_first),
                         std::move(x_second), std::move(a_first),
                         std::move(a_second), std::move(shared)};
}

CoherentState swap_registers(const CoherentState& s) {
  const auto n = s.dim();
  std::size_t half_bits = 0;
  while ((std::size_t{1} << half_bits) * (std::size_t{1} << half_bits) < n) {
    ++half_bits;
  }
  const std::size_t side = std::size_t{1} << half_bits;
  if (side * side != n) {
    throw ArityError("state of dimension " + std::to_string(n) +
                     " is not a register pair");
  }
  CoherentState out = s;
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      out.amplitudes[j * side + i] = s.amplitudes[i * side + j];
    }
  }
  return out;
}

CoherentState theta_state(const CoherentMedium& m, double theta,
                          double phase) {
  if (m.dim() != 2) {
    throw ArityError("theta state needs a two-level medium");
  }
  const auto& v0 = m.vector_of("x0");
  const auto& v1 = m.vector_of("x1");
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const auto ph = std::polar(1.0, phase);
  Amplitudes amps(2);
  for (std::size_t i = 0; i < 2; ++i) {
    amps[i] = c * v0[i] + ph * s * v1[i];
  }
  return m.state_from_amplitudes(std::move(amps));
}

}  // namespace ctcog
