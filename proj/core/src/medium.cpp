#include "ctcog/medium.hpp"

#include <cmath>
#include <numeric>

#include "ctcog/errors.hpp"

namespace ctcog {

double ClassicalState::weight_of(const std::string& label) const {
  auto it = weights.find(label);
  return it == weights.end() ? 0.0 : it->second;
}

bool ClassicalState::sharp(double tol) const {
  for (const auto& [label, w] : weights) {
    if (std::abs(w - 1.0) <= tol) {
      return true;
    }
  }
  return false;
}

void ClassicalState::validate() const {
  constexpr double tol = 1e-12;
  double sum = 0.0;
  for (const auto& [label, w] : weights) {
    if (w < -tol) {
      throw ArityError("negative weight on label '" + label + "'");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw ArityError("classical weights sum to " + std::to_string(sum));
  }
}

ClassicalState make_classical_state(std::map<std::string, double> weights) {
  double sum = 0.0;
  for (const auto& [label, w] : weights) {
    if (w < 0.0) {
      throw ArityError("negative weight on label '" + label + "'");
    }
    sum += w;
  }
  if (sum <= 0.0) {
    throw ArityError("weights sum to zero");
  }
  for (auto& [label, w] : weights) {
    w /= sum;
  }
  return ClassicalState{std::move(weights)};
}

void CoherentState::validate() const {
  const auto n = amplitudes.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw ArityError("coherent state dimension " + std::to_string(n) +
                     " is not a power of two");
  }
  double norm2 = 0.0;
  for (const auto& a : amplitudes) {
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw ArityError("coherent state norm^2 is " + std::to_string(norm2));
  }
  if (!basis_tags.empty() && basis_tags.size() != n) {
    throw ArityError("basis tags cover " + std::to_string(basis_tags.size()) +
                     " of " + std::to_string(n) + " basis indices");
  }
}

const Variable& MediumModel::variable_of(const Attribute& a) const {
  for (const auto& v : variables()) {
    if (v.contains(a)) {
      return v;
    }
  }
  throw NotMeasurable("attribute '" + a.id() +
                      "' belongs to no declared variable of this medium");
}

MeasurementResult MediumModel::measure(const MediumState& s, const Variable& v,
                                       CounterRng& rng) const {
  auto sampler = make_outcome_sampler(s, v);
  const std::size_t outcome = sampler(rng);
  return MeasurementResult{outcome, conditioned(s, v, outcome)};
}

}  // namespace ctcog
