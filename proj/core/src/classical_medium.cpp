#include "ctcog/classical_medium.hpp"

#include <algorithm>
#include <cmath>

#include "ctcog/errors.hpp"

namespace ctcog {

namespace {
constexpr double kTol = 1e-9;
}

ClassicalMedium::ClassicalMedium(std::vector<std::string> labels,
                                 std::vector<Variable> variables)
    : labels_(std::move(labels)), variables_(std::move(variables)) {
  if (labels_.empty()) {
    throw ArityError("classical medium has no labels");
  }
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  for (const auto& v : variables_) {
    for (const auto& a : v.attributes()) {
      for (const auto& m : a.members()) {
        if (!std::binary_search(labels_.begin(), labels_.end(), m)) {
          throw ArityError("attribute '" + a.id() + "' uses unknown label '" +
                           m + "'");
        }
      }
    }
  }
}

const ClassicalState& ClassicalMedium::as_classical(
    const MediumState& s) const {
  const auto* c = std::get_if<ClassicalState>(&s);
  if (c == nullptr) {
    throw PreconditionFailed("classical medium got a coherent state");
  }
  return *c;
}

ClassicalState ClassicalMedium::uniform_state() const {
  std::map<std::string, double> w;
  const double f = 1.0 / static_cast<double>(labels_.size());
  for (const auto& l : labels_) {
    w[l] = f;
  }
  return ClassicalState{std::move(w)};
}

MediumState ClassicalMedium::prepare(const Attribute& a) const {
  std::map<std::string, double> w;
  const double f = 1.0 / static_cast<double>(a.size());
  for (const auto& m : a.members()) {
    if (!std::binary_search(labels_.begin(), labels_.end(), m)) {
      throw NotPreparable("attribute '" + a.id() + "' uses unknown label '" +
                          m + "'");
    }
    w[m] = f;
  }
  return ClassicalState{std::move(w)};
}

PartitionOfUnity ClassicalMedium::exact_partition(const MediumState& s,
                                                  const Variable& v) const {
  const auto& state = as_classical(s);
  std::vector<std::string> ids;
  std::vector<double> values;
  double covered = 0.0;
  for (const auto& a : v.attributes()) {
    double mass = 0.0;
    for (const auto& m : a.members()) {
      mass += state.weight_of(m);
    }
    ids.push_back(a.id());
    values.push_back(mass);
    covered += mass;
  }
  if (std::abs(covered - 1.0) > kTol) {
    throw NotMeasurable("state puts weight " + std::to_string(1.0 - covered) +
                        " outside the attributes of '" + v.id() + "'");
  }
  return PartitionOfUnity(std::move(ids), std::move(values));
}

MediumState ClassicalMedium::conditioned(const MediumState& s,
                                         const Variable& v,
                                         std::size_t outcome_index) const {
  const auto& state = as_classical(s);
  const Attribute& a = v.at(outcome_index);
  double mass = 0.0;
  for (const auto& m : a.members()) {
    mass += state.weight_of(m);
  }
  if (mass <= kTol) {
    throw PreconditionFailed("outcome '" + a.id() + "' has zero weight");
  }
  std::map<std::string, double> w;
  for (const auto& m : a.members()) {
    const double f = state.weight_of(m);
    if (f > 0.0) {
      w[m] = f / mass;
    }
  }
  return ClassicalState{std::move(w)};
}

std::function<std::size_t(CounterRng&)> ClassicalMedium::make_outcome_sampler(
    const MediumState& s, const Variable& v) const {
  const auto partition = exact_partition(s, v);
  std::vector<double> cdf(partition.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    acc += partition[i];
    cdf[i] = acc;
  }
  cdf.back() = 1.0;
  return [cdf = std::move(cdf)](CounterRng& rng) {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return static_cast<std::size_t>(std::min<std::ptrdiff_t>(
        it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
  };
}

bool ClassicalMedium::distinguishable(const Attribute& a,
                                      const Attribute& b) const {
  return a.disjoint_with(b);
}

double ClassicalMedium::overlap(const Attribute& a, const Attribute& b) const {
  std::vector<std::string> common;
  std::set_intersection(a.members().begin(), a.members().end(),
                        b.members().begin(), b.members().end(),
                        std::back_inserter(common));
  const double inter = static_cast<double>(common.size());
  return (inter * inter) /
         (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

bool ClassicalMedium::clone_allowed(const Variable&) const { return true; }

bool ClassicalMedium::permutation_allowed(const Variable&) const {
  return true;
}

MediumState ClassicalMedium::apply_exchange(const MediumState& s,
                                            const Attribute& m,
                                            const Attribute& n) const {
  const auto& state = as_classical(s);
  if (m == n) {
    return state;
  }
  if (!m.disjoint_with(n)) {
    throw PreconditionFailed("exchange of overlapping attributes '" + m.id() +
                             "' and '" + n.id() + "'");
  }
  if (m.size() != n.size()) {
    throw PreconditionFailed("exchange needs equal sizes, got " +
                             std::to_string(m.size()) + " and " +
                             std::to_string(n.size()));
  }
  ClassicalState out = state;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& lm = m.members()[i];
    const auto& ln = n.members()[i];
    const double wm = state.weight_of(lm);
    const double wn = state.weight_of(ln);
    out.weights.erase(lm);
    out.weights.erase(ln);
    if (wn > 0.0) {
      out.weights[lm] = wn;
    }
    if (wm > 0.0) {
      out.weights[ln] = wm;
    }
  }
  return out;
}

}  // namespace ctcog
