#include "ctcog/coherent_medium.hpp"

#include <algorithm>
#include <cmath>

#include "ctcog/errors.hpp"

namespace ctcog {

namespace {
constexpr double kTol = 1e-9;

double norm2(const Amplitudes& v) {
  double s = 0.0;
  for (const auto& a : v) {
    s += std::norm(a);
  }
  return s;
}
}  // namespace

std::complex<double> inner(const Amplitudes& u, const Amplitudes& v) {
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    s += std::conj(u[i]) * v[i];
  }
  return s;
}

CoherentMedium::CoherentMedium(std::size_t dim,
                               std::map<std::string, Amplitudes> label_vectors,
                               std::vector<Variable> variables,
                               std::vector<std::string> basis_tags)
    : dim_(dim),
      label_vectors_(std::move(label_vectors)),
      variables_(std::move(variables)),
      basis_tags_(std::move(basis_tags)) {
  if (dim_ == 0 || (dim_ & (dim_ - 1)) != 0) {
    throw ArityError("medium dimension " + std::to_string(dim_) +
                     " is not a power of two");
  }
  for (const auto& [label, vec] : label_vectors_) {
    if (vec.size() != dim_) {
      throw ArityError("vector for label '" + label + "' has dimension " +
                       std::to_string(vec.size()));
    }
    if (std::abs(norm2(vec) - 1.0) > kTol) {
      throw ArityError("vector for label '" + label + "' is not a unit vector");
    }
  }
  for (const auto& v : variables_) {
    for (const auto& a : v.attributes()) {
      const auto& members = a.members();
      for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& ui = vector_of(members[i]);
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          if (std::abs(inner(ui, vector_of(members[j]))) > kTol) {
            throw ArityError("attribute '" + a.id() +
                             "' members are not orthonormal");
          }
        }
      }
    }
    // Attributes of one variable must span mutually orthogonal subspaces,
    // otherwise readout masses would not sum to one.
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        for (const auto& mi : v.at(i).members()) {
          for (const auto& mj : v.at(j).members()) {
            if (std::abs(inner(vector_of(mi), vector_of(mj))) > kTol) {
              throw ArityError("variable '" + v.id() + "' attributes '" +
                               v.at(i).id() + "' and '" + v.at(j).id() +
                               "' are not orthogonal");
            }
          }
        }
      }
    }
  }
  if (!basis_tags_.empty()) {
    if (basis_tags_.size() != dim_) {
      throw ArityError("basis tags cover " +
                       std::to_string(basis_tags_.size()) + " of " +
                       std::to_string(dim_) + " indices");
    }
    for (const auto& tag : basis_tags_) {
      if (!tag.empty()) {
        vector_of(tag);
      }
    }
  }
}

const Amplitudes& CoherentMedium::vector_of(const std::string& label) const {
  auto it = label_vectors_.find(label);
  if (it == label_vectors_.end()) {
    throw NotPreparable("medium has no vector for label '" + label + "'");
  }
  return it->second;
}

CoherentState CoherentMedium::state_of_label(const std::string& label) const {
  return CoherentState{vector_of(label), basis_tags_};
}

CoherentState CoherentMedium::state_from_amplitudes(Amplitudes a) const {
  CoherentState s{std::move(a), basis_tags_};
  if (s.amplitudes.size() != dim_) {
    throw ArityError("state dimension " + std::to_string(s.amplitudes.size()) +
                     " does not match medium dimension " +
                     std::to_string(dim_));
  }
  s.validate();
  return s;
}

const CoherentState& CoherentMedium::as_coherent(const MediumState& s) const {
  const auto* c = std::get_if<CoherentState>(&s);
  if (c == nullptr) {
    throw PreconditionFailed("coherent medium got a classical state");
  }
  if (c->dim() != dim_) {
    throw PreconditionFailed("state dimension " + std::to_string(c->dim()) +
                             " does not match medium dimension " +
                             std::to_string(dim_));
  }
  return *c;
}

double CoherentMedium::projection_mass(const Amplitudes& psi,
                                       const Attribute& a) const {
  double mass = 0.0;
  for (const auto& m : a.members()) {
    mass += std::norm(inner(vector_of(m), psi));
  }
  return mass;
}

MediumState CoherentMedium::prepare(const Attribute& a) const {
  if (a.size() != 1) {
    throw NotPreparable("attribute '" + a.id() +
                        "' designates a subspace, not a state");
  }
  return state_of_label(a.members().front());
}

PartitionOfUnity CoherentMedium::exact_partition(const MediumState& s,
                                                 const Variable& v) const {
  const auto& state = as_coherent(s);
  std::vector<std::string> ids;
  std::vector<double> values;
  double covered = 0.0;
  for (const auto& a : v.attributes()) {
    const double f = projection_mass(state.amplitudes, a);
    ids.push_back(a.id());
    values.push_back(f);
    covered += f;
  }
  if (std::abs(covered - 1.0) > kTol) {
    throw NotMeasurable("attributes of '" + v.id() +
                        "' capture squared weight " + std::to_string(covered) +
                        " of the state");
  }
  // Clamp the rounding dust so downstream partition checks see exact weights.
  for (auto& f : values) {
    f = std::clamp(f, 0.0, 1.0);
  }
  return PartitionOfUnity(std::move(ids), std::move(values));
}

MediumState CoherentMedium::conditioned(const MediumState& s,
                                        const Variable& v,
                                        std::size_t outcome_index) const {
  const auto& state = as_coherent(s);
  const Attribute& a = v.at(outcome_index);
  Amplitudes projected(dim_, 0.0);
  for (const auto& m : a.members()) {
    const auto& u = vector_of(m);
    const auto c = inner(u, state.amplitudes);
    for (std::size_t i = 0; i < dim_; ++i) {
      projected[i] += c * u[i];
    }
  }
  const double mass = norm2(projected);
  if (mass <= kTol) {
    throw PreconditionFailed("outcome '" + a.id() + "' has zero weight");
  }
  const double scale = 1.0 / std::sqrt(mass);
  for (auto& amp : projected) {
    amp *= scale;
  }
  return CoherentState{std::move(projected), state.basis_tags};
}

std::function<std::size_t(CounterRng&)> CoherentMedium::make_outcome_sampler(
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

bool CoherentMedium::distinguishable(const Attribute& a,
                                     const Attribute& b) const {
  return overlap(a, b) <= kTol;
}

double CoherentMedium::overlap(const Attribute& a, const Attribute& b) const {
  double worst = 0.0;
  for (const auto& ma : a.members()) {
    const auto& u = vector_of(ma);
    for (const auto& mb : b.members()) {
      worst = std::max(worst, std::norm(inner(u, vector_of(mb))));
    }
  }
  return worst;
}

bool CoherentMedium::clone_allowed(const Variable& v) const {
  const auto& attrs = v.attributes();
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    for (std::size_t j = i + 1; j < attrs.size(); ++j) {
      if (!distinguishable(attrs[i], attrs[j])) {
        return false;
      }
    }
  }
  return true;
}

bool CoherentMedium::permutation_allowed(const Variable& v) const {
  const auto& attrs = v.attributes();
  double lo = 1.0;
  double hi = 0.0;
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    for (std::size_t j = i + 1; j < attrs.size(); ++j) {
      const double o = overlap(attrs[i], attrs[j]);
      lo = std::min(lo, o);
      hi = std::max(hi, o);
    }
  }
  return attrs.size() < 2 || hi - lo <= kTol;
}

MediumState CoherentMedium::apply_exchange(const MediumState& s,
                                           const Attribute& m,
                                           const Attribute& n) const {
  const auto& state = as_coherent(s);
  if (m == n) {
    return state;
  }
  if (m.size() != n.size()) {
    throw PreconditionFailed("exchange needs equal sizes, got " +
                             std::to_string(m.size()) + " and " +
                             std::to_string(n.size()));
  }
  if (overlap(m, n) > kTol) {
    throw PreconditionFailed("exchange of non-orthogonal attributes '" +
                             m.id() + "' and '" + n.id() + "'");
  }
  Amplitudes out = state.amplitudes;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const auto& u = vector_of(m.members()[k]);
    const auto& w = vector_of(n.members()[k]);
    const auto cu = inner(u, state.amplitudes);
    const auto cw = inner(w, state.amplitudes);
    for (std::size_t i = 0; i < dim_; ++i) {
      out[i] += (cw - cu) * u[i] + (cu - cw) * w[i];
    }
  }
  return CoherentState{std::move(out), state.basis_tags};
}

}  // namespace ctcog
