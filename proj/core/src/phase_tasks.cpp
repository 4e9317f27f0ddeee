#include "ctcog/phase_tasks.hpp"

#include <cmath>
#include <numbers>

#include "ctcog/errors.hpp"

namespace ctcog {

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;
}

PhaseParameter::PhaseParameter(double radians) : value_(std::fmod(radians, kTau)) {
  if (value_ < 0.0) {
    value_ += kTau;
  }
  if (value_ >= kTau) {
    value_ = 0.0;
  }
}

bool PhaseParameter::is_multiple_of_pi(double tol) const {
  const double k = std::round(value_ / std::numbers::pi);
  return std::abs(value_ - k * std::numbers::pi) <= tol;
}

namespace {
void require_binary(const Variable& v, const char* role) {
  if (!v.is_binary()) {
    throw ArityError(std::string(role) + " variable '" + v.id() +
                     "' is not binary");
  }
}
}  // namespace

TaskSpec w_task_relation(const Variable& x, const Variable& a) {
  require_binary(x, "sharp");
  require_binary(a, "balanced");
  return TaskSpec::from_pairs({{x.at(0), a.at(0)}, {x.at(1), a.at(1)}});
}

TaskSpec coin_task_relation(const Variable& x) {
  require_binary(x, "sharp");
  const Attribute mu = union_attribute(x);
  return TaskSpec::from_pairs({{x.at(0), mu}, {x.at(1), mu}});
}

TaskSpec phase_task_relation(const PhaseParameter& phi, const Variable& a) {
  require_binary(a, "balanced");
  if (!phi.is_multiple_of_pi()) {
    throw DomainMismatch(
        "phase rotation maps attributes to attributes only at multiples of "
        "pi; got " +
        std::to_string(phi.radians()) + " rad");
  }
  const long k = std::lround(phi.radians() / std::numbers::pi);
  return (k % 2 == 0) ? identity_task(a) : swap_task(a);
}

CoherentState apply_relation_coherently(const CoherentMedium& m,
                                        const TaskSpec& relation,
                                        const CoherentState& s) {
  if (!relation.functional()) {
    throw PreconditionFailed("relation is multivalued; no linear action");
  }
  using C = std::complex<double>;
  std::vector<const Amplitudes*> ins;
  std::vector<const Amplitudes*> outs;
  for (const auto& [in, out] : relation.pairs()) {
    if (in.size() != 1 || out.size() != 1) {
      throw PreconditionFailed(
          "only single-member attributes have a coherent action; got '" +
          in.id() + "' -> '" + out.id() + "'");
    }
    ins.push_back(&m.vector_of(in.members().front()));
    outs.push_back(&m.vector_of(out.members().front()));
  }
  for (std::size_t i = 0; i < ins.size(); ++i) {
    for (std::size_t j = i + 1; j < ins.size(); ++j) {
      if (std::abs(inner(*ins[i], *ins[j])) > 1e-9 ||
          std::abs(inner(*outs[i], *outs[j])) > 1e-9) {
        throw PreconditionFailed(
            "relation endpoints are not orthonormal; no isometric action");
      }
    }
  }

  Amplitudes result = s.amplitudes;
  for (std::size_t k = 0; k < ins.size(); ++k) {
    const C c = inner(*ins[k], s.amplitudes);
    for (std::size_t i = 0; i < result.size(); ++i) {
      result[i] += c * ((*outs[k])[i] - (*ins[k])[i]);
    }
  }
  return CoherentState{std::move(result), s.basis_tags};
}

ClassicalState apply_relation_classically(const ClassicalMedium& m,
                                          const TaskSpec& relation,
                                          const ClassicalState& s) {
  std::map<std::string, double> out_weights;
  double moved = 0.0;
  for (const auto& [in, out] : relation.pairs()) {
    double mass = 0.0;
    for (const auto& label : in.members()) {
      mass += s.weight_of(label);
    }
    if (mass == 0.0) {
      continue;
    }
    moved += mass;
    const double share = mass / static_cast<double>(out.size());
    for (const auto& label : out.members()) {
      out_weights[label] += share;
    }
  }
  if (std::abs(moved - 1.0) > 1e-9) {
    throw DomainMismatch("relation is undefined on weight " +
                         std::to_string(1.0 - moved) + " of the state");
  }
  return ClassicalState{std::move(out_weights)};
}

MediumState apply_phase(const MediumModel& m, const PhaseParameter& phi,
                        const MediumState& s) {
  const auto* coherent = dynamic_cast<const CoherentMedium*>(&m);
  if (coherent == nullptr) {
    throw ClassicalMediumUnsupported(
        "ensemble media admit relabelings only; a phase between arms has "
        "nothing to act on");
  }
  if (coherent->dim() != 2) {
    throw ArityError("phase rotation is defined on a two-level medium");
  }
  const auto* cs = std::get_if<CoherentState>(&s);
  if (cs == nullptr) {
    throw PreconditionFailed("coherent medium got a classical state");
  }
  CoherentState out = *cs;
  out.amplitudes[1] *= std::polar(1.0, phi.radians());
  return out;
}

PartitionOfUnity interference_partition(const CoherentMedium& m,
                                        const Variable& x, const Variable& a,
                                        const PhaseParameter& phi,
                                        const Attribute& input) {
  if (!x.contains(input)) {
    throw DomainMismatch("input '" + input.id() + "' is not an attribute of '" +
                         x.id() + "'");
  }
  const auto move = w_task_relation(x, a);
  const auto back = transpose(move);
  auto state = std::get<CoherentState>(m.prepare(input));
  state = apply_relation_coherently(m, move, state);
  state = std::get<CoherentState>(apply_phase(m, phi, state));
  state = apply_relation_coherently(m, back, state);
  return m.exact_partition(state, x);
}

bool equal_up_to_global_phase(const CoherentState& a, const CoherentState& b,
                              double tol) {
  if (a.dim() != b.dim()) {
    return false;
  }
  return std::abs(inner(a.amplitudes, b.amplitudes)) >= 1.0 - tol;
}

}  // namespace ctcog
