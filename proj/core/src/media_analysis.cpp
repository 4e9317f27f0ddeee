#include "ctcog/media_analysis.hpp"

#include <cmath>

#include "ctcog/errors.hpp"

namespace ctcog {

namespace {
constexpr double kTol = 1e-9;
}

PartitionOfUnity counting_task(const MediumModel& m, const MediumState& s,
                               const Variable& v, std::uint64_t n,
                               std::uint64_t seed) {
  if (n == 0) {
    throw PreconditionFailed("counting needs at least one copy");
  }
  auto sampler = m.make_outcome_sampler(s, v);
  std::vector<std::uint64_t> counts(v.size(), 0);
  for (std::uint64_t k = 0; k < n; ++k) {
    CounterRng rng(seed, k);
    ++counts[sampler(rng)];
  }
  std::vector<std::string> ids;
  std::vector<double> values;
  ids.reserve(v.size());
  values.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ids.push_back(v.at(i).id());
    values.push_back(static_cast<double>(counts[i]) / static_cast<double>(n));
  }
  return PartitionOfUnity(std::move(ids), std::move(values));
}

bool is_information_variable(const MediumModel& m, const Variable& v) {
  return m.permutation_allowed(v) && m.clone_allowed(v);
}

SuperinformationEvidence detect_superinformation(const MediumModel& m,
                                                 const Variable& v1,
                                                 const Variable& v2) {
  for (const auto& p : v1.attributes()) {
    for (const auto& q : v2.attributes()) {
      if (!p.disjoint_with(q)) {
        throw PreconditionFailed("attributes '" + p.id() + "' and '" + q.id() +
                                 "' share labels; the variables do not "
                                 "describe separate readings");
      }
    }
  }
  for (const Variable* v : {&v1, &v2}) {
    if (!is_information_variable(m, *v)) {
      throw PreconditionFailed("variable '" + v->id() +
                               "' is not an information variable");
    }
  }

  std::vector<Attribute> merged = v1.attributes();
  merged.insert(merged.end(), v2.attributes().begin(), v2.attributes().end());
  const Variable unioned(v1.id() + "+" + v2.id(), std::move(merged));

  SuperinformationEvidence ev;
  ev.superinformation = !is_information_variable(m, unioned);
  for (const auto& p : v1.attributes()) {
    for (const auto& q : v2.attributes()) {
      if (!m.distinguishable(p, q)) {
        ev.first_attribute = p.id();
        ev.second_attribute = q.id();
        ev.overlap = m.overlap(p, q);
        break;
      }
    }
    if (!ev.first_attribute.empty()) {
      break;
    }
  }
  if (ev.superinformation) {
    ev.reason = "union of '" + v1.id() + "' and '" + v2.id() +
                "' is not an information variable";
    if (!ev.first_attribute.empty()) {
      ev.reason += ": '" + ev.first_attribute + "' and '" +
                   ev.second_attribute + "' cannot be separated";
    }
  } else {
    ev.reason = "union of '" + v1.id() + "' and '" + v2.id() +
                "' is an information variable";
  }
  return ev;
}

std::optional<PartitionOfUnity> attribute_partition(const MediumModel& m,
                                                    const Attribute& a,
                                                    const Variable& target,
                                                    double tol) {
  std::optional<PartitionOfUnity> common;
  for (const auto& label : a.members()) {
    std::optional<PartitionOfUnity> p;
    try {
      const Attribute point(label, {label});
      p = m.exact_partition(m.prepare(point), target);
    } catch (const Error&) {
      return std::nullopt;
    }
    if (!common) {
      common = std::move(p);
      continue;
    }
    for (std::size_t i = 0; i < common->size(); ++i) {
      if (std::abs((*common)[i] - (*p)[i]) > tol) {
        return std::nullopt;
      }
    }
  }
  return common;
}

namespace {

// One direction of the exchange condition: the flip of `flipped` must send
// each attribute of `kept` to itself.
bool exchange_direction(const MediumModel& m, const Variable& flipped,
                        const Variable& kept, DecisionConditionsReport& report) {
  bool ok = true;
  for (const auto& b : kept.attributes()) {
    for (const auto& label : b.members()) {
      MediumState moved;
      try {
        moved = m.apply_exchange(m.prepare(Attribute(label, {label})),
                                 flipped.at(0), flipped.at(1));
      } catch (const Error& e) {
        report.notes.emplace_back("exchange of '" + flipped.id() +
                                  "' unavailable: " + e.what());
        return false;
      }
      double stay = 0.0;
      try {
        stay = m.exact_partition(moved, kept).value_of(b.id());
      } catch (const Error&) {
        stay = 0.0;
      }
      report.values["stay[" + b.id() + "|flip " + flipped.id() + "]"] = stay;
      if (stay < 1.0 - kTol) {
        ok = false;
      }
    }
  }
  return ok;
}

}  // namespace

DecisionConditionsReport check_decision_conditions(const MediumModel& m,
                                                   const Variable& x,
                                                   const Variable& a) {
  if (!x.is_binary() || !a.is_binary()) {
    throw NonBinary("decision conditions are defined for binary variables");
  }
  DecisionConditionsReport report;

  report.unsharp_cross_readout = true;
  report.equal_weights = true;
  for (const auto* from : {&x, &a}) {
    const Variable& to = (from == &x) ? a : x;
    for (const auto& attr : from->attributes()) {
      const auto p = attribute_partition(m, attr, to);
      if (!p) {
        report.unsharp_cross_readout = false;
        report.equal_weights = false;
        report.notes.emplace_back("readout of '" + to.id() + "' on '" +
                                  attr.id() + "' is not a fixed partition");
        continue;
      }
      const double expected = 1.0 / static_cast<double>(to.size());
      for (std::size_t i = 0; i < p->size(); ++i) {
        report.values["f[" + to.at(i).id() + "|" + attr.id() + "]"] = (*p)[i];
        if (std::abs((*p)[i] - expected) > kTol) {
          report.equal_weights = false;
        }
      }
      if (p->is_sharp(kTol)) {
        report.unsharp_cross_readout = false;
        report.notes.emplace_back("readout of '" + to.id() + "' on '" +
                                  attr.id() + "' is sharp");
      }
    }
  }

  report.exchange_fixes_other = exchange_direction(m, x, a, report) &&
                                exchange_direction(m, a, x, report);
  return report;
}

}  // namespace ctcog
