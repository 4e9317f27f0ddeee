#include "ctcog/judgement.hpp"

#include <algorithm>
#include <cmath>

#include "ctcog/classical_medium.hpp"
#include "ctcog/errors.hpp"
#include "ctcog/media_analysis.hpp"

namespace ctcog {

namespace {
constexpr double kTol = 1e-9;
constexpr double kEnsembleTol = 1e-12;

InequalityRecord record(std::string name, double lhs, double rhs, double tol) {
  return InequalityRecord{std::move(name), lhs, rhs, lhs <= rhs + tol};
}
}  // namespace

std::string to_string(MediumClass c) {
  return c == MediumClass::information ? "information" : "superinformation";
}

std::string to_string(InfusionLevel l) {
  return l == InfusionLevel::low ? "low" : "high";
}

bool JudgementReport::all_hold() const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [](const InequalityRecord& r) { return r.holds; });
}

double judge(const MediumModel& m, const MediumState& s, const Variable& v,
             const Attribute& x, const JudgeMode& mode) {
  const auto idx = v.index_of(x);
  if (!idx) {
    throw NotMeasurable("attribute '" + x.id() + "' is not part of '" +
                        v.id() + "'");
  }
  const auto p = mode.is_exact
                     ? m.exact_partition(s, v)
                     : counting_task(m, s, v, mode.copies, mode.seed);
  return p[*idx];
}

double judge(const MediumModel& m, const MediumState& s, const Attribute& x,
             const JudgeMode& mode) {
  return judge(m, s, m.variable_of(x), x, mode);
}

double judge_conditional(const MediumModel& m, const Attribute& prepared,
                         const Attribute& target) {
  return judge(m, m.prepare(prepared), target);
}

double judge_sequential(const MediumModel& m, const MediumState& s,
                        const Variable& first_var, const Attribute& first,
                        const Variable& second_var, const Attribute& second) {
  const auto idx = first_var.index_of(first);
  if (!idx) {
    throw NotMeasurable("attribute '" + first.id() + "' is not part of '" +
                        first_var.id() + "'");
  }
  const double f1 = judge(m, s, first_var, first);
  if (f1 <= kEnsembleTol) {
    return 0.0;
  }
  const auto post = m.conditioned(s, first_var, *idx);
  return f1 * judge(m, post, second_var, second);
}

double judge_sequential(const MediumModel& m, const MediumState& s,
                        const Attribute& first, const Attribute& second) {
  return judge_sequential(m, s, m.variable_of(first), first,
                          m.variable_of(second), second);
}

JudgementReport conjunction_check(const MediumModel& m, const Variable& v1,
                                  const Variable& v2,
                                  std::span<const MediumState> states,
                                  std::span<const std::string> state_names) {
  const bool verbose = states.size() <= 4;
  JudgementReport report;
  std::size_t checked = 0;
  std::size_t violations = 0;

  for (std::size_t k = 0; k < states.size(); ++k) {
    const auto& s = states[k];
    const std::string name = k < state_names.size()
                                 ? state_names[k]
                                 : "state#" + std::to_string(k);
    for (const auto& x : v1.attributes()) {
      for (const auto& y : v2.attributes()) {
        const double jx = judge(m, s, v1, x);
        const double jy = judge(m, s, v2, y);
        const double mn = std::min(jx, jy);
        for (const auto& [label, seq] :
             {std::pair{x.id() + " then " + y.id(),
                        judge_sequential(m, s, v1, x, v2, y)},
              std::pair{y.id() + " then " + x.id(),
                        judge_sequential(m, s, v2, y, v1, x)}}) {
          ++checked;
          auto rec = record("J(" + label + ") <= min @ " + name, seq, mn,
                            kEnsembleTol);
          if (!rec.holds) {
            ++violations;
            if (!report.witness) {
              report.witness = name + ": J(" + label + ") = " +
                               std::to_string(seq) + " exceeds min(" +
                               std::to_string(jx) + ", " +
                               std::to_string(jy) + ")";
              report.values["witness_excess"] = seq - mn;
            }
          }
          if (verbose || !rec.holds) {
            report.inequalities.push_back(std::move(rec));
          }
        }
        if (verbose) {
          report.values["J(" + x.id() + ") @ " + name] = jx;
          report.values["J(" + y.id() + ") @ " + name] = jy;
        }
      }
    }
  }
  report.values["pairs_checked"] = static_cast<double>(checked);
  report.values["violations"] = static_cast<double>(violations);
  report.classification = violations == 0 ? MediumClass::information
                                          : MediumClass::superinformation;
  return report;
}

JudgementReport independence_check(const MediumModel& m, const Attribute& x,
                                   const Variable& affect,
                                   const MediumState& z) {
  const auto pz = m.exact_partition(z, affect);
  if (pz.is_sharp(kTol)) {
    throw NotAMixture("state is sharp in '" + affect.id() +
                      "'; conditioning needs a genuine mixture");
  }
  JudgementReport report;
  const double baseline = judge(m, z, x);
  report.values["J(" + x.id() + "|given state)"] = baseline;

  double lo = 1.0;
  double hi = 0.0;
  double deviation = 0.0;
  for (std::size_t i = 0; i < affect.size(); ++i) {
    if (pz[i] <= kEnsembleTol) {
      continue;
    }
    const double ji = judge(m, m.conditioned(z, affect, i), x);
    report.values["J(" + x.id() + "|" + affect.at(i).id() + ")"] = ji;
    lo = std::min(lo, ji);
    hi = std::max(hi, ji);
    deviation = std::max(deviation, std::abs(ji - baseline));
  }
  const double spread = std::max(0.0, hi - lo);
  const bool equal_conditionals = spread <= kTol;
  const bool unchanged = deviation <= kTol;
  const bool violated = equal_conditionals && !unchanged;

  report.inequalities.push_back(
      record("equal conditionals: spread <= tol", spread, kTol, 0.0));
  report.inequalities.push_back(
      record("conditioning-free: |J(x|a) - J(x|z)| <= tol", deviation, kTol,
             0.0));
  report.inequalities.push_back(record(
      "independence: equal conditionals imply conditioning-free",
      violated ? 1.0 : 0.0, 0.0, 0.0));
  if (violated) {
    report.witness = "all conditionals agree at " + std::to_string(lo) +
                     " yet the unconditioned belief is " +
                     std::to_string(baseline);
  }
  report.classification =
      violated ? MediumClass::superinformation : MediumClass::information;
  return report;
}

JudgementReport symmetry_check(const MediumModel& m, const Attribute& x,
                               const Attribute& a) {
  JudgementReport report;
  const double jxa = judge_conditional(m, a, x);
  const double jax = judge_conditional(m, x, a);
  report.values["J(" + x.id() + "|" + a.id() + ")"] = jxa;
  report.values["J(" + a.id() + "|" + x.id() + ")"] = jax;
  if (const auto* cm = dynamic_cast<const ClassicalMedium*>(&m)) {
    const MediumState uniform = cm->uniform_state();
    report.values["J(" + x.id() + ")"] = judge(m, uniform, x);
    report.values["J(" + a.id() + ")"] = judge(m, uniform, a);
  }
  const double gap = std::abs(jxa - jax);
  report.inequalities.push_back(
      record("symmetry: |J(x|a) - J(a|x)| <= tol", gap, kTol, 0.0));
  const bool symmetric = gap <= kTol;
  if (symmetric) {
    report.witness = "conditioning either way gives " + std::to_string(jxa);
  }
  report.classification =
      symmetric ? MediumClass::superinformation : MediumClass::information;
  return report;
}

double categorize(const MediumModel& m, const MediumState& s,
                  const Variable& v,
                  const std::function<bool(const Attribute&)>& select) {
  const auto p = m.exact_partition(s, v);
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (select(v.at(i))) {
      total += p[i];
    }
  }
  return total;
}

InfusionLevel classify_infusion(const JudgementReport& report) {
  if (report.empty()) {
    throw EmptyReport("judgement report carries no values or inequalities");
  }
  return report.classification == MediumClass::superinformation
             ? InfusionLevel::high
             : InfusionLevel::low;
}

}  // namespace ctcog
