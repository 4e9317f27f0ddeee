#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctcog/medium.hpp"

namespace ctcog {

enum class MediumClass { information, superinformation };
enum class InfusionLevel { low, high };

std::string to_string(MediumClass c);
std::string to_string(InfusionLevel l);

// One recorded relation "lhs <= rhs" with the verdict at the tolerance the
// producing check used.
struct InequalityRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

struct JudgementReport {
  std::map<std::string, double> values;
  std::vector<InequalityRecord> inequalities;
  std::optional<std::string> witness;
  MediumClass classification = MediumClass::information;

  bool empty() const { return values.empty() && inequalities.empty(); }
  bool all_hold() const;
};

// How judgements are evaluated: exact readout weights, or frequencies
// counted over n prepared copies.
struct JudgeMode {
  static JudgeMode exact() { return {}; }
  static JudgeMode counted(std::uint64_t n, std::uint64_t seed) {
    return {false, n, seed};
  }
  bool is_exact = true;
  std::uint64_t copies = 0;
  std::uint64_t seed = 0;
};

// Degree of belief assigned to attribute x in state s: the weight of x in
// the readout of v. Throws NotMeasurable when x is not an attribute of v.
double judge(const MediumModel& m, const MediumState& s, const Variable& v,
             const Attribute& x, const JudgeMode& mode = JudgeMode::exact());
// Same, with v looked up among the declared variables of the medium.
double judge(const MediumModel& m, const MediumState& s, const Attribute& x,
             const JudgeMode& mode = JudgeMode::exact());

// Belief in target on a medium freshly prepared holding `prepared`.
double judge_conditional(const MediumModel& m, const Attribute& prepared,
                         const Attribute& target);

// Belief that a readout of `first` succeeds and that a readout of `second`
// then succeeds on the conditioned state.
double judge_sequential(const MediumModel& m, const MediumState& s,
                        const Variable& first_var, const Attribute& first,
                        const Variable& second_var, const Attribute& second);
double judge_sequential(const MediumModel& m, const MediumState& s,
                        const Attribute& first, const Attribute& second);

// Checks J(first then second) <= min of the single beliefs, in both orders,
// for every attribute pair of v1 x v2 over the given states. Violations are
// recorded; perturbing media produce them, ensemble media cannot.
JudgementReport conjunction_check(const MediumModel& m, const Variable& v1,
                                  const Variable& v2,
                                  std::span<const MediumState> states,
                                  std::span<const std::string> state_names = {});

// Checks the implication: when every sharp conditioning of z on the affect
// variable leaves the belief in x the same (equal conditionals), that
// belief must also equal the unconditioned one. Throws NotAMixture when z
// is sharp in the affect variable.
JudgementReport independence_check(const MediumModel& m, const Attribute& x,
                                   const Variable& affect,
                                   const MediumState& z);

// Compares belief in x after preparing a with belief in a after preparing
// x. Equality within 1e-9 flags the regime where affect readings behave as
// plain information about the cognitive state.
JudgementReport symmetry_check(const MediumModel& m, const Attribute& x,
                               const Attribute& a);

// Total belief across the attributes of v selected by the predicate.
double categorize(const MediumModel& m, const MediumState& s,
                  const Variable& v,
                  const std::function<bool(const Attribute&)>& select);

// Collapses a report to an infusion level: high exactly when the report
// shows superinformation behaviour. Throws EmptyReport when the report
// carries nothing.
InfusionLevel classify_infusion(const JudgementReport& report);

}  // namespace ctcog
