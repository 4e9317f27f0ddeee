#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctcog/medium.hpp"

namespace ctcog {

// Empirical readout frequencies of v over n independently prepared copies
// of s. Copy k draws from its own counter stream derived from (seed, k), so
// the result is reproducible and independent of evaluation order. Throws
// PreconditionFailed when n is zero and NotMeasurable when the medium cannot
// read v in this state.
PartitionOfUnity counting_task(const MediumModel& m, const MediumState& s,
                               const Variable& v, std::uint64_t n,
                               std::uint64_t seed);

// A variable whose attributes support both copying and every relabeling.
bool is_information_variable(const MediumModel& m, const Variable& v);

struct SuperinformationEvidence {
  bool superinformation = false;
  // First cross pair that cannot be separated, when one exists.
  std::string first_attribute;
  std::string second_attribute;
  double overlap = 0.0;
  std::string reason;
};

// Checks whether two individually well-behaved variables refuse to merge:
// both must be information variables with pairwise disjoint label sets
// across them (PreconditionFailed otherwise), and the verdict is whether
// their union fails to be an information variable.
SuperinformationEvidence detect_superinformation(const MediumModel& m,
                                                 const Variable& v1,
                                                 const Variable& v2);

// Readout weights of target shared by every member state of a. Returns
// nullopt when some member cannot be read in target or members disagree
// beyond tol.
std::optional<PartitionOfUnity> attribute_partition(const MediumModel& m,
                                                    const Attribute& a,
                                                    const Variable& target,
                                                    double tol = 1e-9);

// The three numeric conditions a binary pair (x, a) must meet for the
// second variable to act as a decision weight for the first.
struct DecisionConditionsReport {
  // Every attribute of each variable induces one well-defined, non-sharp
  // readout of the other variable.
  bool unsharp_cross_readout = false;
  // The two-attribute exchange on either variable maps each attribute of
  // the other one to itself.
  bool exchange_fixes_other = false;
  // The induced readouts are uniform.
  bool equal_weights = false;

  std::map<std::string, double> values;
  std::vector<std::string> notes;

  bool all() const {
    return unsharp_cross_readout && exchange_fixes_other && equal_weights;
  }
};

// Evaluates the decision conditions for binary variables x and a. Throws
// NonBinary unless both are binary.
DecisionConditionsReport check_decision_conditions(const MediumModel& m,
                                                   const Variable& x,
                                                   const Variable& a);

}  // namespace ctcog
