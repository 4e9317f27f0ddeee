#pragma once

#include <string>
#include <vector>

#include "ctcog/medium.hpp"

namespace ctcog {

// Ensemble medium over a finite label set. Readout of any declared variable
// is non-perturbing on the ensemble: conditioning restricts and renormalizes
// but a full mixture over outcomes reproduces the original weights.
class ClassicalMedium final : public MediumModel {
 public:
  ClassicalMedium(std::vector<std::string> labels,
                  std::vector<Variable> variables);

  const std::vector<Variable>& variables() const override {
    return variables_;
  }
  const std::vector<std::string>& labels() const { return labels_; }

  // Uniform weights over all labels.
  ClassicalState uniform_state() const;
  // Uniform weights over the members of one attribute.
  MediumState prepare(const Attribute& a) const override;

  PartitionOfUnity exact_partition(const MediumState& s,
                                   const Variable& v) const override;
  MediumState conditioned(const MediumState& s, const Variable& v,
                          std::size_t outcome_index) const override;
  std::function<std::size_t(CounterRng&)> make_outcome_sampler(
      const MediumState& s, const Variable& v) const override;

  bool distinguishable(const Attribute& a, const Attribute& b) const override;
  double overlap(const Attribute& a, const Attribute& b) const override;

  // Disjoint attributes can always be copied and relabeled by inspecting
  // the label, so both hold for every declared variable.
  bool clone_allowed(const Variable& v) const override;
  bool permutation_allowed(const Variable& v) const override;

  MediumState apply_exchange(const MediumState& s, const Attribute& m,
                             const Attribute& n) const override;

 private:
  const ClassicalState& as_classical(const MediumState& s) const;

  std::vector<std::string> labels_;
  std::vector<Variable> variables_;
};

}  // namespace ctcog
