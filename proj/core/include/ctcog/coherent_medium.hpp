#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "ctcog/medium.hpp"

namespace ctcog {

using Amplitudes = std::vector<std::complex<double>>;

std::complex<double> inner(const Amplitudes& u, const Amplitudes& v);

// Two-level (or register-of-two-level) medium whose labels name unit
// vectors. Attributes designate subspaces spanned by their member vectors;
// readout of a variable is projective, so conditioning perturbs states that
// are not already sharp in it. Distinguishability is vector orthogonality,
// which is what separates this medium from the classical ensemble one:
// distinct labels need not be distinguishable.
class CoherentMedium final : public MediumModel {
 public:
  CoherentMedium(std::size_t dim,
                 std::map<std::string, Amplitudes> label_vectors,
                 std::vector<Variable> variables,
                 std::vector<std::string> basis_tags = {});

  const std::vector<Variable>& variables() const override {
    return variables_;
  }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_tags() const { return basis_tags_; }

  const Amplitudes& vector_of(const std::string& label) const;
  CoherentState state_of_label(const std::string& label) const;
  CoherentState state_from_amplitudes(Amplitudes a) const;

  // Only single-member attributes name a state. Throws NotPreparable for
  // subspace attributes and unknown labels.
  MediumState prepare(const Attribute& a) const override;

  PartitionOfUnity exact_partition(const MediumState& s,
                                   const Variable& v) const override;
  MediumState conditioned(const MediumState& s, const Variable& v,
                          std::size_t outcome_index) const override;
  std::function<std::size_t(CounterRng&)> make_outcome_sampler(
      const MediumState& s, const Variable& v) const override;

  bool distinguishable(const Attribute& a, const Attribute& b) const override;
  // Largest squared inner product between member vectors of a and b.
  double overlap(const Attribute& a, const Attribute& b) const override;

  // Copying needs pairwise distinguishable attributes.
  bool clone_allowed(const Variable& v) const override;
  // Every relabeling is realizable exactly when the pairwise overlaps of the
  // attributes of v are all equal, so that some unitary can permute them.
  bool permutation_allowed(const Variable& v) const override;

  MediumState apply_exchange(const MediumState& s, const Attribute& m,
                             const Attribute& n) const override;

 private:
  const CoherentState& as_coherent(const MediumState& s) const;
  // Squared norm of the projection of psi onto the span of a's members.
  double projection_mass(const Amplitudes& psi, const Attribute& a) const;

  std::size_t dim_;
  std::map<std::string, Amplitudes> label_vectors_;
  std::vector<Variable> variables_;
  std::vector<std::string> basis_tags_;
};

}  // namespace ctcog
