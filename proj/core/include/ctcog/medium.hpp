#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ctcog/partition.hpp"
#include "ctcog/rng.hpp"
#include "ctcog/task_algebra.hpp"

namespace ctcog {

// Ensemble state of a classical medium: weights over state labels, summing
// to 1 within 1e-12.
struct ClassicalState {
  std::map<std::string, double> weights;

  // Weight of a label, 0 when absent.
  double weight_of(const std::string& label) const;
  // True when a single label carries weight 1 within tol.
  bool sharp(double tol = 1e-12) const;
  // Throws ArityError when weights are negative or do not sum to 1.
  void validate() const;
};

// Normalized weight vector over the given labels.
ClassicalState make_classical_state(std::map<std::string, double> weights);

// State of a two-level coherent medium or a register of them: a unit vector
// of 2^n complex amplitudes. basis_tags[i], when nonempty, names the medium
// label realized by basis index i.
struct CoherentState {
  std::vector<std::complex<double>> amplitudes;
  std::vector<std::string> basis_tags;

  std::size_t dim() const { return amplitudes.size(); }
  // Throws ArityError when the norm is off 1 by more than 1e-12 or the
  // dimension is not a power of two.
  void validate() const;
};

using MediumState = std::variant<ClassicalState, CoherentState>;

struct MeasurementResult {
  std::size_t outcome_index;  // index into the measured variable
  MediumState post;           // state after the readout
};

// What a substrate must provide for judgement and counting experiments:
// preparation, readout statistics, sampling, and the possibility structure
// (which attributes are distinguishable, which variables support copying
// and relabeling).
class MediumModel {
 public:
  virtual ~MediumModel() = default;

  virtual const std::vector<Variable>& variables() const = 0;
  // Declared variable owning this attribute. Throws NotMeasurable when the
  // attribute is not part of any declared variable.
  const Variable& variable_of(const Attribute& a) const;

  virtual MediumState prepare(const Attribute& a) const = 0;

  // Exact readout weights of v in this state. Throws NotMeasurable when the
  // attributes of v do not account for the state.
  virtual PartitionOfUnity exact_partition(const MediumState& s,
                                           const Variable& v) const = 0;

  // State after conditioning on outcome index i of v. Throws
  // PreconditionFailed when that outcome has zero weight.
  virtual MediumState conditioned(const MediumState& s, const Variable& v,
                                  std::size_t outcome_index) const = 0;

  // Precomputed single-outcome sampler for repeated draws from the readout
  // statistics of v in s. The returned closure owns everything it needs.
  virtual std::function<std::size_t(CounterRng&)> make_outcome_sampler(
      const MediumState& s, const Variable& v) const = 0;

  // One readout: samples an outcome and conditions the state on it.
  MeasurementResult measure(const MediumState& s, const Variable& v,
                            CounterRng& rng) const;

  // True when the media can separate a from b with certainty.
  virtual bool distinguishable(const Attribute& a,
                               const Attribute& b) const = 0;
  // Squared overlap in [0, 1]; 0 means distinguishable, 1 means identical.
  virtual double overlap(const Attribute& a, const Attribute& b) const = 0;

  // Whether the medium admits a constructor copying every attribute of v
  // onto a receptive instance.
  virtual bool clone_allowed(const Variable& v) const = 0;
  // Whether every relabeling of the attributes of v is realizable.
  virtual bool permutation_allowed(const Variable& v) const = 0;

  // Applies the two-attribute exchange m <-> n to a state. Throws
  // PreconditionFailed when the exchange is not realizable on this medium.
  virtual MediumState apply_exchange(const MediumState& s, const Attribute& m,
                                     const Attribute& n) const = 0;
};

}  // namespace ctcog
