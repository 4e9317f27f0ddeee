#pragma once

#include "ctcog/classical_medium.hpp"
#include "ctcog/coherent_medium.hpp"
#include "ctcog/task_algebra.hpp"

namespace ctcog {

// Angle in radians, normalized into [0, 2*pi).
class PhaseParameter {
 public:
  explicit PhaseParameter(double radians);
  double radians() const { return value_; }
  // True when the angle is k*pi within tol; k is then radians()/pi rounded.
  bool is_multiple_of_pi(double tol = 1e-12) const;

 private:
  double value_;
};

// The move task between a sharp binary variable and its balanced
// counterpart: first attribute to first attribute, second to second. Throws
// ArityError unless both variables are binary.
TaskSpec w_task_relation(const Variable& x, const Variable& a);

// The coin task: both attributes of x are sent to the union attribute, so
// the relation forgets which arm it came from and its transpose is
// multivalued.
TaskSpec coin_task_relation(const Variable& x);

// Relation of the phase rotation on the balanced variable. Only multiples
// of pi map attributes to attributes: identity at even multiples, the flip
// at odd ones. DomainMismatch elsewhere.
TaskSpec phase_task_relation(const PhaseParameter& phi, const Variable& a);

// Applies a functional relation over single-member attributes as the
// corresponding norm-preserving linear action: each input vector is sent to
// its image vector, everything orthogonal to the inputs is left alone.
CoherentState apply_relation_coherently(const CoherentMedium& m,
                                        const TaskSpec& relation,
                                        const CoherentState& s);

// Applies a relation to an ensemble state: the mass of each input attribute
// moves uniformly onto the members of its image.
ClassicalState apply_relation_classically(const ClassicalMedium& m,
                                          const TaskSpec& relation,
                                          const ClassicalState& s);

// Phase rotation between the two basis arms of a two-level medium. Leaves
// every readout in the basis variable untouched while steering readouts of
// balanced variables. Throws ClassicalMediumUnsupported on ensemble media,
// which admit relabelings only.
MediumState apply_phase(const MediumModel& m, const PhaseParameter& phi,
                        const MediumState& s);

// Readout weights of x after move, phase, move-back on a sharp x input.
// Sharp x0 inputs give [cos^2(phi/2), sin^2(phi/2)].
PartitionOfUnity interference_partition(const CoherentMedium& m,
                                        const Variable& x, const Variable& a,
                                        const PhaseParameter& phi,
                                        const Attribute& input);

bool equal_up_to_global_phase(const CoherentState& a, const CoherentState& b,
                              double tol = 1e-9);

}  // namespace ctcog
