#pragma once

#include "ctcog/classical_medium.hpp"
#include "ctcog/coherent_medium.hpp"

namespace ctcog {

// One two-level coherent medium with a sharp variable X over the basis
// labels and an affect variable A rotated 45 degrees against it, so that
// every X attribute overlaps every A attribute with squared overlap 1/2.
struct AffectQubit {
  CoherentMedium medium;
  Variable x;
  Variable a;
  Attribute x0, x1, a_plus, a_minus;
};
AffectQubit make_affect_qubit();

// Classical counterpart where the affect readings are separate, perfectly
// distinguishable labels, so X and A extend each other without friction.
struct ClassicalAffectAnalogue {
  ClassicalMedium medium;
  Variable x;
  Variable a;
  Attribute x0, x1, a_plus, a_minus;
};
ClassicalAffectAnalogue make_classical_affect_analogue();

// Ensemble over joint labels (x, a) with the two marginal variables. Used
// for mixtures that correlate a sharp reading with an affect reading.
struct ClassicalAffectPair {
  ClassicalMedium medium;
  Variable x;
  Variable a;
};
ClassicalAffectPair make_classical_affect_pair();

// Ten-label ensemble with x0 = {s0..s2} and a_plus = {s0..s4}: conditioning
// one way is certain while the other way is not, so conditional judgements
// come out asymmetric.
struct SymmetryCounterexample {
  ClassicalMedium medium;
  Variable x;
  Variable a;
  Attribute x0, a_plus;
};
SymmetryCounterexample make_symmetry_counterexample();

// Two affect registers. candidate_shared_state is the maximally correlated
// two-register state; swap_registers exchanges the registers. This is a
// hook for inspecting pair-swap behaviour, not a certified construction.
struct AffectQubitPair {
  CoherentMedium medium;
  Variable x_first;
  Variable x_second;
  Variable a_first;
  Variable a_second;
  CoherentState candidate_shared_state;
};
AffectQubitPair make_affect_qubit_pair();

CoherentState swap_registers(const CoherentState& s);

// cos(theta/2)|x0> + e^{i phase} sin(theta/2)|x1> on a two-level medium.
CoherentState theta_state(const CoherentMedium& m, double theta,
                          double phase = 0.0);

}  // namespace ctcog
