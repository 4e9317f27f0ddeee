#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ctcog {

// A named set of substrate state labels. Members are stored sorted and
// deduplicated, and identity is the member set: two attributes with
// different ids but the same members compare equal. The id is a display
// name only.
class Attribute {
 public:
  Attribute(std::string id, std::vector<std::string> members);

  const std::string& id() const { return id_; }
  const std::vector<std::string>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(const std::string& label) const;
  bool subset_of(const Attribute& other) const;
  bool disjoint_with(const Attribute& other) const;

  friend bool operator==(const Attribute& a, const Attribute& b) {
    return a.members_ == b.members_;
  }
  friend bool operator!=(const Attribute& a, const Attribute& b) {
    return !(a == b);
  }
  // Orders by member set so attributes can key sorted containers.
  friend bool operator<(const Attribute& a, const Attribute& b) {
    return a.members_ < b.members_;
  }

 private:
  std::string id_;
  std::vector<std::string> members_;
};

// Label of the joint state (a, b) on a pair of substrates.
std::string pair_label(const std::string& a, const std::string& b);

// Attribute of a substrate pair whose members are all joint labels with the
// first component in x and the second in y.
Attribute pair_attribute(const Attribute& x, const Attribute& y);

// A set of pairwise disjoint attributes of one substrate. Disjointness is
// enforced at construction; a single-attribute variable is allowed.
class Variable {
 public:
  Variable(std::string id, std::vector<Attribute> attributes);

  const std::string& id() const { return id_; }
  const std::vector<Attribute>& attributes() const { return attributes_; }
  std::size_t size() const { return attributes_.size(); }
  bool is_binary() const { return attributes_.size() == 2; }

  const Attribute& at(std::size_t i) const { return attributes_.at(i); }
  // Index of an attribute with the same member set, or nullopt.
  std::optional<std::size_t> index_of(const Attribute& a) const;
  bool contains(const Attribute& a) const { return index_of(a).has_value(); }

  friend bool operator==(const Variable& a, const Variable& b) {
    return a.attributes_ == b.attributes_;
  }

 private:
  std::string id_;
  std::vector<Attribute> attributes_;
};

// Union of all attributes of a variable, as one attribute.
Attribute union_attribute(const Variable& v);

// A task: a finite relation between input attributes and output attributes.
// Pairs are kept sorted and deduplicated, so equality is equality of the
// relation regardless of construction order.
class TaskSpec {
 public:
  using Pair = std::pair<Attribute, Attribute>;

  TaskSpec() = default;
  static TaskSpec from_pairs(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }

  // Distinct input attributes, in relation order.
  std::vector<Attribute> inputs() const;
  std::vector<Attribute> outputs() const;

  // True when every input attribute appears in exactly one pair.
  bool functional() const;

  bool defined_on(const Attribute& input) const;
  // Every output the relation pairs with this input. Empty when undefined.
  std::vector<Attribute> apply(const Attribute& input) const;
  // The unique output for this input. Throws DomainMismatch when the task is
  // undefined on the input and MultivaluedTranspose never; a multivalued
  // input throws DomainMismatch too, naming the ambiguity.
  const Attribute& apply_unique(const Attribute& input) const;

  friend bool operator==(const TaskSpec& a, const TaskSpec& b) {
    return a.pairs_ == b.pairs_;
  }

 private:
  std::vector<Pair> pairs_;
};

// a first, then b. Every output of a must be an input of b, otherwise
// DomainMismatch.
TaskSpec compose_serial(const TaskSpec& a, const TaskSpec& b);

// Side-by-side composition on a substrate pair.
TaskSpec compose_parallel(const TaskSpec& a, const TaskSpec& b);

// Reverse of the relation. Throws MultivaluedTranspose when the reversed
// relation is not functional.
TaskSpec transpose(const TaskSpec& t);

// Predicate telling whether two attributes can be distinguished on some
// medium; supplied by the caller so the algebra stays medium-agnostic.
using DistinguishabilityRelation =
    std::function<bool(const Attribute&, const Attribute&)>;

// Union of every candidate attribute distinguishable from x. Returns nullopt
// when no candidate qualifies.
std::optional<Attribute> bar_attribute(
    const Attribute& x, std::span<const Attribute> candidates,
    const DistinguishabilityRelation& distinguishable);

// Kinds of standard tasks over a variable.
struct IdentityKind {};
// mapping[i] is the index of the attribute that attribute i is sent to.
struct PermutationKind {
  std::vector<std::size_t> mapping;
};
// (x, x0) -> (x, x) with the receptive attribute x0 = first attribute of the
// variable.
struct CloningKind {};
// x -> fresh singleton marker attribute per x.
struct DistinguishingKind {};
// (x, probe) -> (x, outcome_x): non-perturbing readout into a pointer
// substrate.
struct MeasuringKind {};
// (ready, anything) -> (spent_x, x): constructs the target attribute on the
// second substrate from whichever state it held.
struct PreparationKind {
  Attribute target;
};
// Binary control: identity on the target when the control is in its first
// attribute, inner task when in its second.
struct ConditionalKind {
  Variable control;
  TaskSpec inner;
};

using StandardTaskKind =
    std::variant<IdentityKind, PermutationKind, CloningKind,
                 DistinguishingKind, MeasuringKind, PreparationKind,
                 ConditionalKind>;

// Builds one of the standard tasks over the attributes of v. Throws
// ArityError for malformed inputs (permutation mapping that is not a
// permutation, non-binary control, inner task leaving v).
TaskSpec make_standard_task(const StandardTaskKind& kind, const Variable& v);

// Named shorthands for the common kinds.
TaskSpec identity_task(const Variable& v);
TaskSpec permutation_task(const Variable& v, std::vector<std::size_t> mapping);
// The two-attribute flip. Throws ArityError unless v is binary.
TaskSpec swap_task(const Variable& v);
TaskSpec cloning_task(const Variable& v);
TaskSpec distinguishing_task(const Variable& v);
TaskSpec measuring_task(const Variable& v);
TaskSpec preparation_task(const Variable& v, const Attribute& target);
TaskSpec conditional_task(const Variable& control, const Variable& target,
                          const TaskSpec& inner);

}  // namespace ctcog
