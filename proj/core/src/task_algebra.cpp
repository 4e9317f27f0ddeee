#include "ctcog/task_algebra.hpp"

#include <algorithm>
#include <set>

#include "ctcog/errors.hpp"

namespace ctcog {

Attribute::Attribute(std::string id, std::vector<std::string> members)
    : id_(std::move(id)), members_(std::move(members)) {
  if (members_.empty()) {
    throw ArityError("attribute '" + id_ + "' has no members");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool Attribute::contains(const std::string& label) const {
  return std::binary_search(members_.begin(), members_.end(), label);
}

bool Attribute::subset_of(const Attribute& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool Attribute::disjoint_with(const Attribute& other) const {
  auto i = members_.begin();
  auto j = other.members_.begin();
  while (i != members_.end() && j != other.members_.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

Attribute pair_attribute(const Attribute& x, const Attribute& y) {
  std::vector<std::string> members;
  members.reserve(x.size() * y.size());
  for (const auto& a : x.members()) {
    for (const auto& b : y.members()) {
      members.push_back(pair_label(a, b));
    }
  }
  return Attribute("(" + x.id() + "," + y.id() + ")", std::move(members));
}

Variable::Variable(std::string id, std::vector<Attribute> attributes)
    : id_(std::move(id)), attributes_(std::move(attributes)) {
  if (attributes_.empty()) {
    throw ArityError("variable '" + id_ + "' has no attributes");
  }
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    for (std::size_t j = i + 1; j < attributes_.size(); ++j) {
      if (!attributes_[i].disjoint_with(attributes_[j])) {
        throw ArityError("variable '" + id_ + "': attributes '" +
                         attributes_[i].id() + "' and '" +
                         attributes_[j].id() + "' overlap");
      }
    }
  }
}

std::optional<std::size_t> Variable::index_of(const Attribute& a) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i] == a) {
      return i;
    }
  }
  return std::nullopt;
}

Attribute union_attribute(const Variable& v) {
  std::vector<std::string> members;
  for (const auto& a : v.attributes()) {
    members.insert(members.end(), a.members().begin(), a.members().end());
  }
  return Attribute("u_" + v.id(), std::move(members));
}

TaskSpec TaskSpec::from_pairs(std::vector<Pair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  TaskSpec t;
  t.pairs_ = std::move(pairs);
  return t;
}

std::vector<Attribute> TaskSpec::inputs() const {
  std::vector<Attribute> in;
  for (const auto& [a, b] : pairs_) {
    if (in.empty() || !(in.back() == a)) {
      in.push_back(a);
    }
  }
  return in;
}

std::vector<Attribute> TaskSpec::outputs() const {
  std::set<Attribute> seen;
  std::vector<Attribute> out;
  for (const auto& [a, b] : pairs_) {
    if (seen.insert(b).second) {
      out.push_back(b);
    }
  }
  return out;
}

bool TaskSpec::functional() const {
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (pairs_[i].first == pairs_[i - 1].first) {
      return false;
    }
  }
  return true;
}

bool TaskSpec::defined_on(const Attribute& input) const {
  return !apply(input).empty();
}

std::vector<Attribute> TaskSpec::apply(const Attribute& input) const {
  std::vector<Attribute> out;
  for (const auto& [a, b] : pairs_) {
    if (a == input) {
      out.push_back(b);
    }
  }
  return out;
}

const Attribute& TaskSpec::apply_unique(const Attribute& input) const {
  const Attribute* found = nullptr;
  for (const auto& [a, b] : pairs_) {
    if (a == input) {
      if (found != nullptr) {
        throw DomainMismatch("task is multivalued on attribute '" +
                             input.id() + "'");
      }
      found = &b;
    }
  }
  if (found == nullptr) {
    throw DomainMismatch("task is undefined on attribute '" + input.id() +
                         "'");
  }
  return *found;
}

TaskSpec compose_serial(const TaskSpec& a, const TaskSpec& b) {
  std::vector<TaskSpec::Pair> pairs;
  for (const auto& [x, y] : a.pairs()) {
    auto continuations = b.apply(y);
    if (continuations.empty()) {
      throw DomainMismatch("serial composition: second task is undefined on '" +
                           y.id() + "'");
    }
    for (auto& z : continuations) {
      pairs.emplace_back(x, std::move(z));
    }
  }
  return TaskSpec::from_pairs(std::move(pairs));
}

TaskSpec compose_parallel(const TaskSpec& a, const TaskSpec& b) {
  std::vector<TaskSpec::Pair> pairs;
  pairs.reserve(a.pairs().size() * b.pairs().size());
  for (const auto& [x, xo] : a.pairs()) {
    for (const auto& [y, yo] : b.pairs()) {
      pairs.emplace_back(pair_attribute(x, y), pair_attribute(xo, yo));
    }
  }
  return TaskSpec::from_pairs(std::move(pairs));
}

TaskSpec transpose(const TaskSpec& t) {
  std::vector<TaskSpec::Pair> pairs;
  pairs.reserve(t.pairs().size());
  for (const auto& [a, b] : t.pairs()) {
    pairs.emplace_back(b, a);
  }
  auto reversed = TaskSpec::from_pairs(std::move(pairs));
  if (!reversed.functional()) {
    throw MultivaluedTranspose("transpose is not functional: some output of '" +
                               (t.pairs().empty() ? std::string("?")
                                                  : t.pairs().front().first.id()) +
                               "'-task has several preimages or joins inputs");
  }
  return reversed;
}

std::optional<Attribute> bar_attribute(
    const Attribute& x, std::span<const Attribute> candidates,
    const DistinguishabilityRelation& distinguishable) {
  std::vector<std::string> members;
  for (const auto& a : candidates) {
    if (distinguishable(a, x)) {
      members.insert(members.end(), a.members().begin(), a.members().end());
    }
  }
  if (members.empty()) {
    return std::nullopt;
  }
  return Attribute("bar_" + x.id(), std::move(members));
}

namespace {

TaskSpec build_identity(const Variable& v) {
  std::vector<TaskSpec::Pair> pairs;
  for (const auto& a : v.attributes()) {
    pairs.emplace_back(a, a);
  }
  return TaskSpec::from_pairs(std::move(pairs));
}

TaskSpec build_permutation(const Variable& v,
                           const std::vector<std::size_t>& mapping) {
  const auto n = v.size();
  if (mapping.size() != n) {
    throw ArityError("permutation mapping size " +
                     std::to_string(mapping.size()) + " does not match " +
                     std::to_string(n) + " attributes");
  }
  std::vector<bool> hit(n, false);
  for (auto m : mapping) {
    if (m >= n || hit[m]) {
      throw ArityError("mapping is not a permutation of the attributes of '" +
                       v.id() + "'");
    }
    hit[m] = true;
  }
  std::vector<TaskSpec::Pair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    pairs.emplace_back(v.at(i), v.at(mapping[i]));
  }
  return TaskSpec::from_pairs(std::move(pairs));
}

TaskSpec build_cloning(const Variable& v) {
  const Attribute& receptive = v.at(0);
  std::vector<TaskSpec::Pair> pairs;
  for (const auto& x : v.attributes()) {
    pairs.emplace_back(pair_attribute(x, receptive), pair_attribute(x, x));
  }
  return TaskSpec::from_pairs(std::move(pairs));
}

TaskSpec build_distinguishing(const Variable& v) {
  std::vector<TaskSpec::Pair> pairs;
  for (const auto& x : v.attributes()) {
    pairs.emplace_back(x, Attribute("i_" + x.id(), {"marker:" + x.id()}));
  }
  return TaskSpec::from_pairs(std::move(pairs));
}

TaskSpec build_measuring(const Variable& v) {
  const Attribute probe("probe_ready", {"probe:ready"});
  std::vector<TaskSpec::Pair> pairs;
  for (const auto& x : v.attributes()) {
    const Attribute outcome("outcome_" + x.id(), {"outcome:" + x.id()});
    pairs.emplace_back(pair_attribute(x, probe), pair_attribute(x, outcome));
  }
  return TaskSpec::from_pairs(std::move(pairs));
}

TaskSpec build_preparation(const Variable& v, const Attribute& target) {
  if (!v.contains(target)) {
    throw ArityError("preparation target '" + target.id() +
                     "' is not an attribute of '" + v.id() + "'");
  }
  const Attribute ready("prep_ready", {"prep:ready"});
  const Attribute spent("prep_spent_" + target.id(),
                        {"prep:spent:" + target.id()});
  std::vector<TaskSpec::Pair> pairs;
  for (const auto& any : v.attributes()) {
    pairs.emplace_back(pair_attribute(ready, any),
                       pair_attribute(spent, target));
  }
  return TaskSpec::from_pairs(std::move(pairs));
}

TaskSpec build_conditional(const Variable& control, const Variable& target,
                           const TaskSpec& inner) {
  if (!control.is_binary()) {
    throw ArityError("conditional control variable '" + control.id() +
                     "' is not binary");
  }
  for (const auto& [in, out] : inner.pairs()) {
    if (!target.contains(in) || !target.contains(out)) {
      throw ArityError("conditional inner task leaves the attributes of '" +
                       target.id() + "'");
    }
  }
  const Attribute& idle = control.at(0);
  const Attribute& fire = control.at(1);
  std::vector<TaskSpec::Pair> pairs;
  for (const auto& y : target.attributes()) {
    pairs.emplace_back(pair_attribute(idle, y), pair_attribute(idle, y));
  }
  for (const auto& [in, out] : inner.pairs()) {
    pairs.emplace_back(pair_attribute(fire, in), pair_attribute(fire, out));
  }
  return TaskSpec::from_pairs(std::move(pairs));
}

}  // namespace

TaskSpec make_standard_task(const StandardTaskKind& kind, const Variable& v) {
  return std::visit(
      [&](const auto& k) -> TaskSpec {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, IdentityKind>) {
          return build_identity(v);
        } else if constexpr (std::is_same_v<K, PermutationKind>) {
          return build_permutation(v, k.mapping);
        } else if constexpr (std::is_same_v<K, CloningKind>) {
          return build_cloning(v);
        } else if constexpr (std::is_same_v<K, DistinguishingKind>) {
          return build_distinguishing(v);
        } else if constexpr (std::is_same_v<K, MeasuringKind>) {
          return build_measuring(v);
        } else if constexpr (std::is_same_v<K, PreparationKind>) {
          return build_preparation(v, k.target);
        } else {
          return build_conditional(k.control, v, k.inner);
        }
      },
      kind);
}

TaskSpec identity_task(const Variable& v) {
  return make_standard_task(IdentityKind{}, v);
}

TaskSpec permutation_task(const Variable& v, std::vector<std::size_t> mapping) {
  return make_standard_task(PermutationKind{std::move(mapping)}, v);
}

TaskSpec swap_task(const Variable& v) {
  if (!v.is_binary()) {
    throw ArityError("swap task needs a binary variable, '" + v.id() +
                     "' has " + std::to_string(v.size()) + " attributes");
  }
  return permutation_task(v, {1, 0});
}

TaskSpec cloning_task(const Variable& v) {
  return make_standard_task(CloningKind{}, v);
}

TaskSpec distinguishing_task(const Variable& v) {
  return make_standard_task(DistinguishingKind{}, v);
}

TaskSpec measuring_task(const Variable& v) {
  return make_standard_task(MeasuringKind{}, v);
}

TaskSpec preparation_task(const Variable& v, const Attribute& target) {
  return make_standard_task(PreparationKind{target}, v);
}

TaskSpec conditional_task(const Variable& control, const Variable& target,
                          const TaskSpec& inner) {
  return make_standard_task(ConditionalKind{control, inner}, target);
}

}  // namespace ctcog
