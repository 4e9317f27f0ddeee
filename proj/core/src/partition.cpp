#include "ctcog/partition.hpp"

#include <algorithm>
#include <cmath>

#include "ctcog/errors.hpp"

namespace ctcog {

namespace {
constexpr double kSumTol = 1e-9;
}

PartitionOfUnity::PartitionOfUnity(std::vector<std::string> attribute_ids,
                                   std::vector<double> values)
    : ids_(std::move(attribute_ids)), values_(std::move(values)) {
  if (ids_.size() != values_.size()) {
    throw ArityError("partition has " + std::to_string(ids_.size()) +
                     " ids for " + std::to_string(values_.size()) + " values");
  }
  if (values_.empty()) {
    throw ArityError("partition has no entries");
  }
  double sum = 0.0;
  for (double f : values_) {
    if (f < -kSumTol || f > 1.0 + kSumTol) {
      throw ArityError("partition weight " + std::to_string(f) +
                       " outside [0, 1]");
    }
    sum += f;
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw ArityError("partition weights sum to " + std::to_string(sum));
  }
}

double PartitionOfUnity::value_of(const std::string& attribute_id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == attribute_id) {
      return values_[i];
    }
  }
  throw NotMeasurable("partition has no entry for attribute '" + attribute_id +
                      "'");
}

bool PartitionOfUnity::is_sharp(double tol) const {
  return std::any_of(values_.begin(), values_.end(),
                     [tol](double f) { return std::abs(f - 1.0) <= tol; });
}

PartitionOfUnity partition_of_theta(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return PartitionOfUnity({"x0", "x1"}, {c * c, s * s});
}

double theta_of_partition(const PartitionOfUnity& p) {
  if (p.size() != 2) {
    throw NonBinary("theta is defined for binary partitions, got " +
                    std::to_string(p.size()) + " entries");
  }
  const double f1 = std::clamp(p[1], 0.0, 1.0);
  return 2.0 * std::asin(std::sqrt(f1));
}

}  // namespace ctcog
