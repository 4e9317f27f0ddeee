#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ctcog {

// Weights f_x over the attributes of one variable, each in [0, 1], summing
// to 1 within 1e-9. Entries keep the variable's attribute order; ids are the
// attribute ids.
class PartitionOfUnity {
 public:
  PartitionOfUnity(std::vector<std::string> attribute_ids,
                   std::vector<double> values);

  const std::vector<std::string>& attribute_ids() const { return ids_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  double operator[](std::size_t i) const { return values_[i]; }
  // Weight of the attribute with this id. Throws NotMeasurable when absent.
  double value_of(const std::string& attribute_id) const;

  // True when one weight is within tol of 1.
  bool is_sharp(double tol = 1e-9) const;

  friend bool operator==(const PartitionOfUnity& a, const PartitionOfUnity& b) {
    return a.ids_ == b.ids_ && a.values_ == b.values_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<double> values_;
};

// Binary partition [cos^2(theta/2), sin^2(theta/2)] with positional ids
// "x0", "x1".
PartitionOfUnity partition_of_theta(double theta);

// Inverse of partition_of_theta on [0, pi]. Angles theta and 2*pi - theta
// produce the same weights, so the representative in [0, pi] is returned.
// Throws NonBinary when the partition does not have exactly two entries.
double theta_of_partition(const PartitionOfUnity& p);

}  // namespace ctcog
