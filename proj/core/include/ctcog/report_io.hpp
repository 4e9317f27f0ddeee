#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ctcog/grover.hpp"
#include "ctcog/judgement.hpp"
#include "ctcog/media_analysis.hpp"

namespace ctcog {

// 12 significant digits, the precision every emitted number uses so reruns
// are byte-identical.
std::string format_double(double v);

// Minimal JSON document model for emission only (parsing is elsewhere).
// Rendering is deterministic: object keys sorted, doubles through
// format_double, two-space indent, trailing newline at the top level.
class JsonValue {
 public:
  using Object = std::map<std::string, JsonValue>;
  using Array = std::vector<JsonValue>;

  JsonValue() : node_(nullptr) {}
  JsonValue(bool b) : node_(b) {}
  JsonValue(int i) : node_(static_cast<std::int64_t>(i)) {}
  JsonValue(std::int64_t i) : node_(i) {}
  JsonValue(std::size_t u) : node_(static_cast<std::int64_t>(u)) {}
  JsonValue(double d) : node_(d) {}
  JsonValue(const char* s) : node_(std::string(s)) {}
  JsonValue(std::string s) : node_(std::move(s)) {}
  JsonValue(Object o) : node_(std::move(o)) {}
  JsonValue(Array a) : node_(std::move(a)) {}

  std::string render() const;

 private:
  void render_to(std::string& out, int depth) const;

  std::variant<std::nullptr_t, bool, std::int64_t, double, std::string,
               Object, Array>
      node_;
};

std::string json_escape(const std::string& s);

JsonValue to_json(const InequalityRecord& r);
JsonValue to_json(const JudgementReport& r);
JsonValue to_json(const SuperinformationEvidence& e);
JsonValue to_json(const DecisionConditionsReport& r);
JsonValue to_json(const PartitionOfUnity& p);

// CSV renderings; headers are part of the file contract.
std::string to_csv(const grover::SearchTrace& trace);
std::string to_csv(std::span<const grover::ScanPoint> points);
std::string to_csv(const grover::RecallTrace& recall);
// Rows phi,f_x0,f_x1 for a sweep of interference readouts.
std::string interference_csv(std::span<const double> phis,
                             std::span<const PartitionOfUnity> rows);

// "pi", "3pi/4", "0.5pi", "-pi/3", or a plain decimal count of radians.
// Throws ConfigInvalid on anything else.
double parse_angle(const std::string& text);
// Comma-separated angles, or "linspace:<start>:<stop>:<count>" inclusive.
std::vector<double> parse_angle_grid(const std::string& text);

// Whole-file helpers; IoError on failure.
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace ctcog
