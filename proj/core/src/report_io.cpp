#include "ctcog/report_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "ctcog/errors.hpp"

namespace ctcog {

std::string format_double(double v) {
  if (v == 0.0) {
    v = 0.0;  // normalize -0
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const unsigned char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\b':
        out += "\\b";
        break;
      case '\f':
        out += "\\f";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

void JsonValue::render_to(std::string& out, int depth) const {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string inner_pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, std::nullptr_t>) {
          out += "null";
        } else if constexpr (std::is_same_v<T, bool>) {
          out += node ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          out += std::to_string(node);
        } else if constexpr (std::is_same_v<T, double>) {
          out += format_double(node);
        } else if constexpr (std::is_same_v<T, std::string>) {
          out += '"';
          out += json_escape(node);
          out += '"';
        } else if constexpr (std::is_same_v<T, Object>) {
          if (node.empty()) {
            out += "{}";
            return;
          }
          out += "{\n";
          bool first = true;
          for (const auto& [key, value] : node) {
            if (!first) {
              out += ",\n";
            }
            first = false;
            out += inner_pad;
            out += '"';
            out += json_escape(key);
            out += "\": ";
            value.render_to(out, depth + 1);
          }
          out += '\n';
          out += pad;
          out += '}';
        } else {
          if (node.empty()) {
            out += "[]";
            return;
          }
          out += "[\n";
          bool first = true;
          for (const auto& value : node) {
            if (!first) {
              out += ",\n";
            }
            first = false;
            out += inner_pad;
            value.render_to(out, depth + 1);
          }
          out += '\n';
          out += pad;
          out += ']';
        }
      },
      node_);
}

std::string JsonValue::render() const {
  std::string out;
  render_to(out, 0);
  out += '\n';
  return out;
}

JsonValue to_json(const InequalityRecord& r) {
  return JsonValue::Object{
      {"holds", r.holds},
      {"lhs", r.lhs},
      {"name", r.name},
      {"rhs", r.rhs},
  };
}

JsonValue to_json(const JudgementReport& r) {
  JsonValue::Object values;
  for (const auto& [key, value] : r.values) {
    values.emplace(key, value);
  }
  JsonValue::Array inequalities;
  for (const auto& ineq : r.inequalities) {
    inequalities.push_back(to_json(ineq));
  }
  JsonValue::Object out{
      {"classification", to_string(r.classification)},
      {"inequalities", std::move(inequalities)},
      {"values", std::move(values)},
  };
  if (r.witness) {
    out.emplace("witness", *r.witness);
  }
  return out;
}

JsonValue to_json(const SuperinformationEvidence& e) {
  JsonValue::Object out{
      {"overlap", e.overlap},
      {"reason", e.reason},
      {"superinformation", e.superinformation},
  };
  if (!e.first_attribute.empty()) {
    out.emplace("firstAttribute", e.first_attribute);
    out.emplace("secondAttribute", e.second_attribute);
  }
  return out;
}

JsonValue to_json(const DecisionConditionsReport& r) {
  JsonValue::Object values;
  for (const auto& [key, value] : r.values) {
    values.emplace(key, value);
  }
  JsonValue::Array notes;
  for (const auto& n : r.notes) {
    notes.push_back(n);
  }
  return JsonValue::Object{
      {"all", r.all()},
      {"equalWeights", r.equal_weights},
      {"exchangeFixesOther", r.exchange_fixes_other},
      {"notes", std::move(notes)},
      {"unsharpCrossReadout", r.unsharp_cross_readout},
      {"values", std::move(values)},
  };
}

JsonValue to_json(const PartitionOfUnity& p) {
  JsonValue::Object out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.emplace(p.attribute_ids()[i], p[i]);
  }
  return out;
}

std::string to_csv(const grover::SearchTrace& trace) {
  std::string out = "iteration,success\n";
  for (std::size_t j = 0; j < trace.success.size(); ++j) {
    out += std::to_string(j);
    out += ',';
    out += format_double(trace.success[j]);
    out += '\n';
  }
  return out;
}

std::string to_csv(std::span<const grover::ScanPoint> points) {
  std::string out = "theta,phi,peakSuccess,peakIteration\n";
  for (const auto& p : points) {
    out += format_double(p.theta);
    out += ',';
    out += format_double(p.phi);
    out += ',';
    out += format_double(p.peak_success);
    out += ',';
    out += std::to_string(p.peak_iteration);
    out += '\n';
  }
  return out;
}

std::string to_csv(const grover::RecallTrace& recall) {
  std::string out = "iteration,congruentRecall,incongruentRecall\n";
  for (std::size_t j = 0; j < recall.congruent.size(); ++j) {
    out += std::to_string(j);
    out += ',';
    out += format_double(recall.congruent[j]);
    out += ',';
    out += format_double(recall.incongruent[j]);
    out += '\n';
  }
  return out;
}

std::string interference_csv(std::span<const double> phis,
                             std::span<const PartitionOfUnity> rows) {
  std::string out = "phi,f_x0,f_x1\n";
  for (std::size_t i = 0; i < phis.size(); ++i) {
    out += format_double(phis[i]);
    out += ',';
    out += format_double(rows[i][0]);
    out += ',';
    out += format_double(rows[i][1]);
    out += '\n';
  }
  return out;
}

namespace {

double parse_strict_double(const std::string& s, const std::string& original) {
  if (s.empty()) {
    throw ConfigInvalid("bad angle '" + original + "'");
  }
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &consumed);
  } catch (const std::exception&) {
    throw ConfigInvalid("bad angle '" + original + "'");
  }
  if (consumed != s.size()) {
    throw ConfigInvalid("bad angle '" + original + "'");
  }
  return value;
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string s;
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s += c;
    }
  }
  if (s.empty()) {
    throw ConfigInvalid("empty angle");
  }
  double sign = 1.0;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1.0 : 1.0;
    pos = 1;
  }
  const auto body = s.substr(pos);
  const auto pi_at = body.find("pi");
  if (pi_at == std::string::npos) {
    return sign * parse_strict_double(body, text);
  }

  auto coeff_text = body.substr(0, pi_at);
  if (!coeff_text.empty() && coeff_text.back() == '*') {
    coeff_text.pop_back();
  }
  const double coeff =
      coeff_text.empty() ? 1.0 : parse_strict_double(coeff_text, text);

  const auto rest = body.substr(pi_at + 2);
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest[0] != '/') {
      throw ConfigInvalid("bad angle '" + text + "'");
    }
    divisor = parse_strict_double(rest.substr(1), text);
    if (divisor == 0.0) {
      throw ConfigInvalid("bad angle '" + text + "': division by zero");
    }
  }
  return sign * coeff * std::numbers::pi / divisor;
}

std::vector<double> parse_angle_grid(const std::string& text) {
  constexpr const char* kLinspace = "linspace:";
  if (text.rfind(kLinspace, 0) == 0) {
    const auto spec = text.substr(std::string(kLinspace).size());
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ':')) {
      parts.push_back(part);
    }
    if (parts.size() != 3) {
      throw ConfigInvalid("grid '" + text +
                          "' must be linspace:<start>:<stop>:<count>");
    }
    const double start = parse_angle(parts[0]);
    const double stop = parse_angle(parts[1]);
    long count = 0;
    try {
      count = std::stol(parts[2]);
    } catch (const std::exception&) {
      throw ConfigInvalid("bad grid count '" + parts[2] + "'");
    }
    if (count < 1) {
      throw ConfigInvalid("grid count must be at least 1");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
      grid.push_back(start);
      return grid;
    }
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (long i = 0; i < count; ++i) {
      grid.push_back(start + static_cast<double>(i) * step);
    }
    return grid;
  }

  std::vector<double> grid;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    grid.push_back(parse_angle(part));
  }
  if (grid.empty()) {
    throw ConfigInvalid("empty angle grid");
  }
  return grid;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << text;
  if (!out) {
    throw IoError("failed writing '" + path + "'");
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace ctcog
