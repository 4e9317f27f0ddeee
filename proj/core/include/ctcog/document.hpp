#pragma once

#include <map>
#include <string>
#include <vector>

#include "ctcog/task_algebra.hpp"

namespace ctcog {

// A substrate description loaded from JSON: the label universe, named
// attributes over it, variables grouping attributes, and task relations
// between attributes. The schema is documented in docs/substrate_format.md.
struct SubstrateDocument {
  std::vector<std::string> states;
  std::vector<Attribute> attributes;
  std::vector<Variable> variables;
  std::map<std::string, TaskSpec> tasks;

  // Lookups by document id; ConfigInvalid when absent.
  const Attribute& attribute(const std::string& id) const;
  const Variable& variable(const std::string& id) const;
  const TaskSpec& task(const std::string& id) const;
};

// Parses a document from JSON text. Throws ConfigInvalid naming the
// offending key on any schema violation.
SubstrateDocument parse_substrate_document(const std::string& json_text);

// Reads and parses a document file. Throws IoError when the file cannot be
// read.
SubstrateDocument load_substrate_document(const std::string& path);

}  // namespace ctcog
