#include "ctcog/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ctcog/errors.hpp"

namespace ctcog {

namespace {

using nlohmann::json;

const json& expect(const json& j, const char* key, json::value_t type,
                   const char* what) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ConfigInvalid(std::string("document is missing '") + key + "'");
  }
  if (it->type() != type) {
    throw ConfigInvalid(std::string("'") + key + "' must be " + what);
  }
  return *it;
}

std::vector<std::string> string_array(const json& j, const std::string& where) {
  if (!j.is_array()) {
    throw ConfigInvalid("'" + where + "' must be an array of strings");
  }
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw ConfigInvalid("'" + where + "' must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

const Attribute& SubstrateDocument::attribute(const std::string& id) const {
  for (const auto& a : attributes) {
    if (a.id() == id) {
      return a;
    }
  }
  throw ConfigInvalid("document has no attribute '" + id + "'");
}

const Variable& SubstrateDocument::variable(const std::string& id) const {
  for (const auto& v : variables) {
    if (v.id() == id) {
      return v;
    }
  }
  throw ConfigInvalid("document has no variable '" + id + "'");
}

const TaskSpec& SubstrateDocument::task(const std::string& id) const {
  const auto it = tasks.find(id);
  if (it == tasks.end()) {
    throw ConfigInvalid("document has no task '" + id + "'");
  }
  return it->second;
}

SubstrateDocument parse_substrate_document(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigInvalid(std::string("document is not valid JSON: ") +
                        e.what());
  }
  if (!root.is_object()) {
    throw ConfigInvalid("document root must be an object");
  }
  for (const auto& [key, value] : root.items()) {
    if (key != "states" && key != "attributes" && key != "variables" &&
        key != "tasks") {
      throw ConfigInvalid("document has unknown key '" + key + "'");
    }
  }

  SubstrateDocument doc;
  doc.states = string_array(
      expect(root, "states", json::value_t::array, "an array"), "states");
  if (doc.states.empty()) {
    throw ConfigInvalid("'states' must name at least one label");
  }
  const std::set<std::string> known(doc.states.begin(), doc.states.end());
  if (known.size() != doc.states.size()) {
    throw ConfigInvalid("'states' has duplicate labels");
  }

  try {
    if (root.contains("attributes")) {
      const auto& attrs = root.at("attributes");
      if (!attrs.is_object()) {
        throw ConfigInvalid("'attributes' must be an object");
      }
      for (const auto& [id, members] : attrs.items()) {
        auto labels = string_array(members, "attributes." + id);
        for (const auto& l : labels) {
          if (known.count(l) == 0) {
            throw ConfigInvalid("attribute '" + id + "' uses unknown label '" +
                                l + "'");
          }
        }
        doc.attributes.emplace_back(id, std::move(labels));
      }
    }
    if (root.contains("variables")) {
      const auto& vars = root.at("variables");
      if (!vars.is_object()) {
        throw ConfigInvalid("'variables' must be an object");
      }
      for (const auto& [id, attr_ids] : vars.items()) {
        std::vector<Attribute> attrs;
        for (const auto& aid : string_array(attr_ids, "variables." + id)) {
          attrs.push_back(doc.attribute(aid));
        }
        doc.variables.emplace_back(id, std::move(attrs));
      }
    }
    if (root.contains("tasks")) {
      const auto& tasks = root.at("tasks");
      if (!tasks.is_object()) {
        throw ConfigInvalid("'tasks' must be an object");
      }
      for (const auto& [id, pairs] : tasks.items()) {
        if (!pairs.is_array()) {
          throw ConfigInvalid("task '" + id + "' must be an array of pairs");
        }
        std::vector<TaskSpec::Pair> relation;
        for (const auto& p : pairs) {
          if (!p.is_array() || p.size() != 2 || !p[0].is_string() ||
              !p[1].is_string()) {
            throw ConfigInvalid("task '" + id +
                                "' entries must be [input, output] id pairs");
          }
          relation.emplace_back(doc.attribute(p[0].get<std::string>()),
                                doc.attribute(p[1].get<std::string>()));
        }
        doc.tasks.emplace(id, TaskSpec::from_pairs(std::move(relation)));
      }
    }
  } catch (const ArityError& e) {
    throw ConfigInvalid(std::string("document is malformed: ") + e.what());
  }
  return doc;
}

SubstrateDocument load_substrate_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_substrate_document(buffer.str());
}

}  // namespace ctcog
