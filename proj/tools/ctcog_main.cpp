#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctcog/errors.hpp"
#include "ctcog/grover.hpp"
#include "ctcog/judgement.hpp"
#include "ctcog/media_analysis.hpp"
#include "ctcog/phase_tasks.hpp"
#include "ctcog/report_io.hpp"
#include "ctcog/standard_media.hpp"

namespace {

using namespace ctcog;

constexpr std::array<const char*, 8> kExperiments = {
    "classify-medium", "conjunction", "e1e2",        "symmetry",
    "wfw-scan",        "grover",      "grover-scan", "mood-demo",
};

struct Artifact {
  std::string path;
  std::string text;
  std::string summary;
};

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) {
    return *seed;
  }
  if (const char* env = std::getenv("CT_AFFECT_SEED")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw ConfigInvalid("CT_AFFECT_SEED is not an integer: '" +
                          std::string(env) + "'");
    }
    return value;
  }
  throw ConfigInvalid(
      "this experiment samples; pass --seed or set CT_AFFECT_SEED");
}

// Random full-support weights, bounded away from zero so conditioning is
// always possible.
ClassicalState random_mixture(const std::vector<std::string>& labels,
                              CounterRng& rng) {
  std::map<std::string, double> weights;
  for (const auto& l : labels) {
    weights[l] = 0.05 + rng.uniform();
  }
  return make_classical_state(std::move(weights));
}

// Random two-sided split of the labels into a binary variable.
Variable random_binary_variable(const std::string& id,
                                const std::vector<std::string>& labels,
                                CounterRng& rng) {
  std::vector<std::string> lo;
  std::vector<std::string> hi;
  for (const auto& l : labels) {
    (rng.uniform() < 0.5 ? lo : hi).push_back(l);
  }
  if (lo.empty()) {
    lo.push_back(hi.back());
    hi.pop_back();
  }
  if (hi.empty()) {
    hi.push_back(lo.back());
    lo.pop_back();
  }
  return Variable(id, {Attribute(id + "0", std::move(lo)),
                       Attribute(id + "1", std::move(hi))});
}

Artifact run_classify_medium(const std::string& medium) {
  SuperinformationEvidence evidence;
  DecisionConditionsReport decisions;
  if (medium == "coherent") {
    const auto q = make_affect_qubit();
    evidence = detect_superinformation(q.medium, q.x, q.a);
    decisions = check_decision_conditions(q.medium, q.x, q.a);
  } else {
    const auto c = make_classical_affect_analogue();
    evidence = detect_superinformation(c.medium, c.x, c.a);
    decisions = check_decision_conditions(c.medium, c.x, c.a);
  }
  const std::string classification =
      evidence.superinformation ? "superinformation" : "information";
  const std::string infusion = evidence.superinformation ? "high" : "low";
  JsonValue::Object out{
      {"classification", classification},
      {"decisionConditions", to_json(decisions)},
      {"evidence", to_json(evidence)},
      {"experiment", "classify-medium"},
      {"infusion", infusion},
      {"medium", medium},
  };
  return Artifact{"classify-medium.json", JsonValue(std::move(out)).render(),
                  "classification " + classification + ", infusion " +
                      infusion};
}

Artifact run_conjunction(const std::string& medium, std::size_t samples,
                         const std::optional<std::uint64_t>& seed_opt) {
  JsonValue::Object out{{"experiment", "conjunction"}, {"medium", medium}};
  std::string summary;
  if (medium == "coherent") {
    const auto q = make_affect_qubit();
    const std::vector<MediumState> states{q.medium.prepare(q.x1)};
    const std::vector<std::string> names{"sharp x1"};
    const auto report = conjunction_check(q.medium, q.x, q.a, states, names);
    out.emplace("infusion", to_string(classify_infusion(report)));
    out.emplace("report", to_json(report));
    summary = "violations " + format_double(report.values.at("violations")) +
              " of " + format_double(report.values.at("pairs_checked")) +
              " checks";
  } else {
    const auto seed = require_seed(seed_opt);
    const std::vector<std::string> labels{"l0", "l1", "l2", "l3", "l4", "l5"};
    const ClassicalMedium ensemble(labels, {});
    std::size_t violations = 0;
    std::size_t checked = 0;
    std::optional<JsonValue> first;
    for (std::size_t k = 0; k < samples; ++k) {
      CounterRng rng(seed, k);
      const std::vector<MediumState> states{random_mixture(labels, rng)};
      const auto v1 = random_binary_variable("p", labels, rng);
      const auto v2 = random_binary_variable("q", labels, rng);
      const auto report = conjunction_check(ensemble, v1, v2, states);
      violations += static_cast<std::size_t>(report.values.at("violations"));
      checked += static_cast<std::size_t>(report.values.at("pairs_checked"));
      if (!first) {
        first = to_json(report);
      }
    }
    out.emplace("firstSample", std::move(*first));
    out.emplace("infusion", violations == 0 ? "low" : "high");
    out.emplace("samples", samples);
    out.emplace("seed", static_cast<std::size_t>(seed));
    out.emplace("violations", violations);
    out.emplace("pairsChecked", checked);
    summary = "violations " + std::to_string(violations) + " of " +
              std::to_string(checked) + " checks";
  }
  return Artifact{"conjunction.json", JsonValue(std::move(out)).render(),
                  std::move(summary)};
}

Artifact run_e1e2(const std::string& medium, std::size_t samples,
                  const std::optional<std::uint64_t>& seed_opt) {
  JsonValue::Object out{{"experiment", "e1e2"}, {"medium", medium}};
  std::string summary;
  if (medium == "coherent") {
    const auto q = make_affect_qubit();
    const auto report =
        independence_check(q.medium, q.x0, q.a, q.medium.prepare(q.x0));
    out.emplace("infusion", to_string(classify_infusion(report)));
    out.emplace("report", to_json(report));
    summary = "classification " + to_string(report.classification);
  } else {
    const auto seed = require_seed(seed_opt);
    const auto pair = make_classical_affect_pair();
    const auto& x0 = pair.x.at(0);
    std::size_t violations = 0;
    std::optional<JsonValue> first;
    for (std::size_t k = 0; k < samples; ++k) {
      CounterRng rng(seed, k);
      const auto z = random_mixture(pair.medium.labels(), rng);
      const auto report = independence_check(pair.medium, x0, pair.a, z);
      if (report.classification == MediumClass::superinformation) {
        ++violations;
      }
      if (!first) {
        first = to_json(report);
      }
    }
    out.emplace("firstSample", std::move(*first));
    out.emplace("infusion", violations == 0 ? "low" : "high");
    out.emplace("samples", samples);
    out.emplace("seed", static_cast<std::size_t>(seed));
    out.emplace("violations", violations);
    summary = "violations " + std::to_string(violations) + " of " +
              std::to_string(samples) + " mixtures";
  }
  return Artifact{"e1e2.json", JsonValue(std::move(out)).render(),
                  std::move(summary)};
}

Artifact run_symmetry(const std::string& medium) {
  JsonValue::Object out{{"experiment", "symmetry"}, {"medium", medium}};
  std::string summary;
  if (medium == "coherent") {
    const auto q = make_affect_qubit();
    JsonValue::Array pairs;
    bool all_symmetric = true;
    for (const auto* x : {&q.x0, &q.x1}) {
      for (const auto* a : {&q.a_plus, &q.a_minus}) {
        const auto report = symmetry_check(q.medium, *x, *a);
        all_symmetric = all_symmetric && report.all_hold();
        pairs.push_back(JsonValue::Object{
            {"first", x->id()},
            {"report", to_json(report)},
            {"second", a->id()},
        });
      }
    }
    out.emplace("allSymmetric", all_symmetric);
    out.emplace("infusion", all_symmetric ? "high" : "low");
    out.emplace("pairs", std::move(pairs));
    summary = all_symmetric ? "all 4 pairs symmetric" : "asymmetry found";
  } else {
    const auto ce = make_symmetry_counterexample();
    const auto report = symmetry_check(ce.medium, ce.x0, ce.a_plus);
    out.emplace("infusion", to_string(classify_infusion(report)));
    out.emplace("report", to_json(report));
    summary = report.all_hold() ? "symmetric" : "asymmetric as constructed";
  }
  return Artifact{"symmetry.json", JsonValue(std::move(out)).render(),
                  std::move(summary)};
}

Artifact run_wfw_scan(const std::string& grid_text) {
  const auto phis = parse_angle_grid(grid_text);
  const auto q = make_affect_qubit();
  std::vector<PartitionOfUnity> rows;
  rows.reserve(phis.size());
  for (const double phi : phis) {
    rows.push_back(interference_partition(q.medium, q.x, q.a,
                                          PhaseParameter(phi), q.x0));
  }
  return Artifact{"wfw-scan.csv", interference_csv(phis, rows),
                  std::to_string(phis.size()) + " phases"};
}

std::vector<std::size_t> parse_marked(const std::string& text) {
  std::vector<std::size_t> marked;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      marked.push_back(std::stoul(part));
    } catch (const std::exception&) {
      throw ConfigInvalid("bad marked index '" + part + "'");
    }
  }
  return marked;
}

std::size_t auto_iterations(std::size_t items, std::size_t marked_count) {
  const auto optimum = grover::optimal_iterations(items, marked_count);
  return std::min(grover::kMaxIterations, 4 * std::max<std::size_t>(1, optimum));
}

Artifact run_grover(std::size_t items, std::size_t marked_count,
                    const std::string& marked_text, const std::string& theta,
                    const std::string& phi, std::size_t iters) {
  if (items == 0) {
    throw ConfigInvalid("--N is required");
  }
  grover::SearchConfig cfg;
  cfg.item_count = items;
  cfg.marked = marked_text.empty() ? std::vector<std::size_t>{}
                                   : parse_marked(marked_text);
  if (cfg.marked.empty()) {
    for (std::size_t i = 0; i < marked_count; ++i) {
      cfg.marked.push_back(i);
    }
  }
  cfg.theta = parse_angle(theta);
  cfg.phi = parse_angle(phi);
  cfg.iterations =
      iters > 0 ? iters : auto_iterations(items, cfg.marked.size());
  const auto trace = grover::run(cfg);
  return Artifact{"grover.csv", to_csv(trace),
                  "peak success " + format_double(trace.peak_success) +
                      " at iteration " +
                      std::to_string(trace.peak_iteration)};
}

Artifact run_grover_scan(std::size_t items, std::size_t marked_count,
                         const std::string& theta_grid,
                         const std::string& phi_grid, std::size_t cap,
                         unsigned jobs) {
  if (items == 0) {
    throw ConfigInvalid("--N is required");
  }
  const auto thetas = parse_angle_grid(theta_grid);
  const auto phis = parse_angle_grid(phi_grid);
  const auto iteration_cap =
      cap > 0 ? cap : auto_iterations(items, marked_count);
  const auto points =
      grover::phase_scan(items, marked_count, thetas, phis, iteration_cap,
                         jobs);
  return Artifact{"grover-scan.csv", to_csv(points),
                  std::to_string(points.size()) + " grid points, cap " +
                      std::to_string(iteration_cap)};
}

Artifact run_mood_demo(const std::string& tags, const std::string& mood,
                       const std::string& theta, const std::string& phi,
                       std::size_t iters) {
  if (tags.empty()) {
    throw ConfigInvalid("--tags is required, e.g. --tags '++-+'");
  }
  if (mood.size() != 1) {
    throw ConfigInvalid("--mood must be a single character");
  }
  const std::span<const char> tag_span(tags.data(), tags.size());
  std::size_t effective = iters;
  if (effective == 0) {
    const auto congruent = static_cast<std::size_t>(
        std::count(tags.begin(), tags.end(), mood[0]));
    if (congruent == 0) {
      throw NoCongruentItems("no item tag matches mood '" + mood + "'");
    }
    effective = congruent == tags.size()
                    ? 0
                    : auto_iterations(tags.size(), congruent);
  }
  const auto recall = grover::mood_congruent_recall(
      tag_span, mood[0], parse_angle(theta), parse_angle(phi), effective);
  return Artifact{"mood-demo.csv", to_csv(recall),
                  "peak congruent recall " +
                      format_double(recall.peak_congruent) + " at iteration " +
                      std::to_string(recall.peak_iteration)};
}

nlohmann::json load_config(const std::string& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const IoError& e) {
    throw ConfigInvalid(e.what());
  }
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigInvalid("config file is not valid JSON: " +
                        std::string(e.what()));
  }
  if (!cfg.is_object()) {
    throw ConfigInvalid("config file root must be an object");
  }
  return cfg;
}

// Command line wins over config file: a config value applies only when the
// matching flag was not given.
template <typename T>
void merge_option(const CLI::App& sub, const nlohmann::json& cfg,
                  const std::string& key, T& value) {
  if (sub.count("--" + key) > 0 || !cfg.contains(key)) {
    return;
  }
  try {
    value = cfg.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigInvalid("config key '" + key + "' has the wrong type");
  }
}

void merge_angle(const CLI::App& sub, const nlohmann::json& cfg,
                 const std::string& key, std::string& value) {
  if (sub.count("--" + key) > 0 || !cfg.contains(key)) {
    return;
  }
  const auto& v = cfg.at(key);
  if (v.is_string()) {
    value = v.get<std::string>();
  } else if (v.is_number()) {
    value = format_double(v.get<double>());
  } else {
    throw ConfigInvalid("config key '" + key +
                        "' must be an angle string or number");
  }
}

void merge_seed(const CLI::App& root, const nlohmann::json& cfg,
                std::optional<std::uint64_t>& seed) {
  if (root.count("--seed") > 0 || !cfg.contains("seed")) {
    return;
  }
  if (!cfg.at("seed").is_number_unsigned()) {
    throw ConfigInvalid("config key 'seed' must be a non-negative integer");
  }
  seed = cfg.at("seed").get<std::uint64_t>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cognition-medium experiments"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  bool list = false;
  app.add_flag("--list", list, "list experiment names and exit");
  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON config file; command line flags override it");
  std::string output;
  app.add_option("--output", output,
                 "artifact path (default <experiment>.json|csv)");
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed,
                 "seed for sampling experiments (CT_AFFECT_SEED as fallback)");
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for scans")
      ->check(CLI::Range(1u, 256u));

  const auto medium_check =
      CLI::IsMember({std::string("classical"), std::string("coherent")});
  std::string medium;
  std::size_t samples = 1000;
  std::string wfw_grid = "linspace:0:2pi:21";
  std::string scan_theta_grid = "linspace:0:2pi:11";
  std::string scan_phi_grid = "linspace:0:2pi:11";
  std::size_t items = 0;
  std::size_t marked_count = 1;
  std::string marked_text;
  std::string theta = "pi";
  std::string phi = "pi";
  std::size_t iters = 0;
  std::size_t iters_cap = 0;
  std::string tags;
  std::string mood = "+";

  auto* classify =
      app.add_subcommand("classify-medium",
                         "is the affect pair jointly an information variable");
  classify->add_option("--medium", medium, "classical or coherent")
      ->check(medium_check);

  auto* conjunction = app.add_subcommand(
      "conjunction", "sequential readouts against the single-readout bound");
  conjunction->add_option("--medium", medium, "classical or coherent")
      ->check(medium_check);
  conjunction->add_option("--samples", samples, "sampled states (classical)");

  auto* e1e2 = app.add_subcommand(
      "e1e2", "does conditioning-invariance imply mixture-invariance");
  e1e2->add_option("--medium", medium, "classical or coherent")
      ->check(medium_check);
  e1e2->add_option("--samples", samples, "sampled mixtures (classical)");

  auto* symmetry = app.add_subcommand(
      "symmetry", "conditional judgements both ways across the affect pair");
  symmetry->add_option("--medium", medium, "classical or coherent")
      ->check(medium_check);

  auto* wfw = app.add_subcommand(
      "wfw-scan", "move-phase-unmove readout across a phase grid");
  wfw->add_option("--phi-grid", wfw_grid,
                  "angles: comma list or linspace:<a>:<b>:<n>");

  auto* grover_cmd =
      app.add_subcommand("grover", "amplitude amplification trace");
  grover_cmd->add_option("--N", items, "item count (power of two)");
  grover_cmd->add_option("--M", marked_count, "marked count, items 0..M-1");
  grover_cmd->add_option("--marked", marked_text,
                         "explicit marked indices, comma separated");
  grover_cmd->add_option("--theta", theta, "start-state rotation angle");
  grover_cmd->add_option("--phi", phi, "marked-item rotation angle");
  grover_cmd->add_option("--iters", iters,
                         "sweeps (0 = four times the matched optimum)");

  auto* scan = app.add_subcommand("grover-scan",
                                  "peak success over a theta x phi grid");
  scan->add_option("--N", items, "item count (power of two)");
  scan->add_option("--M", marked_count, "marked count, items 0..M-1");
  scan->add_option("--theta-grid", scan_theta_grid, "theta grid");
  scan->add_option("--phi-grid", scan_phi_grid, "phi grid");
  scan->add_option("--iters-cap", iters_cap,
                   "sweep cap per grid point (0 = four times the optimum)");

  auto* mood_cmd = app.add_subcommand(
      "mood-demo", "recall of mood-congruent versus incongruent items");
  mood_cmd->add_option("--tags", tags, "one tag character per item");
  mood_cmd->add_option("--mood", mood, "the congruent tag character");
  mood_cmd->add_option("--theta", theta, "start-state rotation angle");
  mood_cmd->add_option("--phi", phi, "marked-item rotation angle");
  mood_cmd->add_option("--iters", iters,
                       "sweeps (0 = four times the matched optimum)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list) {
      for (const auto* name : kExperiments) {
        std::cout << name << "\n";
      }
      return 0;
    }

    const nlohmann::json cfg =
        config_path.empty() ? nlohmann::json::object() : load_config(config_path);

    std::string experiment;
    const auto picked = app.get_subcommands();
    if (!picked.empty()) {
      experiment = picked.front()->get_name();
    } else if (cfg.contains("experiment")) {
      if (!cfg.at("experiment").is_string()) {
        throw ConfigInvalid("config key 'experiment' must be a string");
      }
      experiment = cfg.at("experiment").get<std::string>();
    }
    if (experiment.empty()) {
      throw ConfigInvalid(
          "no experiment selected; pass a subcommand, --config, or --list");
    }
    if (std::find_if(kExperiments.begin(), kExperiments.end(),
                     [&](const char* n) { return experiment == n; }) ==
        kExperiments.end()) {
      throw ConfigInvalid("unknown experiment '" + experiment + "'");
    }

    merge_option(app, cfg, "output", output);
    merge_option(app, cfg, "jobs", jobs);
    merge_seed(app, cfg, seed);

    Artifact artifact;
    if (experiment == "classify-medium") {
      merge_option(*classify, cfg, "medium", medium);
      if (medium.empty()) {
        throw ConfigInvalid("--medium is required");
      }
      artifact = run_classify_medium(medium);
    } else if (experiment == "conjunction") {
      merge_option(*conjunction, cfg, "medium", medium);
      merge_option(*conjunction, cfg, "samples", samples);
      if (medium.empty()) {
        throw ConfigInvalid("--medium is required");
      }
      artifact = run_conjunction(medium, samples, seed);
    } else if (experiment == "e1e2") {
      merge_option(*e1e2, cfg, "medium", medium);
      merge_option(*e1e2, cfg, "samples", samples);
      if (medium.empty()) {
        throw ConfigInvalid("--medium is required");
      }
      artifact = run_e1e2(medium, samples, seed);
    } else if (experiment == "symmetry") {
      merge_option(*symmetry, cfg, "medium", medium);
      if (medium.empty()) {
        throw ConfigInvalid("--medium is required");
      }
      artifact = run_symmetry(medium);
    } else if (experiment == "wfw-scan") {
      merge_option(*wfw, cfg, "phi-grid", wfw_grid);
      artifact = run_wfw_scan(wfw_grid);
    } else if (experiment == "grover") {
      merge_option(*grover_cmd, cfg, "N", items);
      merge_option(*grover_cmd, cfg, "M", marked_count);
      merge_option(*grover_cmd, cfg, "marked", marked_text);
      merge_angle(*grover_cmd, cfg, "theta", theta);
      merge_angle(*grover_cmd, cfg, "phi", phi);
      merge_option(*grover_cmd, cfg, "iters", iters);
      artifact = run_grover(items, marked_count, marked_text, theta, phi,
                            iters);
    } else if (experiment == "grover-scan") {
      merge_option(*scan, cfg, "N", items);
      merge_option(*scan, cfg, "M", marked_count);
      merge_option(*scan, cfg, "theta-grid", scan_theta_grid);
      merge_option(*scan, cfg, "phi-grid", scan_phi_grid);
      merge_option(*scan, cfg, "iters-cap", iters_cap);
      artifact = run_grover_scan(items, marked_count, scan_theta_grid,
                                 scan_phi_grid, iters_cap, jobs);
    } else {
      merge_option(*mood_cmd, cfg, "tags", tags);
      merge_option(*mood_cmd, cfg, "mood", mood);
      merge_angle(*mood_cmd, cfg, "theta", theta);
      merge_angle(*mood_cmd, cfg, "phi", phi);
      merge_option(*mood_cmd, cfg, "iters", iters);
      artifact = run_mood_demo(tags, mood, theta, phi, iters);
    }

    if (!output.empty()) {
      artifact.path = output;
    }
    write_text_file(artifact.path, artifact.text);
    std::cout << "wrote " << artifact.path << " (" << artifact.summary
              << ")\n";
    return 0;
  } catch (const ConfigInvalid& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
