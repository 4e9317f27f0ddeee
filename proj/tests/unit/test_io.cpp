#include <doctest.h>

#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "ctcog/document.hpp"
#include "ctcog/errors.hpp"
#include "ctcog/grover.hpp"
#include "ctcog/report_io.hpp"

using namespace ctcog;

namespace {

const char* kSubstrateDoc = R"({
  "states": ["x0", "x1", "a+", "a-"],
  "attributes": {
    "x0": ["x0"],
    "x1": ["x1"],
    "plus": ["a+"],
    "minus": ["a-"],
    "any_x": ["x0", "x1"]
  },
  "variables": {
    "X": ["x0", "x1"],
    "A": ["plus", "minus"]
  },
  "tasks": {
    "move": [["x0", "plus"], ["x1", "minus"]],
    "coin": [["x0", "any_x"], ["x1", "any_x"]]
  }
})";

}  // namespace

TEST_SUITE("io") {

TEST_CASE("substrate documents parse into the algebra") {
  const auto doc = parse_substrate_document(kSubstrateDoc);

  CHECK(doc.states.size() == 4);
  CHECK(doc.attribute("any_x").size() == 2);
  CHECK(doc.variable("X").is_binary());

  const auto& move = doc.task("move");
  CHECK(move.apply_unique(doc.attribute("x0")) == doc.attribute("plus"));
  CHECK_THROWS_AS(transpose(doc.task("coin")), MultivaluedTranspose);

  CHECK_THROWS_AS(doc.attribute("ghost"), ConfigInvalid);
  CHECK_THROWS_AS(doc.variable("ghost"), ConfigInvalid);
  CHECK_THROWS_AS(doc.task("ghost"), ConfigInvalid);
}

TEST_CASE("substrate documents reject schema violations") {
  CHECK_THROWS_AS(parse_substrate_document("not json"), ConfigInvalid);
  CHECK_THROWS_AS(parse_substrate_document("[1,2]"), ConfigInvalid);
  CHECK_THROWS_AS(parse_substrate_document(R"({"attributes": {}})"),
                  ConfigInvalid);
  CHECK_THROWS_AS(parse_substrate_document(
                      R"({"states": ["a", "a"], "attributes": {}})"),
                  ConfigInvalid);
  CHECK_THROWS_AS(parse_substrate_document(
                      R"({"states": ["a"], "attributes": {"p": ["b"]}})"),
                  ConfigInvalid);
  CHECK_THROWS_AS(
      parse_substrate_document(
          R"({"states": ["a"], "attributes": {}, "variables": {"v": ["p"]}})"),
      ConfigInvalid);
  CHECK_THROWS_AS(
      parse_substrate_document(
          R"({"states": ["a"], "attributes": {"p": ["a"]},
              "tasks": {"t": [["p", "q"]]}})"),
      ConfigInvalid);
  CHECK_THROWS_AS(parse_substrate_document(
                      R"({"states": ["a"], "attributes": {}, "spare": 1})"),
                  ConfigInvalid);
  // Variables must group disjoint attributes.
  CHECK_THROWS_AS(
      parse_substrate_document(
          R"({"states": ["a", "b"],
              "attributes": {"p": ["a"], "q": ["a", "b"]},
              "variables": {"v": ["p", "q"]}})"),
      ConfigInvalid);
}

TEST_CASE("document files load through the io layer") {
  const std::string path = "io_suite_substrate.json";
  write_text_file(path, kSubstrateDoc);
  const auto doc = load_substrate_document(path);
  CHECK(doc.variables.size() == 2);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_substrate_document("definitely_missing.json"),
                  IoError);
}

TEST_CASE("doubles format with stable short digits") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(1e-9) == "1e-09");
  CHECK(format_double(2.0 / 3.0) == "0.666666666667");
}

TEST_CASE("json rendering is sorted, escaped, and newline terminated") {
  JsonValue::Object obj{
      {"zeta", 1},
      {"alpha", JsonValue::Array{true, "two", 3.5}},
      {"nested", JsonValue::Object{{"k", "line\nbreak \"quoted\""}}},
  };
  const auto text = JsonValue(std::move(obj)).render();

  CHECK(text.find("\"alpha\"") < text.find("\"nested\""));
  CHECK(text.find("\"nested\"") < text.find("\"zeta\""));
  CHECK(text.find("line\\nbreak \\\"quoted\\\"") != std::string::npos);
  CHECK(text.back() == '\n');

  // Rendering twice gives identical bytes.
  JsonValue::Object again{
      {"zeta", 1},
      {"alpha", JsonValue::Array{true, "two", 3.5}},
      {"nested", JsonValue::Object{{"k", "line\nbreak \"quoted\""}}},
  };
  CHECK(JsonValue(std::move(again)).render() == text);
}

TEST_CASE("angles parse from human friendly text") {
  CHECK(parse_angle("pi") == doctest::Approx(std::numbers::pi));
  CHECK(parse_angle("2pi") == doctest::Approx(2 * std::numbers::pi));
  CHECK(parse_angle("3pi/4") == doctest::Approx(0.75 * std::numbers::pi));
  CHECK(parse_angle("0.5pi") == doctest::Approx(0.5 * std::numbers::pi));
  CHECK(parse_angle("-pi/3") == doctest::Approx(-std::numbers::pi / 3));
  CHECK(parse_angle("2*pi") == doctest::Approx(2 * std::numbers::pi));
  CHECK(parse_angle("1.25") == doctest::Approx(1.25));
  CHECK(parse_angle(" pi / 2 ") == doctest::Approx(std::numbers::pi / 2));

  CHECK_THROWS_AS(parse_angle(""), ConfigInvalid);
  CHECK_THROWS_AS(parse_angle("pie"), ConfigInvalid);
  CHECK_THROWS_AS(parse_angle("pi/0"), ConfigInvalid);
  CHECK_THROWS_AS(parse_angle("two pi"), ConfigInvalid);
}

TEST_CASE("angle grids expand lists and linear spans") {
  const auto spaced = parse_angle_grid("linspace:0:2pi:5");
  REQUIRE(spaced.size() == 5);
  CHECK(spaced.front() == doctest::Approx(0.0));
  CHECK(spaced[2] == doctest::Approx(std::numbers::pi));
  CHECK(spaced.back() == doctest::Approx(2 * std::numbers::pi));

  const auto listed = parse_angle_grid("0, pi/2, pi");
  REQUIRE(listed.size() == 3);
  CHECK(listed[1] == doctest::Approx(std::numbers::pi / 2));

  const auto single = parse_angle_grid("linspace:pi:pi:1");
  REQUIRE(single.size() == 1);
  CHECK(single[0] == doctest::Approx(std::numbers::pi));

  CHECK_THROWS_AS(parse_angle_grid("linspace:0:pi"), ConfigInvalid);
  CHECK_THROWS_AS(parse_angle_grid("linspace:0:pi:0"), ConfigInvalid);
  CHECK_THROWS_AS(parse_angle_grid(""), ConfigInvalid);
}

TEST_CASE("csv emitters pin their headers") {
  grover::SearchTrace trace;
  trace.success = {0.25, 1.0};
  const auto trace_csv = to_csv(trace);
  CHECK(trace_csv.rfind("iteration,success\n", 0) == 0);
  CHECK(trace_csv.find("\n0,0.25\n") != std::string::npos);
  CHECK(trace_csv.find("\n1,1\n") != std::string::npos);

  std::vector<grover::ScanPoint> points(1);
  points[0] = {1.0, 2.0, 0.5, 3};
  const auto scan_csv = to_csv(points);
  CHECK(scan_csv.rfind("theta,phi,peakSuccess,peakIteration\n", 0) == 0);
  CHECK(scan_csv.find("\n1,2,0.5,3\n") != std::string::npos);

  grover::RecallTrace recall;
  recall.congruent = {0.4, 0.9};
  recall.incongruent = {0.6, 0.1};
  const auto recall_csv = to_csv(recall);
  CHECK(recall_csv.rfind("iteration,congruentRecall,incongruentRecall\n", 0) ==
        0);

  const std::vector<double> phis{0.0};
  const std::vector<PartitionOfUnity> rows{
      PartitionOfUnity({"x0", "x1"}, {1.0, 0.0})};
  const auto wfw_csv = interference_csv(phis, rows);
  CHECK(wfw_csv.rfind("phi,f_x0,f_x1\n", 0) == 0);
  CHECK(wfw_csv.find("\n0,1,0\n") != std::string::npos);
}

}  // TEST_SUITE
