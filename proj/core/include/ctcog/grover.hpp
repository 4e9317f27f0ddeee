#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace ctcog::grover {

using StateVector = std::vector<std::complex<double>>;

// Hard caps keeping a single run inside interactive budgets.
inline constexpr std::size_t kMaxItems = std::size_t{1} << 14;
inline constexpr std::size_t kMaxIterations = 10000;

// One amplitude-amplification problem: item_count addresses, a marked
// subset, and the two rotation angles. theta rotates the component along
// the uniform start state, phi rotates the marked components; the textbook
// search is theta = phi = pi.
struct SearchConfig {
  std::size_t item_count = 0;
  std::vector<std::size_t> marked;
  double theta = std::numbers::pi;
  double phi = std::numbers::pi;
  std::size_t iterations = 0;

  // Throws DimensionError when item_count is not a power of two >= 2 or the
  // marked set is empty, has duplicates, is out of range, or exhausts all
  // items; ResourceLimit
  // when item_count or iterations exceed the caps.
  void validate() const;
};

StateVector uniform_state(std::size_t item_count);
double marked_mass(const StateVector& psi, std::span<const std::size_t> marked);

// One sweep as explicit gates: phase on the marked addresses, then the
// reflection about the start state spelled out as per-line mixing, a phase
// on the all-zero address, and the mixing undone. Costs
// O(item_count * log(item_count)) per call; used as an independent route to
// the same operator the fast update takes.
std::function<void(StateVector&)> build_iteration_operator(
    const SearchConfig& cfg);

struct SearchTrace {
  // success[j] is the marked mass after j sweeps; size iterations + 1.
  std::vector<double> success;
  double peak_success = 0.0;
  std::size_t peak_iteration = 0;
};

// Runs the sweeps with the O(item_count) algebraic update per sweep.
SearchTrace run(const SearchConfig& cfg);

// sin^2((2j+1) asin(sqrt(M/N))): success after j matched-phase sweeps,
// the closed form the simulation is checked against.
double matched_success(std::size_t item_count, std::size_t marked_count,
                       std::size_t iterations);

// Iteration count maximizing matched_success; ties go to fewer sweeps.
std::size_t optimal_iterations(std::size_t item_count,
                               std::size_t marked_count);

struct ScanPoint {
  double theta = 0.0;
  double phi = 0.0;
  double peak_success = 0.0;
  std::size_t peak_iteration = 0;
};

// Peak success within iteration_cap sweeps for every (theta, phi) in the
// grid, theta-major. jobs > 1 splits the grid across threads; the output
// order and every value are identical for any jobs.
std::vector<ScanPoint> phase_scan(std::size_t item_count,
                                  std::size_t marked_count,
                                  std::span<const double> thetas,
                                  std::span<const double> phis,
                                  std::size_t iteration_cap, unsigned jobs = 1);

struct RecallTrace {
  // Mass on the matching and non-matching items after each sweep.
  std::vector<double> congruent;
  std::vector<double> incongruent;
  std::size_t congruent_count = 0;
  std::size_t item_count = 0;
  double peak_congruent = 0.0;
  std::size_t peak_iteration = 0;
};

// Recall of mood-congruent items: items whose tag equals mood are marked
// and amplified. Throws NoCongruentItems when no tag matches. When every
// tag matches, recall is 1 throughout and no sweeps are needed.
RecallTrace mood_congruent_recall(std::span<const char> tags, char mood,
                                  double theta, double phi,
                                  std::size_t iterations);

}  // namespace ctcog::grover
