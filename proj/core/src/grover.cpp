#include "ctcog/grover.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "ctcog/errors.hpp"

namespace ctcog::grover {

namespace {

bool is_pow2(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

std::vector<std::size_t> canonical_marked(const SearchConfig& cfg) {
  auto marked = cfg.marked;
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  return marked;
}

void in_place_mixing(StateVector& psi) {
  const std::size_t n = psi.size();
  const double half = 1.0 / std::sqrt(2.0);
  for (std::size_t stride = 1; stride < n; stride <<= 1) {
    for (std::size_t block = 0; block < n; block += stride << 1) {
      for (std::size_t i = block; i < block + stride; ++i) {
        const auto a = psi[i];
        const auto b = psi[i + stride];
        psi[i] = (a + b) * half;
        psi[i + stride] = (a - b) * half;
      }
    }
  }
}

}  // namespace

void SearchConfig::validate() const {
  if (!is_pow2(item_count)) {
    throw DimensionError("item count " + std::to_string(item_count) +
                         " is not a power of two >= 2");
  }
  if (item_count > kMaxItems) {
    throw ResourceLimit("item count " + std::to_string(item_count) +
                        " exceeds " + std::to_string(kMaxItems));
  }
  if (iterations > kMaxIterations) {
    throw ResourceLimit("iteration count " + std::to_string(iterations) +
                        " exceeds " + std::to_string(kMaxIterations));
  }
  const auto marked_sorted = canonical_marked(*this);
  if (marked_sorted.empty()) {
    throw DimensionError("marked set is empty");
  }
  if (marked_sorted.size() != marked.size()) {
    throw DimensionError("marked set has duplicate indices");
  }
  if (marked_sorted.back() >= item_count) {
    throw DimensionError("marked index " +
                         std::to_string(marked_sorted.back()) +
                         " is out of range");
  }
  if (marked_sorted.size() >= item_count) {
    throw DimensionError("every item is marked; nothing to amplify");
  }
}

StateVector uniform_state(std::size_t item_count) {
  const double amp = 1.0 / std::sqrt(static_cast<double>(item_count));
  return StateVector(item_count, amp);
}

double marked_mass(const StateVector& psi,
                   std::span<const std::size_t> marked) {
  double mass = 0.0;
  for (const auto m : marked) {
    mass += std::norm(psi[m]);
  }
  return mass;
}

std::function<void(StateVector&)> build_iteration_operator(
    const SearchConfig& cfg) {
  cfg.validate();
  return [marked = canonical_marked(cfg),
          mark_phase = std::polar(1.0, cfg.phi),
          zero_phase = std::polar(1.0, cfg.theta),
          n = cfg.item_count](StateVector& psi) {
    if (psi.size() != n) {
      throw DimensionError("state has " + std::to_string(psi.size()) +
                           " amplitudes, expected " + std::to_string(n));
    }
    for (const auto m : marked) {
      psi[m] *= mark_phase;
    }
    in_place_mixing(psi);
    psi[0] *= zero_phase;
    in_place_mixing(psi);
  };
}

SearchTrace run(const SearchConfig& cfg) {
  cfg.validate();
  const auto marked = canonical_marked(cfg);
  const auto n = static_cast<double>(cfg.item_count);
  const auto mark_phase = std::polar(1.0, cfg.phi);
  const auto zero_shift = std::polar(1.0, cfg.theta) - 1.0;

  StateVector psi = uniform_state(cfg.item_count);
  SearchTrace trace;
  trace.success.reserve(cfg.iterations + 1);
  trace.success.push_back(marked_mass(psi, marked));
  trace.peak_success = trace.success.front();
  trace.peak_iteration = 0;

  for (std::size_t j = 1; j <= cfg.iterations; ++j) {
    for (const auto m : marked) {
      psi[m] *= mark_phase;
    }
    std::complex<double> sum = 0.0;
    for (const auto& amp : psi) {
      sum += amp;
    }
    const auto shift = zero_shift * sum / n;
    for (auto& amp : psi) {
      amp += shift;
    }
    const double s = marked_mass(psi, marked);
    trace.success.push_back(s);
    if (s > trace.peak_success) {
      trace.peak_success = s;
      trace.peak_iteration = j;
    }
  }
  return trace;
}

double matched_success(std::size_t item_count, std::size_t marked_count,
                       std::size_t iterations) {
  const double t = std::asin(std::sqrt(static_cast<double>(marked_count) /
                                       static_cast<double>(item_count)));
  const double s = std::sin(static_cast<double>(2 * iterations + 1) * t);
  return s * s;
}

std::size_t optimal_iterations(std::size_t item_count,
                               std::size_t marked_count) {
  if (!is_pow2(item_count)) {
    throw DimensionError("item count " + std::to_string(item_count) +
                         " is not a power of two >= 2");
  }
  if (marked_count == 0 || marked_count >= item_count) {
    throw DimensionError("marked count " + std::to_string(marked_count) +
                         " must be in [1, item count)");
  }
  const double t = std::asin(std::sqrt(static_cast<double>(marked_count) /
                                       static_cast<double>(item_count)));
  const double estimate = std::numbers::pi / (4.0 * t) - 0.5;
  const auto floor_j =
      static_cast<std::size_t>(std::max(0.0, std::floor(estimate)));
  if (matched_success(item_count, marked_count, floor_j + 1) >
      matched_success(item_count, marked_count, floor_j)) {
    return floor_j + 1;
  }
  return floor_j;
}

std::vector<ScanPoint> phase_scan(std::size_t item_count,
                                  std::size_t marked_count,
                                  std::span<const double> thetas,
                                  std::span<const double> phis,
                                  std::size_t iteration_cap, unsigned jobs) {
  if (marked_count == 0 || marked_count >= item_count) {
    throw DimensionError("marked count " + std::to_string(marked_count) +
                         " must be in [1, item count)");
  }
  std::vector<std::size_t> marked(marked_count);
  for (std::size_t i = 0; i < marked_count; ++i) {
    marked[i] = i;
  }
  std::vector<ScanPoint> points;
  points.reserve(thetas.size() * phis.size());
  for (const double theta : thetas) {
    for (const double phi : phis) {
      points.push_back(ScanPoint{theta, phi, 0.0, 0});
    }
  }
  // Validate once up front so worker threads cannot throw.
  SearchConfig probe{item_count, marked, std::numbers::pi, std::numbers::pi,
                     iteration_cap};
  probe.validate();

  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const SearchConfig cfg{item_count, marked, points[k].theta,
                             points[k].phi, iteration_cap};
      const auto trace = run(cfg);
      points[k].peak_success = trace.peak_success;
      points[k].peak_iteration = trace.peak_iteration;
    }
  };

  const std::size_t total = points.size();
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(jobs, total));
  if (workers == 1) {
    work(0, total);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin < end) {
        threads.emplace_back(work, begin, end);
      }
    }
    for (auto& t : threads) {
      t.join();
    }
  }
  return points;
}

RecallTrace mood_congruent_recall(std::span<const char> tags, char mood,
                                  double theta, double phi,
                                  std::size_t iterations) {
  std::vector<std::size_t> marked;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (tags[i] == mood) {
      marked.push_back(i);
    }
  }
  if (marked.empty()) {
    throw NoCongruentItems("no item tag matches mood '" +
                           std::string(1, mood) + "'");
  }

  RecallTrace recall;
  recall.item_count = tags.size();
  recall.congruent_count = marked.size();

  if (marked.size() == tags.size()) {
    recall.congruent.assign(iterations + 1, 1.0);
    recall.incongruent.assign(iterations + 1, 0.0);
    recall.peak_congruent = 1.0;
    recall.peak_iteration = 0;
    return recall;
  }

  const SearchConfig cfg{tags.size(), std::move(marked), theta, phi,
                         iterations};
  const auto trace = run(cfg);
  recall.congruent = trace.success;
  recall.incongruent.reserve(trace.success.size());
  for (const double s : trace.success) {
    recall.incongruent.push_back(1.0 - s);
  }
  recall.peak_congruent = trace.peak_success;
  recall.peak_iteration = trace.peak_iteration;
  return recall;
}

}  // namespace ctcog::grover
