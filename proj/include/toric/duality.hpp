#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "toric/fan.hpp"
#include "toric/rational_matrix.hpp"

namespace toric {

struct DualityReport {
  Fan fan;
  RationalMatrix m_int;
  RationalMatrix m_cup;
  RationalMatrix product;  // m_int * m_cup
  bool identity_holds = false;
  bool oracle_agrees = false;  // mat_inverse(m_cup) == m_int
};

/// Requires ray(n+1) = (1,0).
DualityReport verify_duality(const Fan& f);

/// Seed of trial `index` under `master`. Two rounds of the splitmix64
/// finalizer: trial_seed = mix(mix(master) + index * 0x9e3779b97f4a7c15).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

struct BatchFailure {
  std::uint64_t trial;
  std::uint64_t seed;
  DualityReport report;
};

struct BatchSummary {
  std::size_t trials = 0;
  std::size_t generation_failures = 0;
  std::vector<BatchFailure> failures;  // ordered by trial
  std::chrono::duration<double> elapsed{};

  bool passed() const { return failures.empty(); }
};

struct BatchOptions {
  std::size_t trials = 0;
  std::size_t min_rays = 3;
  std::size_t max_rays = 3;
  std::int64_t coord_bound = 1;
  std::uint64_t seed = 0;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// The fan of trial `trial`: its ray count is drawn uniformly from
/// [min_rays, max_rays] and its rays from random_complete_fan, both keyed by
/// trial_seed(options.seed, trial). May throw GenerationFailed.
Fan trial_fan(const BatchOptions& options, std::uint64_t trial);

/// Trial k draws its ray count uniformly from [min_rays, max_rays] and its fan
/// from random_complete_fan, both from trial_seed(seed, k). Results do not
/// depend on the thread count.
BatchSummary batch_verify(const BatchOptions& options);

}  // namespace toric
