#include "toric/duality.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "toric/cellular.hpp"
#include "toric/chow.hpp"
#include "toric/error.hpp"

namespace toric {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Partial {
  std::size_t generation_failures = 0;
  std::vector<BatchFailure> failures;
  std::exception_ptr error;
};

void run_trial(const BatchOptions& options, std::uint64_t trial, Partial& out) {
  DualityReport report = verify_duality(trial_fan(options, trial));
  if (!report.identity_holds || !report.oracle_agrees) {
    out.failures.push_back({trial, trial_seed(options.seed, trial), std::move(report)});
  }
}

}  // namespace

DualityReport verify_duality(const Fan& f) {
  DualityReport report{f, intersection_matrix(f), cup_matrix(f), {}, false, false};
  report.product = mat_mul(report.m_int, report.m_cup);
  report.identity_holds = report.product.is_identity();
  try {
    report.oracle_agrees = mat_inverse(report.m_cup) == report.m_int;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    report.oracle_agrees = false;
  }
  return report;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) + index * 0x9e3779b97f4a7c15ULL);
}

Fan trial_fan(const BatchOptions& options, std::uint64_t trial) {
  const std::uint64_t seed = trial_seed(options.seed, trial);
  const std::uint64_t span = options.max_rays - options.min_rays + 1;
  const std::size_t ray_count = options.min_rays + splitmix64(seed) % span;
  return random_complete_fan(ray_count, options.coord_bound, seed);
}

BatchSummary batch_verify(const BatchOptions& options) {
  if (options.min_rays < 3 || options.max_rays < options.min_rays) {
    throw Error(ErrorCode::InvalidArgument, "ray count range must satisfy 3 <= min <= max");
  }
  if (options.coord_bound < 1) {
    throw Error(ErrorCode::InvalidArgument, "coord_bound must be at least 1");
  }
  const auto start = std::chrono::steady_clock::now();
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(
                                                         std::max<std::size_t>(options.trials, 1))));

  std::vector<Partial> partials(threads);
  auto worker = [&](unsigned t) {
    for (std::uint64_t k = t; k < options.trials; k += threads) {
      try {
        run_trial(options, k, partials[t]);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::GenerationFailed) {
          partials[t].error = std::current_exception();
          return;
        }
        ++partials[t].generation_failures;
      } catch (...) {
        partials[t].error = std::current_exception();
        return;
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  BatchSummary summary;
  summary.trials = options.trials;
  for (auto& p : partials) {
    if (p.error) std::rethrow_exception(p.error);
    summary.generation_failures += p.generation_failures;
    for (auto& failure : p.failures) summary.failures.push_back(std::move(failure));
  }
  std::sort(summary.failures.begin(), summary.failures.end(),
            [](const BatchFailure& x, const BatchFailure& y) { return x.trial < y.trial; });
  summary.elapsed = std::chrono::steady_clock::now() - start;
  return summary;
}

}  // namespace toric
