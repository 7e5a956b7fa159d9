#include "conway13/differential.hpp"

#include <thread>
#include <vector>

namespace conway13 {

namespace {

struct WorkerResult {
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::optional<Integer> first_counterexample;
};

DiffReport merge(std::vector<WorkerResult> results) {
  DiffReport report;
  for (auto& r : results) {
    report.cases += r.cases;
    report.mismatches += r.mismatches;
    // Workers cover contiguous ascending partitions, so the first
    // counterexample overall is the first worker's.
    if (!report.first_counterexample && r.first_counterexample)
      report.first_counterexample = std::move(r.first_counterexample);
  }
  return report;
}

void check_one(const Integer& x, detail::ReRadixExponentRule rule, WorkerResult& out) {
  ++out.cases;
  if (detail::phase3_with_rule(x, rule) != oracle::oracle_f(x)) {
    ++out.mismatches;
    if (!out.first_counterexample) out.first_counterexample = x;
  }
}

}  // namespace

DiffReport diff_exhaustive(unsigned max_digits, const DiffOptions& options) {
  Integer upper;
  mpz_ui_pow_ui(upper.get_mpz_t(), 13ul, max_digits);
  const unsigned jobs = options.jobs ? options.jobs : 1;
  std::vector<WorkerResult> results(jobs);
  std::vector<std::thread> threads;
  const Integer chunk = (upper + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    threads.emplace_back([&, j] {
      Integer x = chunk * j;
      Integer stop = chunk * (j + 1);
      if (stop > upper) stop = upper;
      for (; x < stop; ++x) check_one(x, options.rule, results[j]);
    });
  }
  for (auto& t : threads) t.join();
  return merge(std::move(results));
}

DiffReport diff_generated(std::uint64_t start_seed, std::uint64_t count,
                          std::optional<oracle::GeneratorProfile> profile,
                          const DiffOptions& options) {
  const unsigned jobs = options.jobs ? options.jobs : 1;
  std::vector<WorkerResult> results(jobs);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (count + jobs - 1) / jobs;
  constexpr std::size_t kProfileCount = std::size(oracle::kAllProfiles);
  for (unsigned j = 0; j < jobs; ++j) {
    threads.emplace_back([&, j] {
      const std::uint64_t begin = chunk * j;
      const std::uint64_t end = begin + chunk < count ? begin + chunk : count;
      for (std::uint64_t i = begin; i < end; ++i) {
        const std::uint64_t seed = start_seed + i;
        const oracle::GeneratorProfile p =
            profile ? *profile : oracle::kAllProfiles[i % kProfileCount];
        Integer x = oracle::gen_structured(seed, p);
        if (i % 2 == 1) x = -x;
        check_one(x, options.rule, results[j]);
      }
    });
  }
  for (auto& t : threads) t.join();
  return merge(std::move(results));
}

}  // namespace conway13
