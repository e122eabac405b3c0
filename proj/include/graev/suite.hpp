#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace graev {

struct PropertyOutcome {
  std::string group;
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string counterexample;  // first failing instance
  bool ok() const { return failed == 0 && checked > 0; }
};

// Instance counts per property. Defaults are the release thresholds.
struct SuiteOptions {
  std::uint64_t seed = 7;
  std::size_t oracle_random = 10000;
  std::size_t norm_instances = 1000;
  std::size_t contraction_pairs = 500;
  std::size_t scaling_instances = 200;
  std::size_t transport_instances = 200;
  std::size_t partial_contractions = 1000;
  std::size_t cross_samples = 200;
  std::size_t pigeonhole_products = 1000;
  std::size_t random_instances = 500;
};

// sigma, words, spaces, oracle, norm, contraction, extension, conjugates,
// rescaling, obstruction, search.
const std::vector<std::string>& suite_groups();

// Runs one group, or every group for "all". Each group draws from its own
// generator seeded from (seed, group), so results do not depend on which
// other groups run. Throws std::invalid_argument for unknown groups.
std::vector<PropertyOutcome> run_suite(std::string_view selection, const SuiteOptions& options);

// One line per property plus a summary line; byte-identical for equal input.
std::string format_suite(const std::vector<PropertyOutcome>& outcomes);

}  // namespace graev
