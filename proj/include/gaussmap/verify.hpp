#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gaussmap {

struct SuiteResult {
  std::string suite;
  long cases = 0;
  long passed = 0;
  double max_residual = 0.0;
  bool ok = false;
  std::string detail;  // first failure, when any
};

// Identity/property suites over seeded random inputs and canonical meshes.
// Each runs every case, records the worst residual, and never stops early.
SuiteResult verify_egregium(long n, std::uint64_t seed);
SuiteResult verify_egregium2(long n, std::uint64_t seed);
SuiteResult verify_shape_formula(long n, std::uint64_t seed);
SuiteResult verify_degree_winding(long n, std::uint64_t seed);
SuiteResult verify_chord_oracle(long n, std::uint64_t seed);
SuiteResult verify_gauss_bonnet(std::uint64_t seed);
SuiteResult verify_index_sum(long n_directions, std::uint64_t seed);
SuiteResult verify_degree_sum(long n_directions, std::uint64_t seed);

std::vector<std::string> verify_suite_names();
SuiteResult run_verify_suite(const std::string& name, long n,
                             std::uint64_t seed);

}  // namespace gaussmap
