#pragma once

// Property suites behind `scs verify`. Every invariant reports how many
// cases it checked and the worst residual it saw.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scs::verify {

struct InvariantResult {
  std::string id;
  bool passed = true;
  std::size_t count = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string note;
};

/// su2, pure, mixed, oracle, all
const std::vector<std::string>& suite_names();
bool is_known_suite(std::string_view name);

/// Throws std::invalid_argument for an unknown suite name.
std::vector<InvariantResult> run_suite(std::string_view suite,
                                       std::uint64_t seed);

std::string format_result(const InvariantResult& r);

}  // namespace scs::verify
