#ifndef DEPTH2_VERIFY_HPP
#define DEPTH2_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace depth2 {

struct SuiteParams {
  /// Largest algebra (atoms) and frame (worlds) enumerated; unset means the
  /// suite default.
  std::optional<int> atoms;
  std::optional<int> worlds;
  unsigned workers = 0;
};

struct SuiteFailure {
  std::string instance;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string suite;
  std::string citation;
  int atoms = 0;
  int worlds = 0;
  std::uint64_t checked = 0;
  std::vector<SuiteFailure> failures;
  double elapsed_ms = 0;
  bool passed = false;
  std::vector<std::string> notes;
};

struct SuiteInfo {
  std::string name;
  std::string citation;
  int default_atoms;
  int default_worlds;
  int max_atoms;
  int max_worlds;
};

const std::vector<SuiteInfo>& suite_catalog();

/// Throws LookupError for unknown suites and SizeError for bounds beyond
/// the suite maximum.
VerificationReport run_suite(std::string_view name, const SuiteParams& params = {});

}  // namespace depth2

#endif  // DEPTH2_VERIFY_HPP
