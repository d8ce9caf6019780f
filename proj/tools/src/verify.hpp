#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bgc::cli {

struct PropertyTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  bool validation = false;            // failures here mean invalid input, not a broken identity
  std::vector<std::string> failures;  // first few instances

  bool ok() const { return passed == total; }
  void record(bool holds, const std::string& instance);
};

/// Observations reported but not counted as failures.
struct Diagnostic {
  std::string name;
  std::string detail;
};

struct SuiteResult {
  std::vector<PropertyTally> properties;
  std::vector<Diagnostic> diagnostics;

  bool validationFailed() const;
  bool propertyFailed() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int count = 50;
  /// Flip the sign of one differential in the first generated complex.
  bool injectFault = false;
  /// Modes per model that also get the (slow) harmonic decomposition check.
  int harmonicModes = 6;
};

/// Double-complex properties over `count` generated complexes.
SuiteResult runCoreSuite(const SuiteOptions& o);
/// Mode-level identities on the plane and four-space models at `count` random modes.
SuiteResult runGeometrySuite(const SuiteOptions& o);

}  // namespace bgc::cli
