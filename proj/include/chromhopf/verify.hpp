#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace chromhopf {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  bool ok = true;
  /// Graph in text format for the first failure, empty when ok.
  std::string counterexample;
  std::string detail;
};

/// coassoc, counit, cointeraction, antipode, engines, signs, stanley,
/// mobius, wsym, projection.
const std::vector<std::string>& suite_names();

/// Checks the named identities on every isoclass with at most max_n
/// vertices. Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, int max_n);

}  // namespace chromhopf
