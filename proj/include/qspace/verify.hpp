#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qspace/config.hpp"

namespace qspace {

/// `finding` marks a documented convention mismatch; it does not fail a report.
enum class CheckStatus { exact_pass, numeric_pass, fail, finding };

std::string to_string(CheckStatus s);

struct Check {
  std::string id;
  std::string paper_ref;  // identity under test
  std::string anchor;     // formula checked, as text
  CheckStatus status = CheckStatus::fail;
  std::optional<double> tolerance;
  std::optional<std::string> witness;
};

struct SuiteOptions {
  double q = 1.3;
  std::uint64_t seed = 1;
  int window = 2;  // lattice window [-window, window] per coordinate
};

struct Report {
  std::string suite;
  double q = 1.3;
  std::uint64_t seed = 1;
  std::vector<Check> checks;  // sorted by id

  bool all_pass() const;
  Json to_json() const;
};

/// algebra, conjugation, phasespace, qexp, grassmann, lattice, all.
std::vector<std::string> suite_names();

/// Finer check groups; a suite is the union of its groups.
/// lattice = lattice.integration + lattice.weights + lattice.expectation.
std::vector<std::string> group_names();
std::vector<Check> run_group(std::string_view group, const SuiteOptions& opt);

/// Deterministic for fixed options. Throws unknown_symbol for an unknown suite.
Report run_suite(std::string_view name, const SuiteOptions& opt);

}  // namespace qspace
