#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domchain/hfree.hpp"
#include "domchain/parameter.hpp"

namespace domchain {

// One checked claim. `source` is "quoted" for values and inequalities the
// boundedness results state, "derived" for textbook facts and computed
// constants.
struct ClaimCheck {
  std::string suite;
  std::string id;
  std::string source;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::vector<std::string> suites;  // empty: every suite
  std::optional<int> max_order;     // corpus order; per-suite default if unset
  int n_min = 2;                    // closed-form family sizes
  int n_max = 6;
  int jobs = 0;
};

struct VerifyReport {
  std::vector<ClaimCheck> checks;

  bool passed() const;
};

inline constexpr std::string_view kVerifySuites[] = {
    "oracles", "chain", "saturation", "ramsey",
    "bipartite", "zverovich", "konig", "profiles"};

// Throws InvalidArgument for an unknown suite name.
VerifyReport run_verify(const VerifyOptions& options);

// A forbidden family at fixed n with the parameter it bounds.
struct TheoremInstance {
  std::string id;
  ForbiddenFamily family;
  Param param;
};

// The boundedness characterisations instantiated at n = 2 (with P4 as the
// path member and BS2^2 standing in for the empty bistar range).
std::vector<TheoremInstance> theorem_instances_n2();

}  // namespace domchain
