#pragma once

// Randomized exact property suite behind the `invariants` command.

#include <cstdint>
#include <string>
#include <vector>

#include "torelli/exterior.hpp"

namespace torelli {

struct Verdict {
  std::string check;
  std::string outcome;  ///< PASS / FAIL, or a classification such as NONTRIVIAL
  bool failed = false;
  std::string detail;

  static Verdict pass_fail(std::string check, bool ok, std::string detail = {}) {
    return {std::move(check), ok ? "PASS" : "FAIL", !ok, std::move(detail)};
  }
};

/// Runs every named property `trials` times on seeded random inputs in the
/// given space. Results are sorted by check name.
std::vector<Verdict> run_property_suite(const SymplecticSpace& space, std::uint64_t seed, int trials);

}  // namespace torelli
