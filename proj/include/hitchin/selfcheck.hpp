#ifndef HITCHIN_SELFCHECK_HPP
#define HITCHIN_SELFCHECK_HPP

#include "hitchin/config.hpp"
#include "hitchin/strata.hpp"
#include "hitchin/wobbly.hpp"

namespace hitchin {

struct CheckGroup {
  std::string name;
  bool passed;
  int64_t checks;        // number of individual comparisons run
  std::string detail;    // first failure or exception text, empty when clean
};

struct SelfCheckReport {
  std::vector<CheckGroup> groups;
  bool all_passed() const {
    for (auto& g : groups)
      if (!g.passed) return false;
    return true;
  }
};

/// Runs every module's invariant suite against the configured instance.
/// Exceptions inside a group mark it failed instead of propagating.
SelfCheckReport run_selfcheck(const Instance& inst, uint64_t seed);

}  // namespace hitchin

#endif
