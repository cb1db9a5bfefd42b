#pragma once
// Named batteries of structural checks over the builtin corpus, shared by the
// command-line tool and the acceptance harness.  Every check is deterministic
// for a fixed seed.

#include <string>
#include <utility>
#include <vector>

#include "pathcat/sset.hpp"

namespace pathcat {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string witness;  // empty when ok; otherwise a minimal counterexample
};

// The builtin corpus: standard simplices n = 1..4, the boundary of the
// 2-simplex, spheres n = 1..4, the thickened interval, and a wedge of a
// 1-sphere and a 2-sphere; paired with their grammar names.
std::vector<std::pair<std::string, SSet>> verification_corpus();

// Suites: coalgebra, cobar, enrichment, szczarba, phi, and all.
std::vector<std::string> verify_suite_names();
std::vector<CheckResult> run_suite(const std::string& suite, unsigned seed);

}  // namespace pathcat
