#ifndef SEMIMOD_VERIFY_HPP_
#define SEMIMOD_VERIFY_HPP_

#include <string>
#include <vector>

#include "semigroup.hpp"

namespace semimod {

  struct CheckResult {
    std::string name;
    bool        passed;
    std::string detail;
  };

  struct VerifyOptions {
    bool          deep = false;
    // exhaustive below this many objects, seeded random samples above
    Int           exhaustive_limit = 20000;
    Int           samples          = 1000;
    std::uint64_t seed             = 20240601;
  };

  // Cross-checks every closed form and every pair of independent routes on
  // one semigroup: presentations vs. naive membership, enumeration vs.
  // formulas, the path bijection, the cycle lemma, syzygy vs. the pairwise
  // intersection definition, the path-matrix syzygy, periodicity, orbit
  // tables vs. brute force and orbit witnesses. `deep` adds the slower
  // whole-stream and all-n checks.
  std::vector<CheckResult> run_verification(SemigroupPair const& S,
                                            VerifyOptions const& options = {});

}  // namespace semimod

#endif  // SEMIMOD_VERIFY_HPP_
