#ifndef SEMIMOD_COUNTING_HPP_
#define SEMIMOD_COUNTING_HPP_

#include <map>
#include <vector>

#include "semigroup.hpp"

namespace semimod {

  // Number of lean sets with r gaps, (1/(r+1)) C(alpha-1, r) C(beta-1, r);
  // equivalently, semimodule classes with r + 1 generators. 0 for r >= alpha.
  Int count_lean_sets(SemigroupPair const& S, Int r);

  // (1/(alpha+beta)) C(alpha+beta, alpha)
  Int count_lean_sets_total(SemigroupPair const& S);

  // N(alpha, r + 1) = count_lean_sets(<alpha, alpha+1>, r).
  Int narayana(Int alpha, Int r);

  // C_alpha = count_lean_sets_total(<alpha, alpha+1>).
  Int catalan(Int alpha);

  // Semimodules with n generators and Syz^(ell)(Delta) isomorphic to Delta.
  // Zero when n/ell does not divide alpha*beta. Requires ell | n and
  // 1 <= n <= alpha.
  Int count_ell_periodic(SemigroupPair const& S, Int n, Int ell);

  // Fixed points with n generators, 1 <= n <= alpha.
  Int count_fixed_points(SemigroupPair const& S, Int n);

  struct CountRow {
    Int ell;
    // |A_ell|: Syz^(ell) isomorphic to Delta
    Int periodic;
    // period exactly ell
    Int exact;
    // exact / ell
    Int orbits;

    friend bool operator==(CountRow const&, CountRow const&) = default;
  };

  struct CountTable {
    Int                   n;
    // one row per divisor of n, ascending
    std::vector<CountRow> rows;

    CountRow const& row(Int ell) const;

    friend bool operator==(CountTable const&, CountTable const&) = default;
  };

  // Exact-period counts by Moebius inversion over the divisors of n.
  CountTable orbit_count_table(SemigroupPair const& S, Int n);

  // The same table from enumeration: every lean set with n - 1 gaps, period
  // by iterated syzygy on its path matrix. Partitions of the enumeration are
  // processed on `threads` workers (0 = hardware concurrency); the result
  // does not depend on the thread count.
  CountTable brute_force_orbit_table(SemigroupPair const& S,
                                     Int                  n,
                                     unsigned             threads = 0);

  // Enumerated period histogram for n generators: period -> count.
  std::map<Int, Int> brute_force_periods(SemigroupPair const& S,
                                         Int                  n,
                                         unsigned             threads = 0);

}  // namespace semimod

#endif  // SEMIMOD_COUNTING_HPP_
