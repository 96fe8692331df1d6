#ifndef SEMIMOD_SYZYGY_HPP_
#define SEMIMOD_SYZYGY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lattice_path.hpp"
#include "semimodule.hpp"

namespace semimod {

  // [I, J] with both sequences numbered right to left along the path of I:
  // I = [0, i_1, ..., i_r] lists the gaps of the lean set in descending
  // a-coordinate order, J lists the SE-turn labels.
  struct FundamentalCouple {
    std::vector<Int> I;
    std::vector<Int> J;

    friend bool operator==(FundamentalCouple const&,
                           FundamentalCouple const&) = default;
  };

  FundamentalCouple fundamental_couple(LeanSet const& L);

  struct CoupleCheck {
    bool        valid = true;
    // "shape", "0", "1", "2" or "3"; empty when valid
    std::string clause;
    std::size_t index = 0;
    std::string message;
  };

  // Checks the four defining conditions literally and reports the first
  // violation found (conditions in order, indices ascending within each).
  CoupleCheck validate_fundamental_couple(SemigroupPair const& S,
                                          std::span<Int const> I,
                                          std::span<Int const> J);

  // Syz(Delta) generated by the J of the fundamental couple of Delta's
  // normalization, shifted back by min Delta. Not normalized.
  // Syz(Gamma + c) = alpha*beta + c + Gamma.
  Semimodule syzygy(Semimodule const& M);

  // Syz^(k)(Delta), k >= 0.
  Semimodule syzygy_power(Semimodule const& M, std::size_t k);

  // Elements with at least two presentations i + gamma, found by scanning
  // [min, 2*alpha*beta + max generator], then minimised. Requires at least
  // two generators (the defining union is empty otherwise).
  Semimodule syzygy_oracle(Semimodule const& M);

  // Elements <= bound of the union over all pairs i != i' of
  // (i + Gamma) cap (i' + Gamma).
  std::vector<Int> syzygy_elements_all_pairs(SemigroupPair const& S,
                                             std::span<Int const> I,
                                             Int                  bound);

  // Same union restricted to cyclically consecutive pairs (i_k, i_{k+1})
  // and (i_0, i_m) of I taken in couple order.
  std::vector<Int> syzygy_elements_consecutive(SemigroupPair const& S,
                                               std::span<Int const> I,
                                               Int                  bound);

  // Top row advanced by one column, bottom row fixed. Its admissible
  // rotation is the matrix of the normalized syzygy.
  PathMatrix syzygy_matrix(PathMatrix const& M);

  // One step Delta -> Syz(Delta)° on the path side.
  PathMatrix normalized_syzygy_matrix(SemigroupPair const& S,
                                      PathMatrix const&    M);

  struct OrbitReport {
    std::size_t             generator_count;
    std::size_t             period;
    // Delta° = Delta_1, Delta_2, ..., Delta_period (normalized)
    std::vector<Semimodule> cycle;
  };

  // Iterates Delta -> Syz(Delta)° until the start recurs.
  OrbitReport syzygy_period(Semimodule const& M);

  // Period computed on path matrices; M must stay below the diagonal.
  std::size_t syzygy_period(SemigroupPair const& S, PathMatrix const& M);

  // The block matrix with down-block [1, ..., 1, alpha/m' - m + 1] repeated
  // m' times and right-block [1, ..., 1, beta/k' - k + 1] repeated k' times,
  // where m' = gcd(alpha, n/ell), k' = gcd(beta, n/ell), m = ell*k' and
  // k = ell*m'. Requires ell | n, n < alpha and (n/ell) | alpha*beta.
  PathMatrix orbit_witness_matrix(SemigroupPair const& S, Int n, Int ell);

  // The semimodule of the admissible rotation of orbit_witness_matrix; its
  // syzygy period is exactly ell.
  Semimodule orbit_witness(SemigroupPair const& S, Int n, Int ell);

}  // namespace semimod

#endif  // SEMIMOD_SYZYGY_HPP_
