#ifndef SEMIMOD_SEMIGROUP_HPP_
#define SEMIMOD_SEMIGROUP_HPP_

#include <compare>
#include <vector>

#include "integer.hpp"

namespace semimod {

  // The numerical semigroup <alpha, beta> = { i*alpha + j*beta : i, j >= 0 }
  // with 2 <= alpha < beta and gcd(alpha, beta) = 1.
  class SemigroupPair {
   public:
    // Throws InvalidInput unless 2 <= alpha < beta and gcd(alpha, beta) = 1.
    SemigroupPair(Int alpha, Int beta);

    Int alpha() const noexcept {
      return _alpha;
    }
    Int beta() const noexcept {
      return _beta;
    }
    // alpha * beta
    Int product() const noexcept {
      return _product;
    }
    // The largest gap, alpha * beta - alpha - beta.
    Int frobenius() const noexcept {
      return _frobenius;
    }
    // (alpha - 1)(beta - 1) / 2
    Int gap_count() const noexcept {
      return (_alpha - 1) * (_beta - 1) / 2;
    }

    Int alpha_inverse_mod_beta() const noexcept {
      return _alpha_inv_mod_beta;
    }
    Int beta_inverse_mod_alpha() const noexcept {
      return _beta_inv_mod_alpha;
    }

    friend bool operator==(SemigroupPair const&, SemigroupPair const&)
        = default;

   private:
    Int _alpha;
    Int _beta;
    Int _product;
    Int _frobenius;
    Int _alpha_inv_mod_beta;
    Int _beta_inv_mod_alpha;
  };

  // n = p * alpha * beta - a * alpha - b * beta with p > 0, 0 <= a < beta,
  // 0 <= b < alpha. Every n > 0 has exactly one such triple.
  struct Presentation {
    Int p;
    Int a;
    Int b;

    friend bool operator==(Presentation const&, Presentation const&) = default;
  };

  // A gap alpha*beta - a*alpha - b*beta, identified with the lattice point
  // (a, b) strictly inside the triangle (0,0), (beta,0), (0,alpha).
  struct GapPoint {
    Int value;
    Int a;
    Int b;

    friend bool operator==(GapPoint const&, GapPoint const&) = default;
  };

  // Value of the lattice point (a, b): alpha*beta - a*alpha - b*beta.
  // Positive exactly for points below the diagonal; may be <= 0 otherwise.
  Int point_value(SemigroupPair const& S, Int a, Int b);

  // Computed from residues; n <= 0 throws InvalidInput.
  Presentation presentation(SemigroupPair const& S, Int n);

  Int presentation_value(SemigroupPair const& S, Presentation const& pr);

  // n < 0 throws InvalidInput.
  bool is_member(SemigroupPair const& S, Int n);

  // True for n > 0 not in the semigroup; false for everything else,
  // including negative n.
  bool is_gap(SemigroupPair const& S, Int n);

  // Gap point of a gap; throws InvalidInput if n is not a gap.
  GapPoint gap_point(SemigroupPair const& S, Int n);

  // All gaps in increasing order of value.
  std::vector<GapPoint> gaps(SemigroupPair const& S);

  // Membership table for 0..bound inclusive.
  std::vector<bool> membership_table(SemigroupPair const& S, Int bound);

}  // namespace semimod

#endif  // SEMIMOD_SEMIGROUP_HPP_
