#include "semimod/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace semimod {

  SemigroupPair::SemigroupPair(Int alpha, Int beta)
      : _alpha(alpha), _beta(beta) {
    if (alpha < 2) {
      throw InvalidInput("alpha must be at least 2, got "
                         + std::to_string(alpha));
    }
    if (beta <= alpha) {
      throw InvalidInput("beta must exceed alpha, got alpha = "
                         + std::to_string(alpha)
                         + ", beta = " + std::to_string(beta));
    }
    if (std::gcd(alpha, beta) != 1) {
      throw InvalidInput("alpha and beta must be coprime, got gcd("
                         + std::to_string(alpha) + ", " + std::to_string(beta)
                         + ") = " + std::to_string(std::gcd(alpha, beta)));
    }
    _product = checked_mul(alpha, beta);
    // headroom for the 2*alpha*beta windows used by the oracles
    checked_mul(_product, 4);
    _frobenius = _product - alpha - beta;
    _alpha_inv_mod_beta = mod_inverse(alpha, beta);
    _beta_inv_mod_alpha = mod_inverse(beta, alpha);
  }

  Int point_value(SemigroupPair const& S, Int a, Int b) {
    return checked_sub(
        checked_sub(S.product(), checked_mul(a, S.alpha())),
        checked_mul(b, S.beta()));
  }

  Presentation presentation(SemigroupPair const& S, Int n) {
    if (n <= 0) {
      throw InvalidInput("presentation requires n >= 1, got "
                         + std::to_string(n));
    }
    Int const alpha = S.alpha(), beta = S.beta();
    // n = -b*beta (mod alpha) and n = -a*alpha (mod beta)
    Int const b = mod_floor(
        checked_mul(mod_floor(-n, alpha), S.beta_inverse_mod_alpha()), alpha);
    Int const a = mod_floor(
        checked_mul(mod_floor(-n, beta), S.alpha_inverse_mod_beta()), beta);
    Int const num = checked_add(
        checked_add(n, checked_mul(a, alpha)), checked_mul(b, beta));
    Int const p = exact_div(num, S.product(), "presentation p");
    SEMIMOD_ENSURE(p > 0, "presentation produced p <= 0");
    return {p, a, b};
  }

  Int presentation_value(SemigroupPair const& S, Presentation const& pr) {
    return checked_sub(checked_sub(checked_mul(pr.p, S.product()),
                                   checked_mul(pr.a, S.alpha())),
                       checked_mul(pr.b, S.beta()));
  }

  bool is_member(SemigroupPair const& S, Int n) {
    if (n < 0) {
      throw InvalidInput("membership of a negative integer: "
                         + std::to_string(n));
    }
    if (n == 0) {
      return true;
    }
    auto const pr = presentation(S, n);
    return pr.p >= 2 || pr.a == 0 || pr.b == 0;
  }

  bool is_gap(SemigroupPair const& S, Int n) {
    return n > 0 && n <= S.frobenius() && !is_member(S, n);
  }

  GapPoint gap_point(SemigroupPair const& S, Int n) {
    if (!is_gap(S, n)) {
      throw InvalidInput(std::to_string(n) + " is not a gap of <"
                         + std::to_string(S.alpha()) + ","
                         + std::to_string(S.beta()) + ">");
    }
    auto const pr = presentation(S, n);
    return {n, pr.a, pr.b};
  }

  std::vector<GapPoint> gaps(SemigroupPair const& S) {
    std::vector<GapPoint> result;
    result.reserve(S.gap_count());
    for (Int a = 1; a < S.beta(); ++a) {
      for (Int b = 1; b < S.alpha(); ++b) {
        Int const v = point_value(S, a, b);
        if (v > 0) {
          result.push_back({v, a, b});
        }
      }
    }
    std::sort(result.begin(), result.end(), [](auto const& x, auto const& y) {
      return x.value < y.value;
    });
    SEMIMOD_ENSURE(static_cast<Int>(result.size()) == S.gap_count(),
                   "gap count differs from (alpha-1)(beta-1)/2");
    return result;
  }

  std::vector<bool> membership_table(SemigroupPair const& S, Int bound) {
    if (bound < 0) {
      return {};
    }
    std::vector<bool> table(static_cast<std::size_t>(bound) + 1, false);
    table[0] = true;
    for (Int n = 1; n <= bound; ++n) {
      table[n] = (n >= S.alpha() && table[n - S.alpha()])
                 || (n >= S.beta() && table[n - S.beta()]);
    }
    return table;
  }

}  // namespace semimod
