#ifndef SEMIMOD_INTEGER_HPP_
#define SEMIMOD_INTEGER_HPP_

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace semimod {

  using Int = std::int64_t;

  // Overflow-checked arithmetic; throws OverflowError instead of wrapping.
  Int checked_add(Int x, Int y);
  Int checked_sub(Int x, Int y);
  Int checked_mul(Int x, Int y);

  // Exact quotient; throws InternalError if `den` does not divide `num`.
  Int exact_div(Int num, Int den, char const* what);

  // Non-negative remainder, m > 0.
  Int mod_floor(Int x, Int m);

  // Inverse of x modulo m for gcd(x, m) = 1 and m >= 1.
  Int mod_inverse(Int x, Int m);

  // C(n, k); 0 when k < 0 or k > n; n < 0 is rejected. Overflow throws.
  Int binomial(Int n, Int k);

  // Positive divisors of n >= 1 in increasing order.
  std::vector<Int> divisors(Int n);

  // Moebius function on n >= 1.
  int mobius(Int n);

  bool divides(Int d, Int n);

}  // namespace semimod

#endif  // SEMIMOD_INTEGER_HPP_
