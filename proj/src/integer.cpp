#include "semimod/integer.hpp"

#include <numeric>
#include <string>

namespace semimod {

  namespace detail {
    void throw_internal(std::string const& what) {
      throw InternalError(what);
    }
  }  // namespace detail

  Int checked_add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r)) {
      throw OverflowError("integer overflow in addition");
    }
    return r;
  }

  Int checked_sub(Int x, Int y) {
    Int r;
    if (__builtin_sub_overflow(x, y, &r)) {
      throw OverflowError("integer overflow in subtraction");
    }
    return r;
  }

  Int checked_mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) {
      throw OverflowError("integer overflow in multiplication");
    }
    return r;
  }

  Int exact_div(Int num, Int den, char const* what) {
    SEMIMOD_ENSURE(den != 0, std::string("division by zero: ") + what);
    if (num % den != 0) {
      throw InternalError(std::string("non-integral quotient: ") + what + " ("
                          + std::to_string(num) + " / " + std::to_string(den)
                          + ")");
    }
    return num / den;
  }

  Int mod_floor(Int x, Int m) {
    Int r = x % m;
    return r < 0 ? r + m : r;
  }

  Int mod_inverse(Int x, Int m) {
    if (m == 1) {
      return 0;
    }
    // extended Euclid on (x mod m, m)
    Int old_r = mod_floor(x, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
      Int q = old_r / r;
      Int tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_s - q * s;
      old_s = s;
      s = tmp;
    }
    if (old_r != 1) {
      throw InvalidInput("no modular inverse: gcd(" + std::to_string(x) + ", "
                         + std::to_string(m) + ") != 1");
    }
    return mod_floor(old_s, m);
  }

  Int binomial(Int n, Int k) {
    if (n < 0) {
      throw InvalidInput("binomial with negative upper index");
    }
    if (k < 0 || k > n) {
      return 0;
    }
    k = std::min(k, n - k);
    // result_i = C(n - k + i, i); each step multiplies by (n - k + i) / i.
    // Divide out gcds first so that intermediates only overflow when the
    // final value (times a small factor) would.
    Int result = 1;
    for (Int i = 1; i <= k; ++i) {
      Int num = n - k + i;
      Int den = i;
      Int g = std::gcd(result, den);
      result /= g;
      den /= g;
      g = std::gcd(num, den);
      num /= g;
      den /= g;
      SEMIMOD_ENSURE(den == 1, "binomial step left a remainder");
      result = checked_mul(result, num);
    }
    return result;
  }

  std::vector<Int> divisors(Int n) {
    if (n < 1) {
      throw InvalidInput("divisors of a non-positive integer");
    }
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        small.push_back(d);
        if (d != n / d) {
          large.push_back(n / d);
        }
      }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
  }

  int mobius(Int n) {
    if (n < 1) {
      throw InvalidInput("mobius of a non-positive integer");
    }
    int result = 1;
    for (Int p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) {
          return 0;
        }
        result = -result;
      }
    }
    if (n > 1) {
      result = -result;
    }
    return result;
  }

  bool divides(Int d, Int n) {
    return d != 0 && n % d == 0;
  }

}  // namespace semimod
