#ifndef SEMIMOD_ERROR_HPP_
#define SEMIMOD_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace semimod {

  // Raised for caller mistakes: non-coprime pairs, non-lean sets, values out
  // of range. The CLI maps this to exit code 2.
  class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Raised when an exact integer result does not fit in 64 bits.
  class OverflowError : public std::overflow_error {
   public:
    using std::overflow_error::overflow_error;
  };

  // Raised when a proven identity fails at runtime (a non-integral count, no
  // admissible rotation, ...). Always a bug. The CLI maps this to exit code 3.
  class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  namespace detail {
    [[noreturn]] void throw_internal(std::string const& what);
  }

}  // namespace semimod

#define SEMIMOD_ENSURE(cond, msg)                                     \
  do {                                                                \
    if (!(cond)) {                                                    \
      ::semimod::detail::throw_internal(std::string(msg) + " [" #cond \
                                        "]");                        \
    }                                                                 \
  } while (false)

#endif  // SEMIMOD_ERROR_HPP_
