#ifndef FACTORLAB_ERROR_HPP_
#define FACTORLAB_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace factorlab {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed user input: unknown symbols, bad literals, violated
  // preconditions of an operation.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  // A rewriting run used more steps than it was allowed.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  // Raised when a check that must hold by construction fails; seeing one of
  // these means a bug in the library, not in the caller.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

  namespace detail {
    inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
      std::int64_t r;
      if (__builtin_add_overflow(x, y, &r)) {
        throw InputError("integer overflow in exponent arithmetic");
      }
      return r;
    }

    inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
      std::int64_t r;
      if (__builtin_sub_overflow(x, y, &r)) {
        throw InputError("integer overflow in exponent arithmetic");
      }
      return r;
    }

    inline std::int64_t checked_neg(std::int64_t x) {
      return checked_sub(0, x);
    }
  }  // namespace detail

}  // namespace factorlab

#endif  // FACTORLAB_ERROR_HPP_
