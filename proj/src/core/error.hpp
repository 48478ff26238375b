#ifndef FINLANG_CORE_ERROR_HPP_
#define FINLANG_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace finlang {

// Values double as CLI exit codes and C API status codes.
enum class ErrorCode : int {
  kConfig = 2,
  kUnsupported = 3,
  kInternal = 4,
  kMismatch = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_config(std::string const& what) {
  throw Error(ErrorCode::kConfig, what);
}

[[noreturn]] inline void throw_unsupported(std::string const& what) {
  throw Error(ErrorCode::kUnsupported, what);
}

[[noreturn]] inline void throw_internal(std::string const& what) {
  throw Error(ErrorCode::kInternal, what);
}

}  // namespace finlang

// Invariant check that stays on in release builds.
#define FINLANG_CHECK(cond, msg)                                           \
  do {                                                                     \
    if (!(cond)) {                                                         \
      ::finlang::throw_internal(std::string("invariant violated: ") + msg); \
    }                                                                      \
  } while (false)

#endif  // FINLANG_CORE_ERROR_HPP_
