#pragma once

#include <stdexcept>
#include <string>

namespace dmopt {

enum class ErrorKind {
  kInvalidEdge,
  kDisconnected,
  kOutOfRange,
  kGainRange,
  kShape,
  kSimplex,
  kDomain,
  kNumeric,
  kDivergence,
  kParse,
  kUsage,
};

/// Library-wide exception; `kind()` identifies the failure class so callers
/// and tests can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace dmopt
