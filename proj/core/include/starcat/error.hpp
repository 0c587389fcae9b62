#pragma once

#include <stdexcept>
#include <string>

namespace starcat {

enum class Errc {
  RingMismatch,
  ShapeMismatch,
  DivisionByZero,
  ZeroInput,
  NotHermitian,
  NotEndo,
  NotClosedMono,
  NotMono,
  NotSplit,
  NotPositiveDefinite,
  NotContraction,
  NotStrictContraction,
  NotPartialIsometry,
  NotIsometry,
  NotSameSubject,
  NoSolution,
  Singular,
  PreconditionFailed,
  GenerationFailed,
  Parse,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace starcat
