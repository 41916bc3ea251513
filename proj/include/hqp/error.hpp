#pragma once

#include <stdexcept>
#include <string>

namespace hqp {

enum class Errc {
  LengthMismatch,
  SymbolOutOfRange,
  ArityMismatch,
  OrderMismatch,
  PositionOutOfRange,
  IndexOutOfRange,
  NotAMonoid,
  NotAPermutation,
  NotAQuasigroup,
  NotFunctional,
  NotTotal,
  NotOrthogonalBase,
  CapacityExceeded,
  UnknownFixture,
  SyntaxError,
  UnboundVariable,
  PreconditionFailed,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace hqp
