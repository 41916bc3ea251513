#include "hqp/error.hpp"

namespace hqp {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::SymbolOutOfRange: return "SymbolOutOfRange";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotAMonoid: return "NotAMonoid";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::NotAQuasigroup: return "NotAQuasigroup";
    case Errc::NotFunctional: return "NotFunctional";
    case Errc::NotTotal: return "NotTotal";
    case Errc::NotOrthogonalBase: return "NotOrthogonalBase";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::PreconditionFailed: return "PreconditionFailed";
  }
  return "UnknownError";
}

void fail(Errc code, const std::string& message) {
  throw Error(code, std::string(errc_name(code)) + ": " + message);
}

}  // namespace hqp
