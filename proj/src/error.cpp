#include "qcong/error.hpp"

namespace qcong {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonMonicDivisor: return "NonMonicDivisor";
    case Errc::DivisionByZeroFunction: return "DivisionByZeroFunction";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::InvalidPrime: return "InvalidPrime";
    case Errc::PrimeDividesBase: return "PrimeDividesBase";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::DenominatorNotCoprime: return "DenominatorNotCoprime";
    case Errc::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
    case Errc::BadOraclePrime: return "BadOraclePrime";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qcong
