#include "foxknot/error.hpp"

namespace foxknot {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Parse: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Overflow: return "Overflow";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotAKnotPolynomial: return "NotAKnotPolynomial";
    case Errc::NotPalindromic: return "NotPalindromic";
    case Errc::OddSpan: return "OddSpan";
    case Errc::H1RankNotOne: return "H1RankNotOne";
    case Errc::ZeroWeightColumn: return "ZeroWeightColumn";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::CertificationFailed: return "CertificationFailed";
    case Errc::ResidualTooLarge: return "ResidualTooLarge";
  }
  return "Unknown";
}

}  // namespace foxknot
