#include "grpiso/error.hpp"

namespace grpiso {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
  case Errc::EntryOutOfRange: return "EntryOutOfRange";
  case Errc::NoIdentity: return "NoIdentity";
  case Errc::NonAssociative: return "NonAssociative";
  case Errc::NoInverse: return "NoInverse";
  case Errc::NotBijectiveRow: return "NotBijectiveRow";
  case Errc::NotNormal: return "NotNormal";
  case Errc::NotAbelian: return "NotAbelian";
  case Errc::NotPermutation: return "NotPermutation";
  case Errc::NotHomomorphism: return "NotHomomorphism";
  case Errc::DomainMismatch: return "DomainMismatch";
  case Errc::NotIsomorphism: return "NotIsomorphism";
  case Errc::EpsilonOutOfRange: return "EpsilonOutOfRange";
  case Errc::ExtractionFailed: return "ExtractionFailed";
  case Errc::ValidationFailed: return "ValidationFailed";
  case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_input_error(Errc code) noexcept {
  switch (code) {
  case Errc::EpsilonOutOfRange:
  case Errc::ExtractionFailed:
  case Errc::ValidationFailed:
    return false;
  default:
    return true;
  }
}

} // namespace grpiso
