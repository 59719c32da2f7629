#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grpiso {

enum class Errc {
  // Cayley table validation
  EntryOutOfRange,
  NoIdentity,
  NonAssociative,
  NoInverse,
  NotBijectiveRow,
  // structure
  NotNormal,
  NotAbelian,
  NotPermutation,
  // maps
  NotHomomorphism,
  DomainMismatch,
  NotIsomorphism,
  // reductions: oracle inconsistency
  EpsilonOutOfRange,
  ExtractionFailed,
  ValidationFailed,
  // ingestion
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// True for errors caused by bad user input rather than by an inconsistent
/// oracle or a broken internal invariant.
bool is_input_error(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace grpiso
