#pragma once

#include <stdexcept>
#include <string>

namespace ihc {

// Base class of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput : Error { using Error::Error; };
struct OddWeight : InvalidInput { using InvalidInput::InvalidInput; };
struct OutOfRange : InvalidInput { using InvalidInput::InvalidInput; };
struct SideMismatch : InvalidInput { using InvalidInput::InvalidInput; };
struct NotSymplecticPair : InvalidInput { using InvalidInput::InvalidInput; };
struct UnsupportedRange : InvalidInput { using InvalidInput::InvalidInput; };
struct ParseError : InvalidInput { using InvalidInput::InvalidInput; };

struct UnsupportedProduct : Error { using Error::Error; };
struct NotACharacter : Error { using Error::Error; };
struct CatalogExhausted : Error { using Error::Error; };
struct MissingFact : Error { using Error::Error; };

}  // namespace ihc
