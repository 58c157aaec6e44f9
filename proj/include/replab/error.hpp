#pragma once

#include <stdexcept>
#include <string>

namespace replab {

enum class ErrorCode {
    EmptyWord,
    InvalidSymbol,
    InvalidSpec,
    ViolatingWord,
    NotFinite,
    AlphabetMismatch,
    UnknownMorphism,
    InvalidMorphism,
    Parse,
    Io,
    Overflow,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace replab
