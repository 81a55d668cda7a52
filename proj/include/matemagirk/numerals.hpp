#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <matemagirk/exact.hpp>

namespace matemagirk
{
  // Traditional: additive, 36 letters (1-9, 10-90, 100-900, 1000-9000),
  // one letter per decade class, e.g. իգ = 23.
  //
  // Anania: multiplicative-additive over 12 letters. Digit letters ա..թ
  // (1-9) multiply the place letters ժ (10), ճ (100), ռ (1000); the digit
  // is dropped when the coefficient is 1 and the units digit is written
  // bare, e.g. բճժզ = 216.
  //
  enum class NumeralSystem
  {
    traditional,
    anania
  };

  enum class DecodeMode
  {
    strict,
    lenient // Also accepts an explicit coefficient 1 (աժ for 10).
  };

  struct NumeralOptions
  {
    // Allow the myriad part (n / 10000) to be written with hatted letters,
    // i.e. followed by U+0302 COMBINING CIRCUMFLEX ACCENT. Extends the
    // range to 99,999,999.
    //
    bool hat = false;
    DecodeMode mode = DecodeMode::strict;
  };

  struct Letter
  {
    char32_t code;       // Lowercase code point.
    std::uint32_t value;
  };

  // Letter tables in classical alphabetical order.
  //
  const std::vector<Letter>&
  letter_table (NumeralSystem);

  inline constexpr char32_t hat_mark = U'̂';
  inline constexpr std::uint32_t max_core = 9999;
  inline constexpr std::uint32_t max_with_hat = 99999999;

  // Throws DomainError for 0 or values out of range (the systems have no
  // zero).
  //
  std::string
  encode (const Integer& n, NumeralSystem, NumeralOptions = {});

  // Case-insensitive. Throws ParseError with the byte offset of the
  // offending letter.
  //
  Integer
  decode (std::string_view text, NumeralSystem, NumeralOptions = {});

  const char*
  to_string (NumeralSystem);

  // Throws std::invalid_argument for unknown names.
  //
  NumeralSystem
  parse_numeral_system (std::string_view);
}
