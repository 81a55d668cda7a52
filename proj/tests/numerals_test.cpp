#include <doctest.h>

#include <set>

#include <matemagirk/numerals.hpp>

using namespace matemagirk;

namespace
{
  constexpr NumeralSystem trad = NumeralSystem::traditional;
  constexpr NumeralSystem anania = NumeralSystem::anania;

  const NumeralOptions with_hat {true};
  const NumeralOptions lenient {false, DecodeMode::lenient};

  std::size_t
  code_points (const std::string& s)
  {
    std::size_t n (0);
    for (unsigned char c: s)
      if ((c & 0xC0) != 0x80)
        ++n;
    return n;
  }

  std::size_t
  error_offset (const char* s, NumeralSystem sys, NumeralOptions o = {})
  {
    try
    {
      decode (s, sys, o);
    }
    catch (const ParseError& e)
    {
      return e.offset;
    }
    return std::string::npos;
  }
}

TEST_CASE ("numerals/tables")
{
  const auto& t (letter_table (trad));
  REQUIRE (t.size () == 36);

  std::set<std::uint32_t> values;
  for (const Letter& l: t)
    values.insert (l.value);

  std::set<std::uint32_t> expected;
  for (std::uint32_t k (1); k <= 1000; k *= 10)
    for (std::uint32_t a (1); a <= 9; ++a)
      expected.insert (a * k);
  CHECK (values == expected);

  CHECK (t[9].code == U'ժ');
  CHECK (t[10].code == U'ի');
  CHECK (t[10].value == 20);
  CHECK (t[18].code == U'ճ');
  CHECK (t[27].code == U'ռ');
  CHECK (t[35].code == U'ք');
  CHECK (t[35].value == 9000);

  CHECK (letter_table (anania).size () == 12);
}

TEST_CASE ("numerals/encode")
{
  CHECK (encode (23, trad) == "իգ");
  CHECK (encode (50, anania) == "եժ");
  CHECK (encode (216, anania) == "բճժզ");
  CHECK (encode (1, trad) == "ա");
  CHECK (encode (1, anania) == "ա");
  CHECK (encode (10, anania) == "ժ");
  CHECK (encode (1000, anania) == "ռ");
  CHECK (encode (9999, trad) == "քջղթ");
  CHECK (encode (123, trad) == "ճիգ");

  CHECK (encode (90000000, trad, with_hat) == "ք̂");
  CHECK (encode (10000, anania, with_hat) == "ա̂");
  CHECK (encode (90000000, anania, with_hat) == "թ̂ռ̂");

  CHECK_THROWS_AS (encode (0, trad), DomainError);
  CHECK_THROWS_AS (encode (-3, anania), DomainError);
  CHECK_THROWS_AS (encode (10000, trad), DomainError);
  CHECK_THROWS_AS (encode (100000000, trad, with_hat), DomainError);
}

TEST_CASE ("numerals/decode")
{
  CHECK (decode ("բճժզ", anania) == 216);
  CHECK (decode ("ա", trad) == 1);
  CHECK (decode ("ճիգ", trad) == 123);
  CHECK (decode ("ԻԳ", trad) == 23);
  CHECK (decode ("Բճժզ", anania) == 216);
  CHECK (decode ("ք̂", trad, with_hat) == 90000000);
  CHECK (decode ("Ք̂", trad, with_hat) == 90000000);

  // Lenient mode takes an explicit coefficient 1, strict does not.
  CHECK (decode ("աժ", anania, lenient) == 10);
  CHECK (error_offset ("աժ", anania) == 0);

  // Errors carry the byte offset (Armenian letters are two bytes).
  CHECK (error_offset ("", trad) == 0);
  CHECK (error_offset ("իx", trad) == 2);
  CHECK (error_offset ("գի", trad) == 2);    // increasing place value
  CHECK (error_offset ("իլ", trad) == 2);    // repeated decade class
  CHECK (error_offset ("ի", anania) == 0);   // not an Anania letter
  CHECK (error_offset ("բգ", anania) == 2);  // digit after digit
  CHECK (error_offset ("ժճ", anania) == 2);  // increasing place value
  CHECK (error_offset ("ք̂", trad) == 2);     // hat not enabled
  CHECK (error_offset ("աք̂", trad, with_hat) == 2);
  CHECK (error_offset ("̂", trad, with_hat) == 0);
  CHECK (error_offset ("\xd5", trad) == 0);  // truncated UTF-8
}

TEST_CASE ("numerals/round-trip")
{
  for (NumeralSystem s: {trad, anania})
    for (int n (1); n <= 9999; ++n)
    {
      std::string t (encode (n, s));
      CHECK (decode (t, s) == n);
      CHECK (encode (decode (t, s), s) == t);
      CHECK (code_points (t) <= (s == trad ? 4u : 7u));
    }
}

TEST_CASE ("numerals/round-trip-with-hat")
{
  for (NumeralSystem s: {trad, anania})
    for (int n: {10000, 10001, 12345, 99999, 2160000, 36000000, 90000000,
                 99999999})
      CHECK (decode (encode (n, s, with_hat), s, with_hat) == n);
}
