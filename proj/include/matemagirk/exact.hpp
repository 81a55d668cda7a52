#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace matemagirk
{
  // Unbounded signed integer. Greedy unit-fraction denominators outgrow
  // 64 bits quickly (5/121 already needs more than 10^19).
  //
  using Integer = boost::multiprecision::cpp_int;

  class Error: public std::runtime_error
  {
  public:
    using std::runtime_error::runtime_error;
  };

  class DivisionByZero: public Error
  {
  public:
    DivisionByZero (): Error ("division by zero") {}
  };

  // An operation was asked for a value outside its domain (negative
  // Egyptian fraction, zero numeral, and so on).
  //
  class DomainError: public Error
  {
  public:
    using Error::Error;
  };

  // Text did not match the expected grammar. Offset is a zero-based byte
  // offset into the input.
  //
  class ParseError: public Error
  {
  public:
    ParseError (std::size_t offset, const std::string& what);

    std::size_t offset;
  };

  enum class TieRule
  {
    half_up,
    half_down
  };

  enum class BinaryOp
  {
    add,
    sub,
    mul,
    div
  };

  // Exact fraction num/den, always normalized: den > 0 and
  // gcd(|num|, den) = 1. Zero is 0/1.
  //
  class Rational
  {
  public:
    Rational () = default;
    Rational (Integer n);
    Rational (std::int64_t n): Rational (Integer (n)) {}
    Rational (int n): Rational (Integer (n)) {}

    // Throws DivisionByZero if den is zero.
    //
    Rational (Integer num, Integer den);

    const Integer&
    num () const noexcept {return num_;}

    const Integer&
    den () const noexcept {return den_;}

    bool
    is_integer () const noexcept {return den_ == 1;}

    bool
    is_zero () const noexcept {return num_ == 0;}

    int
    sign () const noexcept {return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0);}

    Rational
    reciprocal () const;

    friend Rational operator+ (const Rational&, const Rational&);
    friend Rational operator- (const Rational&, const Rational&);
    friend Rational operator* (const Rational&, const Rational&);
    friend Rational operator/ (const Rational&, const Rational&);
    friend Rational operator- (const Rational&);

    Rational& operator+= (const Rational& r) {return *this = *this + r;}
    Rational& operator-= (const Rational& r) {return *this = *this - r;}
    Rational& operator*= (const Rational& r) {return *this = *this * r;}
    Rational& operator/= (const Rational& r) {return *this = *this / r;}

    friend bool
    operator== (const Rational& a, const Rational& b) noexcept
    {
      return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering
    operator<=> (const Rational&, const Rational&);

  private:
    struct normalized_tag {};
    Rational (Integer num, Integer den, normalized_tag)
        : num_ (std::move (num)), den_ (std::move (den)) {}

    Integer num_ = 0;
    Integer den_ = 1;
  };

  Rational
  binop (const Rational& a, const Rational& b, BinaryOp op);

  std::strong_ordering
  compare (const Rational& a, const Rational& b);

  // Largest integer <= a and smallest integer >= a.
  //
  Integer
  floor (const Rational& a);

  Integer
  ceil (const Rational& a);

  // Nearest integer to a; exact .5 ties are broken per tie.
  //
  Integer
  round_nearest (const Rational& a, TieRule tie = TieRule::half_up);

  Rational
  abs (const Rational& a);

  // "p/q", or "p" when the denominator is 1.
  //
  std::string
  to_string (const Rational& r);

  std::string
  to_string (const Integer& n);

  // Accepts "p", "p/q", either with an optional leading '-'. Denominator
  // must be nonzero. Surrounding whitespace is not allowed.
  //
  Rational
  parse_rational (std::string_view text);

  Integer
  parse_integer (std::string_view text);

  std::ostream&
  operator<< (std::ostream&, const Rational&);

  const char*
  to_string (BinaryOp);

  const char*
  to_string (TieRule);
}
