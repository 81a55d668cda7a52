#pragma once

#include <string_view>

#include <matemagirk/exact.hpp>

namespace matemagirk
{
  enum class Unit
  {
    dram,
    dahekan,
    kendinar,
    litre, // A mass unit, one Roman pound.
    mile,
    jug,
    basket,
    grain,
    skin,
    glass,
    egg,
    day,
    hour,
    count // Soldiers, pearls, fish, apples, and other head counts.
  };

  enum class Dimension
  {
    money,
    mass,
    distance,
    volume,
    grain_count,
    time,
    count
  };

  Dimension
  dimension (Unit);

  // Lowercase ASCII identifier, as used in corpus files.
  //
  const char*
  to_string (Unit);

  // Throws std::invalid_argument for unknown identifiers.
  //
  Unit
  parse_unit (std::string_view);

  const char*
  to_string (Dimension);

  // Every Unit value, in declaration order.
  //
  inline constexpr Unit all_units[] = {
    Unit::dram, Unit::dahekan, Unit::kendinar, Unit::litre, Unit::mile,
    Unit::jug, Unit::basket, Unit::grain, Unit::skin, Unit::glass, Unit::egg,
    Unit::day, Unit::hour, Unit::count};

  class ConversionError: public Error
  {
  public:
    ConversionError (Unit from, Unit to);

    Unit from;
    Unit to;
  };

  struct Quantity
  {
    Rational value;
    Unit unit = Unit::count;

    friend bool
    operator== (const Quantity&, const Quantity&) = default;
  };

  // Only conversions with a known exchange rate are registered; the sole
  // one is 1 kendinar = 7200 dahekan. Anything else (including dram and
  // dahekan, both money) throws ConversionError.
  //
  Quantity
  convert (const Quantity&, Unit target);

  bool
  convertible (Unit from, Unit to);

  // Sum expressed in a's unit.
  //
  Quantity
  add (const Quantity& a, const Quantity& b);

  // "843/2 kendinar".
  //
  std::string
  to_string (const Quantity&);
}
