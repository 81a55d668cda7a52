#pragma once

#include <string>

#include <matemagirk/exact.hpp>
#include <matemagirk/units.hpp>

namespace matemagirk
{
  // Feast puzzles.

  // Dinner hour h and glasses of wine g, hidden by the recipe
  // double, add 5, times 5, add 10, times 10, add g. The result is
  // 100h + 350 + g. Throws DomainError unless h >= 1 and g >= 1.
  //
  Integer
  dinner_encode (const Integer& hour, const Integer& glasses);

  struct DinnerReading
  {
    Integer hour;
    Integer glasses;

    // The glasses residue came out as 0 or the hour past 24, which means
    // 100 or more glasses were entered. Other counts above 100 carry into
    // the hour unnoticed.
    //
    bool refused = false;
  };

  // Subtract 350, hundreds are the hour, the remainder the glasses.
  // Throws DomainError for r < 451 (the smallest possible result).
  //
  DinnerReading
  dinner_decode (const Integer& r);

  inline constexpr const char* dinner_refusal =
    "not possible to drink 100 glasses of wine in one hour";

  // Group size n with n + n + n/2 + n/4 + 1 = people. Throws DomainError if
  // that n is not a positive whole number.
  //
  Integer
  tourists (const Integer& people = 100);

  // Add an equal amount, double, add the original, double again: 10d.
  //
  Rational
  pouch_encode (const Rational& drams);

  Rational
  pouch_decode (const Rational& said);

  // 100 eggs a day for 100 years of 365 days.
  //
  Integer
  eggs ();

  // "365 myriads", "1 myriad", "2 myriads and 5"; plain number below
  // 10000. A myriad is 10,000.
  //
  std::string
  myriads (const Integer& n);

  struct WineskinSale
  {
    Quantity fair;  // 60 skins at 2 dram per 5 skins.
    Quantity trick; // 30 skins in threes and 30 in twos at 1 dram a group.
  };

  WineskinSale
  wineskins ();
}
