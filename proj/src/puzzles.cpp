#include <matemagirk/puzzles.hpp>

using namespace std;

namespace matemagirk
{
  Integer
  dinner_encode (const Integer& h, const Integer& g)
  {
    if (h < 1 || g < 1)
      throw DomainError ("hour and glasses must be at least 1");

    Integer x (h);
    x *= 2;
    x += 5;
    x *= 5;
    x += 10;
    x *= 10;
    x += g;
    return x;
  }

  DinnerReading
  dinner_decode (const Integer& r)
  {
    if (r < 451)
      throw DomainError ("no hour and glasses give " + r.str () +
                         "; the smallest possible number is 451");

    Integer x (r - 350);
    DinnerReading d {x / 100, x % 100};
    d.refused = d.glasses == 0 || d.hour > 24;
    return d;
  }

  Integer
  tourists (const Integer& people)
  {
    // n (1 + 1 + 1/2 + 1/4) = people - 1
    //
    Rational n (Rational (people - 1) / Rational (11, 4));
    if (!n.is_integer () || n.sign () <= 0)
      throw DomainError ("no whole group size gives " + people.str () +
                         " people");
    return n.num ();
  }

  Rational
  pouch_encode (const Rational& d)
  {
    Rational x (d + d);
    x = x + x;
    x += d;
    return x + x;
  }

  Rational
  pouch_decode (const Rational& said)
  {
    return said / Rational (10);
  }

  Integer
  eggs ()
  {
    return Integer (100) * 365 * 100;
  }

  string
  myriads (const Integer& n)
  {
    Integer q (n / 10000);
    Integer r (n % 10000);

    if (q == 0)
      return n.str ();

    string s (q.str () + (q == 1 ? " myriad" : " myriads"));
    if (r != 0)
      s += " and " + r.str ();
    return s;
  }

  WineskinSale
  wineskins ()
  {
    Rational fair (Rational (60) * Rational (2, 5));
    Rational trick (Rational (30) / Rational (3) + Rational (30) / Rational (2));
    return WineskinSale {Quantity {fair, Unit::dram},
                         Quantity {trick, Unit::dram}};
  }
}
