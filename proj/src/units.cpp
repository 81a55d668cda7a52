#include <matemagirk/units.hpp>

#include <optional>
#include <stdexcept>
#include <string>

using namespace std;

namespace matemagirk
{
  Dimension
  dimension (Unit u)
  {
    switch (u)
    {
    case Unit::dram:
    case Unit::dahekan:
    case Unit::kendinar: return Dimension::money;
    case Unit::litre:    return Dimension::mass;
    case Unit::mile:     return Dimension::distance;
    case Unit::jug:
    case Unit::basket:
    case Unit::skin:
    case Unit::glass:    return Dimension::volume;
    case Unit::grain:    return Dimension::grain_count;
    case Unit::day:
    case Unit::hour:     return Dimension::time;
    case Unit::egg:
    case Unit::count:    return Dimension::count;
    }
    throw logic_error ("invalid Unit");
  }

  const char*
  to_string (Unit u)
  {
    switch (u)
    {
    case Unit::dram:     return "dram";
    case Unit::dahekan:  return "dahekan";
    case Unit::kendinar: return "kendinar";
    case Unit::litre:    return "litre";
    case Unit::mile:     return "mile";
    case Unit::jug:      return "jug";
    case Unit::basket:   return "basket";
    case Unit::grain:    return "grain";
    case Unit::skin:     return "skin";
    case Unit::glass:    return "glass";
    case Unit::egg:      return "egg";
    case Unit::day:      return "day";
    case Unit::hour:     return "hour";
    case Unit::count:    return "count";
    }
    return "?";
  }

  Unit
  parse_unit (string_view n)
  {
    for (Unit u: all_units)
      if (n == to_string (u))
        return u;
    throw invalid_argument ("unknown unit '" + string (n) + "'");
  }

  const char*
  to_string (Dimension d)
  {
    switch (d)
    {
    case Dimension::money:       return "money";
    case Dimension::mass:        return "mass";
    case Dimension::distance:    return "distance";
    case Dimension::volume:      return "volume";
    case Dimension::grain_count: return "grain-count";
    case Dimension::time:        return "time";
    case Dimension::count:       return "count";
    }
    return "?";
  }

  ConversionError::
  ConversionError (Unit f, Unit t)
      : Error (string ("no conversion from ") + to_string (f) + " to " +
               to_string (t)),
        from (f), to (t)
  {
  }

  namespace
  {
    // How many `to` make one `from`, if registered.
    //
    optional<Rational>
    factor (Unit from, Unit to)
    {
      if (from == to)
        return Rational (1);

      if (from == Unit::kendinar && to == Unit::dahekan)
        return Rational (7200);

      if (from == Unit::dahekan && to == Unit::kendinar)
        return Rational (1, 7200);

      return nullopt;
    }
  }

  bool
  convertible (Unit from, Unit to)
  {
    return factor (from, to).has_value ();
  }

  Quantity
  convert (const Quantity& q, Unit target)
  {
    optional<Rational> f (factor (q.unit, target));
    if (!f)
      throw ConversionError (q.unit, target);

    return Quantity {q.value * *f, target};
  }

  Quantity
  add (const Quantity& a, const Quantity& b)
  {
    return Quantity {a.value + convert (b, a.unit).value, a.unit};
  }

  string
  to_string (const Quantity& q)
  {
    return to_string (q.value) + ' ' + to_string (q.unit);
  }
}
