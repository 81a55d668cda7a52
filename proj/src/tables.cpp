#include <matemagirk/tables.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace std;

namespace matemagirk
{
  namespace
  {
    Integer
    pow10 (int n)
    {
      Integer r (1);
      while (n-- > 0)
        r *= 10;
      return r;
    }

    vector<TableEntry>
    sorted_unique (vector<TableEntry> es)
    {
      sort (es.begin (), es.end (),
            [] (const TableEntry& a, const TableEntry& b)
            {
              return a.operands < b.operands;
            });

      es.erase (unique (es.begin (), es.end (),
                        [] (const TableEntry& a, const TableEntry& b)
                        {
                          return a.operands == b.operands;
                        }),
                es.end ());
      return es;
    }

    vector<TableEntry>
    addition ()
    {
      vector<TableEntry> r;
      for (int n (0); n <= 3; ++n)
        for (int a (1); a <= 9; ++a)
          for (int b (a); b <= 9; ++b)
          {
            Integer x (a * pow10 (n));
            Integer y (b * pow10 (n));
            r.push_back (TableEntry {{x, y}, x + y, nullopt});
          }
      return r;
    }

    vector<TableEntry>
    multiplication (bool b10)
    {
      vector<TableEntry> r;
      for (int m (0); m <= 3; ++m)
        for (int n (0); n <= 3; ++n)
          for (int a (1); a <= 9; ++a)
            for (int b (1); b <= (b10 ? 10 : 9); ++b)
            {
              Integer x (a * pow10 (m));
              Integer y (b * pow10 (n));
              r.push_back (TableEntry {{x, y}, x * y, nullopt});
            }
      return r;
    }

    vector<TableEntry>
    subtraction ()
    {
      vector<TableEntry> r;
      for (const TableEntry& e: addition ())
      {
        const Integer& x (e.operands[0]);
        const Integer& y (e.operands[1]);
        r.push_back (TableEntry {{e.result, y}, x, nullopt});
        r.push_back (TableEntry {{e.result, x}, y, nullopt});
      }
      return r;
    }

    vector<TableEntry>
    division (TieRule tie)
    {
      set<int> divisors;
      for (int n (1); n <= 100; ++n)
        divisors.insert (n);
      for (int a (1); a <= 9; ++a)
      {
        divisors.insert (a * 100);
        divisors.insert (a * 1000);
      }

      vector<TableEntry> r;
      for (int n: divisors)
        r.push_back (
          TableEntry {{Integer (n)},
                      round_nearest (Rational (division_dividend, n), tie),
                      nullopt});
      return r;
    }

    vector<TableEntry>
    parity ()
    {
      vector<TableEntry> r;
      for (int a (1); a <= 9; ++a)
        for (int n (0); n <= 10; ++n)
          r.push_back (TableEntry {{Integer (a), Integer (n)},
                                   a * pow10 (n),
                                   a % 2 == 0 ? Parity::even : Parity::odd});
      return r;
    }

    // Display width: code points, not counting combining marks.
    //
    size_t
    width (const string& s)
    {
      size_t w (0);
      for (size_t i (0); i != s.size (); ++i)
      {
        unsigned char c (s[i]);
        if ((c & 0xC0) == 0x80)
          continue;
        if (c == 0xCC && i + 1 != s.size () &&
            static_cast<unsigned char> (s[i + 1]) == 0x82)
          continue; // U+0302
        ++w;
      }
      return w;
    }
  }

  vector<TableEntry>
  generate (const TableSpec& s)
  {
    switch (s.kind)
    {
    case TableKind::addition:       return sorted_unique (addition ());
    case TableKind::multiplication:
      return sorted_unique (multiplication (s.include_b_equals_10));
    case TableKind::subtraction:    return sorted_unique (subtraction ());
    case TableKind::division:       return sorted_unique (division (s.tie));
    case TableKind::parity:         return sorted_unique (parity ());
    }
    throw logic_error ("invalid TableKind");
  }

  vector<string>
  table_header (TableKind k)
  {
    switch (k)
    {
    case TableKind::addition:       return {"augend", "addend", "result"};
    case TableKind::multiplication: return {"multiplicand", "multiplier",
                                            "result"};
    case TableKind::subtraction:    return {"minuend", "subtrahend", "result"};
    case TableKind::division:       return {"divisor", "result"};
    case TableKind::parity:         return {"coefficient", "exponent",
                                            "result", "label"};
    }
    throw logic_error ("invalid TableKind");
  }

  string
  render (TableKind k, const vector<TableEntry>& es, const RenderOptions& o)
  {
    auto number = [&o] (const Integer& v) -> string
    {
      if (!o.numerals)
        return v.str ();

      try
      {
        return encode (v, *o.numerals, NumeralOptions {true});
      }
      catch (const DomainError&)
      {
        throw DomainError ("value " + v.str () + " cannot be written in the " +
                           to_string (*o.numerals) + " numeral system");
      }
    };

    vector<vector<string>> rows;
    rows.push_back (table_header (k));
    for (const TableEntry& e: es)
    {
      vector<string> row;
      for (const Integer& v: e.operands)
        row.push_back (number (v));
      row.push_back (number (e.result));
      if (e.label)
        row.push_back (to_string (*e.label));
      rows.push_back (std::move (row));
    }

    string r;
    if (o.format == TableFormat::csv)
    {
      for (const vector<string>& row: rows)
      {
        for (size_t i (0); i != row.size (); ++i)
        {
          if (i != 0)
            r += ',';
          r += row[i];
        }
        r += '\n';
      }
      return r;
    }

    vector<size_t> ws;
    for (const vector<string>& row: rows)
    {
      ws.resize (max (ws.size (), row.size ()), 0);
      for (size_t i (0); i != row.size (); ++i)
        ws[i] = max (ws[i], width (row[i]));
    }

    for (const vector<string>& row: rows)
    {
      string line;
      for (size_t i (0); i != row.size (); ++i)
      {
        if (i != 0)
          line += "  ";
        line.append (ws[i] - width (row[i]), ' ');
        line += row[i];
      }
      r += line;
      r += '\n';
    }
    return r;
  }

  const char*
  to_string (TableKind k)
  {
    switch (k)
    {
    case TableKind::addition:       return "addition";
    case TableKind::multiplication: return "multiplication";
    case TableKind::subtraction:    return "subtraction";
    case TableKind::division:       return "division";
    case TableKind::parity:         return "parity";
    }
    return "?";
  }

  const char*
  to_string (Parity p)
  {
    return p == Parity::even ? "even" : "odd";
  }

  TableKind
  parse_table_kind (string_view n)
  {
    for (TableKind k: {TableKind::addition, TableKind::multiplication,
                       TableKind::subtraction, TableKind::division,
                       TableKind::parity})
      if (n == to_string (k))
        return k;
    throw invalid_argument ("unknown table '" + string (n) + "'");
  }
}
