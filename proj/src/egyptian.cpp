#include <matemagirk/egyptian.hpp>

#include <algorithm>
#include <utility>

using namespace std;

namespace matemagirk
{
  EgyptianFraction::
  EgyptianFraction (Integer whole, vector<Integer> dens)
      : whole_ (std::move (whole)), dens_ (std::move (dens))
  {
    if (whole_ < 0)
      throw DomainError ("negative whole part " + whole_.str ());

    for (size_t i (0); i != dens_.size (); ++i)
    {
      if (dens_[i] < 2)
        throw DomainError ("unit fraction denominator " + dens_[i].str () +
                           " is less than 2");

      if (i != 0 && dens_[i] <= dens_[i - 1])
        throw DomainError ("unit fraction denominators must be strictly "
                           "increasing");
    }
  }

  Rational
  value (const EgyptianFraction& e)
  {
    Rational r (e.whole ());
    for (const Integer& d: e.denominators ())
      r += Rational (Integer (1), d);
    return r;
  }

  EgyptianFraction
  greedy (const Rational& r)
  {
    if (r.sign () < 0)
      throw DomainError ("cannot decompose negative value " + to_string (r));

    Integer whole (floor (r));
    Rational rest (r - Rational (whole));

    // The remainder's numerator strictly decreases each step, so this
    // terminates after at most num(rest) iterations.
    //
    vector<Integer> dens;
    while (!rest.is_zero ())
    {
      Integer d (ceil (rest.reciprocal ()));
      dens.push_back (d);
      rest -= Rational (Integer (1), std::move (d));
    }

    return EgyptianFraction (std::move (whole), std::move (dens));
  }

  bool
  check (const EgyptianFraction& e, const Rational& r)
  {
    return value (e) == r;
  }

  EgyptianFraction
  combine (const EgyptianFraction& a, const EgyptianFraction& b, BinaryOp op)
  {
    Rational x (value (a));
    Rational y (value (b));

    if (op == BinaryOp::div && y.is_zero ())
      throw DomainError ("division by an Egyptian fraction of value 0");

    Rational z (binop (x, y, op));
    if (z.sign () < 0)
      throw DomainError ("result " + to_string (z) + " is negative");

    return greedy (z);
  }

  string
  to_string (const EgyptianFraction& e)
  {
    string s;
    if (e.whole () != 0 || e.denominators ().empty ())
      s = e.whole ().str ();

    for (const Integer& d: e.denominators ())
    {
      if (!s.empty ())
        s += " + ";
      s += "1/";
      s += d.str ();
    }
    return s;
  }

  namespace
  {
    struct cursor
    {
      string_view t;
      size_t i = 0;

      bool
      eof () const {return i == t.size ();}

      void
      skip_space ()
      {
        while (!eof () && (t[i] == ' ' || t[i] == '\t'))
          ++i;
      }

      // Consume a separator: ',', '+', or the word "and". Returns false if
      // there is none.
      //
      bool
      separator ()
      {
        skip_space ();
        if (eof ())
          return false;

        if (t[i] == ',' || t[i] == '+')
        {
          ++i;
          return true;
        }

        if (t.substr (i, 3) == "and" &&
            (i + 3 == t.size () || t[i + 3] == ' ' || t[i + 3] == '\t'))
        {
          i += 3;
          return true;
        }
        return false;
      }

      Integer
      number ()
      {
        size_t b (i);
        while (!eof () && t[i] >= '0' && t[i] <= '9')
          ++i;

        if (b == i)
          throw ParseError (i, eof () ? "expected number"
                                      : string ("unexpected character '") +
                                          t[i] + "'");
        return Integer (string (t.substr (b, i - b)));
      }
    };
  }

  EgyptianFraction
  parse_egyptian (string_view text)
  {
    cursor c {text};
    c.skip_space ();

    if (c.eof ())
      throw ParseError (0, "empty Egyptian fraction");

    Integer whole (0);
    vector<pair<Integer, size_t>> dens; // Denominator and its offset.

    for (bool first (true);; first = false)
    {
      if (!first)
      {
        if (!c.separator ())
        {
          c.skip_space ();
          if (c.eof ())
            break;
          throw ParseError (c.i, "expected ',' or '+'");
        }
      }

      c.skip_space ();
      size_t term (c.i);
      Integer n (c.number ());

      if (!c.eof () && c.t[c.i] == '/')
      {
        if (n != 1)
          throw ParseError (term, "expected a unit fraction 1/d");

        ++c.i;
        size_t dpos (c.i);
        Integer d (c.number ());
        if (d < 2)
          throw ParseError (dpos, "denominator must be at least 2");

        dens.emplace_back (std::move (d), dpos);
      }
      else
      {
        if (!first)
          throw ParseError (term, "whole part must come first");
        whole = std::move (n);
      }
    }

    stable_sort (dens.begin (), dens.end (),
                 [] (const auto& x, const auto& y) {return x.first < y.first;});

    vector<Integer> ds;
    for (size_t k (0); k != dens.size (); ++k)
    {
      if (k != 0 && dens[k].first == dens[k - 1].first)
        throw ParseError (dens[k].second,
                          "duplicate denominator " + dens[k].first.str ());
      ds.push_back (std::move (dens[k].first));
    }

    return EgyptianFraction (std::move (whole), std::move (ds));
  }
}
