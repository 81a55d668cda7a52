#include <matemagirk/exact.hpp>

#include <utility>

using namespace std;

namespace matemagirk
{
  ParseError::
  ParseError (size_t o, const string& what)
      : Error ("offset " + std::to_string (o) + ": " + what), offset (o)
  {
  }

  Rational::
  Rational (Integer n)
      : num_ (std::move (n)), den_ (1)
  {
  }

  Rational::
  Rational (Integer num, Integer den)
  {
    if (den == 0)
      throw DivisionByZero ();

    if (den < 0)
    {
      num = -num;
      den = -den;
    }

    Integer g (boost::multiprecision::gcd (num, den));
    if (g > 1)
    {
      num /= g;
      den /= g;
    }

    num_ = std::move (num);
    den_ = std::move (den);
  }

  Rational Rational::
  reciprocal () const
  {
    return Rational (den_, num_);
  }

  Rational
  operator+ (const Rational& a, const Rational& b)
  {
    if (a.den_ == b.den_)
      return Rational (a.num_ + b.num_, a.den_);

    return Rational (a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  Rational
  operator- (const Rational& a, const Rational& b)
  {
    return a + (-b);
  }

  Rational
  operator- (const Rational& a)
  {
    return Rational (-a.num_, a.den_, Rational::normalized_tag {});
  }

  Rational
  operator* (const Rational& a, const Rational& b)
  {
    return Rational (a.num_ * b.num_, a.den_ * b.den_);
  }

  Rational
  operator/ (const Rational& a, const Rational& b)
  {
    if (b.num_ == 0)
      throw DivisionByZero ();

    return Rational (a.num_ * b.den_, a.den_ * b.num_);
  }

  strong_ordering
  operator<=> (const Rational& a, const Rational& b)
  {
    // Denominators are positive so cross-multiplication preserves order.
    //
    Integer l (a.num_ * b.den_);
    Integer r (b.num_ * a.den_);

    if (l < r) return strong_ordering::less;
    if (l > r) return strong_ordering::greater;
    return strong_ordering::equal;
  }

  Rational
  binop (const Rational& a, const Rational& b, BinaryOp op)
  {
    switch (op)
    {
    case BinaryOp::add: return a + b;
    case BinaryOp::sub: return a - b;
    case BinaryOp::mul: return a * b;
    case BinaryOp::div: return a / b;
    }
    throw logic_error ("invalid BinaryOp");
  }

  strong_ordering
  compare (const Rational& a, const Rational& b)
  {
    return a <=> b;
  }

  Integer
  floor (const Rational& a)
  {
    // Integer division truncates toward zero.
    //
    Integer q (a.num () / a.den ());
    if (a.num () < 0 && q * a.den () != a.num ())
      --q;
    return q;
  }

  Integer
  ceil (const Rational& a)
  {
    return -floor (-a);
  }

  Integer
  round_nearest (const Rational& a, TieRule tie)
  {
    Integer lo (floor (a));
    Rational frac (a - Rational (lo));
    Rational half (1, 2);

    auto c (frac <=> half);
    if (c < 0)
      return lo;
    if (c > 0)
      return lo + 1;
    return tie == TieRule::half_up ? Integer (lo + 1) : lo;
  }

  Rational
  abs (const Rational& a)
  {
    return a.sign () < 0 ? -a : a;
  }

  string
  to_string (const Integer& n)
  {
    return n.str ();
  }

  string
  to_string (const Rational& r)
  {
    string s (r.num ().str ());
    if (!r.is_integer ())
    {
      s += '/';
      s += r.den ().str ();
    }
    return s;
  }

  static Integer
  parse_digits (string_view t, size_t base_offset)
  {
    if (t.empty ())
      throw ParseError (base_offset, "expected digits");

    Integer n (0);
    for (size_t i (0); i != t.size (); ++i)
    {
      char c (t[i]);
      if (c < '0' || c > '9')
        throw ParseError (base_offset + i,
                          string ("unexpected character '") + c + "'");
      n = n * 10 + (c - '0');
    }
    return n;
  }

  Integer
  parse_integer (string_view t)
  {
    bool neg (!t.empty () && t.front () == '-');
    Integer n (parse_digits (neg ? t.substr (1) : t, neg ? 1 : 0));
    return neg ? Integer (-n) : n;
  }

  Rational
  parse_rational (string_view t)
  {
    size_t slash (t.find ('/'));
    if (slash == string_view::npos)
      return Rational (parse_integer (t));

    Integer n (parse_integer (t.substr (0, slash)));
    Integer d (parse_digits (t.substr (slash + 1), slash + 1));

    if (d == 0)
      throw ParseError (slash + 1, "zero denominator");

    return Rational (std::move (n), std::move (d));
  }

  ostream&
  operator<< (ostream& os, const Rational& r)
  {
    return os << to_string (r);
  }

  const char*
  to_string (BinaryOp op)
  {
    switch (op)
    {
    case BinaryOp::add: return "add";
    case BinaryOp::sub: return "sub";
    case BinaryOp::mul: return "mul";
    case BinaryOp::div: return "div";
    }
    return "?";
  }

  const char*
  to_string (TieRule t)
  {
    return t == TieRule::half_up ? "half-up" : "half-down";
  }
}
