#include <doctest.h>

#include <matemagirk/egyptian.hpp>

using namespace matemagirk;

namespace
{
  EgyptianFraction
  ef (int whole, std::vector<int> ds)
  {
    std::vector<Integer> v (ds.begin (), ds.end ());
    return EgyptianFraction (whole, std::move (v));
  }

  Rational
  r (const char* s)
  {
    return parse_rational (s);
  }
}

TEST_CASE ("egyptian/invariants")
{
  CHECK_THROWS_AS (ef (-1, {}), DomainError);
  CHECK_THROWS_AS (ef (0, {1}), DomainError);
  CHECK_THROWS_AS (ef (0, {3, 2}), DomainError);
  CHECK_THROWS_AS (ef (0, {2, 2}), DomainError);
  CHECK_NOTHROW (ef (5, {}));
}

TEST_CASE ("egyptian/value")
{
  // Answer 22, first list: (110 + 55 + 22 + 11 + 2) / 110.
  CHECK (value (ef (1, {2, 5, 10, 55})) == r ("20/11"));
  CHECK (value (ef (0, {})) == Rational (0));
  // Answer 24: (33 + 22 + 11 + 6) / 132.
  CHECK (value (ef (0, {4, 6, 12, 22})) == r ("6/11"));
}

TEST_CASE ("egyptian/greedy")
{
  CHECK (greedy (r ("3/4")) == ef (0, {2, 4}));
  CHECK (greedy (r ("6/11")) == ef (0, {2, 22}));
  CHECK (greedy (r ("175/8")) == ef (21, {2, 3, 24}));
  CHECK (greedy (r ("5")) == ef (5, {}));
  CHECK (greedy (Rational (0)) == ef (0, {}));
  CHECK_THROWS_AS (greedy (r ("-1/2")), DomainError);

  // 5/121 needs denominators far beyond 64 bits.
  EgyptianFraction e (greedy (r ("5/121")));
  CHECK (value (e) == r ("5/121"));
  CHECK (e.denominators ().back () > Integer ("10000000000000000000"));
}

TEST_CASE ("egyptian/greedy-properties")
{
  for (int q (2); q <= 60; ++q)
    for (int p (1); p <= 3 * q; ++p)
    {
      Rational x (p, q);
      EgyptianFraction e (greedy (x));

      Rational rest (x - Rational (e.whole ()));
      CHECK (e.whole () == floor (x));

      Integer last_num (rest.num ());
      for (const Integer& d: e.denominators ())
      {
        // 1/d <= rest < 1/(d-1)
        CHECK (Rational (Integer (1), d) <= rest);
        CHECK (rest < Rational (Integer (1), d - 1));
        rest -= Rational (Integer (1), d);
        if (!rest.is_zero ())
        {
          CHECK (rest.num () < last_num);
          last_num = rest.num ();
        }
      }
      CHECK (rest.is_zero ());
      CHECK (Integer (e.denominators ().size ()) <=
             (x - Rational (e.whole ())).num ());
    }
}

TEST_CASE ("egyptian/check")
{
  CHECK (check (ef (1, {2, 5, 10, 55}), r ("20/11")));
  CHECK (check (ef (0, {2, 22}), r ("6/11")));
  CHECK (check (ef (0, {4, 6, 12, 22}), r ("6/11")));
  CHECK (ef (0, {2, 22}) != ef (0, {4, 6, 12, 22}));
  CHECK_FALSE (check (ef (0, {2}), r ("1/3")));
}

TEST_CASE ("egyptian/combine")
{
  CHECK (combine (ef (0, {2}), ef (0, {4}), BinaryOp::add) == ef (0, {2, 4}));
  CHECK (combine (ef (1, {}), ef (0, {2, 3}), BinaryOp::sub) == ef (0, {6}));

  for (const char* s: {"3/4", "6/11", "175/8", "20/11", "0"})
  {
    EgyptianFraction e (greedy (r (s)));
    CHECK (combine (ef (1, {}), e, BinaryOp::mul) == e);
  }

  EgyptianFraction a (ef (2, {3, 7}));
  EgyptianFraction b (ef (0, {5, 9, 11}));
  for (BinaryOp op: {BinaryOp::add, BinaryOp::sub, BinaryOp::mul,
                     BinaryOp::div})
  {
    EgyptianFraction c (combine (a, b, op));
    CHECK (value (c) == binop (value (a), value (b), op));

    // Output satisfies the invariant (re-validated by the constructor).
    CHECK_NOTHROW (EgyptianFraction (c.whole (), c.denominators ()));
  }

  CHECK_THROWS_AS (combine (b, a, BinaryOp::sub), DomainError);
  CHECK_THROWS_AS (combine (a, ef (0, {}), BinaryOp::div), DomainError);
}

TEST_CASE ("egyptian/text")
{
  CHECK (parse_egyptian ("1 + 1/2 + 1/5 + 1/10 + 1/55") ==
         ef (1, {2, 5, 10, 55}));
  CHECK (parse_egyptian ("0") == ef (0, {}));
  CHECK (parse_egyptian ("1/4, 1/6, 1/12, 1/22") == ef (0, {4, 6, 12, 22}));
  CHECK (parse_egyptian ("1/4, 1/6, 1/12 and 1/22") ==
         ef (0, {4, 6, 12, 22}));
  CHECK (parse_egyptian ("21, 1/2, 1/4, 1/8") == ef (21, {2, 4, 8}));
  CHECK (parse_egyptian ("1/3+1/2") == ef (0, {2, 3}));

  CHECK (to_string (ef (1, {2, 5, 10, 55})) == "1 + 1/2 + 1/5 + 1/10 + 1/55");
  CHECK (to_string (ef (0, {2, 22})) == "1/2 + 1/22");
  CHECK (to_string (ef (0, {})) == "0");
  CHECK (to_string (ef (7, {})) == "7");

  // Canonical text round-trips both ways.
  for (const char* s: {"0", "7", "1/2 + 1/22", "21 + 1/2 + 1/4 + 1/8"})
    CHECK (to_string (parse_egyptian (s)) == s);

  auto offset = [] (const char* s) -> std::size_t
  {
    try
    {
      parse_egyptian (s);
    }
    catch (const ParseError& e)
    {
      return e.offset;
    }
    return std::string::npos;
  };

  CHECK (offset ("1/2, 1/2") == 7);   // duplicate
  CHECK (offset ("1/1") == 2);        // denominator < 2
  CHECK (offset ("2/3") == 0);        // not a unit fraction
  CHECK (offset ("1/2, 3") == 5);     // whole part after fractions
  CHECK (offset ("1/2 1/3") == 4);    // missing separator
  CHECK (offset ("") == 0);
  CHECK (offset ("1/2,") == 4);
}
