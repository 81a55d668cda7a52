#include <doctest.h>

#include <map>

#include <matemagirk/solver.hpp>

#include "reference.hpp"

using namespace matemagirk;

namespace
{
  const Problem&
  problem (int id)
  {
    const Problem* p (find_problem (bundled_corpus (), id));
    REQUIRE (p != nullptr);
    return *p;
  }

  Rational
  first (int id)
  {
    return solve (problem (id).model).values.front ().value;
  }

  Rational
  r (const char* s)
  {
    return parse_rational (s);
  }
}

TEST_CASE ("solver/examples")
{
  CHECK (first (1) == 1760);
  CHECK (first (3) == 1686);
  CHECK (first (8) == 25);
  CHECK (first (11) == 2376);
  CHECK (first (19) == r ("175/8"));
  CHECK (first (21) == 2240);
  CHECK (first (24) == r ("6/11"));
  CHECK (first (25) == 3276);
  CHECK (first (27) == r ("672/37"));

  Solution p2 (solve (problem (2).model));
  REQUIRE (p2.values.size () == 2);
  CHECK (p2.values[0] == Quantity {144, Unit::count});
  CHECK (p2.values[1] == Quantity {6720, Unit::dram});

  Solution p23 (solve (problem (23).model));
  CHECK (p23.values[0] == Quantity {82944000, Unit::grain});
  CHECK (p23.values[1] == Quantity {1036800, Unit::count});

  Solution p26 (solve (problem (26).model));
  CHECK (p26.values == std::vector<Quantity> {{250, Unit::dahekan},
                                              {125, Unit::dahekan},
                                              {125, Unit::dahekan}});

  CHECK_FALSE (p2.derivation.empty ());
}

TEST_CASE ("solver/unsolvable")
{
  CHECK_THROWS_AS (solve (FractionsOfWhole {{r ("1/2"), r ("1/2")},
                                            {1, Unit::count}, {}}),
                   SolveError);
  CHECK_THROWS_AS (solve (CatchUp {{10, Unit::mile}, 5, 5}), SolveError);
  CHECK_THROWS_AS (
    solve (FractionsOfWhole {{r ("1/2")},
                             {1, Unit::count},
                             {{r ("1/2"), {1, Unit::dram}},
                              {r ("1/4"), {1, Unit::dahekan}}}}),
    SolveError);
}

TEST_CASE ("solver/simulate")
{
  for (const Problem& p: bundled_corpus ())
  {
    CAPTURE (p.id);
    Rational x (solve (p.model).values.front ().value);
    CHECK (simulate (p.model, x).is_zero ());
    CHECK_FALSE (simulate (p.model, x + Rational (1)).is_zero ());
    if (x > Rational (1))
      CHECK_FALSE (simulate (p.model, x - Rational (1)).is_zero ());
  }

  CHECK_THROWS_AS (simulate (problem (1).model, Rational (0)), DomainError);
  CHECK_THROWS_AS (simulate (problem (1).model, Rational (-5)), DomainError);
}

TEST_CASE ("solver/reference")
{
  for (const Problem& p: bundled_corpus ())
  {
    CAPTURE (p.id);
    auto x (reference::solve (p.model));
    REQUIRE (x);
    CHECK (reference::back (*x) == solve (p.model).values.front ().value);
  }

  // Whole-number answers also come out of a plain search.
  for (int id: {1, 3, 6, 7, 9, 10, 11, 13, 14, 18, 20, 21, 25})
  {
    CAPTURE (id);
    auto c (reference::scan (problem (id).model, 5000));
    REQUIRE (c);
    CHECK (Rational (Integer (oracle::str (*c))) == first (id));
  }
}

TEST_CASE ("solver/invariants")
{
  // Scaling the remainder scales the total.
  FractionsOfWhole m {{r ("1/2"), r ("1/4"), r ("1/11")},
                      {280, Unit::count}, {}};
  Rational base (solve (m).values.front ().value);
  m.remainder.value *= Rational (3);
  CHECK (solve (m).values.front ().value == base * Rational (3));

  // Proportional shares add up to the total in the weight ratios.
  Solution s (solve (problem (22).model));
  Rational total;
  for (const Quantity& q: s.values)
    total += q.value;
  CHECK (total == 100);
  CHECK (s.values[0].value == Rational (10) * s.values[9].value);

  // A single stage of remainder fractions equals the whole-fraction form.
  CHECK (solve (FractionsOfRemainder {{{r ("1/2"), r ("1/4"), r ("1/11")}},
                                      {280, Unit::count}})
           .values.front ().value == 1760);
}

TEST_CASE ("solver/verify")
{
  std::map<int, VerificationOutcome> by_id;
  for (VerificationOutcome& o: verify_all (bundled_corpus ()))
    by_id[o.id] = o;
  REQUIRE (by_id.size () == 27);

  for (int id: {4, 5, 15})
    CHECK (by_id[id].status == Status::discrepancy);
  for (int id: {25, 26, 27})
    CHECK (by_id[id].status == Status::no_recorded_answer);
  for (int id: {1, 2, 3, 22, 23, 24})
    CHECK (by_id[id].status == Status::match);

  CHECK (by_id[4].computed.front ().value == r ("22000/7"));
  CHECK (by_id[5].computed.front ().value == r ("2000/9"));
  CHECK (by_id[15].computed.front ().value == r ("44520/71"));

  for (int id: {4, 5, 15, 27})
    CHECK (by_id[id].non_integral);
  for (int id: {1, 19, 22, 24, 25, 26})
    CHECK_FALSE (by_id[id].non_integral);

  // The recorded shares of 22 run in the opposite order to the weights.
  Problem flipped (problem (22));
  std::get<ProportionalShares> (flipped.model).weights =
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  CHECK (verify (flipped).status == Status::match);

  Problem broken (problem (1));
  std::get<FractionsOfWhole> (broken.model).fractions = {r ("1/2"), r ("1/2")};
  VerificationOutcome o (verify (broken));
  CHECK (o.status == Status::unsolvable);
  CHECK_FALSE (o.error.empty ());
}

TEST_CASE ("solver/report")
{
  auto os (verify_all (bundled_corpus ()));

  std::string csv (report (os, ReportFormat::csv));
  CHECK (csv.rfind ("id,status,computed,recorded,flags\n", 0) == 0);
  std::size_t rows (0);
  for (char c: csv)
    rows += c == '\n';
  CHECK (rows == 28);
  CHECK (csv.find ("\n4,discrepancy,22000/7 litre,3200 litre,non-integral\n")
         != std::string::npos);

  std::string text (report (os, ReportFormat::text));
  CHECK (text.find ("27, no-recorded-answer") != std::string::npos);
  CHECK (report ({}, ReportFormat::csv) ==
         "id,status,computed,recorded,flags\n");
}
