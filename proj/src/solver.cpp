#include <matemagirk/solver.hpp>

#include <algorithm>
#include <sstream>

using namespace std;

namespace matemagirk
{
  namespace
  {
    template <typename... Ts>
    struct overloaded: Ts... {using Ts::operator()...;};
    template <typename... Ts>
    overloaded (Ts...) -> overloaded<Ts...>;

    Rational
    sum (const vector<Rational>& v)
    {
      Rational s;
      for (const Rational& x: v)
        s += x;
      return s;
    }

    string
    list (const vector<Rational>& v)
    {
      string s;
      for (const Rational& x: v)
      {
        if (!s.empty ())
          s += " + ";
        s += to_string (x);
      }
      return s;
    }

    Solution
    solve_model (const FractionsOfWhole& m)
    {
      Solution s;
      Rational levied (sum (m.fractions));
      Rational kept (Rational (1) - levied);
      s.derivation.push_back ({"fractions taken " + list (m.fractions), levied});
      s.derivation.push_back ({"fraction left", kept});

      if (kept.sign () <= 0)
        throw SolveError ("the fractions taken add up to " +
                          to_string (levied) + "; nothing is left");

      Rational total (m.remainder.value / kept);
      s.derivation.push_back ({"total = remainder / fraction left", total});
      s.values.push_back (Quantity {total, m.remainder.unit});

      if (!m.part_prices.empty ())
      {
        Unit money (m.part_prices.front ().unit_price.unit);
        Rational revenue;
        Rational sold;
        for (const auto& pp: m.part_prices)
        {
          Rational n (pp.fraction * total);
          Rational r (n * convert (pp.unit_price, money).value);
          sold += n;
          revenue += r;
          s.derivation.push_back (
            {to_string (pp.fraction) + " of the total sold at " +
             to_string (pp.unit_price) + " each", r});
        }
        s.derivation.push_back ({"left unsold", total - sold});
        s.derivation.push_back ({"total revenue", revenue});
        s.values.push_back (Quantity {revenue, money});
      }
      return s;
    }

    Solution
    solve_model (const FractionsOfRemainder& m)
    {
      Solution s;
      Rational kept (1);
      for (size_t i (0); i != m.stages.size (); ++i)
      {
        Rational k (Rational (1) - sum (m.stages[i]));
        if (k.sign () <= 0)
          throw SolveError ("stage " + std::to_string (i + 1) +
                            " leaves nothing");
        kept *= k;
        s.derivation.push_back (
          {"stage " + std::to_string (i + 1) + " keeps 1 - (" +
           list (m.stages[i]) + "); kept so far", kept});
      }

      Rational total (m.remainder.value / kept);
      s.derivation.push_back ({"total = remainder / fraction kept", total});
      s.values.push_back (Quantity {total, m.remainder.unit});
      return s;
    }

    Solution
    solve_model (const CatchUp& m)
    {
      Solution s;
      Rational gain (m.rate_chaser - m.rate_leader);
      if (gain.sign () <= 0)
        throw SolveError ("the chaser is not faster than the leader");

      Rational t (m.lead.value / gain);
      s.derivation.push_back ({"gain per day", gain});
      s.derivation.push_back ({"days = lead / gain per day", t});
      s.values.push_back (Quantity {t, Unit::day});
      return s;
    }

    Solution
    solve_model (const DoublingPayment& m)
    {
      Solution s;
      Integer scale (1);
      for (Integer i (0); i != m.rounds; ++i)
        scale *= 2;

      Rational pay (m.payment.value);
      Rational fin (convert (m.final, m.payment.unit).value);
      Rational start ((fin + pay * Rational (scale - 1)) / Rational (scale));

      s.derivation.push_back ({"growth factor 2^rounds", Rational (scale)});
      s.derivation.push_back (
        {"start = (final + payment * (2^rounds - 1)) / 2^rounds", start});
      s.values.push_back (Quantity {start, m.payment.unit});
      return s;
    }

    Solution
    solve_model (const ProportionalShares& m)
    {
      Solution s;
      Integer w (0);
      for (const Integer& x: m.weights)
        w += x;

      Rational unit (m.total.value / Rational (w));
      s.derivation.push_back ({"sum of weights", Rational (w)});
      s.derivation.push_back ({"share per unit weight", unit});

      for (const Integer& x: m.weights)
        s.values.push_back (Quantity {unit * Rational (x), m.total.unit});
      return s;
    }

    Solution
    solve_model (const CombinedRates& m)
    {
      Solution s;
      Rational r (sum (m.rates));
      Rational t (r.reciprocal ());
      s.derivation.push_back ({"combined rate " + list (m.rates), r});
      s.derivation.push_back ({"time = 1 / combined rate", t});
      s.values.push_back (Quantity {t, Unit::hour});
      return s;
    }

    Solution
    solve_model (const UnitAggregation& m)
    {
      Solution s;
      Rational total (Rational (m.containers) * Rational (m.per_container));
      Rational eaters (total / Rational (m.per_consumer));
      s.derivation.push_back ({"grains = containers * per container", total});
      s.derivation.push_back ({"consumers = grains / per consumer", eaters});
      s.values.push_back (Quantity {total, Unit::grain});
      s.values.push_back (Quantity {eaters, Unit::count});
      return s;
    }

    Solution
    solve_model (const SelfReferentialSum& m)
    {
      Solution s;
      Rational f (Rational (1) + sum (m.self_fractions));
      Rational t (m.target.value / f);
      s.derivation.push_back ({"1 + " + list (m.self_fractions), f});
      s.derivation.push_back ({"value = target / (1 + fractions)", t});
      s.values.push_back (Quantity {t, m.target.unit});
      return s;
    }

    // Narrative replays. These deliberately walk the story step by step
    // instead of reusing the closed forms above.

    Rational
    replay (const FractionsOfWhole& m, const Rational& c)
    {
      Rational left (c);
      for (const Rational& f: m.fractions)
        left -= f * c;
      return m.remainder.value - left;
    }

    Rational
    replay (const FractionsOfRemainder& m, const Rational& c)
    {
      Rational left (c);
      for (const vector<Rational>& st: m.stages)
      {
        Rational levy;
        for (const Rational& f: st)
          levy += f * left;
        left -= levy;
      }
      return m.remainder.value - left;
    }

    Rational
    replay (const CatchUp& m, const Rational& days)
    {
      Rational leader (m.lead.value + m.rate_leader * days);
      Rational chaser (m.rate_chaser * days);
      return leader - chaser;
    }

    Rational
    replay (const DoublingPayment& m, const Rational& c)
    {
      Rational held (c);
      for (Integer i (0); i != m.rounds; ++i)
      {
        held += held;
        held -= m.payment.value;
      }
      return convert (m.final, m.payment.unit).value - held;
    }

    Rational
    replay (const ProportionalShares& m, const Rational& first)
    {
      Rational per_weight (first / Rational (m.weights.front ()));
      Rational handed;
      for (const Integer& w: m.weights)
        handed += per_weight * Rational (w);
      return m.total.value - handed;
    }

    Rational
    replay (const CombinedRates& m, const Rational& hours)
    {
      Rational filled;
      for (const Rational& r: m.rates)
        filled += r * hours;
      return Rational (1) - filled;
    }

    Rational
    replay (const UnitAggregation& m, const Rational& grains)
    {
      Rational left (grains);
      for (Integer i (0); i != m.containers; ++i)
        left -= Rational (m.per_container);
      return -left; // The granary ends up empty.
    }

    Rational
    replay (const SelfReferentialSum& m, const Rational& c)
    {
      Rational said (c);
      for (const Rational& f: m.self_fractions)
        said += f * c;
      return m.target.value - said;
    }

    bool
    same_value (const Quantity& computed, const RecordedAnswer& a)
    {
      return visit (overloaded {
          [&computed] (const Quantity& q)
          {
            return convertible (q.unit, computed.unit) &&
                   convert (q, computed.unit).value == computed.value;
          },
          [&computed] (const EgyptianAnswer& e)
          {
            return convertible (e.unit, computed.unit) &&
                   check (e.value,
                          convert (Quantity {computed.value, computed.unit},
                                   e.unit).value);
          }},
        a);
    }

    string
    join (const vector<string>& v, const char* sep)
    {
      string r;
      for (size_t i (0); i != v.size (); ++i)
      {
        if (i != 0)
          r += sep;
        r += v[i];
      }
      return r;
    }
  }

  Solution
  solve (const ProblemModel& m)
  {
    try
    {
      return visit ([] (const auto& x) {return solve_model (x);}, m);
    }
    catch (const DivisionByZero& e)
    {
      throw SolveError (e.what ());
    }
    catch (const ConversionError& e)
    {
      throw SolveError (e.what ());
    }
  }

  Rational
  simulate (const ProblemModel& m, const Rational& candidate)
  {
    if (candidate.sign () <= 0)
      throw DomainError ("candidate " + to_string (candidate) +
                         " must be positive");

    return visit ([&candidate] (const auto& x) {return replay (x, candidate);},
                  m);
  }

  const char*
  to_string (Status s)
  {
    switch (s)
    {
    case Status::match:              return "match";
    case Status::discrepancy:        return "discrepancy";
    case Status::no_recorded_answer: return "no-recorded-answer";
    case Status::unsolvable:         return "unsolvable";
    }
    return "?";
  }

  VerificationOutcome
  verify (const Problem& p)
  {
    VerificationOutcome o;
    o.id = p.id;
    o.recorded = p.recorded;

    Solution s;
    try
    {
      s = solve (p.model);
    }
    catch (const SolveError& e)
    {
      o.status = Status::unsolvable;
      o.error = e.what ();
      return o;
    }

    o.computed = s.values;

    bool egyptian (any_of (p.recorded.begin (), p.recorded.end (),
                           [] (const RecordedAnswer& a)
                           {
                             return holds_alternative<EgyptianAnswer> (a);
                           }));

    o.non_integral = !egyptian &&
      any_of (o.computed.begin (), o.computed.end (),
              [] (const Quantity& q) {return !q.value.is_integer ();});

    if (p.recorded.empty ())
    {
      o.status = Status::no_recorded_answer;
      return o;
    }

    // Exact equality is transitive, so pairing each recorded answer with
    // the first unused equal value finds a full matching whenever one
    // exists.
    //
    vector<bool> used (o.computed.size (), false);
    bool all (p.recorded.size () <= o.computed.size ());
    for (const RecordedAnswer& a: p.recorded)
    {
      bool found (false);
      for (size_t i (0); i != o.computed.size () && !found; ++i)
        if (!used[i] && same_value (o.computed[i], a))
          used[i] = found = true;

      all = all && found;
    }

    o.status = all ? Status::match : Status::discrepancy;
    return o;
  }

  vector<VerificationOutcome>
  verify_all (const vector<Problem>& ps)
  {
    vector<VerificationOutcome> r;
    r.reserve (ps.size ());
    for (const Problem& p: ps)
      r.push_back (verify (p));

    sort (r.begin (), r.end (),
          [] (const VerificationOutcome& a, const VerificationOutcome& b)
          {
            return a.id < b.id;
          });
    return r;
  }

  string
  report (const vector<VerificationOutcome>& os, ReportFormat f)
  {
    ostringstream r;
    if (f == ReportFormat::csv)
      r << "id,status,computed,recorded,flags\n";

    for (const VerificationOutcome& o: os)
    {
      vector<string> computed;
      for (const Quantity& q: o.computed)
        computed.push_back (to_string (q));

      vector<string> recorded;
      for (const RecordedAnswer& a: o.recorded)
        recorded.push_back (to_string (a));

      vector<string> flags;
      if (o.non_integral)
        flags.push_back ("non-integral");
      if (o.status == Status::unsolvable)
        flags.push_back ("error: " + o.error);

      if (f == ReportFormat::csv)
      {
        auto field = [] (const string& s)
        {
          if (s.find_first_of (",\"") == string::npos)
            return s;

          string q ("\"");
          for (char c: s)
          {
            if (c == '"')
              q += '"';
            q += c;
          }
          return q + '"';
        };

        r << o.id << ',' << to_string (o.status) << ','
          << field (join (computed, "; ")) << ','
          << field (join (recorded, "; ")) << ','
          << field (join (flags, "; ")) << '\n';
      }
      else
      {
        r << o.id << ", " << to_string (o.status)
          << ", computed: " << (computed.empty () ? "-" : join (computed, "; "))
          << ", recorded: " << (recorded.empty () ? "-" : join (recorded, "; "));
        if (!flags.empty ())
          r << ", flags: " << join (flags, "; ");
        r << '\n';
      }
    }
    return r.str ();
  }
}
