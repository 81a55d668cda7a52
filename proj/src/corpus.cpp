#include <matemagirk/corpus.hpp>

#include <set>
#include <sstream>
#include <stdexcept>

using namespace std;

namespace matemagirk
{
  CorpusError::
  CorpusError (size_t l, const string& what)
      : Error ("line " + std::to_string (l) + ": " + what), line (l)
  {
  }

  namespace
  {
    template <typename... Ts>
    struct overloaded: Ts... {using Ts::operator()...;};
    template <typename... Ts>
    overloaded (Ts...) -> overloaded<Ts...>;

    const char* const class_names[] = {
      "fractions-of-whole",
      "fractions-of-remainder",
      "catch-up",
      "doubling-payment",
      "proportional-shares",
      "combined-rates",
      "unit-aggregation",
      "self-referential-sum"};

    struct token
    {
      string text;
      bool quoted;
    };

    // Split a line into whitespace-separated tokens. Double-quoted tokens
    // may contain spaces and the escapes \" and \\. An unquoted '#' starts
    // a comment.
    //
    vector<token>
    tokenize (string_view l, size_t line)
    {
      vector<token> r;
      size_t i (0);
      while (i != l.size ())
      {
        char c (l[i]);
        if (c == ' ' || c == '\t' || c == '\r')
        {
          ++i;
          continue;
        }

        if (c == '#')
          break;

        if (c == '"')
        {
          string s;
          for (++i;; ++i)
          {
            if (i == l.size ())
              throw CorpusError (line, "unterminated quoted string");

            if (l[i] == '\\' && i + 1 != l.size ())
              s += l[++i];
            else if (l[i] == '"')
            {
              ++i;
              break;
            }
            else
              s += l[i];
          }
          r.push_back (token {std::move (s), true});
          continue;
        }

        size_t b (i);
        while (i != l.size () && l[i] != ' ' && l[i] != '\t' &&
               l[i] != '\r' && l[i] != '#')
          ++i;
        r.push_back (token {string (l.substr (b, i - b)), false});
      }
      return r;
    }

    string
    quote (const string& s)
    {
      string r ("\"");
      for (char c: s)
      {
        if (c == '"' || c == '\\')
          r += '\\';
        r += c;
      }
      r += '"';
      return r;
    }

    struct pending
    {
      size_t line;
      int id;
      string title;

      optional<size_t> cls;

      vector<Rational> fractions;
      vector<vector<Rational>> stages;
      optional<Quantity> remainder;
      vector<FractionsOfWhole::PartPrice> prices;
      optional<Quantity> lead;
      optional<Rational> rate_leader;
      optional<Rational> rate_chaser;
      optional<Integer> rounds;
      optional<Quantity> payment;
      optional<Quantity> final;
      optional<Quantity> total;
      vector<Integer> weights;
      vector<Rational> rates;
      optional<Integer> containers;
      optional<Integer> per_container;
      optional<Integer> per_consumer;
      vector<Rational> self_fractions;
      optional<Quantity> target;

      vector<RecordedAnswer> recorded;
      optional<string> note;
      vector<pair<string, string>> meta;
    };

    class parser
    {
    public:
      vector<Problem>
      parse (string_view text)
      {
        vector<Problem> r;
        set<int> ids;
        optional<pending> cur;

        size_t line (0);
        for (size_t b (0); b <= text.size ();)
        {
          size_t e (text.find ('\n', b));
          if (e == string_view::npos)
            e = text.size ();

          line_ = ++line;
          vector<token> ts (tokenize (text.substr (b, e - b), line_));
          b = e + 1;

          if (ts.empty ())
            continue;

          const string& kw (ts[0].text);

          if (!cur)
          {
            if (kw != "problem")
              fail ("expected 'problem', found '" + kw + "'");

            arity (ts, 3);
            if (!ts[2].quoted)
              fail ("problem title must be quoted");

            int id (small_integer (ts[1].text, "problem id"));
            if (id < 1)
              fail ("problem id must be positive");
            if (!ids.insert (id).second)
              fail ("duplicate problem id " + std::to_string (id));

            cur = pending {};
            cur->line = line_;
            cur->id = id;
            cur->title = ts[2].text;
            continue;
          }

          if (kw == "end")
          {
            arity (ts, 1);
            r.push_back (finish (std::move (*cur)));
            cur.reset ();
            continue;
          }

          key (*cur, ts);
        }

        if (cur)
          throw CorpusError (cur->line,
                             "problem " + std::to_string (cur->id) +
                             " is missing 'end'");
        return r;
      }

    private:
      [[noreturn]] void
      fail (const string& what) const
      {
        throw CorpusError (line_, what);
      }

      void
      arity (const vector<token>& ts, size_t n) const
      {
        if (ts.size () != n)
          fail ("'" + ts[0].text + "' expects " + std::to_string (n - 1) +
                " argument(s)");
      }

      int
      small_integer (const string& s, const char* what) const
      {
        try
        {
          Integer n (parse_integer (s));
          if (n > 1000000 || n < -1000000)
            fail (string (what) + " is too large");
          return n.convert_to<int> ();
        }
        catch (const ParseError& e)
        {
          fail (string ("invalid ") + what + " '" + s + "'");
        }
      }

      Rational
      rational (const string& s) const
      {
        try
        {
          return parse_rational (s);
        }
        catch (const ParseError& e)
        {
          fail ("invalid number '" + s + "': " + e.what ());
        }
      }

      Integer
      positive_integer (const string& s, const char* what) const
      {
        Rational v (rational (s));
        if (!v.is_integer () || v.sign () <= 0)
          fail (string (what) + " must be a positive integer, found '" + s +
                "'");
        return v.num ();
      }

      Rational
      positive (const string& s, const char* what) const
      {
        Rational v (rational (s));
        if (v.sign () <= 0)
          fail (string (what) + " must be positive, found '" + s + "'");
        return v;
      }

      Rational
      proper_fraction (const string& s) const
      {
        Rational v (rational (s));
        if (v.sign () <= 0 || v >= Rational (1))
          fail ("fraction " + s + " must lie strictly between 0 and 1");
        return v;
      }

      Unit
      unit (const string& s) const
      {
        try
        {
          return parse_unit (s);
        }
        catch (const invalid_argument& e)
        {
          fail (e.what ());
        }
      }

      Quantity
      quantity (const string& v, const string& u) const
      {
        Rational r (rational (v));
        if (r.sign () < 0)
          fail ("quantity " + v + " must not be negative");
        return Quantity {r, unit (u)};
      }

      void
      require_class (const pending& p, const string& kw, size_t c) const
      {
        if (!p.cls)
          fail ("'" + kw + "' before 'class'");
        if (*p.cls != c)
          fail ("'" + kw + "' is not valid for class " + class_names[*p.cls]);
      }

      template <typename T>
      void
      once (optional<T>& slot, T v, const string& kw) const
      {
        if (slot)
          fail ("duplicate '" + kw + "'");
        slot = std::move (v);
      }

      void
      key (pending& p, const vector<token>& ts) const
      {
        const string& kw (ts[0].text);

        enum {fow, forem, catchup, doubling, shares, rates, aggregation,
              selfref};

        if (kw == "class")
        {
          arity (ts, 2);
          if (p.cls)
            fail ("duplicate 'class'");

          for (size_t i (0); i != size (class_names); ++i)
            if (ts[1].text == class_names[i])
              p.cls = i;

          if (!p.cls)
            fail ("unknown problem class '" + ts[1].text + "'");
        }
        else if (kw == "fraction")
        {
          require_class (p, kw, fow);
          arity (ts, 2);
          p.fractions.push_back (proper_fraction (ts[1].text));
        }
        else if (kw == "stage")
        {
          require_class (p, kw, forem);
          if (ts.size () < 2)
            fail ("'stage' expects a comma-separated list of fractions");

          string all;
          for (size_t i (1); i != ts.size (); ++i)
            all += ts[i].text;

          vector<Rational> st;
          Rational sum;
          for (size_t b (0); b <= all.size ();)
          {
            size_t e (all.find (',', b));
            if (e == string::npos)
              e = all.size ();
            st.push_back (proper_fraction (all.substr (b, e - b)));
            sum += st.back ();
            b = e + 1;
          }

          if (sum >= Rational (1))
            fail ("stage levies " + to_string (sum) +
                  " of what is left; nothing would remain");

          p.stages.push_back (std::move (st));
        }
        else if (kw == "remainder")
        {
          if (!p.cls || (*p.cls != fow && *p.cls != forem))
            require_class (p, kw, fow);
          arity (ts, 3);

          // A mixed amount such as 421 kendinar and 3600 dahekan is given
          // as several lines and summed in the first line's unit.
          //
          Quantity q (quantity (ts[1].text, ts[2].text));
          if (!p.remainder)
            p.remainder = q;
          else
          {
            try
            {
              p.remainder = add (*p.remainder, q);
            }
            catch (const ConversionError& e)
            {
              fail (e.what ());
            }
          }
        }
        else if (kw == "price")
        {
          require_class (p, kw, fow);
          arity (ts, 4);
          p.prices.push_back (FractionsOfWhole::PartPrice {
            proper_fraction (ts[1].text), quantity (ts[2].text, ts[3].text)});
        }
        else if (kw == "lead")
        {
          require_class (p, kw, catchup);
          arity (ts, 3);
          once (p.lead, quantity (ts[1].text, ts[2].text), kw);
        }
        else if (kw == "rate-leader" || kw == "rate-chaser")
        {
          require_class (p, kw, catchup);
          arity (ts, 2);
          once (kw == "rate-leader" ? p.rate_leader : p.rate_chaser,
                positive (ts[1].text, "rate"), kw);
        }
        else if (kw == "rounds")
        {
          require_class (p, kw, doubling);
          arity (ts, 2);
          once (p.rounds, positive_integer (ts[1].text, "rounds"), kw);
        }
        else if (kw == "payment" || kw == "final")
        {
          require_class (p, kw, doubling);
          arity (ts, 3);
          once (kw == "payment" ? p.payment : p.final,
                quantity (ts[1].text, ts[2].text), kw);
        }
        else if (kw == "total")
        {
          require_class (p, kw, shares);
          arity (ts, 3);
          once (p.total, quantity (ts[1].text, ts[2].text), kw);
        }
        else if (kw == "weight")
        {
          require_class (p, kw, shares);
          arity (ts, 2);
          p.weights.push_back (positive_integer (ts[1].text, "weight"));
        }
        else if (kw == "rate")
        {
          require_class (p, kw, rates);
          arity (ts, 2);
          p.rates.push_back (positive (ts[1].text, "rate"));
        }
        else if (kw == "containers" || kw == "per-container" ||
                 kw == "per-consumer")
        {
          require_class (p, kw, aggregation);
          arity (ts, 2);
          once (kw == "containers"    ? p.containers :
                kw == "per-container" ? p.per_container :
                                        p.per_consumer,
                positive_integer (ts[1].text, kw.c_str ()), kw);
        }
        else if (kw == "self-fraction")
        {
          require_class (p, kw, selfref);
          arity (ts, 2);
          p.self_fractions.push_back (proper_fraction (ts[1].text));
        }
        else if (kw == "target")
        {
          require_class (p, kw, selfref);
          arity (ts, 3);
          once (p.target, quantity (ts[1].text, ts[2].text), kw);
        }
        else if (kw == "answer")
        {
          arity (ts, 3);
          p.recorded.push_back (quantity (ts[1].text, ts[2].text));
        }
        else if (kw == "answer-egyptian")
        {
          arity (ts, 3);
          if (!ts[1].quoted)
            fail ("Egyptian answer must be quoted");

          try
          {
            p.recorded.push_back (
              EgyptianAnswer {parse_egyptian (ts[1].text), unit (ts[2].text)});
          }
          catch (const ParseError& e)
          {
            fail (string ("invalid Egyptian fraction: ") + e.what ());
          }
        }
        else if (kw == "note")
        {
          arity (ts, 2);
          if (!ts[1].quoted)
            fail ("note must be quoted");
          if (p.note)
            fail ("duplicate 'note'");
          p.note = ts[1].text;
        }
        else if (kw == "meta")
        {
          arity (ts, 3);
          if (!ts[2].quoted)
            fail ("meta value must be quoted");
          p.meta.emplace_back (ts[1].text, ts[2].text);
        }
        else
          fail ("unknown key '" + kw + "'");
      }

      template <typename T>
      T
      need (const optional<T>& v, const char* kw) const
      {
        if (!v)
          fail (string ("missing '") + kw + "'");
        return *v;
      }

      Problem
      finish (pending p) const
      {
        if (!p.cls)
          fail ("missing 'class'");

        Problem r;
        r.id = p.id;
        r.title = std::move (p.title);
        r.recorded = std::move (p.recorded);
        r.note = std::move (p.note);
        r.meta = std::move (p.meta);

        switch (*p.cls)
        {
        case 0:
          if (p.fractions.empty ())
            fail ("missing 'fraction'");
          r.model = FractionsOfWhole {std::move (p.fractions),
                                      need (p.remainder, "remainder"),
                                      std::move (p.prices)};
          break;
        case 1:
          if (p.stages.empty ())
            fail ("missing 'stage'");
          r.model = FractionsOfRemainder {std::move (p.stages),
                                          need (p.remainder, "remainder")};
          break;
        case 2:
          r.model = CatchUp {need (p.lead, "lead"),
                             need (p.rate_leader, "rate-leader"),
                             need (p.rate_chaser, "rate-chaser")};
          break;
        case 3:
          r.model = DoublingPayment {need (p.rounds, "rounds"),
                                     need (p.payment, "payment"),
                                     need (p.final, "final")};
          break;
        case 4:
          if (p.weights.empty ())
            fail ("missing 'weight'");
          r.model = ProportionalShares {need (p.total, "total"),
                                        std::move (p.weights)};
          break;
        case 5:
          if (p.rates.empty ())
            fail ("missing 'rate'");
          r.model = CombinedRates {std::move (p.rates)};
          break;
        case 6:
          r.model = UnitAggregation {need (p.containers, "containers"),
                                     need (p.per_container, "per-container"),
                                     need (p.per_consumer, "per-consumer")};
          break;
        case 7:
          if (p.self_fractions.empty ())
            fail ("missing 'self-fraction'");
          r.model = SelfReferentialSum {std::move (p.self_fractions),
                                        need (p.target, "target")};
          break;
        }
        return r;
      }

      size_t line_ = 0;
    };

    string
    qty (const Quantity& q)
    {
      return to_string (q.value) + ' ' + to_string (q.unit);
    }
  }

  const char*
  class_name (const ProblemModel& m)
  {
    return class_names[m.index ()];
  }

  string
  to_string (const RecordedAnswer& a)
  {
    return visit (overloaded {
        [] (const Quantity& q) {return to_string (q);},
        [] (const EgyptianAnswer& e)
        {
          return to_string (e.value) + ' ' + to_string (e.unit);
        }},
      a);
  }

  vector<Problem>
  parse_corpus (string_view text)
  {
    return parser ().parse (text);
  }

  string
  serialize_corpus (const vector<Problem>& ps)
  {
    ostringstream os;
    bool first (true);
    for (const Problem& p: ps)
    {
      if (!first)
        os << '\n';
      first = false;

      os << "problem " << p.id << ' ' << quote (p.title) << '\n'
         << "  class " << class_name (p.model) << '\n';

      visit (overloaded {
          [&os] (const FractionsOfWhole& m)
          {
            for (const Rational& f: m.fractions)
              os << "  fraction " << f << '\n';
            os << "  remainder " << qty (m.remainder) << '\n';
            for (const auto& pp: m.part_prices)
              os << "  price " << pp.fraction << ' ' << qty (pp.unit_price)
                 << '\n';
          },
          [&os] (const FractionsOfRemainder& m)
          {
            for (const vector<Rational>& st: m.stages)
            {
              os << "  stage ";
              for (size_t i (0); i != st.size (); ++i)
                os << (i != 0 ? "," : "") << st[i];
              os << '\n';
            }
            os << "  remainder " << qty (m.remainder) << '\n';
          },
          [&os] (const CatchUp& m)
          {
            os << "  lead " << qty (m.lead) << '\n'
               << "  rate-leader " << m.rate_leader << '\n'
               << "  rate-chaser " << m.rate_chaser << '\n';
          },
          [&os] (const DoublingPayment& m)
          {
            os << "  rounds " << m.rounds << '\n'
               << "  payment " << qty (m.payment) << '\n'
               << "  final " << qty (m.final) << '\n';
          },
          [&os] (const ProportionalShares& m)
          {
            os << "  total " << qty (m.total) << '\n';
            for (const Integer& w: m.weights)
              os << "  weight " << w << '\n';
          },
          [&os] (const CombinedRates& m)
          {
            for (const Rational& r: m.rates)
              os << "  rate " << r << '\n';
          },
          [&os] (const UnitAggregation& m)
          {
            os << "  containers " << m.containers << '\n'
               << "  per-container " << m.per_container << '\n'
               << "  per-consumer " << m.per_consumer << '\n';
          },
          [&os] (const SelfReferentialSum& m)
          {
            for (const Rational& f: m.self_fractions)
              os << "  self-fraction " << f << '\n';
            os << "  target " << qty (m.target) << '\n';
          }},
        p.model);

      for (const RecordedAnswer& a: p.recorded)
      {
        if (const Quantity* q = get_if<Quantity> (&a))
          os << "  answer " << qty (*q) << '\n';
        else
        {
          const EgyptianAnswer& e (get<EgyptianAnswer> (a));
          os << "  answer-egyptian " << quote (to_string (e.value)) << ' '
             << to_string (e.unit) << '\n';
        }
      }

      if (p.note)
        os << "  note " << quote (*p.note) << '\n';

      for (const auto& [k, v]: p.meta)
        os << "  meta " << k << ' ' << quote (v) << '\n';

      os << "end\n";
    }
    return os.str ();
  }

  const Problem*
  find_problem (const vector<Problem>& ps, int id)
  {
    for (const Problem& p: ps)
      if (p.id == id)
        return &p;
    return nullptr;
  }

  const vector<Problem>&
  bundled_corpus ()
  {
    static const vector<Problem> ps (parse_corpus (bundled_corpus_text ()));
    return ps;
  }
}
