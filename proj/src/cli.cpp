#include <matemagirk/cli.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include <matemagirk/corpus.hpp>
#include <matemagirk/egyptian.hpp>
#include <matemagirk/numerals.hpp>
#include <matemagirk/puzzles.hpp>
#include <matemagirk/solver.hpp>
#include <matemagirk/tables.hpp>

using namespace std;

namespace matemagirk
{
  namespace
  {
    // Raised for bad user input discovered after argument parsing.
    //
    class usage_error: public Error
    {
    public:
      using Error::Error;
    };

    vector<Problem>
    load_corpus (const string& path)
    {
      if (path.empty ())
        return bundled_corpus ();

      ifstream f (path, ios::binary);
      if (!f)
        throw usage_error ("unable to open corpus file '" + path + "'");

      ostringstream s;
      s << f.rdbuf ();

      try
      {
        return parse_corpus (s.str ());
      }
      catch (const CorpusError& e)
      {
        throw usage_error (path + ':' + std::to_string (e.line) + ": " +
                           e.what ());
      }
    }

    // A whole number as a numeral; anything else as whole part plus greedy
    // unit fractions, every number written as a numeral.
    //
    string
    numeral_value (const Rational& v, NumeralSystem s)
    {
      NumeralOptions o {true};
      if (v.is_integer ())
        return encode (v.num (), s, o);

      EgyptianFraction e (greedy (v));
      string r;
      if (e.whole () != 0)
        r = encode (e.whole (), s, o);
      for (const Integer& d: e.denominators ())
      {
        if (!r.empty ())
          r += " + ";
        r += "1/" + encode (d, s, o);
      }
      return r;
    }

    int
    cmd_solve (int id, const string& corpus, bool trace,
               const optional<NumeralSystem>& numerals, ostream& out)
    {
      vector<Problem> ps (load_corpus (corpus));
      const Problem* p (find_problem (ps, id));
      if (p == nullptr)
        throw usage_error ("no problem " + std::to_string (id) +
                           " in the corpus");

      Solution s (solve (p->model));

      out << "problem " << p->id << ": " << p->title << '\n'
          << "class: " << class_name (p->model) << '\n';

      if (trace)
        for (const Step& st: s.derivation)
          out << "  " << st.description << ": " << st.value << '\n';

      for (const Quantity& q: s.values)
      {
        out << "answer: ";
        if (numerals)
          out << numeral_value (q.value, *numerals) << ' '
              << to_string (q.unit) << " (" << q.value << ')';
        else
          out << to_string (q);
        out << '\n';
      }
      return exit_ok;
    }

    int
    cmd_verify (const string& corpus, const string& format,
                const optional<vector<int>>& allowed, ostream& out,
                ostream& err)
    {
      vector<VerificationOutcome> os (verify_all (load_corpus (corpus)));

      out << report (os, format == "csv" ? ReportFormat::csv
                                         : ReportFormat::text);

      set<int> ok;
      if (allowed)
        ok.insert (allowed->begin (), allowed->end ());

      int rc (exit_ok);
      for (const VerificationOutcome& o: os)
      {
        if (o.status == Status::unsolvable)
        {
          err << "problem " << o.id << " is unsolvable: " << o.error << '\n';
          rc = exit_internal;
        }
        else if (o.status == Status::discrepancy && ok.count (o.id) == 0)
        {
          err << "problem " << o.id
              << ": recorded answer disagrees with the computed one\n";
          if (rc == exit_ok)
            rc = exit_discrepancy;
        }
      }
      return rc;
    }

    int
    cmd_tables (const string& kind, const string& format,
                const optional<NumeralSystem>& numerals, const string& tie,
                bool b10, ostream& out)
    {
      TableSpec spec {parse_table_kind (kind)};
      spec.include_b_equals_10 = b10;
      spec.tie = tie == "half-down" ? TieRule::half_down : TieRule::half_up;

      RenderOptions o;
      o.format = format == "text" ? TableFormat::text : TableFormat::csv;
      o.numerals = numerals;

      out << render (spec.kind, generate (spec), o);
      return exit_ok;
    }

    int
    cmd_numeral (const string& action, NumeralSystem s, bool strict,
                 const string& value, ostream& out)
    {
      NumeralOptions o {true, strict ? DecodeMode::strict : DecodeMode::lenient};

      if (action == "encode")
      {
        Integer n;
        try
        {
          n = parse_integer (value);
        }
        catch (const ParseError& e)
        {
          throw usage_error ("invalid number '" + value + "': " + e.what ());
        }
        out << encode (n, s, o) << '\n';
      }
      else
        out << decode (value, s, o) << '\n';

      return exit_ok;
    }

    int
    cmd_egyptian (const string& action, const string& fraction,
                  const optional<string>& text, ostream& out)
    {
      Rational r (parse_rational (fraction));

      if (action == "decompose")
      {
        if (text)
          throw usage_error ("decompose takes a single fraction");

        EgyptianFraction e (greedy (r));
        out << to_string (e) << '\n';

        // Point out manuscript answers with the same value but a different
        // representation.
        //
        for (const Problem& p: bundled_corpus ())
          for (const RecordedAnswer& a: p.recorded)
            if (const EgyptianAnswer* m = get_if<EgyptianAnswer> (&a))
              if (m->value != e && check (m->value, r))
                out << "note: the manuscript form " << to_string (m->value)
                    << " (problem " << p.id << ") has the same value\n";
        return exit_ok;
      }

      if (!text)
        throw usage_error ("check needs an Egyptian fraction to compare");

      EgyptianFraction e (parse_egyptian (*text));
      Rational v (value (e));
      if (check (e, r))
        out << "equal: " << to_string (e) << " = " << r << '\n';
      else
        out << "not equal: " << to_string (e) << " = " << v << ", not " << r
            << '\n';
      return exit_ok;
    }
  }

  int
  run (const vector<string>& args, istream& in, ostream& out, ostream& err)
  {
    CLI::App app {"Book of Arithmetic: numerals, tables, problems and puzzles",
                  "matemagirk"};
    app.require_subcommand (1);
    app.failure_message (CLI::FailureMessage::help);

    const vector<string> systems {"traditional", "anania"};

    string corpus;
    string format ("text");
    optional<NumeralSystem> numerals;
    string numerals_name;

    // solve
    //
    int id (0);
    bool trace (false);
    CLI::App* solve_cmd (app.add_subcommand ("solve", "Solve one problem"));
    solve_cmd->add_option ("id", id, "Problem number")->required ();
    solve_cmd->add_option ("--corpus", corpus, "Corpus file");
    solve_cmd->add_flag ("--trace", trace, "Show the derivation");
    solve_cmd->add_option ("--numerals", numerals_name, "Numeral system")
      ->check (CLI::IsMember (systems));

    // verify
    //
    optional<vector<int>> allowed;
    CLI::App* verify_cmd (
      app.add_subcommand ("verify", "Check recorded answers"));
    verify_cmd->add_option ("--corpus", corpus, "Corpus file");
    verify_cmd->add_option ("--format", format, "text or csv")
      ->check (CLI::IsMember ({"text", "csv"}));
    verify_cmd->add_option ("--allow-discrepancies", allowed,
                            "Problem ids whose discrepancies are expected")
      ->delimiter (',');

    // tables
    //
    string kind;
    string tformat ("csv");
    string tie ("half-up");
    bool b10 (false);
    CLI::App* tables_cmd (
      app.add_subcommand ("tables", "Print an arithmetic table"));
    tables_cmd->add_option ("kind", kind, "Table kind")
      ->required ()
      ->check (CLI::IsMember ({"addition", "multiplication", "subtraction",
                               "division", "parity"}));
    tables_cmd->add_option ("--format", tformat, "text or csv")
      ->check (CLI::IsMember ({"text", "csv"}));
    tables_cmd->add_option ("--numerals", numerals_name, "Numeral system")
      ->check (CLI::IsMember (systems));
    tables_cmd->add_option ("--tie", tie, "Division rounding of .5")
      ->check (CLI::IsMember ({"half-up", "half-down"}));
    tables_cmd->add_flag ("--b10", b10, "Multiplier also takes the value 10");

    // numeral
    //
    string action;
    string system;
    bool strict (false);
    string value;
    CLI::App* numeral_cmd (
      app.add_subcommand ("numeral", "Convert Armenian numerals"));
    numeral_cmd->add_option ("action", action, "encode or decode")
      ->required ()
      ->check (CLI::IsMember ({"encode", "decode"}));
    numeral_cmd->add_option ("--system", system, "Numeral system")
      ->required ()
      ->check (CLI::IsMember (systems));
    numeral_cmd->add_flag ("--strict", strict,
                           "Reject non-canonical numerals");
    numeral_cmd->add_option ("value", value, "Number or numeral")
      ->required ();

    // egyptian
    //
    string eaction;
    string fraction;
    optional<string> etext;
    CLI::App* egyptian_cmd (
      app.add_subcommand ("egyptian", "Unit fraction decomposition"));
    egyptian_cmd->add_option ("action", eaction, "decompose or check")
      ->required ()
      ->check (CLI::IsMember ({"decompose", "check"}));
    egyptian_cmd->add_option ("fraction", fraction, "p/q")->required ();
    egyptian_cmd->add_option ("text", etext, "Egyptian fraction text");

    // puzzle
    //
    string puzzle;
    CLI::App* puzzle_cmd (app.add_subcommand ("puzzle", "Play a feast puzzle"));
    puzzle_cmd->add_option ("name", puzzle, "Puzzle")
      ->required ()
      ->check (CLI::IsMember (
        {"dinner", "tourists", "pouch", "eggs", "wineskins"}));

    try
    {
      vector<string> rev (args.rbegin (), args.rend ());
      app.parse (rev);
    }
    catch (const CLI::ParseError& e)
    {
      int rc (app.exit (e, out, err));
      return rc == 0 ? exit_ok : exit_usage;
    }

    if (!numerals_name.empty ())
      numerals = parse_numeral_system (numerals_name);

    try
    {
      if (*solve_cmd)
        return cmd_solve (id, corpus, trace, numerals, out);
      if (*verify_cmd)
        return cmd_verify (corpus, format, allowed, out, err);
      if (*tables_cmd)
        return cmd_tables (kind, tformat, numerals, tie, b10, out);
      if (*numeral_cmd)
        return cmd_numeral (action, parse_numeral_system (system), strict,
                            value, out);
      if (*egyptian_cmd)
        return cmd_egyptian (eaction, fraction, etext, out);
      if (*puzzle_cmd)
        return puzzle_repl (puzzle, in, out, err);
    }
    catch (const SolveError& e)
    {
      err << "error: " << e.what () << '\n';
      return exit_internal;
    }
    catch (const Error& e)
    {
      err << "error: " << e.what () << '\n';
      return exit_usage;
    }
    catch (const exception& e)
    {
      err << "internal error: " << e.what () << '\n';
      return exit_internal;
    }

    return exit_usage;
  }
}
