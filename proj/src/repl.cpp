#include <matemagirk/cli.hpp>

#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include <matemagirk/puzzles.hpp>

using namespace std;

namespace matemagirk
{
  namespace
  {
    constexpr int max_attempts = 3;

    string
    trim (const string& s)
    {
      size_t b (s.find_first_not_of (" \t\r"));
      if (b == string::npos)
        return string ();
      size_t e (s.find_last_not_of (" \t\r"));
      return s.substr (b, e - b + 1);
    }

    // Prompt until the reader accepts a line. The reader returns nullopt
    // and writes an explanation for unacceptable input. Gives up after
    // max_attempts or at end of input.
    //
    template <typename T, typename F>
    optional<T>
    ask (istream& in, ostream& out, const char* prompt, F read)
    {
      for (int i (0); i != max_attempts; ++i)
      {
        out << prompt << flush;

        string l;
        if (!getline (in, l))
        {
          out << '\n';
          return nullopt;
        }

        if (optional<T> v = read (trim (l)))
          return v;
      }
      return nullopt;
    }

    optional<Integer>
    read_integer (const string& s, ostream& out)
    {
      try
      {
        return parse_integer (s);
      }
      catch (const ParseError&)
      {
        out << "please enter a whole number\n";
        return nullopt;
      }
    }

    optional<Rational>
    read_rational (const string& s, ostream& out)
    {
      try
      {
        return parse_rational (s);
      }
      catch (const Error&)
      {
        out << "please enter a number such as 70 or 15/2\n";
        return nullopt;
      }
    }

    int
    give_up (ostream& err)
    {
      err << "no valid answer after " << max_attempts << " attempts\n";
      return exit_usage;
    }

    int
    dinner (istream& in, ostream& out, ostream& err)
    {
      out << "I can tell when you want to dine and how much wine you want.\n"
          << "Take the hour of your dinner, double it and add 5. Multiply\n"
          << "by 5, add 10 and multiply by 10. Finally add the number of\n"
          << "glasses of wine you want to drink.\n";

      optional<Integer> r (ask<Integer> (
        in, out, "What number did you get? ",
        [&out] (const string& s) -> optional<Integer>
        {
          optional<Integer> n (read_integer (s, out));
          if (n && *n < 451)
          {
            out << "that number cannot come out of the recipe\n";
            return nullopt;
          }
          return n;
        }));

      if (!r)
        return give_up (err);

      DinnerReading d (dinner_decode (*r));
      if (d.refused)
        out << "It is " << dinner_refusal << ".\n";
      else
        out << "dinner at hour " << d.hour << ", " << d.glasses
            << (d.glasses == 1 ? " glass" : " glasses") << '\n';
      return exit_ok;
    }

    int
    tourists_game (istream& in, ostream& out, ostream& err)
    {
      Integer n (tourists ());
      out << "A Persian traveller meets a party of Greeks and tells them:\n"
          << "with you, a second party as large as yours, a party half your\n"
          << "size, one a quarter of your size, and me, we would be 100.\n";

      optional<Integer> a (ask<Integer> (
        in, out, "How many Greeks are in the party? ",
        [&out] (const string& s) {return read_integer (s, out);}));

      if (!a)
        return give_up (err);

      Integer half (n / 2), quarter (n / 4);
      if (*a == n)
        out << "correct: ";
      else
        out << "not quite, there were " << n << ": ";
      out << n
          << " + " << n << " + " << half << " + " << quarter << " + 1 = 100\n";
      return exit_ok;
    }

    int
    pouch (istream& in, ostream& out, ostream& err)
    {
      out << "I can tell how many drams are in your pouch.\n"
          << "Take the amount, add as much again, double the sum, add the\n"
          << "original amount and double once more.\n";

      optional<Rational> r (ask<Rational> (
        in, out, "What number did you get? ",
        [&out] (const string& s) {return read_rational (s, out);}));

      if (!r)
        return give_up (err);

      Rational d (pouch_decode (*r));
      out << "your pouch holds " << d << (d == Rational (1) ? " dram" : " drams")
          << '\n';
      return exit_ok;
    }

    int
    eggs_game (istream& in, ostream& out, ostream& err)
    {
      Integer n (eggs ());
      out << "A Hun kept my chickens for 100 years and ate 100 eggs every\n"
          << "day. How many eggs did he eat?\n";

      optional<Integer> a (ask<Integer> (
        in, out, "Your answer: ",
        [&out] (const string& s) {return read_integer (s, out);}));

      if (!a)
        return give_up (err);

      out << (*a == n ? "correct: " : "no: ") << "100 x 365 x 100 = " << n
          << " eggs, that is " << myriads (n) << '\n';
      return exit_ok;
    }

    int
    wineskins_game (istream& in, ostream& out, ostream& err)
    {
      WineskinSale s (wineskins ());
      out << "You sell 60 skins of wine at 2 drams for every 5 skins.\n";

      optional<Integer> a (ask<Integer> (
        in, out, "How many drams do you get? ",
        [&out] (const string& s) {return read_integer (s, out);}));

      if (!a)
        return give_up (err);

      out << (Rational (*a) == s.fair.value ? "correct: " : "no: ")
          << to_string (s.fair) << '\n'
          << "Now sell the first 30 skins in threes and the other 30 in\n"
          << "twos, 1 dram a group: 10 + 15 = " << to_string (s.trick)
          << ", " << (s.trick.value - s.fair.value) << " dram more.\n";
      return exit_ok;
    }
  }

  int
  puzzle_repl (string_view name, istream& in, ostream& out, ostream& err)
  {
    if (name == "dinner")    return dinner (in, out, err);
    if (name == "tourists")  return tourists_game (in, out, err);
    if (name == "pouch")     return pouch (in, out, err);
    if (name == "eggs")      return eggs_game (in, out, err);
    if (name == "wineskins") return wineskins_game (in, out, err);

    err << "unknown puzzle '" << name << "'\n";
    return exit_usage;
  }
}
