#include <doctest.h>

#include <fstream>
#include <sstream>

#include <matemagirk/cli.hpp>

using namespace matemagirk;

namespace
{
  struct result
  {
    int code;
    std::string out;
    std::string err;
  };

  result
  call (std::vector<std::string> args, const std::string& input = "")
  {
    std::istringstream in (input);
    std::ostringstream out, err;
    int c (run (args, in, out, err));
    return {c, out.str (), err.str ()};
  }

  result
  play (const char* name, const std::string& input)
  {
    std::istringstream in (input);
    std::ostringstream out, err;
    int c (puzzle_repl (name, in, out, err));
    return {c, out.str (), err.str ()};
  }

  std::size_t
  count (const std::string& s, const std::string& what)
  {
    std::size_t n (0);
    for (std::size_t p (s.find (what)); p != std::string::npos;
         p = s.find (what, p + 1))
      ++n;
    return n;
  }

  bool
  has (const std::string& s, const std::string& what)
  {
    return s.find (what) != std::string::npos;
  }
}

TEST_CASE ("cli/verify")
{
  result r (call ({"verify"}));
  CHECK (r.code == exit_discrepancy);
  CHECK (count (r.out, ", match,") == 21);
  CHECK (count (r.out, ", discrepancy,") == 3);
  CHECK (count (r.out, ", no-recorded-answer,") == 3);
  CHECK (has (r.err, "problem 4"));

  CHECK (call ({"verify", "--allow-discrepancies", "4,5,15"}).code == exit_ok);
  CHECK (call ({"verify", "--allow-discrepancies", "4,5"}).code ==
         exit_discrepancy);

  result c (call ({"verify", "--format", "csv"}));
  CHECK (count (c.out, "\n") == 28);
  CHECK (has (c.out, "\n15,discrepancy,44520/71 dahekan"));
}

TEST_CASE ("cli/verify-corpus-file")
{
  std::string path ("cli_test_unsolvable.corpus");
  {
    std::ofstream f (path);
    f << "problem 1 \"no way\"\n"
         "  class catch-up\n"
         "  lead 10 mile\n"
         "  rate-leader 5\n"
         "  rate-chaser 5\n"
         "  answer 1 day\n"
         "end\n";
  }
  result r (call ({"verify", "--corpus", path}));
  CHECK (r.code == exit_internal);
  CHECK (has (r.out, "1, unsolvable"));

  {
    std::ofstream f (path);
    f << "problem 1 \"broken\"\n  class catch-up\n  fraction 1/2\nend\n";
  }
  result b (call ({"verify", "--corpus", path}));
  CHECK (b.code == exit_usage);
  CHECK (has (b.err, ":3"));

  std::remove (path.c_str ());
  CHECK (call ({"verify", "--corpus", path}).code == exit_usage);
}

TEST_CASE ("cli/solve")
{
  result r (call ({"solve", "21", "--trace"}));
  CHECK (r.code == exit_ok);
  CHECK (has (r.out, "answer: 2240 count"));
  CHECK (has (r.out, "class: fractions-of-remainder"));

  result a (call ({"solve", "16", "--numerals", "anania"}));
  CHECK (has (a.out, "answer: էժ day (70)"));

  result e (call ({"solve", "19", "--numerals", "traditional"}));
  CHECK (has (e.out, "(175/8)"));

  CHECK (call ({"solve", "99"}).code == exit_usage);
  CHECK (call ({"solve", "x"}).code == exit_usage);
}

TEST_CASE ("cli/numeral")
{
  result r (call ({"numeral", "encode", "--system", "anania", "216"}));
  CHECK (r.code == exit_ok);
  CHECK (r.out == "բճժզ\n");

  CHECK (call ({"numeral", "decode", "--system", "traditional", "ք̂"}).out ==
         "90000000\n");
  CHECK (call ({"numeral", "decode", "--system", "anania", "աժ"}).out ==
         "10\n");

  result s (call ({"numeral", "decode", "--system", "anania", "--strict",
                   "աժ"}));
  CHECK (s.code == exit_usage);
  CHECK (has (s.err, "offset 0"));

  CHECK (call ({"numeral", "encode", "--system", "roman", "5"}).code ==
         exit_usage);
  CHECK (call ({"numeral", "encode", "--system", "anania", "0"}).code ==
         exit_usage);
}

TEST_CASE ("cli/egyptian")
{
  result d (call ({"egyptian", "decompose", "6/11"}));
  CHECK (d.code == exit_ok);
  CHECK (d.out.rfind ("1/2 + 1/22\n", 0) == 0);
  CHECK (has (d.out, "1/4 + 1/6 + 1/12 + 1/22 (problem 24)"));

  result c (call ({"egyptian", "check", "175/8", "21, 1/2, 1/4, 1/8"}));
  CHECK (c.code == exit_ok);
  CHECK (c.out.rfind ("equal: ", 0) == 0);

  result n (call ({"egyptian", "check", "1/3", "1/2"}));
  CHECK (n.code == exit_ok);
  CHECK (n.out.rfind ("not equal: ", 0) == 0);

  CHECK (call ({"egyptian", "check", "1/3"}).code == exit_usage);
  CHECK (call ({"egyptian", "decompose", "1/0"}).code == exit_usage);
}

TEST_CASE ("cli/tables")
{
  result r (call ({"tables", "addition"}));
  CHECK (r.code == exit_ok);
  CHECK (count (r.out, "\n") == 181);

  CHECK (call ({"tables", "division", "--numerals", "anania"}).code ==
         exit_ok);
  CHECK (call ({"tables", "parity", "--numerals", "anania"}).code ==
         exit_usage);
  CHECK (has (call ({"tables", "division", "--format", "text"}).out,
              "     17     353"));
  CHECK (has (call ({"tables", "division", "--tie", "half-down"}).out,
              "\n32,187\n"));
  CHECK (count (call ({"tables", "multiplication", "--b10"}).out, "\n") ==
         1333);
}

TEST_CASE ("cli/usage")
{
  CHECK (call ({}).code == exit_usage);
  CHECK (call ({"frobnicate"}).code == exit_usage);
  CHECK (call ({"tables", "cubes"}).code == exit_usage);
  CHECK (call ({"--help"}).code == exit_ok);
  CHECK (has (call ({"--help"}).out, "verify"));
}

TEST_CASE ("cli/puzzles")
{
  result d (play ("dinner", "953\n"));
  CHECK (d.code == exit_ok);
  CHECK (has (d.out, "What number did you get? "));
  CHECK (has (d.out, "dinner at hour 6, 3 glasses\n"));

  result x (play ("dinner", "1050\n"));
  CHECK (has (x.out, "It is not possible to drink 100 glasses of wine in one "
                     "hour.\n"));

  result retry (play ("dinner", "abc\n100\n953\n"));
  CHECK (retry.code == exit_ok);
  CHECK (count (retry.out, "What number did you get? ") == 3);
  CHECK (has (retry.out, "hour 6"));

  result gave_up (play ("dinner", "a\nb\nc\n953\n"));
  CHECK (gave_up.code == exit_usage);
  CHECK (has (gave_up.err, "no valid answer after 3 attempts"));

  result eof (play ("dinner", ""));
  CHECK (eof.code == exit_usage);

  result t (play ("tourists", "36\n"));
  CHECK (has (t.out, "correct: 36 + 36 + 18 + 9 + 1 = 100\n"));
  CHECK (has (play ("tourists", "40\n").out, "not quite, there were 36"));

  CHECK (has (play ("pouch", "70\n").out, "your pouch holds 7 drams\n"));
  CHECK (has (play ("pouch", "15\n").out, "your pouch holds 3/2 drams\n"));
  CHECK (has (play ("eggs", "3650000\n").out,
              "correct: 100 x 365 x 100 = 3650000 eggs, that is 365 "
              "myriads\n"));

  result w (play ("wineskins", "24\n"));
  CHECK (has (w.out, "correct: 24 dram\n"));
  CHECK (has (w.out, "10 + 15 = 25 dram, 1 dram more."));

  CHECK (play ("chess", "").code == exit_usage);

  // Same input, same transcript.
  for (const char* n: {"dinner", "tourists", "pouch", "eggs", "wineskins"})
  {
    result a (play (n, "12\n953\n"));
    result b (play (n, "12\n953\n"));
    CHECK (a.out == b.out);
    CHECK (a.code == b.code);
  }

  result viacli (call ({"puzzle", "dinner"}, "953\n"));
  CHECK (viacli.code == exit_ok);
  CHECK (has (viacli.out, "dinner at hour 6, 3 glasses"));
}
