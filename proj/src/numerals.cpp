#include <matemagirk/numerals.hpp>

#include <stdexcept>

using namespace std;

namespace matemagirk
{
  namespace
  {
    constexpr char32_t first_lower = U'ա'; // U+0561
    constexpr char32_t first_upper = U'Ա'; // U+0531
    constexpr char32_t case_offset = first_lower - first_upper;

    vector<Letter>
    make_traditional ()
    {
      vector<Letter> r;
      uint32_t scale (1);
      for (uint32_t k (0); k != 4; ++k, scale *= 10)
        for (uint32_t a (1); a <= 9; ++a)
          r.push_back (Letter {char32_t (first_lower + k * 9 + a - 1),
                               a * scale});
      return r;
    }

    vector<Letter>
    make_anania ()
    {
      vector<Letter> r;
      for (uint32_t a (1); a <= 9; ++a)
        r.push_back (Letter {char32_t (first_lower + a - 1), a});

      r.push_back (Letter {U'ժ', 10});
      r.push_back (Letter {U'ճ', 100});
      r.push_back (Letter {U'ռ', 1000});
      return r;
    }

    void
    append_utf8 (string& s, char32_t c)
    {
      if (c < 0x80)
        s += char (c);
      else if (c < 0x800)
      {
        s += char (0xC0 | (c >> 6));
        s += char (0x80 | (c & 0x3F));
      }
      else if (c < 0x10000)
      {
        s += char (0xE0 | (c >> 12));
        s += char (0x80 | ((c >> 6) & 0x3F));
        s += char (0x80 | (c & 0x3F));
      }
      else
      {
        s += char (0xF0 | (c >> 18));
        s += char (0x80 | ((c >> 12) & 0x3F));
        s += char (0x80 | ((c >> 6) & 0x3F));
        s += char (0x80 | (c & 0x3F));
      }
    }

    struct code_point
    {
      char32_t c;
      size_t offset;
    };

    vector<code_point>
    decode_utf8 (string_view s)
    {
      vector<code_point> r;
      for (size_t i (0); i < s.size ();)
      {
        unsigned char b (s[i]);
        size_t n;
        char32_t c;

        if (b < 0x80)      {n = 1; c = b;}
        else if (b >> 5 == 0x6) {n = 2; c = b & 0x1F;}
        else if (b >> 4 == 0xE) {n = 3; c = b & 0x0F;}
        else if (b >> 3 == 0x1E) {n = 4; c = b & 0x07;}
        else
          throw ParseError (i, "invalid UTF-8");

        if (i + n > s.size ())
          throw ParseError (i, "truncated UTF-8 sequence");

        for (size_t k (1); k != n; ++k)
        {
          unsigned char x (s[i + k]);
          if (x >> 6 != 0x2)
            throw ParseError (i, "invalid UTF-8");
          c = (c << 6) | (x & 0x3F);
        }

        r.push_back (code_point {c, i});
        i += n;
      }
      return r;
    }

    // Returns the letter's value or 0 if c is not in the table.
    //
    uint32_t
    lookup (const vector<Letter>& t, char32_t c)
    {
      for (const Letter& l: t)
        if (l.code == c)
          return l.value;
      return 0;
    }

    char32_t
    letter_for (const vector<Letter>& t, uint32_t v)
    {
      for (const Letter& l: t)
        if (l.value == v)
          return l.code;
      throw logic_error ("no letter for value " + std::to_string (v));
    }

    int
    place_of (uint32_t v)
    {
      int p (0);
      for (; v >= 10; v /= 10)
        ++p;
      return p;
    }

    vector<char32_t>
    encode_core (uint32_t n, NumeralSystem s)
    {
      const vector<Letter>& t (letter_table (s));
      const vector<Letter>& digits (letter_table (NumeralSystem::anania));

      vector<char32_t> r;
      uint32_t scale (1000);
      for (int p (3); p >= 0; --p, scale /= 10)
      {
        uint32_t a ((n / scale) % 10);
        if (a == 0)
          continue;

        if (s == NumeralSystem::traditional)
          r.push_back (letter_for (t, a * scale));
        else
        {
          if (p == 0 || a != 1)
            r.push_back (letter_for (digits, a));
          if (p != 0)
            r.push_back (letter_for (digits, scale));
        }
      }
      return r;
    }

    struct token
    {
      char32_t c;
      size_t offset;
    };

    uint32_t
    decode_traditional (const vector<token>& ts)
    {
      const vector<Letter>& t (letter_table (NumeralSystem::traditional));

      uint32_t r (0);
      int last (4);
      for (const token& x: ts)
      {
        uint32_t v (lookup (t, x.c));
        if (v == 0)
          throw ParseError (x.offset, "unknown letter");

        int p (place_of (v));
        if (p == last)
          throw ParseError (x.offset, "repeated decade class");
        if (p > last)
          throw ParseError (x.offset, "place values must decrease");

        last = p;
        r += v;
      }
      return r;
    }

    uint32_t
    decode_anania (const vector<token>& ts, DecodeMode mode)
    {
      const vector<Letter>& t (letter_table (NumeralSystem::anania));

      uint32_t r (0);
      int last (4);
      for (size_t i (0); i != ts.size ();)
      {
        const token& x (ts[i]);
        uint32_t v (lookup (t, x.c));
        if (v == 0)
          throw ParseError (x.offset,
                            lookup (letter_table (NumeralSystem::traditional),
                                    x.c) != 0
                            ? "letter is not used in Anania's system"
                            : "unknown letter");

        uint32_t coef (1);
        uint32_t place_value (1);
        size_t next (i + 1);

        if (v >= 10)
          place_value = v;
        else
        {
          coef = v;
          if (next != ts.size ())
          {
            uint32_t m (lookup (t, ts[next].c));
            if (m == 0)
              throw ParseError (ts[next].offset, "unknown letter");
            if (m < 10)
              throw ParseError (ts[next].offset,
                                "digit must be followed by a place letter");

            if (coef == 1 && mode == DecodeMode::strict)
              throw ParseError (x.offset,
                                "coefficient 1 must be omitted before a "
                                "place letter");
            place_value = m;
            ++next;
          }
        }

        int p (place_of (place_value));
        if (p == last)
          throw ParseError (x.offset, "repeated place value");
        if (p > last)
          throw ParseError (x.offset, "place values must decrease");

        last = p;
        r += coef * place_value;
        i = next;
      }
      return r;
    }

    uint32_t
    decode_core (const vector<token>& ts, NumeralSystem s, DecodeMode m)
    {
      return s == NumeralSystem::traditional
        ? decode_traditional (ts)
        : decode_anania (ts, m);
    }
  }

  const vector<Letter>&
  letter_table (NumeralSystem s)
  {
    static const vector<Letter> traditional (make_traditional ());
    static const vector<Letter> anania (make_anania ());
    return s == NumeralSystem::traditional ? traditional : anania;
  }

  string
  encode (const Integer& n, NumeralSystem s, NumeralOptions o)
  {
    if (n < 1)
      throw DomainError ("cannot write " + n.str () +
                         ": the numeral system has no zero or negatives");

    uint32_t limit (o.hat ? max_with_hat : max_core);
    if (n > limit)
      throw DomainError ("cannot write " + n.str () + " in the " +
                         to_string (s) + " system: largest value is " +
                         std::to_string (limit));

    uint32_t v (n.convert_to<uint32_t> ());
    uint32_t hi (v / 10000);
    uint32_t lo (v % 10000);

    string r;
    if (hi != 0)
      for (char32_t c: encode_core (hi, s))
      {
        append_utf8 (r, c);
        append_utf8 (r, hat_mark);
      }

    if (lo != 0)
      for (char32_t c: encode_core (lo, s))
        append_utf8 (r, c);

    return r;
  }

  Integer
  decode (string_view text, NumeralSystem s, NumeralOptions o)
  {
    vector<code_point> cps (decode_utf8 (text));
    if (cps.empty ())
      throw ParseError (0, "empty numeral");

    vector<token> hatted;
    vector<token> plain;

    for (size_t i (0); i != cps.size (); ++i)
    {
      char32_t c (cps[i].c);
      size_t off (cps[i].offset);

      if (c == hat_mark)
        throw ParseError (off, "hat mark without a letter");

      if (c >= first_upper && c < first_upper + 38)
        c += case_offset;

      bool hat (i + 1 != cps.size () && cps[i + 1].c == hat_mark);
      if (hat)
      {
        if (!o.hat)
          throw ParseError (cps[i + 1].offset, "hat extension is not enabled");
        if (!plain.empty ())
          throw ParseError (off, "hatted letters must precede plain letters");

        hatted.push_back (token {c, off});
        ++i;
      }
      else
        plain.push_back (token {c, off});
    }

    Integer r (0);
    if (!hatted.empty ())
      r += Integer (decode_core (hatted, s, o.mode)) * 10000;
    if (!plain.empty ())
      r += decode_core (plain, s, o.mode);
    return r;
  }

  const char*
  to_string (NumeralSystem s)
  {
    return s == NumeralSystem::traditional ? "traditional" : "anania";
  }

  NumeralSystem
  parse_numeral_system (string_view n)
  {
    if (n == "traditional") return NumeralSystem::traditional;
    if (n == "anania")      return NumeralSystem::anania;
    throw invalid_argument ("unknown numeral system '" + string (n) + "'");
  }
}
