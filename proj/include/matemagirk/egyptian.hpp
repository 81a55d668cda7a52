#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <matemagirk/exact.hpp>

namespace matemagirk
{
  // Whole part plus a sum of distinct unit fractions, e.g. 21 + 1/2 + 1/4
  // + 1/8. Denominators are kept strictly increasing and >= 2; an empty
  // list is a plain whole number.
  //
  class EgyptianFraction
  {
  public:
    EgyptianFraction () = default;

    // Throws DomainError if whole is negative or the denominators violate
    // the invariant.
    //
    explicit
    EgyptianFraction (Integer whole, std::vector<Integer> denominators = {});

    const Integer&
    whole () const noexcept {return whole_;}

    const std::vector<Integer>&
    denominators () const noexcept {return dens_;}

    friend bool
    operator== (const EgyptianFraction&, const EgyptianFraction&) = default;

  private:
    Integer whole_ = 0;
    std::vector<Integer> dens_;
  };

  Rational
  value (const EgyptianFraction&);

  // Fibonacci-Sylvester decomposition: split off floor(r), then repeatedly
  // take the largest unit fraction not exceeding what is left. Throws
  // DomainError for r < 0.
  //
  EgyptianFraction
  greedy (const Rational& r);

  // True iff e has exactly the value r. Representations are not compared.
  //
  bool
  check (const EgyptianFraction& e, const Rational& r);

  // Applies op to the values and returns the greedy form of the result.
  // Negative results and division by a zero value are DomainErrors.
  //
  EgyptianFraction
  combine (const EgyptianFraction& a, const EgyptianFraction& b, BinaryOp op);

  // Canonical text "W + 1/a + 1/b". The whole part is omitted when it is
  // zero and there are unit fractions; an empty fraction renders as "0".
  //
  std::string
  to_string (const EgyptianFraction&);

  // Accepts the canonical form as well as comma lists such as
  // "1, 1/2, 1/5" and "1/4, 1/6, 1/12 and 1/22". Unit fractions may come
  // in any order but may not repeat. Throws ParseError.
  //
  EgyptianFraction
  parse_egyptian (std::string_view text);
}
