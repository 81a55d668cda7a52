#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <matemagirk/egyptian.hpp>
#include <matemagirk/exact.hpp>
#include <matemagirk/units.hpp>

namespace matemagirk
{
  // Problem classes. Every one reduces to a linear equation in a single
  // unknown.

  // Fractions taken of the original total; what is left is remainder.
  //
  struct FractionsOfWhole
  {
    struct PartPrice
    {
      Rational fraction;
      Quantity unit_price;

      friend bool
      operator== (const PartPrice&, const PartPrice&) = default;
    };

    std::vector<Rational> fractions;
    Quantity remainder;
    std::vector<PartPrice> part_prices; // Optional revenue sub-answer.

    friend bool
    operator== (const FractionsOfWhole&, const FractionsOfWhole&) = default;
  };

  // Each stage levies the sum of its fractions from what is left after the
  // previous stages.
  //
  struct FractionsOfRemainder
  {
    std::vector<std::vector<Rational>> stages;
    Quantity remainder;

    friend bool
    operator== (const FractionsOfRemainder&,
                const FractionsOfRemainder&) = default;
  };

  // Rates are in lead units per day.
  //
  struct CatchUp
  {
    Quantity lead;
    Rational rate_leader;
    Rational rate_chaser;

    friend bool
    operator== (const CatchUp&, const CatchUp&) = default;
  };

  // Each round doubles the holding and then pays out payment.
  //
  struct DoublingPayment
  {
    Integer rounds;
    Quantity payment;
    Quantity final;

    friend bool
    operator== (const DoublingPayment&, const DoublingPayment&) = default;
  };

  struct ProportionalShares
  {
    Quantity total;
    std::vector<Integer> weights;

    friend bool
    operator== (const ProportionalShares&,
                const ProportionalShares&) = default;
  };

  // Rates in jobs per hour.
  //
  struct CombinedRates
  {
    std::vector<Rational> rates;

    friend bool
    operator== (const CombinedRates&, const CombinedRates&) = default;
  };

  // containers x per_container grains in all, eaten per_consumer grains
  // at a time.
  //
  struct UnitAggregation
  {
    Integer containers;
    Integer per_container;
    Integer per_consumer;

    friend bool
    operator== (const UnitAggregation&, const UnitAggregation&) = default;
  };

  // t + sum(f_i * t) = target.
  //
  struct SelfReferentialSum
  {
    std::vector<Rational> self_fractions;
    Quantity target;

    friend bool
    operator== (const SelfReferentialSum&,
                const SelfReferentialSum&) = default;
  };

  using ProblemModel = std::variant<FractionsOfWhole,
                                    FractionsOfRemainder,
                                    CatchUp,
                                    DoublingPayment,
                                    ProportionalShares,
                                    CombinedRates,
                                    UnitAggregation,
                                    SelfReferentialSum>;

  // Corpus class tag, e.g. "fractions-of-whole".
  //
  const char*
  class_name (const ProblemModel&);

  struct EgyptianAnswer
  {
    EgyptianFraction value;
    Unit unit;

    friend bool
    operator== (const EgyptianAnswer&, const EgyptianAnswer&) = default;
  };

  using RecordedAnswer = std::variant<Quantity, EgyptianAnswer>;

  std::string
  to_string (const RecordedAnswer&);

  struct Problem
  {
    int id = 0;
    std::string title;
    ProblemModel model;
    std::vector<RecordedAnswer> recorded;
    std::optional<std::string> note;
    std::vector<std::pair<std::string, std::string>> meta;

    friend bool
    operator== (const Problem&, const Problem&) = default;
  };

  class CorpusError: public Error
  {
  public:
    CorpusError (std::size_t line, const std::string& what);

    std::size_t line; // One-based.
  };

  // Throws CorpusError on any syntax error or model invariant violation.
  //
  std::vector<Problem>
  parse_corpus (std::string_view text);

  std::string
  serialize_corpus (const std::vector<Problem>&);

  // The 27 problems with their recorded answers (none for 25-27).
  //
  const std::vector<Problem>&
  bundled_corpus ();

  // Text of the bundled corpus file.
  //
  std::string_view
  bundled_corpus_text ();

  // Returns nullptr if there is no problem with this id.
  //
  const Problem*
  find_problem (const std::vector<Problem>&, int id);
}
