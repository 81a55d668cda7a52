#pragma once

#include <string>
#include <vector>

#include <matemagirk/corpus.hpp>
#include <matemagirk/exact.hpp>
#include <matemagirk/units.hpp>

namespace matemagirk
{
  // The model has no positive solution (nothing left after the levies, a
  // chaser slower than the leader, and so on).
  //
  class SolveError: public Error
  {
  public:
    using Error::Error;
  };

  struct Step
  {
    std::string description;
    Rational value;
  };

  // values.front() is the unknown of the linear equation; further values
  // are derived answers (total revenue, number of mice, further shares).
  //
  struct Solution
  {
    std::vector<Quantity> values;
    std::vector<Step> derivation;
  };

  // Closed-form solve. Throws SolveError.
  //
  Solution
  solve (const ProblemModel&);

  // Replays the narrative literally with candidate as the unknown and
  // returns the stated outcome minus the simulated one, so the residual is
  // zero exactly when candidate is the solution. For proportional shares the
  // candidate is the first share. Throws DomainError if candidate <= 0.
  //
  Rational
  simulate (const ProblemModel&, const Rational& candidate);

  enum class Status
  {
    match,
    discrepancy,
    no_recorded_answer,
    unsolvable
  };

  const char*
  to_string (Status);

  struct VerificationOutcome
  {
    int id = 0;
    Status status = Status::unsolvable;
    std::vector<Quantity> computed;
    std::vector<RecordedAnswer> recorded;

    // Some computed value is not a whole number although the problem does
    // not record its answer in unit fractions.
    //
    bool non_integral = false;

    std::string error; // Solver message when unsolvable.
  };

  // Solves and compares every recorded answer against the computed values
  // by exact value (unit-fraction answers through check()). Recorded
  // answers are paired with computed values irrespective of order; the
  // recorded list may be shorter than the computed one.
  //
  VerificationOutcome
  verify (const Problem&);

  // Outcomes in problem id order.
  //
  std::vector<VerificationOutcome>
  verify_all (const std::vector<Problem>&);

  enum class ReportFormat
  {
    text,
    csv
  };

  // One line per problem: id, status, computed values, recorded values,
  // flags. The csv form has a header row.
  //
  std::string
  report (const std::vector<VerificationOutcome>&, ReportFormat);
}
