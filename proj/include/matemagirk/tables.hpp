#pragma once

#include <optional>
#include <string>
#include <vector>

#include <matemagirk/exact.hpp>
#include <matemagirk/numerals.hpp>

namespace matemagirk
{
  enum class TableKind
  {
    addition,
    multiplication,
    subtraction,
    division,
    parity
  };

  enum class Parity
  {
    even,
    odd
  };

  struct TableSpec
  {
    TableKind kind;
    bool include_b_equals_10 = false; // Multiplication only.
    TieRule tie = TieRule::half_up;   // Division only.
  };

  // Operands and result of one table row:
  //
  //   addition        x, y        -> x + y
  //   multiplication  x, y        -> x * y
  //   subtraction     s, y        -> s - y
  //   division        n           -> 6000/n rounded to the nearest integer
  //   parity          a, k        -> a * 10^k, labeled by the parity of a
  //
  struct TableEntry
  {
    std::vector<Integer> operands;
    Integer result;
    std::optional<Parity> label;

    friend bool
    operator== (const TableEntry&, const TableEntry&) = default;
  };

  inline constexpr int division_dividend = 6000;

  // Rows are sorted lexicographically by operands with no duplicates.
  //
  std::vector<TableEntry>
  generate (const TableSpec&);

  enum class TableFormat
  {
    text,
    csv
  };

  struct RenderOptions
  {
    TableFormat format = TableFormat::csv;

    // Write every number with this numeral system (hat extension on).
    // Values it cannot represent raise a DomainError naming the value.
    //
    std::optional<NumeralSystem> numerals;
  };

  // Column names for the kind, e.g. {"divisor", "result"}.
  //
  std::vector<std::string>
  table_header (TableKind);

  std::string
  render (TableKind, const std::vector<TableEntry>&, const RenderOptions& = {});

  const char*
  to_string (TableKind);

  const char*
  to_string (Parity);

  TableKind
  parse_table_kind (std::string_view);
}
