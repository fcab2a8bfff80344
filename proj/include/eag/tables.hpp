#ifndef EAG_TABLES_HPP
#define EAG_TABLES_HPP

// The four classification tables, rendered from their closed-form rows with
// brute-force confirmation on small instances.

#include "eag/io.hpp"
#include "eag/signature.hpp"

#include <string>
#include <vector>

namespace eag {

struct TableInstance {
  EAActionSpec spec;
  Rational genus;
  std::string result;  // brute-force count or verdict, or why it was skipped
  friend bool operator==(const TableInstance&, const TableInstance&) = default;
};

struct TableRow {
  std::string label;               // case number as printed
  std::vector<std::string> cells;  // printed columns after the case number
  std::vector<TableInstance> instances;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct ClassificationTable {
  int which = 0;
  std::string title;
  std::vector<std::string> header;  // Case, printed columns, then "Checked"
  std::vector<TableRow> rows;
  std::vector<std::string> notes;
  friend bool operator==(const ClassificationTable&, const ClassificationTable&) = default;
};

/// Desk box for instances: p in {2,3,5}, rho <= 2, r <= 7, at most three
/// instances per row, smallest genus first.
inline constexpr int kInstancesPerRow = 3;

/// Table `which` in 1..4; UsageError otherwise.
ClassificationTable classification_table(int which);

std::string render_markdown(const ClassificationTable& t);
std::string render_csv(const ClassificationTable& t);

/// "(rho; p^r)" style text with superscript exponents, e.g. "(0;2⁵)".
std::string superscript(int k);

namespace io {
Json to_json(const ClassificationTable& t);
ClassificationTable table_from_json(const Json& j);
}  // namespace io

}  // namespace eag

#endif  // EAG_TABLES_HPP
