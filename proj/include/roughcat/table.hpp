#pragma once

#include "roughcat/rational.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace roughcat {

/// The decision cell keeps its original text; `value` is set when the
/// text is numeric.
struct DecisionCell {
  std::string text;
  std::optional<Rational> value;
};

struct DecisionRow {
  std::string id;
  std::vector<std::string> attributes;
  DecisionCell decision;
};

/// A decision table: object id column first, decision column last,
/// attribute columns in between.
struct DecisionTable {
  std::string id_column;
  std::vector<std::string> attribute_names;
  std::string decision_name;
  std::vector<DecisionRow> rows;

  std::optional<std::size_t> attribute_index(std::string_view name) const;
};

/// UTF-8 CSV with a header row. Quoted fields ("a,b", doubled quotes)
/// are supported; unquoted fields are trimmed. Throws Error(parse_error)
/// on ragged rows, duplicate ids, or a numeric-looking decision that does
/// not parse exactly.
DecisionTable parse_table(std::string_view csv);
DecisionTable read_table(const std::filesystem::path& path);

std::string write_table(const DecisionTable& table);

/// Reads a whole file; throws Error(parse_error) if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace roughcat
