#pragma once

#include "roughcat/approx.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace roughcat {

enum class Format { json, table };

/// Throws Error(parse_error) for anything but "json" or "table".
Format parse_format(const std::string& name);

/// {"kind": ..., "entries": [{"tuple": [...], "grade": "p/q",
/// "grade_decimal": 0.45}]}. Two-valued predicates list only their
/// members; graded ones list every object. Order follows the category.
nlohmann::json predicate_to_json(const std::string& kind, const LPredicate& p);
nlohmann::json result_to_json(const ApproximationResult& result);

/// A labelled collection of predicates, as a JSON document or an aligned
/// text table.
struct NamedPredicate {
  std::string kind;
  LPredicate predicate;
};

std::string serialize_results(const std::vector<NamedPredicate>& results, Format format);
std::string serialize_result(const ApproximationResult& result, Format format);

/// Aligned plain-text table; every row padded to the widest cell.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

/// Grade text plus decimal rendering (empty when not numeric).
std::string grade_text(const CompleteLattice& l, const Grade& g);
std::string grade_decimal_text(const CompleteLattice& l, const Grade& g);

}  // namespace roughcat
