#pragma once

#include "roughcat/analysis.hpp"
#include "roughcat/lattice.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace roughcat {

struct AttributeSchema {
  std::string name;
  std::vector<std::string> values;
  /// Generating edges (x <= y) of a preorder on `values`.
  std::vector<std::pair<std::string, std::string>> edges;
  /// Square similarity matrix over `values`, as grade text.
  std::optional<std::vector<std::vector<std::string>>> similarity;
  /// Integer distance matrix over `values`; turned into 2^-d.
  std::optional<std::vector<std::vector<std::int64_t>>> metric;
  /// The similarity is a deliberately asymmetric enrichment: equivalence
  /// failures become warnings, the category axioms are still enforced.
  bool asymmetric = false;
  SentinelSpec sentinels;
};

struct DecisionSpec {
  enum class Mode { binary, graded, multi_threshold, multi_flat };
  Mode mode = Mode::binary;
  std::string target = "yes";
  bool explicit_target = false;
  /// Grade text, for multi_threshold.
  std::string threshold;
  /// Decision vocabulary, for multi_flat.
  std::vector<std::string> flat_values;
};

enum class SpaceMode { full_product, observed };

struct Schema {
  std::vector<AttributeSchema> attributes;
  AlgebraPtr algebra;
  DecisionSpec decision;
  SpaceMode space = SpaceMode::full_product;
  /// Table columns that are deliberately not part of A.
  std::vector<std::string> ignored_columns;

  std::optional<std::size_t> attribute_index(std::string_view name) const;
};

/// Throws Error(parse_error) with a diagnostic naming the offending key.
Schema parse_schema(std::string_view json_text);
Schema read_schema(const std::filesystem::path& path);

/// Lattice fragment: "bool2" | "unit_godel" | "unit_product" |
/// {"finite_table": {...}}.
AlgebraPtr parse_lattice(const nlohmann::json& spec);

struct AttributeBuild {
  CategoryPtr category;
  /// Axiom failures; a non-empty list makes the attribute unusable.
  ValidationReport errors;
  /// Equivalence failures tolerated because the attribute is asymmetric.
  ValidationReport warnings;
};

/// Builds one attribute's category (discrete, preorder, similarity or
/// metric, then sentinels). Structural problems throw; law violations are
/// returned in the report.
AttributeBuild build_attribute(const AttributeSchema& attribute, const AlgebraPtr& algebra);

}  // namespace roughcat
