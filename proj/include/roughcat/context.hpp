#pragma once

#include "roughcat/approx.hpp"
#include "roughcat/schema.hpp"
#include "roughcat/table.hpp"

#include <string>
#include <vector>

namespace roughcat {

/// Everything needed to approximate: X (discrete over row ids), the
/// attribute factors and their product A, R : X -> A and mu on X.
struct DecisionContext {
  AlgebraPtr algebra;
  CategoryPtr objects;
  std::vector<std::string> attribute_names;
  std::vector<CategoryPtr> factors;
  CategoryPtr space;
  LFunctor map;
  LPredicate decision;

  /// Row id of object x.
  std::string object_id(std::size_t x) const { return objects->object(x).front(); }
  std::size_t object_index(const std::string& id) const { return objects->index_of({id}); }
};

/// Builds the context. A is the full product of the attribute categories,
/// or its full subcategory on observed tuples when the schema says so.
/// Throws Error on undeclared values, attribute axiom failures, or a
/// decision column that does not fit the declared handling.
DecisionContext build_context(const DecisionTable& table, const Schema& schema);

/// Same, but with A given (it must contain every observed tuple). Used to
/// put two tables over one attribute space.
DecisionContext build_context(const DecisionTable& table, const Schema& schema, CategoryPtr space);

/// The attribute factors alone, in schema order.
std::vector<CategoryPtr> build_factors(const Schema& schema);

}  // namespace roughcat
