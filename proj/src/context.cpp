#include "roughcat/context.hpp"

#include "roughcat/error.hpp"

#include <algorithm>
#include <set>

namespace roughcat {

std::vector<CategoryPtr> build_factors(const Schema& schema) {
  std::vector<CategoryPtr> factors;
  for (const auto& attribute : schema.attributes) {
    auto built = build_attribute(attribute, schema.algebra);
    if (!built.errors.ok()) {
      const auto& v = built.errors.violations.front();
      std::string witness;
      for (const auto& w : v.witness) witness += (witness.empty() ? "" : ", ") + w;
      throw Error(ErrorKind::verification_failed, v.rule + " fails at (" + witness + ")");
    }
    factors.push_back(built.category);
  }
  return factors;
}

namespace {

struct Columns {
  std::vector<std::size_t> table_column;  // per schema attribute
};

Columns match_columns(const DecisionTable& table, const Schema& schema) {
  Columns c;
  for (const auto& attribute : schema.attributes) {
    auto idx = table.attribute_index(attribute.name);
    if (!idx) throw Error(ErrorKind::parse_error, "table has no column '" + attribute.name + "'");
    c.table_column.push_back(*idx);
  }
  for (const auto& name : table.attribute_names) {
    bool used = schema.attribute_index(name).has_value();
    bool ignored = std::find(schema.ignored_columns.begin(), schema.ignored_columns.end(), name) !=
                   schema.ignored_columns.end();
    if (!used && !ignored) {
      throw Error(ErrorKind::parse_error, "column '" + name + "' is not covered by the schema");
    }
  }
  return c;
}

ObjectKey row_key(const DecisionRow& row, const Schema& schema, const Columns& columns,
                  const std::vector<CategoryPtr>& factors) {
  ObjectKey key;
  for (std::size_t k = 0; k < schema.attributes.size(); ++k) {
    const auto& cell = row.attributes[columns.table_column[k]];
    if (!factors[k]->find({cell})) {
      const auto& s = schema.attributes[k].sentinels;
      bool marker = cell == "?" || cell == "*";
      if (marker && !(s.missing && *s.missing == cell) && !(s.wildcard && *s.wildcard == cell)) {
        throw Error(ErrorKind::parse_error, "row " + row.id + ": marker '" + cell +
                                                "' used without a sentinel declaration for '" +
                                                schema.attributes[k].name + "'");
      }
      throw Error(ErrorKind::parse_error, "row " + row.id + ": value '" + cell +
                                              "' is not declared for '" + schema.attributes[k].name + "'");
    }
    key.push_back(cell);
  }
  return key;
}

LPredicate build_decision(const DecisionTable& table, const Schema& schema, const CategoryPtr& x) {
  const auto& d = schema.decision;
  const auto& l = schema.algebra;
  std::vector<Grade> grades;
  auto at_row = [&](const DecisionRow& row, const std::string& what) {
    return "row " + row.id + ": " + what;
  };
  switch (d.mode) {
    case DecisionSpec::Mode::binary:
      for (const auto& row : table.rows) {
        const auto& t = row.decision.text;
        if (!d.explicit_target && t != "yes" && t != "no") {
          throw Error(ErrorKind::parse_error,
                      at_row(row, "decision '" + t + "' is not yes/no; declare a binary target"));
        }
        grades.push_back(t == d.target ? l->top() : l->bottom());
      }
      return LPredicate(x, l, std::move(grades));
    case DecisionSpec::Mode::graded:
      for (const auto& row : table.rows) {
        try {
          grades.push_back(l->parse(row.decision.text));
        } catch (const Error& e) {
          throw Error(ErrorKind::parse_error, at_row(row, e.what()));
        }
      }
      return LPredicate(x, l, std::move(grades));
    case DecisionSpec::Mode::multi_threshold: {
      ChangeOfBase h{ChangeOfBase::Direction::threshold_up, l->parse(d.threshold)};
      for (const auto& row : table.rows) {
        grades.push_back(h.apply(*l, l->parse(row.decision.text)) ? l->top() : l->bottom());
      }
      return LPredicate(x, l, std::move(grades));
    }
    case DecisionSpec::Mode::multi_flat: {
      auto flat = flat_lattice(d.flat_values);
      for (const auto& row : table.rows) {
        if (std::find(d.flat_values.begin(), d.flat_values.end(), row.decision.text) ==
            d.flat_values.end()) {
          throw Error(ErrorKind::parse_error, at_row(row, "decision '" + row.decision.text + "' is not declared"));
        }
        grades.push_back(flat->parse(row.decision.text));
      }
      return LPredicate(x, flat, std::move(grades));
    }
  }
  throw Error(ErrorKind::parse_error, "unknown decision handling");
}

DecisionContext assemble(const DecisionTable& table, const Schema& schema, std::vector<CategoryPtr> factors,
                         const CategoryPtr* given_space) {
  const auto columns = match_columns(table, schema);
  std::vector<ObjectKey> keys;
  for (const auto& row : table.rows) keys.push_back(row_key(row, schema, columns, factors));

  CategoryPtr space;
  if (given_space != nullptr) {
    space = *given_space;
  } else {
    auto full = product_all(factors, schema.algebra);
    if (schema.space == SpaceMode::observed) {
      std::set<std::size_t> seen;
      for (const auto& k : keys) seen.insert(full->index_of(k));
      std::vector<std::size_t> keep(seen.begin(), seen.end());
      space = full_subcategory(*full, keep);
    } else {
      space = std::move(full);
    }
  }

  std::vector<std::string> ids;
  for (const auto& row : table.rows) ids.push_back(row.id);
  auto x = discrete(ids, schema.algebra);
  std::vector<std::size_t> map;
  for (const auto& k : keys) map.push_back(space->index_of(k));

  std::vector<std::string> names;
  for (const auto& a : schema.attributes) names.push_back(a.name);
  DecisionContext ctx{schema.algebra,       x, std::move(names), std::move(factors), space,
                      LFunctor(x, space, std::move(map)), build_decision(table, schema, x)};

  auto report = validate_functor(ctx.map);
  report.merge(validate_predicate(ctx.decision));
  if (!report.ok()) throw Error(ErrorKind::verification_failed, "context fails " + report.violations.front().rule);
  return ctx;
}

}  // namespace

DecisionContext build_context(const DecisionTable& table, const Schema& schema) {
  return assemble(table, schema, build_factors(schema), nullptr);
}

DecisionContext build_context(const DecisionTable& table, const Schema& schema, CategoryPtr space) {
  return assemble(table, schema, build_factors(schema), &space);
}

}  // namespace roughcat
