#include "roughcat/schema.hpp"

#include "roughcat/equivalence.hpp"
#include "roughcat/error.hpp"
#include "roughcat/table.hpp"

namespace roughcat {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::parse_error, "schema: " + what); }

const json& require_key(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) bad("missing key '" + std::string(key) + "' in " + where);
  return obj.at(key);
}

std::string grade_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  bad("grade in " + where + " must be a string like \"1/9\" or an integer");
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) bad(where + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

SymbolTable symbol_table(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where + " must be a nested array");
  SymbolTable out;
  for (const auto& row : v) {
    if (!row.is_array()) bad(where + " must be a nested array");
    std::vector<std::string> r;
    for (const auto& e : row) r.push_back(grade_text(e, where));
    out.push_back(std::move(r));
  }
  return out;
}

AttributeSchema parse_attribute(const json& a, std::size_t position) {
  const std::string where = "attributes[" + std::to_string(position) + "]";
  AttributeSchema out;
  const auto& name = require_key(a, "name", where);
  if (!name.is_string()) bad(where + ".name must be a string");
  out.name = name.get<std::string>();
  out.values = string_list(require_key(a, "values", where), where + ".values");
  if (out.values.empty()) bad(where + ".values is empty");
  if (a.contains("edges")) {
    for (const auto& e : a.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        bad(where + ".edges entries must be [from, to] pairs");
      }
      out.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  if (a.contains("similarity")) out.similarity = symbol_table(a.at("similarity"), where + ".similarity");
  if (a.contains("metric")) {
    std::vector<std::vector<std::int64_t>> m;
    for (const auto& row : a.at("metric")) {
      std::vector<std::int64_t> r;
      for (const auto& e : row) {
        if (!e.is_number_integer()) bad(where + ".metric must hold integer distances");
        r.push_back(e.get<std::int64_t>());
      }
      m.push_back(std::move(r));
    }
    out.metric = std::move(m);
  }
  if (a.contains("asymmetric")) out.asymmetric = a.at("asymmetric").get<bool>();
  if (a.contains("sentinels")) {
    const auto& s = a.at("sentinels");
    if (s.contains("missing")) out.sentinels.missing = s.at("missing").get<std::string>();
    if (s.contains("wildcard")) out.sentinels.wildcard = s.at("wildcard").get<std::string>();
  }
  int kinds = (out.edges.empty() ? 0 : 1) + (out.similarity ? 1 : 0) + (out.metric ? 1 : 0);
  if (kinds > 1) bad(where + " may declare only one of edges, similarity, metric");
  return out;
}

DecisionSpec parse_decision(const json& d) {
  DecisionSpec out;
  if (d.is_string() && d.get<std::string>() == "graded") {
    out.mode = DecisionSpec::Mode::graded;
    return out;
  }
  if (!d.is_object() || d.size() != 1) bad("decision must be one of binary, graded, multi");
  if (d.contains("binary")) {
    const auto& b = d.at("binary");
    if (b.is_object() && b.contains("target")) {
      out.target = b.at("target").get<std::string>();
      out.explicit_target = true;
    }
  } else if (d.contains("graded")) {
    out.mode = DecisionSpec::Mode::graded;
  } else if (d.contains("multi")) {
    const auto& m = d.at("multi");
    if (m.contains("threshold")) {
      out.mode = DecisionSpec::Mode::multi_threshold;
      out.threshold = grade_text(m.at("threshold"), "decision.multi.threshold");
    } else if (m.contains("flat")) {
      out.mode = DecisionSpec::Mode::multi_flat;
      out.flat_values = string_list(m.at("flat"), "decision.multi.flat");
    } else {
      bad("decision.multi needs 'threshold' or 'flat'");
    }
  } else {
    bad("unknown decision handling '" + d.begin().key() + "'");
  }
  return out;
}

}  // namespace

std::optional<std::size_t> Schema::attribute_index(std::string_view name) const {
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    if (attributes[i].name == name) return i;
  }
  return std::nullopt;
}

AlgebraPtr parse_lattice(const json& spec) {
  if (spec.is_string()) {
    const auto name = spec.get<std::string>();
    if (name == "bool2") return bool2();
    if (name == "unit_godel") return unit_godel();
    if (name == "unit_product") return unit_product();
    bad("unknown lattice '" + name + "'");
  }
  const auto& t = require_key(spec, "finite_table", "lattice");
  FiniteTableSpec fs;
  fs.carrier = string_list(require_key(t, "carrier", "finite_table"), "finite_table.carrier");
  fs.meet = symbol_table(require_key(t, "meet", "finite_table"), "finite_table.meet");
  fs.join = symbol_table(require_key(t, "join", "finite_table"), "finite_table.join");
  fs.tensor = symbol_table(require_key(t, "tensor", "finite_table"), "finite_table.tensor");
  fs.residual = symbol_table(require_key(t, "residual", "finite_table"), "finite_table.residual");
  fs.unit = grade_text(require_key(t, "unit", "finite_table"), "finite_table.unit");
  if (t.contains("max_size")) fs.max_size = t.at("max_size").get<std::size_t>();
  return finite_table(fs);
}

Schema parse_schema(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  Schema schema;
  try {
    const auto& attrs = require_key(doc, "attributes", "schema");
    if (!attrs.is_array()) bad("attributes must be an array");
    for (std::size_t i = 0; i < attrs.size(); ++i) schema.attributes.push_back(parse_attribute(attrs[i], i));
    schema.algebra = parse_lattice(require_key(doc, "lattice", "schema"));
    if (doc.contains("decision")) schema.decision = parse_decision(doc.at("decision"));
    if (doc.contains("space")) {
      const auto s = doc.at("space").get<std::string>();
      if (s == "full_product") {
        schema.space = SpaceMode::full_product;
      } else if (s == "observed") {
        schema.space = SpaceMode::observed;
      } else {
        bad("space must be full_product or observed");
      }
    }
    if (doc.contains("ignored_columns")) {
      schema.ignored_columns = string_list(doc.at("ignored_columns"), "ignored_columns");
    }
  } catch (const json::exception& e) {
    bad(std::string("malformed value: ") + e.what());
  }
  for (std::size_t i = 0; i < schema.attributes.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (schema.attributes[i].name == schema.attributes[j].name) {
        bad("duplicate attribute '" + schema.attributes[i].name + "'");
      }
    }
  }
  return schema;
}

Schema read_schema(const std::filesystem::path& path) { return parse_schema(read_file(path)); }

AttributeBuild build_attribute(const AttributeSchema& attribute, const AlgebraPtr& algebra) {
  AttributeBuild out;
  const auto& values = attribute.values;
  const std::size_t n = values.size();
  if (attribute.similarity || attribute.metric) {
    LRelation rel = [&] {
      if (attribute.metric) {
        if (algebra->kind() != AlgebraKind::unit_product) {
          throw Error(ErrorKind::algebra_mismatch,
                      "attribute '" + attribute.name + "': metric similarity needs unit_product");
        }
        std::vector<std::int64_t> flat;
        if (attribute.metric->size() != n) {
          throw Error(ErrorKind::shape_mismatch, "attribute '" + attribute.name + "': metric is not square");
        }
        for (const auto& row : *attribute.metric) {
          if (row.size() != n) {
            throw Error(ErrorKind::shape_mismatch, "attribute '" + attribute.name + "': metric is not square");
          }
          flat.insert(flat.end(), row.begin(), row.end());
        }
        return similarity_from_metric(values, flat);
      }
      const auto& m = *attribute.similarity;
      if (m.size() != n) {
        throw Error(ErrorKind::shape_mismatch, "attribute '" + attribute.name + "': similarity is not square");
      }
      std::vector<Grade> flat;
      for (const auto& row : m) {
        if (row.size() != n) {
          throw Error(ErrorKind::shape_mismatch, "attribute '" + attribute.name + "': similarity is not square");
        }
        for (const auto& cell : row) flat.push_back(algebra->parse(cell));
      }
      return LRelation(discrete(values, algebra), std::move(flat));
    }();
    auto eq = validate_equivalence(rel);
    for (auto& v : eq.violations) v.rule = attribute.name + ": " + v.rule;
    (attribute.asymmetric ? out.warnings : out.errors).merge(eq);
    out.category = category_from_relation(rel);
  } else if (!attribute.edges.empty()) {
    out.category = from_preorder(Preorder::closure(values, attribute.edges), algebra);
  } else {
    out.category = discrete(values, algebra);
  }

  auto axioms = validate_category(*out.category);
  for (auto& v : axioms.violations) v.rule = attribute.name + ": " + v.rule;
  // an equivalence failure already explains any composition failure
  if (out.errors.ok()) out.errors.merge(axioms);
  if (!attribute.sentinels.empty()) out.category = sentinel_expand(*out.category, attribute.sentinels);
  return out;
}

}  // namespace roughcat
