#include "roughcat/cli.hpp"

#include "roughcat/analysis.hpp"
#include "roughcat/context.hpp"
#include "roughcat/error.hpp"
#include "roughcat/serialize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>

namespace roughcat {

using nlohmann::json;

namespace {

struct Options {
  std::string table;
  std::string old_table;
  std::string new_table;
  std::string schema;
  std::string schema2;
  std::string format = "json";
  std::string kind = "both";
  bool lift = false;
  std::string subset;
  bool minimal = false;
  std::string map;
  std::string threshold;
  std::size_t samples = 1000;
};

/// I/O problems are reported separately from content problems.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_file(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw IoError("cannot read '" + path + "'");
}

Schema load_schema(const std::string& path) {
  require_file(path);
  return read_schema(path);
}

DecisionTable load_table(const std::string& path) {
  require_file(path);
  return read_table(path);
}

std::string join_witness(const std::vector<std::string>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + w[i];
  return s + ")";
}

void print_violations(const ValidationReport& r, const std::string& prefix, std::ostream& out) {
  for (const auto& v : r.violations) out << prefix << v.rule << " " << join_witness(v.witness) << "\n";
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o, std::ostream& out) {
  const Schema schema = load_schema(o.schema);
  bool ok = true;

  const auto laws = validate_residuated(*schema.algebra, o.samples);
  for (const auto& c : laws.checks) {
    out << (c.passed ? "pass  " : "FAIL  ") << "lattice " << schema.algebra->name() << ": " << c.law;
    if (!c.passed) out << " witness " << join_witness(c.witness);
    out << "\n";
    ok = ok && c.passed;
  }

  std::vector<CategoryPtr> factors;
  for (const auto& attribute : schema.attributes) {
    auto built = build_attribute(attribute, schema.algebra);
    if (built.errors.ok()) {
      out << "pass  attribute " << attribute.name << "\n";
    } else {
      ok = false;
      print_violations(built.errors, "FAIL  attribute ", out);
    }
    print_violations(built.warnings, "warn  attribute ", out);
    factors.push_back(built.category);
  }

  if (ok && !o.table.empty()) {
    const auto table = load_table(o.table);
    const auto ctx = build_context(table, schema);
    auto r = validate_functor(ctx.map);
    r.merge(validate_predicate(ctx.decision));
    if (ctx.space->size() <= 256) r.merge(validate_category(*ctx.space));
    if (r.ok()) {
      out << "pass  context: " << ctx.objects->size() << " objects, " << ctx.space->size()
          << " attribute tuples\n";
    } else {
      ok = false;
      print_violations(r, "FAIL  context ", out);
    }
  }
  return ok ? exit_ok : exit_failed;
}

int cmd_approximate(const Options& o, std::ostream& out) {
  const auto ctx = build_context(load_table(o.table), load_schema(o.schema));
  const Format format = parse_format(o.format);
  if (o.kind != "upper" && o.kind != "lower" && o.kind != "both") {
    throw Error(ErrorKind::parse_error, "--kind must be upper, lower or both");
  }
  std::vector<NamedPredicate> results;
  for (ApproxKind k : {ApproxKind::upper, ApproxKind::lower}) {
    if (o.kind != "both" && o.kind != to_string(k)) continue;
    auto res = k == ApproxKind::upper ? upper(ctx.map, ctx.decision) : lower(ctx.map, ctx.decision);
    if (o.lift) {
      results.push_back({to_string(k) + "_lifted", lift(ctx.map, res.grades)});
    } else {
      results.push_back({to_string(k), res.grades});
    }
  }
  out << serialize_results(results, format);
  return exit_ok;
}

std::vector<std::size_t> parse_subset(const std::string& text, std::size_t attributes) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    try {
      pos = std::stoul(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse_error, "--subset expects 1-based attribute positions, got '" + item + "'");
    }
    if (pos == 0 || pos > attributes) {
      throw Error(ErrorKind::parse_error, "--subset position " + item + " is out of range");
    }
    out.push_back(pos - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json subset_names(const DecisionContext& ctx, const AttributeSubset& s) {
  json names = json::array();
  for (std::size_t k : s) names.push_back(ctx.attribute_names[k]);
  return names;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const auto ctx = build_context(load_table(o.table), load_schema(o.schema));
  const Format format = parse_format(o.format);
  if (o.minimal == !o.subset.empty()) throw Error(ErrorKind::parse_error, "give exactly one of --subset or --minimal");

  json doc;
  if (o.minimal) {
    auto report = find_minimal_reducts(ctx.map, ctx.decision, ctx.factors);
    json list = json::array();
    for (const auto& s : report.minimal_reducts) list.push_back(subset_names(ctx, s));
    doc = {{"minimal_reducts", list}};
    if (format == Format::table) {
      std::vector<std::vector<std::string>> rows;
      for (const auto& s : report.minimal_reducts) {
        std::string cell;
        for (std::size_t k : s) cell += (cell.empty() ? "" : ", ") + ctx.attribute_names[k];
        rows.push_back({"{" + cell + "}"});
      }
      out << render_table({"minimal reduct"}, rows);
      return exit_ok;
    }
  } else {
    auto subset = parse_subset(o.subset, ctx.attribute_names.size());
    auto projection = project_attributes(ctx.space, ctx.factors, subset);
    auto report = is_reducible(ctx.map, ctx.decision, projection);
    doc = {{"projection", subset_names(ctx, subset)}, {"reducible", report.reducible}};
    if (report.witness) {
      doc["witness"] = {{"first", report.witness->first},
                        {"second", report.witness->second},
                        {"reason", report.witness->reason}};
    }
    if (format == Format::table) {
      out << "projection onto " << subset_names(ctx, subset).dump() << ": "
          << (report.reducible ? "reducible" : "not reducible") << "\n";
      if (report.witness) {
        out << "witness " << report.witness->first << " / " << report.witness->second << ": "
            << report.witness->reason << "\n";
      }
      return exit_ok;
    }
  }
  out << doc.dump(2) << "\n";
  return exit_ok;
}

std::map<std::string, std::string> parse_map(const std::string& text) {
  std::map<std::string, std::string> m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw Error(ErrorKind::verification_failed, "--map entries look like old=new, got '" + item + "'");
    }
    if (!m.emplace(item.substr(0, eq), item.substr(eq + 1)).second) {
      throw Error(ErrorKind::verification_failed, "--map maps '" + item.substr(0, eq) + "' twice");
    }
  }
  return m;
}

json change_list(const std::vector<GradeChange>& changes, const LCategory& a, const CompleteLattice& l) {
  json list = json::array();
  for (const auto& c : changes) {
    json e = {{"tuple", a.object(c.object)}, {"before", l.format(c.before)}, {"after", l.format(c.after)}};
    if (l.kind() == AlgebraKind::bool2) e["change"] = c.after == l.top() ? "+" : "-";
    list.push_back(std::move(e));
  }
  return list;
}

int cmd_update(const Options& o, std::ostream& out) {
  const Schema schema = load_schema(o.schema);
  const auto old_table = load_table(o.old_table);
  const auto new_table = load_table(o.new_table);
  const auto fresh = build_context(new_table, schema);
  const auto stale = build_context(old_table, schema, fresh.space);
  const Format format = parse_format(o.format);

  auto remap = parse_map(o.map);
  for (const auto& [from, to] : remap) {
    if (!stale.objects->find({from})) throw Error(ErrorKind::verification_failed, "--map names unknown old object '" + from + "'");
  }
  std::vector<std::size_t> i;
  for (std::size_t x = 0; x < stale.objects->size(); ++x) {
    const auto id = stale.object_id(x);
    auto it = remap.find(id);
    const std::string target = it == remap.end() ? id : it->second;
    auto idx = fresh.objects->find({target});
    if (!idx) throw Error(ErrorKind::verification_failed, "old object '" + id + "' has no image '" + target + "' in the new table");
    i.push_back(*idx);
  }
  UpdateMorphism u{LFunctor(stale.objects, fresh.objects, std::move(i)), stale.map, stale.decision,
                   fresh.map, fresh.decision};
  const auto delta = update_delta(u);
  const auto& a = *fresh.space;
  const auto& l = *fresh.decision.values();
  if (format == Format::table) {
    std::vector<std::vector<std::string>> rows;
    for (auto [name, list] : {std::pair{"upper", &delta.upper_changes}, std::pair{"lower", &delta.lower_changes}}) {
      for (const auto& c : *list) rows.push_back({name, a.label(c.object), l.format(c.before), l.format(c.after)});
    }
    out << render_table({"approximation", "tuple", "before", "after"}, rows);
    out << (delta.monotone ? "monotone: yes\n" : "monotone: NO\n");
  } else {
    json doc = {{"upper_delta", change_list(delta.upper_changes, a, l)},
                {"lower_delta", change_list(delta.lower_changes, a, l)},
                {"monotone", delta.monotone}};
    out << doc.dump(2) << "\n";
  }
  return delta.monotone ? exit_ok : exit_failed;
}

int cmd_guess(const Options& o, std::ostream& out) {
  const Schema schema = load_schema(o.schema);
  const auto ctx = build_context(load_table(o.table), schema);
  const Format format = parse_format(o.format);
  const auto& values = ctx.decision.values();
  Grade threshold = values->top();
  if (!o.threshold.empty()) {
    threshold = values->parse(o.threshold);
  } else if (values->kind() != AlgebraKind::bool2) {
    throw Error(ErrorKind::parse_error, "--threshold is required for graded decisions");
  }
  const auto rules = guess_rules(ctx.map, ctx.decision, threshold);
  const auto& a = *ctx.space;
  if (format == Format::table) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : rules) {
      rows.push_back({a.label(r.object), values->format(r.upper), values->format(r.lower), to_string(r.classification)});
    }
    out << render_table({"tuple", "upper", "lower", "class"}, rows);
    return exit_ok;
  }
  json list = json::array();
  for (const auto& r : rules) {
    list.push_back({{"tuple", a.object(r.object)},
                    {"upper", values->format(r.upper)},
                    {"lower", values->format(r.lower)},
                    {"class", to_string(r.classification)}});
  }
  out << json{{"threshold", values->format(threshold)}, {"rules", list}}.dump(2) << "\n";
  return exit_ok;
}

/// R' : A -> A2 keeping the attributes named in the second schema.
LFunctor projection_by_name(const DecisionContext& ctx, const Schema& second) {
  auto factors = build_factors(second);
  auto target = product_all(factors, second.algebra);
  std::vector<std::size_t> positions;
  for (const auto& attribute : second.attributes) {
    auto it = std::find(ctx.attribute_names.begin(), ctx.attribute_names.end(), attribute.name);
    if (it == ctx.attribute_names.end()) {
      throw Error(ErrorKind::verification_failed, "second schema attribute '" + attribute.name + "' is not in the first");
    }
    positions.push_back(static_cast<std::size_t>(it - ctx.attribute_names.begin()));
  }
  std::vector<std::size_t> map;
  for (const auto& key : ctx.space->objects()) {
    ObjectKey sub;
    for (std::size_t p : positions) sub.push_back(key[p]);
    auto idx = target->find(sub);
    if (!idx) throw Error(ErrorKind::verification_failed, "tuple " + format_key(key) + " has no image under the second schema");
    map.push_back(*idx);
  }
  return LFunctor(ctx.space, target, std::move(map));
}

int cmd_compose(const Options& o, std::ostream& out) {
  const Schema first = load_schema(o.schema);
  const Schema second = load_schema(o.schema2);
  if (!first.algebra->same_as(*second.algebra)) {
    throw Error(ErrorKind::algebra_mismatch, "the two schemas use different lattices");
  }
  const auto ctx = build_context(load_table(o.table), first);
  const Format format = parse_format(o.format);
  const auto r2 = projection_by_name(ctx, second);
  if (auto report = validate_functor(r2); !report.ok()) {
    out << "FAIL  second map is not an enriched functor\n";
    print_violations(report, "FAIL  ", out);
    return exit_failed;
  }
  const auto composite = compose(r2, ctx.map);
  const auto up_steps = upper(r2, upper(ctx.map, ctx.decision).grades);
  const auto up_direct = upper(composite, ctx.decision);
  const auto lo_steps = lower(r2, lower(ctx.map, ctx.decision).grades);
  const auto lo_direct = lower(composite, ctx.decision);
  const bool up_eq = up_steps.grades == up_direct.grades;
  const bool lo_eq = lo_steps.grades == lo_direct.grades;
  if (format == Format::table) {
    out << serialize_results({{"upper", up_direct.grades}, {"lower", lo_direct.grades}}, format);
    out << "upper stepwise = direct: " << (up_eq ? "yes" : "NO") << "\n";
    out << "lower stepwise = direct: " << (lo_eq ? "yes" : "NO") << "\n";
  } else {
    json doc = {{"upper", predicate_to_json("upper", up_direct.grades)},
                {"lower", predicate_to_json("lower", lo_direct.grades)},
                {"upper_compositional", up_eq},
                {"lower_compositional", lo_eq}};
    out << doc.dump(2) << "\n";
  }
  return up_eq && lo_eq ? exit_ok : exit_failed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rough set approximations over enriched categories"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };

  auto* validate = app.add_subcommand("validate", "Check lattice laws, attribute enrichments and the context");
  validate->add_option("--schema", o.schema, "Schema JSON")->required();
  validate->add_option("--table", o.table, "Decision table CSV");
  validate->add_option("--samples", o.samples, "Random triples for unit-interval lattices");

  auto* approximate = app.add_subcommand("approximate", "Upper and lower approximations");
  approximate->add_option("--table", o.table, "Decision table CSV")->required();
  approximate->add_option("--schema", o.schema, "Schema JSON")->required();
  approximate->add_option("--kind", o.kind, "upper, lower or both")->check(CLI::IsMember({"upper", "lower", "both"}));
  approximate->add_flag("--lift", o.lift, "Pull the approximations back to objects");
  add_format(approximate);

  auto* reduce = app.add_subcommand("reduce", "Attribute reducibility");
  reduce->add_option("--table", o.table, "Decision table CSV")->required();
  reduce->add_option("--schema", o.schema, "Schema JSON")->required();
  reduce->add_option("--subset", o.subset, "1-based attribute positions, e.g. 1,2");
  reduce->add_flag("--minimal", o.minimal, "Search all minimal reducts");
  add_format(reduce);

  auto* update = app.add_subcommand("update", "Verify an update and report the approximation delta");
  update->add_option("--old", o.old_table, "Table before the update")->required();
  update->add_option("--new", o.new_table, "Table after the update")->required();
  update->add_option("--schema", o.schema, "Schema JSON")->required();
  update->add_option("--map", o.map, "Object map overrides, e.g. 1=0,8=7");
  add_format(update);

  auto* guess = app.add_subcommand("guess", "Guess decisions for attribute tuples with no data");
  guess->add_option("--table", o.table, "Decision table CSV")->required();
  guess->add_option("--schema", o.schema, "Schema JSON")->required();
  guess->add_option("--threshold", o.threshold, "Membership cut (required for graded decisions)");
  add_format(guess);

  auto* compose_cmd = app.add_subcommand("compose", "Approximate in two steps and directly, and compare");
  compose_cmd->add_option("--table", o.table, "Decision table CSV")->required();
  compose_cmd->add_option("--schema", o.schema, "First schema (defines A)")->required();
  compose_cmd->add_option("--schema2", o.schema2, "Second schema (defines A' over a subset of attributes)")->required();
  add_format(compose_cmd);

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  if (storage.empty()) storage.push_back("roughcat");
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_failed;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*approximate) return cmd_approximate(o, out);
    if (*reduce) return cmd_reduce(o, out);
    if (*update) return cmd_update(o, out);
    if (*guess) return cmd_guess(o, out);
    if (*compose_cmd) return cmd_compose(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_failed;
  }
  return exit_failed;
}

}  // namespace roughcat
