#include "roughcat/serialize.hpp"

#include "roughcat/error.hpp"

#include <algorithm>

namespace roughcat {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "table") return Format::table;
  throw Error(ErrorKind::parse_error, "unknown format '" + name + "'");
}

std::string grade_text(const CompleteLattice& l, const Grade& g) { return l.format(g); }

std::string grade_decimal_text(const CompleteLattice& l, const Grade& g) {
  auto n = l.numeric(g);
  return n ? format_decimal(*n) : std::string();
}

namespace {

bool two_valued(const CompleteLattice& l) { return l.kind() == AlgebraKind::bool2; }

}  // namespace

json predicate_to_json(const std::string& kind, const LPredicate& p) {
  const auto& l = *p.values();
  const auto& c = *p.category();
  json entries = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (two_valued(l) && !(p[i] == l.top())) continue;
    json entry;
    entry["tuple"] = c.object(i);
    entry["grade"] = l.format(p[i]);
    if (auto n = l.numeric(p[i])) {
      entry["grade_decimal"] = std::stod(format_decimal(*n));
    } else {
      entry["grade_decimal"] = nullptr;
    }
    entries.push_back(std::move(entry));
  }
  return json{{"kind", kind}, {"entries", std::move(entries)}};
}

json result_to_json(const ApproximationResult& result) {
  return predicate_to_json(to_string(result.kind), result.grades);
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto widen = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  };
  widen(header);
  for (const auto& r : rows) widen(r);
  std::string out;
  auto line = [&](const std::vector<std::string>& r) {
    std::string l;
    for (std::size_t i = 0; i < width.size(); ++i) {
      std::string cell = i < r.size() ? r[i] : "";
      l += cell;
      if (i + 1 < width.size()) l += std::string(width[i] - cell.size() + 2, ' ');
    }
    while (!l.empty() && l.back() == ' ') l.pop_back();
    out += l + "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& r : rows) line(r);
  return out;
}

std::string serialize_results(const std::vector<NamedPredicate>& results, Format format) {
  if (format == Format::json) {
    json doc = json::array();
    for (const auto& r : results) doc.push_back(predicate_to_json(r.kind, r.predicate));
    if (results.size() == 1) return doc.front().dump(2) + "\n";
    return json{{"results", doc}}.dump(2) + "\n";
  }
  std::string out;
  for (const auto& r : results) {
    const auto& l = *r.predicate.values();
    const auto& c = *r.predicate.category();
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < r.predicate.size(); ++i) {
      if (two_valued(l) && !(r.predicate[i] == l.top())) continue;
      rows.push_back({c.label(i), l.format(r.predicate[i]), grade_decimal_text(l, r.predicate[i])});
    }
    if (!out.empty()) out += "\n";
    out += "# " + r.kind + "\n";
    out += render_table({"tuple", "grade", "decimal"}, rows);
  }
  return out;
}

std::string serialize_result(const ApproximationResult& result, Format format) {
  return serialize_results({NamedPredicate{to_string(result.kind), result.grades}}, format);
}

}  // namespace roughcat
