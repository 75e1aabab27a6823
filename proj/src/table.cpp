#include "roughcat/table.hpp"

#include "roughcat/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace roughcat {

namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::vector<std::string>> split_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;      // inside quotes
  bool was_quoted = false;  // current field started with a quote
  std::size_t line = 1;

  auto end_field = [&] {
    record.push_back(was_quoted ? field : trim(field));
    field.clear();
    was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    bool blank = record.size() == 1 && record.front().empty();
    if (!blank) records.push_back(std::move(record));
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!trim(field).empty()) {
          throw Error(ErrorKind::parse_error, "stray quote on line " + std::to_string(line));
        }
        field.clear();
        quoted = true;
        was_quoted = true;
        break;
      case ',': end_field(); break;
      case '\r': break;
      case '\n':
        end_record();
        ++line;
        break;
      default: field += c;
    }
  }
  if (quoted) throw Error(ErrorKind::parse_error, "unterminated quoted field");
  if (!field.empty() || !record.empty() || was_quoted) end_record();
  return records;
}

bool numeric_start(const std::string& s) {
  if (s.empty()) return false;
  unsigned char c = static_cast<unsigned char>(s.front());
  return std::isdigit(c) || c == '.' || c == '-' || c == '+';
}

std::string quote_if_needed(const std::string& s) {
  bool needs = s.find_first_of(",\"\n\r") != std::string::npos ||
               (!s.empty() && (std::isspace(static_cast<unsigned char>(s.front())) ||
                               std::isspace(static_cast<unsigned char>(s.back()))));
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::optional<std::size_t> DecisionTable::attribute_index(std::string_view name) const {
  for (std::size_t i = 0; i < attribute_names.size(); ++i) {
    if (attribute_names[i] == name) return i;
  }
  return std::nullopt;
}

DecisionTable parse_table(std::string_view csv) {
  if (csv.size() >= 3 && csv.substr(0, 3) == "\xEF\xBB\xBF") csv.remove_prefix(3);
  auto records = split_csv(csv);
  if (records.empty()) throw Error(ErrorKind::parse_error, "table has no header row");
  const auto& header = records.front();
  if (header.size() < 2) {
    throw Error(ErrorKind::parse_error, "header needs an id column and a decision column");
  }
  DecisionTable table;
  table.id_column = header.front();
  table.decision_name = header.back();
  table.attribute_names.assign(header.begin() + 1, header.end() - 1);

  std::set<std::string> ids;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size()) {
      throw Error(ErrorKind::parse_error, "row " + std::to_string(r) + " has " +
                                              std::to_string(rec.size()) + " fields, expected " +
                                              std::to_string(header.size()));
    }
    DecisionRow row;
    row.id = rec.front();
    if (!ids.insert(row.id).second) throw Error(ErrorKind::parse_error, "duplicate object id '" + row.id + "'");
    row.attributes.assign(rec.begin() + 1, rec.end() - 1);
    row.decision.text = rec.back();
    if (numeric_start(row.decision.text)) row.decision.value = parse_rational(row.decision.text);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DecisionTable read_table(const std::filesystem::path& path) { return parse_table(read_file(path)); }

std::string write_table(const DecisionTable& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out += ',';
      out += quote_if_needed(fields[i]);
    }
    out += '\n';
  };
  std::vector<std::string> header{table.id_column};
  header.insert(header.end(), table.attribute_names.begin(), table.attribute_names.end());
  header.push_back(table.decision_name);
  line(header);
  for (const auto& row : table.rows) {
    std::vector<std::string> fields{row.id};
    fields.insert(fields.end(), row.attributes.begin(), row.attributes.end());
    fields.push_back(row.decision.text);
    line(fields);
  }
  return out;
}

}  // namespace roughcat
