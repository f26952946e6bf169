#pragma once

// Output model shared by all subcommands: a document of flat records
// rendered as an aligned table, CSV, or the JSON envelope.

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "canonical_bounds/exactmath.hpp"

namespace cbounds::cli {

using Value = std::variant<std::monostate, bool, std::string, Integer, Rational, QuadSurd>;

struct Record {
  std::vector<std::pair<std::string, Value>> fields;

  Record& add(std::string key, Value v) {
    fields.emplace_back(std::move(key), std::move(v));
    return *this;
  }
};

struct Document {
  std::string command;
  Record inputs;
  std::vector<Record> results;
  std::vector<std::string> refs;
  bool partial = false;
};

enum class Format { TABLE, JSON, CSV, SVG };

inline std::string exact_text(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "";
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>) return x;
        else if constexpr (std::is_same_v<T, QuadSurd>) return x.to_string();
        else return cbounds::to_string(x);
      },
      v);
}

inline std::string approx_text(const Value& v) {
  if (const auto* i = std::get_if<Integer>(&v)) return approx_string(to_decimal(*i));
  if (const auto* r = std::get_if<Rational>(&v)) return approx_string(to_decimal(*r));
  if (const auto* q = std::get_if<QuadSurd>(&v)) return approx_string(q->to_decimal());
  return "";
}

inline nlohmann::ordered_json to_json(const Value& v) {
  using nlohmann::ordered_json;
  return std::visit(
      [&](const auto& x) -> ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, bool>) return x;
        else if constexpr (std::is_same_v<T, std::string>) return x;
        else if constexpr (std::is_same_v<T, QuadSurd>)
          return ordered_json{{"r", cbounds::to_string(x.rational_part())},
                              {"s", cbounds::to_string(x.surd_coefficient())},
                              {"t", x.radicand().str()},
                              {"approx", approx_text(v)}};
        else return ordered_json{{"exact", cbounds::to_string(x)}, {"approx", approx_text(v)}};
      },
      v);
}

inline nlohmann::ordered_json to_json(const Record& r) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.fields) obj[k] = to_json(v);
  return obj;
}

inline void render_json(const Document& doc, std::ostream& os) {
  nlohmann::ordered_json out;
  out["command"] = doc.command;
  out["inputs"] = to_json(doc.inputs);
  out["results"] = nlohmann::ordered_json::array();
  for (const auto& r : doc.results) out["results"].push_back(to_json(r));
  out["paper_refs"] = doc.refs;
  if (doc.partial) out["partial"] = true;
  os << out.dump(2) << '\n';
}

namespace detail {
inline std::vector<std::string> columns(const std::vector<Record>& rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.fields)
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  return cols;
}

inline const Value* lookup(const Record& r, const std::string& key) {
  for (const auto& [k, v] : r.fields)
    if (k == key) return &v;
  return nullptr;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

/// Header from the union of keys, first-seen order.
inline void render_csv(const std::vector<Record>& rows, std::ostream& os, std::vector<std::string> cols = {}) {
  if (cols.empty()) cols = detail::columns(rows);
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const Value* v = detail::lookup(r, cols[i]);
      os << (i ? "," : "") << (v ? detail::csv_escape(exact_text(*v)) : "");
    }
    os << '\n';
  }
}

inline void render_table(const Document& doc, std::ostream& os, std::vector<std::string> cols = {}) {
  if (cols.empty()) cols = detail::columns(doc.results);
  auto cell = [](const Value& v) {
    std::string s = exact_text(v);
    const std::string a = approx_text(v);
    if (!a.empty() && a != s) s += " (~" + a + ")";
    return s;
  };
  std::vector<std::vector<std::string>> grid;
  grid.push_back(cols);
  for (const auto& r : doc.results) {
    std::vector<std::string> line;
    for (const auto& c : cols) {
      const Value* v = detail::lookup(r, c);
      line.push_back(v ? cell(*v) : "");
    }
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(cols.size(), 0);
  for (const auto& line : grid)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  os << "# " << doc.command;
  for (const auto& [k, v] : doc.inputs.fields) os << "  " << k << "=" << exact_text(v);
  os << '\n';
  for (std::size_t row = 0; row < grid.size(); ++row) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      os << grid[row][i];
      if (i + 1 < cols.size()) os << std::string(width[i] - grid[row][i].size() + 2, ' ');
    }
    os << '\n';
  }
  if (doc.partial) os << "# partial result: candidate budget exceeded\n";
}

}  // namespace cbounds::cli
