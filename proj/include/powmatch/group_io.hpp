#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "powmatch/group.hpp"

// Group file: {"order": n, "mul": [[...], ...], "labels": [...]}.
// Writers emit fields in that order, one table row per line. Readers accept
// any field order and also a flat row-major "mul" of length n*n.

namespace powmatch {

inline GroupTable group_from_json(const nlohmann::json& doc, Validation validation = Validation::full,
                                  std::size_t cap = kDefaultOrderCap) {
  if (!doc.is_object()) throw ParseError("group document must be a JSON object");
  if (!doc.contains("order") || !doc["order"].is_number_unsigned())
    throw ParseError("group document needs a non-negative integer field 'order'");
  if (!doc.contains("mul") || !doc["mul"].is_array())
    throw ParseError("group document needs an array field 'mul'");
  const auto n = doc["order"].get<std::uint64_t>();
  if (n == 0) throw ValidationError("group order must be positive");
  if (n > cap) throw SizeError("group order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));

  const auto& rows = doc["mul"];
  std::vector<Element> mul;
  mul.reserve(n * n);
  auto take = [&](const nlohmann::json& v, std::size_t r, std::size_t c) {
    if (!v.is_number_unsigned())
      throw ParseError("mul[" + std::to_string(r) + "][" + std::to_string(c) +
                       "] is not a non-negative integer");
    const auto x = v.get<std::uint64_t>();
    if (x >= n)
      throw ValidationError("entry mul[" + std::to_string(r) + "][" + std::to_string(c) +
                            "] = " + std::to_string(x) + " is out of range");
    mul.push_back(static_cast<Element>(x));
  };
  if (!rows.empty() && rows[0].is_array()) {
    if (rows.size() != n)
      throw ParseError("mul has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows[r].is_array() || rows[r].size() != n)
        throw ParseError("mul row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c) take(rows[r][c], r, c);
    }
  } else {
    if (rows.size() != n * n)
      throw ParseError("flat mul has " + std::to_string(rows.size()) + " entries, expected " +
                       std::to_string(n * n));
    for (std::size_t i = 0; i < rows.size(); ++i) take(rows[i], i / n, i % n);
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw ParseError("'labels' must be an array of strings");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw ParseError("'labels' must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return GroupTable::from_table(n, std::move(mul), std::move(labels), validation, cap);
}

inline GroupTable read_group(std::istream& in, Validation validation = Validation::full,
                             std::size_t cap = kDefaultOrderCap) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("group document is not valid JSON: ") + e.what());
  }
  return group_from_json(doc, validation, cap);
}

inline GroupTable parse_group(const std::string& text, Validation validation = Validation::full,
                              std::size_t cap = kDefaultOrderCap) {
  std::istringstream in(text);
  return read_group(in, validation, cap);
}

inline void write_group(std::ostream& out, const GroupTable& g) {
  const std::size_t n = g.order();
  out << "{\n  \"order\": " << n << ",\n  \"mul\": [\n";
  for (Element r = 0; r < n; ++r) {
    out << "    [";
    const auto row = g.row(r);
    for (std::size_t c = 0; c < n; ++c) out << (c ? "," : "") << row[c];
    out << (r + 1 < n ? "],\n" : "]\n");
  }
  out << "  ]";
  if (!g.labels().empty()) {
    out << ",\n  \"labels\": [";
    for (std::size_t i = 0; i < n; ++i) out << (i ? ", " : "") << nlohmann::json(g.labels()[i]).dump();
    out << "]";
  }
  out << "\n}\n";
}

inline std::string group_document(const GroupTable& g) {
  std::ostringstream out;
  write_group(out, g);
  return out.str();
}

}  // namespace powmatch
