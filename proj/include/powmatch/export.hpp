#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "powmatch/graph.hpp"
#include "powmatch/matching.hpp"

// Graph and matching documents. All writers are deterministic: edges and
// pairs are emitted in ascending lexicographic order.

namespace powmatch {

/// {"n": ..., "kind": ..., "edges": [[i, j], ...]} with i < j.
inline void write_edge_list(std::ostream& out, const SimpleGraph& graph) {
  out << "{\n  \"n\": " << graph.vertex_count() << ",\n  \"kind\": \"" << to_string(graph.kind())
      << "\",\n  \"edges\": [";
  const auto edges = graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    out << (i ? ",\n    " : "\n    ") << "[" << edges[i].first << ", " << edges[i].second << "]";
  out << (edges.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

/// `graph name {` followed by one `i -- j;` line per edge.
inline void write_dot(std::ostream& out, const SimpleGraph& graph, const std::string& name) {
  out << "graph " << name << " {\n";
  for (const auto& [i, j] : graph.edges()) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
}

inline SimpleGraph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned() || !doc.contains("edges") ||
      !doc["edges"].is_array())
    throw ParseError("graph document needs integer 'n' and array 'edges'");
  const auto n = doc["n"].get<std::uint64_t>();
  GraphKind kind = GraphKind::generic;
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) throw ParseError("graph 'kind' must be a string");
    try {
      kind = graph_kind_from_string(doc["kind"].get<std::string>());
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  SimpleGraph g(n, kind);
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw ParseError("each edge must be a pair of non-negative integers");
    const auto u = e[0].get<std::uint64_t>(), v = e[1].get<std::uint64_t>();
    if (u >= n || v >= n || u == v) throw ParseError("edge [" + std::to_string(u) + ", " + std::to_string(v) + "] is invalid");
    g.add_edge(static_cast<Element>(u), static_cast<Element>(v));
  }
  return g;
}

/// {"graph_kind", "n", "size", "deficiency", "pairs", "unmatched"}.
inline void write_matching(std::ostream& out, const Matching& m) {
  out << "{\n  \"graph_kind\": \"" << to_string(m.kind()) << "\",\n  \"n\": " << m.vertex_count()
      << ",\n  \"size\": " << m.size() << ",\n  \"deficiency\": " << m.deficiency() << ",\n  \"pairs\": [";
  const auto pairs = m.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out << (i ? ", " : "") << "[" << pairs[i].first << ", " << pairs[i].second << "]";
  out << "],\n  \"unmatched\": [";
  const auto free = m.unmatched_vertices();
  for (std::size_t i = 0; i < free.size(); ++i) out << (i ? ", " : "") << free[i];
  out << "]\n}\n";
}

/// Reads pairs only; size, deficiency and unmatched are derived.
inline Matching matching_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned() || !doc.contains("pairs") ||
      !doc["pairs"].is_array())
    throw ParseError("matching document needs integer 'n' and array 'pairs'");
  const auto n = doc["n"].get<std::uint64_t>();
  GraphKind kind = GraphKind::generic;
  if (doc.contains("graph_kind") && doc["graph_kind"].is_string()) {
    try {
      kind = graph_kind_from_string(doc["graph_kind"].get<std::string>());
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  std::vector<Element> mates(n, Matching::unmatched);
  for (const auto& p : doc["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
      throw ParseError("each pair must be two non-negative integers");
    const auto u = p[0].get<std::uint64_t>(), v = p[1].get<std::uint64_t>();
    if (u >= n || v >= n || u == v) throw ParseError("pair [" + std::to_string(u) + ", " + std::to_string(v) + "] is invalid");
    if (mates[u] != Matching::unmatched || mates[v] != Matching::unmatched)
      throw ParseError("vertex appears in two pairs");
    mates[u] = static_cast<Element>(v);
    mates[v] = static_cast<Element>(u);
  }
  return Matching(std::move(mates), kind);
}

}  // namespace powmatch
