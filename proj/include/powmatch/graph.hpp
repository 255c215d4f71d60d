#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "powmatch/element_set.hpp"
#include "powmatch/error.hpp"
#include "powmatch/group.hpp"

namespace powmatch {

enum class GraphKind { power, enhanced, commuting, generic };

inline const char* to_string(GraphKind k) {
  switch (k) {
    case GraphKind::power: return "power";
    case GraphKind::enhanced: return "enhanced";
    case GraphKind::commuting: return "commuting";
    case GraphKind::generic: return "generic";
  }
  return "generic";
}

inline GraphKind graph_kind_from_string(const std::string& s) {
  if (s == "power") return GraphKind::power;
  if (s == "enhanced") return GraphKind::enhanced;
  if (s == "commuting") return GraphKind::commuting;
  if (s == "generic") return GraphKind::generic;
  throw DomainError("unknown graph kind '" + s + "'");
}

/// Undirected simple graph on vertices 0..n-1 with bit-set adjacency rows.
/// The kind tag is informational only.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n, GraphKind kind = GraphKind::generic)
      : n_(n), kind_(kind), adj_(n, ElementSet(n)) {}

  std::size_t vertex_count() const noexcept { return n_; }
  GraphKind kind() const noexcept { return kind_; }
  void set_kind(GraphKind k) noexcept { kind_ = k; }

  /// Self-loops are ignored.
  void add_edge(Element u, Element v) {
    if (u >= n_ || v >= n_) throw ContractError("edge endpoint out of range");
    if (u == v) return;
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  void remove_edge(Element u, Element v) {
    adj_[u].erase(v);
    adj_[v].erase(u);
  }
  bool has_edge(Element u, Element v) const noexcept {
    return u < n_ && v < n_ && adj_[u].contains(v);
  }
  const ElementSet& neighbors(Element v) const noexcept { return adj_[v]; }
  std::size_t degree(Element v) const noexcept { return adj_[v].cardinality(); }

  std::size_t edge_count() const noexcept {
    std::size_t s = 0;
    for (const auto& row : adj_) s += row.cardinality();
    return s / 2;
  }

  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<Element, Element>> edges() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element i = 0; i < n_; ++i)
      for (std::size_t j = adj_[i].next(i + 1); j != ElementSet::npos; j = adj_[i].next(j + 1))
        out.emplace_back(i, static_cast<Element>(j));
    return out;
  }

  /// Edge-set inclusion on the same vertex set.
  bool is_subgraph_of(const SimpleGraph& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (!adj_[i].is_subset_of(other.adj_[i])) return false;
    return true;
  }
  bool same_edges(const SimpleGraph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  std::size_t n_ = 0;
  GraphKind kind_ = GraphKind::generic;
  std::vector<ElementSet> adj_;
};

/// x ~ y iff one lies in the cyclic subgroup generated by the other.
inline SimpleGraph power_graph(const GroupTable& g) {
  SimpleGraph graph(g.order(), GraphKind::power);
  for (Element x = 0; x < g.order(); ++x) {
    g.cyclic_subgroup(x).for_each([&](Element y) {
      if (y != x) graph.add_edge(x, y);
    });
  }
  return graph;
}

/// x ~ y iff <x, y> is cyclic.
///
/// <x, y> depends only on the subgroups <x> and <y>, so cyclicity is decided
/// once per unordered pair of distinct cyclic subgroups.
inline SimpleGraph enhanced_power_graph(const GroupTable& g) {
  const std::size_t n = g.order();
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> ids;
  std::vector<Element> rep;
  std::vector<std::size_t> id_of(n);
  for (Element x = 0; x < n; ++x) {
    auto [it, inserted] = ids.try_emplace(g.cyclic_subgroup(x), rep.size());
    if (inserted) rep.push_back(x);
    id_of[x] = it->second;
  }
  const std::size_t k = rep.size();
  std::vector<char> cyclic(k * k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    const ElementSet& ha = g.cyclic_subgroup(rep[a]);
    for (std::size_t b = a; b < k; ++b) {
      const ElementSet& hb = g.cyclic_subgroup(rep[b]);
      bool c;
      if (ha.is_subset_of(hb) || hb.is_subset_of(ha)) {
        c = true;
      } else if (!g.commute(rep[a], rep[b])) {
        c = false;
      } else {
        c = is_cyclic_subgroup(g, subgroup_closure(g, ElementSet(n, {rep[a], rep[b]})));
      }
      cyclic[a * k + b] = cyclic[b * k + a] = c;
    }
  }
  SimpleGraph graph(n, GraphKind::enhanced);
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (cyclic[id_of[x] * k + id_of[y]]) graph.add_edge(x, y);
  return graph;
}

/// x ~ y iff xy = yx.
inline SimpleGraph commuting_graph(const GroupTable& g) {
  SimpleGraph graph(g.order(), GraphKind::commuting);
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = x + 1; y < g.order(); ++y)
      if (g.commute(x, y)) graph.add_edge(x, y);
  return graph;
}

inline SimpleGraph build_graph(const GroupTable& g, GraphKind kind) {
  switch (kind) {
    case GraphKind::power: return power_graph(g);
    case GraphKind::enhanced: return enhanced_power_graph(g);
    case GraphKind::commuting: return commuting_graph(g);
    case GraphKind::generic: break;
  }
  throw DomainError("build_graph: no group construction for kind 'generic'");
}

/// Induced subgraph with its vertex renumbering.
struct InducedSubgraph {
  SimpleGraph graph;
  std::vector<Element> to_original;  ///< new index -> old index (ascending)
  std::vector<std::size_t> to_new;   ///< old index -> new index, or npos if dropped
};

inline InducedSubgraph induced_subgraph(const SimpleGraph& graph, const ElementSet& mask) {
  InducedSubgraph out;
  out.to_new.assign(graph.vertex_count(), ElementSet::npos);
  mask.for_each([&](Element v) {
    if (v >= graph.vertex_count()) throw ContractError("induced_subgraph: mask exceeds vertex set");
    out.to_new[v] = out.to_original.size();
    out.to_original.push_back(v);
  });
  out.graph = SimpleGraph(out.to_original.size(), graph.kind());
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    const Element u = out.to_original[i];
    graph.neighbors(u).for_each([&](Element v) {
      if (out.to_new[v] != ElementSet::npos && out.to_new[v] > i)
        out.graph.add_edge(static_cast<Element>(i), static_cast<Element>(out.to_new[v]));
    });
  }
  return out;
}

/// Connected components of the subgraph induced on a vertex mask.
struct ComponentPartition {
  static constexpr std::size_t none = ElementSet::npos;
  std::vector<std::size_t> component_of;  ///< per vertex; `none` outside the mask
  std::vector<ElementSet> components;     ///< ordered by smallest member
};

inline ComponentPartition connected_components(const SimpleGraph& graph, const ElementSet& mask) {
  const std::size_t n = graph.vertex_count();
  ComponentPartition p;
  p.component_of.assign(n, ComponentPartition::none);
  std::vector<Element> stack;
  mask.for_each([&](Element start) {
    if (start >= n) throw ContractError("connected_components: mask exceeds vertex set");
    if (p.component_of[start] != ComponentPartition::none) return;
    const std::size_t id = p.components.size();
    ElementSet comp(n);
    stack.assign(1, start);
    p.component_of[start] = id;
    while (!stack.empty()) {
      const Element u = stack.back();
      stack.pop_back();
      comp.insert(u);
      (graph.neighbors(u) & mask).for_each([&](Element v) {
        if (p.component_of[v] == ComponentPartition::none) {
          p.component_of[v] = id;
          stack.push_back(v);
        }
      });
    }
    p.components.push_back(std::move(comp));
  });
  return p;
}

inline bool is_connected(const SimpleGraph& graph) {
  if (graph.vertex_count() == 0) return true;
  return connected_components(graph, ElementSet::full(graph.vertex_count())).components.size() == 1;
}

/// C_t = {x : t in <x>} for an involution t.
inline ElementSet c_t_class(const GroupTable& g, Element t) {
  if (t >= g.order() || g.element_order(t) != 2)
    throw DomainError("c_t_class: element " + std::to_string(t) + " is not an involution");
  ElementSet s(g.order());
  for (Element x = 0; x < g.order(); ++x)
    if (g.cyclic_subgroup(x).contains(t)) s.insert(x);
  return s;
}

}  // namespace powmatch
