#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "powmatch/error.hpp"
#include "powmatch/graph.hpp"

namespace powmatch {

/// A matching stored as a mate map. Validity against a particular graph is
/// checked by verify_matching; the type itself accepts any mate array so that
/// malformed inputs can be represented and rejected.
class Matching {
 public:
  static constexpr Element unmatched = std::numeric_limits<Element>::max();

  Matching() = default;
  explicit Matching(std::size_t n, GraphKind kind = GraphKind::generic)
      : mate_(n, unmatched), kind_(kind) {}
  Matching(std::vector<Element> mates, GraphKind kind) : mate_(std::move(mates)), kind_(kind) {}

  std::size_t vertex_count() const noexcept { return mate_.size(); }
  GraphKind kind() const noexcept { return kind_; }
  void set_kind(GraphKind k) noexcept { kind_ = k; }

  Element mate(Element v) const noexcept { return mate_[v]; }
  bool is_matched(Element v) const noexcept { return mate_[v] != unmatched; }
  const std::vector<Element>& mates() const noexcept { return mate_; }

  /// Pairs u with v, first dropping any previous partners of either.
  void match(Element u, Element v) {
    unmatch(u);
    unmatch(v);
    mate_[u] = v;
    mate_[v] = u;
  }
  void unmatch(Element v) {
    const Element w = mate_[v];
    if (w == unmatched) return;
    mate_[v] = unmatched;
    if (w < mate_.size() && mate_[w] == v) mate_[w] = unmatched;
  }

  /// Matched vertices / 2.
  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto m : mate_) c += m != unmatched;
    return c / 2;
  }
  std::size_t deficiency() const noexcept { return vertex_count() - 2 * size(); }
  bool is_perfect() const noexcept { return deficiency() == 0; }

  /// Matched pairs (i, j), i < j, ascending.
  std::vector<std::pair<Element, Element>> pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element v = 0; v < mate_.size(); ++v)
      if (mate_[v] != unmatched && v < mate_[v]) out.emplace_back(v, mate_[v]);
    return out;
  }
  std::vector<Element> unmatched_vertices() const {
    std::vector<Element> out;
    for (Element v = 0; v < mate_.size(); ++v)
      if (mate_[v] == unmatched) out.push_back(v);
    return out;
  }

  friend bool operator==(const Matching& a, const Matching& b) { return a.mate_ == b.mate_; }

 private:
  std::vector<Element> mate_;
  GraphKind kind_ = GraphKind::generic;
};

/// Mate map is a symmetric fixed-point-free partial involution whose pairs are edges.
inline bool verify_matching(const SimpleGraph& graph, const Matching& m) {
  const std::size_t n = graph.vertex_count();
  if (m.vertex_count() != n) return false;
  for (Element v = 0; v < n; ++v) {
    const Element w = m.mate(v);
    if (w == Matching::unmatched) continue;
    if (w >= n || w == v || m.mate(w) != v || !graph.has_edge(v, w)) return false;
  }
  return true;
}

inline std::size_t deficiency(const Matching& m) { return m.deficiency(); }
inline bool is_perfect(const Matching& m) { return m.is_perfect(); }

/// Maximum-cardinality matching by Edmonds' blossom algorithm, O(V^3).
///
/// Deterministic: starting from the empty matching, free vertices are taken
/// as search roots in descending index order and neighbours are scanned in
/// descending order, so the returned mate array is a function of the graph
/// alone. Scanning from the top leaves low indices (the identity of a group
/// graph) unmatched when a choice exists.
inline Matching max_matching(const SimpleGraph& graph) {
  constexpr std::size_t nil = ElementSet::npos;
  const std::size_t n = graph.vertex_count();
  std::vector<std::size_t> match(n, nil), parent(n), base(n);
  std::vector<char> used(n), in_blossom(n), on_path(n);
  std::vector<std::size_t> queue;
  queue.reserve(n);
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t v = 0; v < n; ++v) {
    graph.neighbors(static_cast<Element>(v)).for_each([&](Element w) { adj[v].push_back(w); });
    std::reverse(adj[v].begin(), adj[v].end());
  }

  auto lca = [&](std::size_t a, std::size_t b) {
    std::fill(on_path.begin(), on_path.end(), 0);
    while (true) {
      a = base[a];
      on_path[a] = 1;
      if (match[a] == nil) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (on_path[b]) return b;
      b = parent[match[b]];
    }
  };

  auto mark_path = [&](std::size_t v, std::size_t b, std::size_t child) {
    while (base[v] != b) {
      in_blossom[base[v]] = in_blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };

  auto find_path = [&](std::size_t root) -> std::size_t {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), nil);
    for (std::size_t i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    queue.assign(1, root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t v = queue[qi];
      for (const std::size_t to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != nil && parent[match[to]] != nil)) {
          const std::size_t cur = lca(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] == nil) {
          parent[to] = v;
          if (match[to] == nil) return to;
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return nil;
  };

  for (std::size_t root = n; root-- > 0;) {
    if (match[root] != nil) continue;
    for (std::size_t v = find_path(root); v != nil;) {
      const std::size_t pv = parent[v], ppv = match[pv];
      match[v] = pv;
      match[pv] = v;
      v = ppv;
    }
  }

  Matching m(n, graph.kind());
  for (std::size_t v = 0; v < n; ++v)
    if (match[v] != nil && v < match[v]) m.match(static_cast<Element>(v), static_cast<Element>(match[v]));
  return m;
}

/// Size limits for the exhaustive oracle. A graph is accepted when either
/// bound holds.
struct BruteForceGuard {
  std::size_t max_vertices = 16;
  std::size_t max_edges = 24;
};

namespace detail {

/// Exhaustive search state: the non-isolated vertices compacted into a
/// 64-bit universe, memoized on the set of live vertices.
class BruteForceMatcher {
 public:
  BruteForceMatcher(const SimpleGraph& graph, BruteForceGuard guard) {
    const std::size_t n = graph.vertex_count();
    const std::size_t e = graph.edge_count();
    if (n > guard.max_vertices && e > guard.max_edges)
      throw SizeError("brute_force_matching_number: graph with " + std::to_string(n) + " vertices and " +
                      std::to_string(e) + " edges exceeds guard");
    std::vector<std::size_t> index(n, ElementSet::npos);
    for (Element v = 0; v < n; ++v)
      if (graph.degree(v) > 0) {
        index[v] = live_.size();
        live_.push_back(v);
      }
    if (live_.size() > 64) throw SizeError("brute_force_matching_number: more than 64 non-isolated vertices");
    adj_.assign(live_.size(), 0);
    for (std::size_t i = 0; i < live_.size(); ++i)
      graph.neighbors(live_[i]).for_each([&](Element w) { adj_[i] |= std::uint64_t{1} << index[w]; });
    all_ = live_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << live_.size()) - 1;
  }

  std::size_t solve() { return solve(all_); }

  /// Pairs of one maximum matching, following the memoized choices.
  std::vector<std::pair<Element, Element>> witness() {
    std::vector<std::pair<Element, Element>> out;
    std::uint64_t alive = all_;
    while (alive != 0) {
      const std::size_t best = solve(alive);
      const int v = std::countr_zero(alive);
      const std::uint64_t rest = alive & (alive - 1);
      alive = rest;
      if (solve(rest) == best) continue;
      for (std::uint64_t nb = adj_[static_cast<std::size_t>(v)] & rest; nb != 0; nb &= nb - 1) {
        const std::uint64_t u = nb & (~nb + 1);
        if (1 + solve(rest & ~u) == best) {
          out.emplace_back(live_[static_cast<std::size_t>(v)], live_[static_cast<std::size_t>(std::countr_zero(u))]);
          alive = rest & ~u;
          break;
        }
      }
    }
    return out;
  }

 private:
  // Branch on the lowest live vertex: leave it unmatched, or match it to
  // each live neighbour.
  std::size_t solve(std::uint64_t alive) {
    if (alive == 0) return 0;
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
    const int v = std::countr_zero(alive);
    const std::uint64_t rest = alive & (alive - 1);
    std::size_t best = solve(rest);
    for (std::uint64_t nb = adj_[static_cast<std::size_t>(v)] & rest; nb != 0; nb &= nb - 1) {
      const std::uint64_t u = nb & (~nb + 1);
      best = std::max(best, 1 + solve(rest & ~u));
    }
    memo_.emplace(alive, best);
    return best;
  }

  std::vector<Element> live_;
  std::vector<std::uint64_t> adj_;
  std::uint64_t all_ = 0;
  std::unordered_map<std::uint64_t, std::size_t> memo_;
};

}  // namespace detail

/// Exact matching number by exhaustive search; independent of the blossom
/// code and meant as its oracle. Isolated vertices are ignored.
inline std::size_t brute_force_matching_number(const SimpleGraph& graph, BruteForceGuard guard = {}) {
  return detail::BruteForceMatcher(graph, guard).solve();
}

/// A maximum matching found by the same exhaustive search.
inline Matching brute_force_matching(const SimpleGraph& graph, BruteForceGuard guard = {}) {
  detail::BruteForceMatcher search(graph, guard);
  Matching m(graph.vertex_count(), graph.kind());
  for (const auto& [u, v] : search.witness()) m.match(u, v);
  return m;
}

}  // namespace powmatch
