#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "powmatch/error.hpp"
#include "powmatch/graph.hpp"
#include "powmatch/group.hpp"
#include "powmatch/matching.hpp"

// Matching transformations on group-derived graphs.

namespace powmatch {

/// One of x, y is a power of the other.
inline bool is_power_edge(const GroupTable& g, Element x, Element y) {
  return x != y && (g.cyclic_subgroup(x).contains(y) || g.cyclic_subgroup(y).contains(x));
}

/// Every element of order > 2 matched with its inverse.
///
/// The identity and the involutions stay unmatched. For odd |G| this is a
/// maximum matching of P(G) of size (|G|-1)/2.
inline Matching inverse_pair_matching(const GroupTable& g) {
  Matching m(g.order(), GraphKind::power);
  for (Element x = 0; x < g.order(); ++x) {
    const Element xi = g.inverse(x);
    if (x < xi) m.match(x, xi);
  }
  return m;
}

/// Rewrites a matching so that every unmatched vertex squares to the identity,
/// without decreasing its size; then matches the identity to an unmatched
/// involution if both are free.
///
/// Works on any graph in which each element of order > 2 is adjacent to its
/// inverse (power, enhanced power and commuting graphs all qualify). An
/// unmatched g outside T is either paired with a free inverse, or the chain
/// g_0 = g, g_{k+1} = mate(g_k^-1) is followed until g_m^-1 is free (size
/// grows) or g_m lies in T (g_m becomes the unmatched vertex instead); in both
/// cases each g_k is rematched with its inverse.
inline Matching normalize_matching(const GroupTable& g, const SimpleGraph& graph, Matching m) {
  const std::size_t n = g.order();
  if (graph.vertex_count() != n)
    throw ContractError("normalize_matching: graph and group have different sizes");
  if (!verify_matching(graph, m)) throw ContractError("normalize_matching: input is not a matching of the graph");
  for (Element x = 0; x < n; ++x)
    if (g.element_order(x) > 2 && !graph.has_edge(x, g.inverse(x)))
      throw ContractError("normalize_matching: graph lacks the edge {" + std::to_string(x) + ", " +
                          std::to_string(g.inverse(x)) + "}");

  auto in_t = [&](Element x) { return g.element_order(x) <= 2; };
  const std::size_t start_size = m.size();

  while (true) {
    Element g0 = Matching::unmatched;
    for (Element x = 0; x < n; ++x)
      if (!m.is_matched(x) && !in_t(x)) {
        g0 = x;
        break;
      }
    if (g0 == Matching::unmatched) break;

    if (!m.is_matched(g.inverse(g0))) {
      m.match(g0, g.inverse(g0));
      continue;
    }
    std::vector<Element> chain{g0};
    bool grows = false;
    while (true) {
      const Element next = m.mate(g.inverse(chain.back()));
      chain.push_back(next);
      if (chain.size() > n + 1) throw InvariantViolation("normalize_matching: chain does not terminate");
      if (in_t(next)) break;
      if (!m.is_matched(g.inverse(next))) {
        grows = true;
        break;
      }
    }
    // Drop {g_k^-1, g_{k+1}} and add {g_k, g_k^-1} for k < m (and k = m when growing).
    const std::size_t last = chain.size() - 1;
    for (std::size_t k = 0; k < last; ++k) m.unmatch(g.inverse(chain[k]));
    for (std::size_t k = 0; k < last; ++k) m.match(chain[k], g.inverse(chain[k]));
    if (grows) m.match(chain[last], g.inverse(chain[last]));
  }

  if (!m.is_matched(g.identity())) {
    for (Element t = 0; t < n; ++t)
      if (g.element_order(t) == 2 && !m.is_matched(t) && graph.has_edge(g.identity(), t)) {
        m.match(g.identity(), t);
        break;
      }
  }
  if (!verify_matching(graph, m) || m.size() < start_size)
    throw InvariantViolation("normalize_matching: produced an invalid or smaller matching");
  m.set_kind(graph.kind());
  return m;
}

/// Constructive matching of P(G) for even |G| leaving exactly
/// max{0, |I(G)| - |O(C_G(S))|} vertices unmatched, S = I(G).
///
/// Starts from inverse pairs plus {1, t_0} for the first involution t_0.
/// Remaining involutions are taken two at a time (u, v) in ascending order
/// and each pair consumes the next inverse pair {x, x^-1} of non-identity
/// odd-order elements centralizing S (ascending by x): the edges {x, x^-1},
/// {ux, ux^-1}, {vx, vx^-1} become {u, ux}, {v, vx^-1}, {ux^-1, x^-1}, {vx, x}.
inline Matching augment_involutions(const GroupTable& g) {
  if (g.order() % 2 != 0) throw DomainError("augment_involutions: group order must be even");
  const ElementSet inv = involutions(g);
  const ElementSet central_odd = centralizer_of_set(g, inv) & odd_order_elements(g);
  if (inv.cardinality() % 2 != 1 || central_odd.cardinality() % 2 != 1)
    throw InvariantViolation("augment_involutions: |I(G)| and |O(C_G(S))| must both be odd");

  Matching m = inverse_pair_matching(g);
  const auto ts = inv.members();
  m.match(g.identity(), ts[0]);

  std::vector<Element> xs;
  central_odd.for_each([&](Element x) {
    if (x != g.identity() && x < g.inverse(x)) xs.push_back(x);
  });
  std::size_t next_x = 0;
  for (std::size_t i = 1; i + 1 < ts.size() && next_x < xs.size(); i += 2, ++next_x) {
    const Element u = ts[i], v = ts[i + 1];
    const Element x = xs[next_x], xi = g.inverse(x);
    const Element ux = g.mul(u, x), uxi = g.mul(u, xi), vx = g.mul(v, x), vxi = g.mul(v, xi);
    m.unmatch(x);
    m.unmatch(ux);
    m.unmatch(vx);
    m.match(u, ux);
    m.match(v, vxi);
    m.match(uxi, xi);
    m.match(vx, x);
  }

  for (const auto& [a, b] : m.pairs())
    if (!is_power_edge(g, a, b))
      throw InvariantViolation("augment_involutions: produced non-power edge {" + std::to_string(a) + ", " +
                               std::to_string(b) + "}");
  const std::size_t n_inv = inv.cardinality(), n_odd = central_odd.cardinality();
  const std::size_t expected_unmatched = n_inv > n_odd ? n_inv - n_odd : 0;
  if (m.deficiency() != expected_unmatched)
    throw InvariantViolation("augment_involutions: left " + std::to_string(m.deficiency()) +
                             " vertices unmatched, expected " + std::to_string(expected_unmatched));
  return m;
}

/// Converts a matching of the enhanced power graph into a matching of the
/// power graph of the same size.
///
/// Each pass takes the non-power edge {g, h} of largest lcm(o(g), o(h))
/// (ties: smallest index pair; g is the endpoint of smaller order) and a
/// generator x_i of the cyclic group C = <g, h> of order l:
///   - a free generator replaces h:            {g, x_i};
///   - a generator whose mate y_i powers onto it: {g, x_i}, {h, y_i};
///   - otherwise every mate y_i lies in C; two of them are adjacent in P(C)
///     and {g, x_i}, {h, x_j}, {y_i, y_j} replace the three edges.
/// A mate that is neither a power nor a root of its generator would give a
/// non-power edge of larger lcm, so it cannot occur.
inline Matching rematch_enhanced_to_power(const GroupTable& g, const SimpleGraph& enhanced, Matching m) {
  if (enhanced.vertex_count() != g.order() || !verify_matching(enhanced, m))
    throw ContractError("rematch_enhanced_to_power: input is not a matching of the enhanced power graph");
  const std::size_t start_size = m.size();

  auto non_power_edges = [&] {
    std::vector<std::pair<Element, Element>> out;
    for (const auto& [a, b] : m.pairs())
      if (!is_power_edge(g, a, b)) out.emplace_back(a, b);
    return out;
  };

  const std::size_t budget = non_power_edges().size();
  for (std::size_t pass = 0;; ++pass) {
    const auto bad = non_power_edges();
    if (bad.empty()) break;
    if (pass >= budget) throw InvariantViolation("rematch_enhanced_to_power: pass budget exhausted");

    std::uint64_t best_lcm = 0;
    Element gg = 0, hh = 0;
    for (const auto& [a, b] : bad) {
      const std::uint64_t l = std::lcm<std::uint64_t>(g.element_order(a), g.element_order(b));
      if (l > best_lcm) {
        best_lcm = l;
        // g is the endpoint of smaller order (ties: smaller index); g keeps
        // its place in the new edges.
        const bool swap = g.element_order(b) < g.element_order(a);
        gg = swap ? b : a;
        hh = swap ? a : b;
      }
    }
    const ElementSet cyc = subgroup_closure(g, ElementSet(g.order(), {gg, hh}));
    const std::size_t l = cyc.cardinality();
    if (l != best_lcm || !is_cyclic_subgroup(g, cyc))
      throw InvariantViolation("rematch_enhanced_to_power: <g, h> is not cyclic of order lcm");

    std::vector<Element> gens;
    cyc.for_each([&](Element x) {
      if (g.element_order(x) == l) gens.push_back(x);
    });

    bool done = false;
    for (Element x : gens) {
      if (!m.is_matched(x)) {
        m.unmatch(gg);
        m.match(gg, x);
        done = true;
        break;
      }
    }
    if (done) continue;

    std::vector<Element> ys;
    for (Element x : gens) {
      const Element y = m.mate(x);
      if (g.cyclic_subgroup(y).contains(x)) {
        m.unmatch(gg);
        m.unmatch(x);
        m.match(gg, x);
        m.match(hh, y);
        done = true;
        break;
      }
      if (!g.cyclic_subgroup(x).contains(y))
        throw InvariantViolation("rematch_enhanced_to_power: mate of a generator is a non-power neighbour "
                                 "of larger lcm");
      ys.push_back(y);
    }
    if (done) continue;

    for (std::size_t i = 0; i < ys.size() && !done; ++i)
      for (std::size_t j = i + 1; j < ys.size() && !done; ++j) {
        if (!is_power_edge(g, ys[i], ys[j])) continue;
        const Element xi = gens[i], xj = gens[j], yi = ys[i], yj = ys[j];
        m.unmatch(gg);
        m.unmatch(xi);
        m.unmatch(xj);
        m.match(gg, xi);
        m.match(hh, xj);
        m.match(yi, yj);
        done = true;
      }
    if (!done)
      throw InvariantViolation("rematch_enhanced_to_power: mates of the generators of a cyclic group of order " +
                               std::to_string(l) + " form an independent set");
  }

  m.set_kind(GraphKind::power);
  for (const auto& [a, b] : m.pairs())
    if (!is_power_edge(g, a, b) || !enhanced.has_edge(a, b))
      throw InvariantViolation("rematch_enhanced_to_power: output contains a non-power edge");
  if (m.size() != start_size) throw InvariantViolation("rematch_enhanced_to_power: size changed");
  return m;
}

inline Matching rematch_enhanced_to_power(const GroupTable& g, Matching m) {
  return rematch_enhanced_to_power(g, enhanced_power_graph(g), std::move(m));
}

}  // namespace powmatch
