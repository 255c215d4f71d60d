#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "powmatch/catalog.hpp"
#include "powmatch/constructive.hpp"
#include "powmatch/graph.hpp"
#include "powmatch/group.hpp"
#include "powmatch/matching.hpp"
#include "powmatch/number_theory.hpp"

namespace powmatch {

inline constexpr const char* kSuiteVersion = "1.0";

enum class CheckId {
  ODD_ORDER,
  LOWER_T,
  UNIQUE_INV,
  MP1,
  CT_COMPONENTS,
  MP2,
  NILP,
  BOUND_8M4,
  SMALL_MU,
  THREE_INV,
  COM_F,
  POW_F,
  EMBED_CP,
  ODD_X_C2,
  TWO_GROUP,
  ENH_EQ,
  EPPO_EQ,
};

inline constexpr std::array<CheckId, 17> kAllChecks{
    CheckId::ODD_ORDER, CheckId::LOWER_T,   CheckId::UNIQUE_INV, CheckId::MP1,      CheckId::CT_COMPONENTS,
    CheckId::MP2,       CheckId::NILP,      CheckId::BOUND_8M4,  CheckId::SMALL_MU, CheckId::THREE_INV,
    CheckId::COM_F,     CheckId::POW_F,     CheckId::EMBED_CP,   CheckId::ODD_X_C2, CheckId::TWO_GROUP,
    CheckId::ENH_EQ,    CheckId::EPPO_EQ,
};

inline const char* to_string(CheckId id) {
  switch (id) {
    case CheckId::ODD_ORDER: return "ODD_ORDER";
    case CheckId::LOWER_T: return "LOWER_T";
    case CheckId::UNIQUE_INV: return "UNIQUE_INV";
    case CheckId::MP1: return "MP1";
    case CheckId::CT_COMPONENTS: return "CT_COMPONENTS";
    case CheckId::MP2: return "MP2";
    case CheckId::NILP: return "NILP";
    case CheckId::BOUND_8M4: return "BOUND_8M4";
    case CheckId::SMALL_MU: return "SMALL_MU";
    case CheckId::THREE_INV: return "THREE_INV";
    case CheckId::COM_F: return "COM_F";
    case CheckId::POW_F: return "POW_F";
    case CheckId::EMBED_CP: return "EMBED_CP";
    case CheckId::ODD_X_C2: return "ODD_X_C2";
    case CheckId::TWO_GROUP: return "TWO_GROUP";
    case CheckId::ENH_EQ: return "ENH_EQ";
    case CheckId::EPPO_EQ: return "EPPO_EQ";
  }
  return "?";
}

inline std::optional<CheckId> check_id_from_string(const std::string& s) {
  for (CheckId id : kAllChecks)
    if (s == to_string(id)) return id;
  return std::nullopt;
}

enum class Verdict { pass, fail, not_applicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

struct CheckResult {
  CheckId check_id;
  std::string group_name;
  std::string expected;
  std::string observed;
  Verdict verdict = Verdict::not_applicable;
  std::string detail;
};

struct SuiteOptions {
  std::size_t catalog_cap = 64;
  /// Largest G x C_p built by EMBED_CP and ODD_X_C2.
  std::size_t product_cap = 64;
  /// Worker threads over catalog entries; results do not depend on it.
  std::size_t jobs = 1;
};

/// Lazily computed invariants of one group shared by all checks.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(const GroupTable& g) : g_(g) {}

  const GroupTable& group() const { return g_; }
  std::size_t order() const { return g_.order(); }

  const ElementSet& inv() {
    if (!inv_) inv_ = involutions(g_);
    return *inv_;
  }
  const ElementSet& odd() {
    if (!odd_) odd_ = odd_order_elements(g_);
    return *odd_;
  }
  const ElementSet& central_odd() {
    if (!central_odd_) central_odd_ = centralizer_of_set(g_, inv()) & odd();
    return *central_odd_;
  }
  std::size_t n_inv() { return inv().cardinality(); }
  std::size_t n_odd() { return odd().cardinality(); }
  std::size_t n_central_odd() { return central_odd().cardinality(); }

  const SimpleGraph& power() {
    if (!power_) power_ = power_graph(g_);
    return *power_;
  }
  const SimpleGraph& enhanced() {
    if (!enhanced_) enhanced_ = enhanced_power_graph(g_);
    return *enhanced_;
  }
  const SimpleGraph& commuting() {
    if (!commuting_) commuting_ = commuting_graph(g_);
    return *commuting_;
  }
  const Matching& mm_power() {
    if (!mm_power_) mm_power_ = max_matching(power());
    return *mm_power_;
  }
  const Matching& mm_enhanced() {
    if (!mm_enhanced_) mm_enhanced_ = max_matching(enhanced());
    return *mm_enhanced_;
  }
  const Matching& mm_commuting() {
    if (!mm_commuting_) mm_commuting_ = max_matching(commuting());
    return *mm_commuting_;
  }
  std::size_t mu() { return mm_power().size(); }
  std::size_t power_deficiency() { return mm_power().deficiency(); }

  bool nilpotent() {
    if (!nilpotent_) nilpotent_ = is_nilpotent(g_);
    return *nilpotent_;
  }

 private:
  const GroupTable& g_;
  std::optional<ElementSet> inv_, odd_, central_odd_;
  std::optional<SimpleGraph> power_, enhanced_, commuting_;
  std::optional<Matching> mm_power_, mm_enhanced_, mm_commuting_;
  std::optional<bool> nilpotent_;
};

namespace detail {

inline std::string str(std::size_t v) { return std::to_string(v); }

inline bool spectrum_matches(const GroupTable& g, const GroupTable& reference) {
  return g.order() == reference.order() && g.order_spectrum() == reference.order_spectrum();
}

inline std::uint64_t smallest_odd_prime_above(std::uint64_t s) {
  std::uint64_t p = std::max<std::uint64_t>(3, s + 1);
  while (!nt::is_prime(p)) ++p;
  return p;
}

inline CheckResult make(CheckId id, const CatalogEntry& e) {
  CheckResult r;
  r.check_id = id;
  r.group_name = e.name;
  return r;
}

inline CheckResult not_applicable(CheckResult r, std::string why) {
  r.verdict = Verdict::not_applicable;
  r.detail = std::move(why);
  return r;
}

inline CheckResult decide(CheckResult r, bool ok) {
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  return r;
}

inline CheckResult run_check_impl(CheckId id, const CatalogEntry& e, GroupAnalysis& a, const SuiteOptions& opt) {
  const GroupTable& g = a.group();
  const std::size_t n = g.order();
  const bool even = n % 2 == 0;
  CheckResult r = make(id, e);

  switch (id) {
    case CheckId::ODD_ORDER: {
      if (even) return not_applicable(r, "|G| even");
      r.expected = "mu(P) = " + str((n - 1) / 2);
      r.observed = "mu(P) = " + str(a.mu());
      return decide(r, a.mu() == (n - 1) / 2);
    }
    case CheckId::LOWER_T: {
      if (!even) return not_applicable(r, "|G| odd");
      const std::size_t t = a.n_inv() + 1;
      const std::size_t bound = 1 + (n - t) / 2;
      const std::size_t mu_e = a.mm_enhanced().size();
      r.expected = "mu(P), mu(Pe) >= " + str(bound);
      r.observed = "mu(P) = " + str(a.mu()) + ", mu(Pe) = " + str(mu_e);
      r.detail = "|T| = " + str(t);
      return decide(r, a.mu() >= bound && mu_e >= bound);
    }
    case CheckId::UNIQUE_INV: {
      if (a.n_inv() != 1) return not_applicable(r, "|I| = " + str(a.n_inv()));
      r.expected = "P(G) perfect";
      r.observed = "deficiency " + str(a.power_deficiency());
      return decide(r, a.power_deficiency() == 0);
    }
    case CheckId::MP1: {
      if (!even) return not_applicable(r, "|G| odd");
      const long long lower = static_cast<long long>(a.n_inv()) - static_cast<long long>(a.n_odd());
      r.expected = "deficiency >= |I|-|O| = " + std::to_string(lower);
      r.observed = "deficiency " + str(a.power_deficiency());
      return decide(r, static_cast<long long>(a.power_deficiency()) >= lower);
    }
    case CheckId::CT_COMPONENTS: {
      if (!even) return not_applicable(r, "|G| odd");
      const ElementSet even_elts = g.all() - a.odd();
      const auto parts = connected_components(a.power(), even_elts);
      std::vector<ElementSet> classes;
      a.inv().for_each([&](Element t) { classes.push_back(c_t_class(g, t)); });
      bool all_odd = true;
      for (const auto& c : parts.components) all_odd = all_odd && c.cardinality() % 2 == 1;
      bool same = parts.components.size() == classes.size();
      for (const auto& c : classes)
        same = same && std::find(parts.components.begin(), parts.components.end(), c) != parts.components.end();
      r.expected = str(classes.size()) + " odd components equal to the C_t classes";
      r.observed = str(parts.components.size()) + " components, " + (same ? "equal" : "different") + ", " +
                   (all_odd ? "all odd" : "some even");
      return decide(r, same && all_odd);
    }
    case CheckId::MP2: {
      if (!even) return not_applicable(r, "|G| odd");
      const std::size_t upper = a.n_inv() > a.n_central_odd() ? a.n_inv() - a.n_central_odd() : 0;
      const Matching built = augment_involutions(g);
      const bool built_ok = verify_matching(a.power(), built) && built.deficiency() == upper;
      r.expected = "deficiency <= " + str(upper) + ", constructive deficiency = " + str(upper);
      r.observed = "deficiency " + str(a.power_deficiency()) + ", constructive " + str(built.deficiency());
      r.detail = "|I| = " + str(a.n_inv()) + ", |O(C_G(S))| = " + str(a.n_central_odd());
      return decide(r, a.power_deficiency() <= upper && built_ok);
    }
    case CheckId::NILP: {
      if (!even) return not_applicable(r, "|G| odd");
      if (!a.nilpotent()) return not_applicable(r, "not nilpotent");
      const std::size_t want = a.n_inv() > a.n_odd() ? a.n_inv() - a.n_odd() : 0;
      r.expected = "deficiency = " + str(want);
      r.observed = "deficiency " + str(a.power_deficiency());
      return decide(r, a.power_deficiency() == want);
    }
    case CheckId::BOUND_8M4: {
      if (is_elementary_abelian_2(g)) return not_applicable(r, "elementary abelian 2-group");
      r.expected = "|G| < 8 mu + 4 = " + str(8 * a.mu() + 4);
      r.observed = "|G| = " + str(n) + ", mu = " + str(a.mu());
      return decide(r, n < 8 * a.mu() + 4);
    }
    case CheckId::SMALL_MU: {
      const std::size_t mu = a.mu();
      if (mu != 1 && mu != 2) return not_applicable(r, "mu = " + str(mu));
      r.observed = "mu = " + str(mu);
      if (mu == 1) {
        r.expected = "elementary abelian 2-group or C3";
        const bool ok = is_elementary_abelian_2(g) || spectrum_matches(g, make_cyclic(3));
        return decide(r, ok);
      }
      r.expected = "one of C4, C5, D3, D4";
      const bool ok = spectrum_matches(g, make_cyclic(4)) || spectrum_matches(g, make_cyclic(5)) ||
                      spectrum_matches(g, make_dihedral(3)) || spectrum_matches(g, make_dihedral(4));
      return decide(r, ok);
    }
    case CheckId::THREE_INV: {
      if (a.n_inv() != 3) return not_applicable(r, "|I| = " + str(a.n_inv()));
      const auto ts = a.inv().members();
      bool noncommuting = false;
      for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) noncommuting = noncommuting || !g.commute(ts[i], ts[j]);
      if (!noncommuting) return not_applicable(r, "involutions commute pairwise");
      r.expected = "|G| = 6 or P(G) perfect";
      r.observed = "|G| = " + str(n) + ", deficiency " + str(a.power_deficiency());
      return decide(r, n == 6 || a.power_deficiency() == 0);
    }
    case CheckId::COM_F: {
      if (!even) return not_applicable(r, "|G| odd");
      const std::size_t k = a.n_inv();
      const std::uint64_t f = nt::saturating_mul(2 * k, nt::saturating_factorial(k));
      if (n < f) return not_applicable(r, "|G| = " + str(n) + " < F(" + str(k) + ") = " + std::to_string(f));
      r.expected = "Com(G) perfect (|G| >= F(" + str(k) + ") = " + std::to_string(f) + ")";
      r.observed = "deficiency " + str(a.mm_commuting().deficiency());
      return decide(r, a.mm_commuting().is_perfect());
    }
    case CheckId::POW_F: {
      if (!even) return not_applicable(r, "|G| odd");
      const auto ts = a.inv().members();
      for (Element u : ts) {
        const bool has = std::any_of(ts.begin(), ts.end(), [&](Element v) { return !g.commute(u, v); });
        if (!has) return not_applicable(r, "involution " + g.label(u) + " commutes with every involution");
      }
      const std::size_t k = ts.size();
      const std::uint64_t f = nt::saturating_mul(k, nt::saturating_factorial(k));
      if (n < f) return not_applicable(r, "|G| = " + str(n) + " < F(" + str(k) + ") = " + std::to_string(f));
      r.expected = "P(G) perfect";
      r.observed = "deficiency " + str(a.power_deficiency());
      return decide(r, a.power_deficiency() == 0);
    }
    case CheckId::EMBED_CP: {
      if (!even) return not_applicable(r, "|G| odd");
      const std::size_t s = a.power_deficiency();
      const std::uint64_t p = smallest_odd_prime_above(s);
      if (n * p > opt.product_cap)
        return not_applicable(r, "|G x C" + std::to_string(p) + "| = " + std::to_string(n * p) +
                                     " exceeds product cap " + str(opt.product_cap));
      const GroupTable prod = direct_product(g, make_cyclic(p), opt.product_cap);
      const Matching mm = max_matching(power_graph(prod));
      r.expected = "P(G x C" + std::to_string(p) + ") perfect";
      r.observed = "deficiency " + str(mm.deficiency());
      r.detail = "s = " + str(s) + ", p = " + std::to_string(p);
      return decide(r, mm.is_perfect());
    }
    case CheckId::ODD_X_C2: {
      if (even) return not_applicable(r, "|G| even");
      if (2 * n > opt.product_cap)
        return not_applicable(r, "|G x C2| = " + str(2 * n) + " exceeds product cap " + str(opt.product_cap));
      const Matching mm = max_matching(power_graph(direct_product(g, make_cyclic(2), opt.product_cap)));
      r.expected = "P(G x C2) perfect";
      r.observed = "deficiency " + str(mm.deficiency());
      return decide(r, mm.is_perfect());
    }
    case CheckId::TWO_GROUP: {
      if (n < 2 || !is_two_group(g)) return not_applicable(r, "|G| is not 2^k with k >= 1");
      const bool perfect = a.power_deficiency() == 0;
      r.expected = "P(G) perfect iff |I| = 1";
      r.observed = std::string(perfect ? "perfect" : "not perfect") + ", |I| = " + str(a.n_inv());
      return decide(r, perfect == (a.n_inv() == 1));
    }
    case CheckId::ENH_EQ: {
      const Matching converted = rematch_enhanced_to_power(g, a.enhanced(), a.mm_enhanced());
      const bool converted_ok =
          verify_matching(a.power(), converted) && converted.size() == a.mm_enhanced().size();
      r.expected = "mu(P) = mu(Pe); rematch yields an equal-size power matching";
      r.observed = "mu(P) = " + str(a.mu()) + ", mu(Pe) = " + str(a.mm_enhanced().size()) + ", rematch size " +
                   str(converted.size());
      return decide(r, a.mu() == a.mm_enhanced().size() && converted_ok);
    }
    case CheckId::EPPO_EQ: {
      const bool equal = a.power().same_edges(a.enhanced());
      const bool eppo = is_eppo(g);
      const bool null_gk = gk_graph(g).is_null();
      r.expected = "P = Pe <=> EPPO <=> GK graph null";
      r.observed = std::string("P = Pe: ") + (equal ? "yes" : "no") + ", EPPO: " + (eppo ? "yes" : "no") +
                   ", GK null: " + (null_gk ? "yes" : "no");
      return decide(r, equal == eppo && eppo == null_gk);
    }
  }
  return r;
}

}  // namespace detail

/// Runs one theorem check. Exceptions from the machinery are reported as a
/// failing verdict, never swallowed.
inline CheckResult run_check(CheckId id, const CatalogEntry& entry, GroupAnalysis& analysis,
                             const SuiteOptions& options = {}) {
  try {
    return detail::run_check_impl(id, entry, analysis, options);
  } catch (const std::exception& ex) {
    CheckResult r = detail::make(id, entry);
    r.verdict = Verdict::fail;
    r.detail = std::string("error: ") + ex.what();
    return r;
  }
}

inline CheckResult run_check(CheckId id, const CatalogEntry& entry, const SuiteOptions& options = {}) {
  GroupAnalysis analysis(entry.group);
  return run_check(id, entry, analysis, options);
}

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t not_applicable = 0;
};

struct SuiteReport {
  std::size_t catalog_cap = 0;
  std::vector<CheckResult> results;  ///< catalog order, then check order
  SuiteSummary summary;

  bool ok() const { return summary.failed == 0; }
};

inline SuiteReport run_suite(const std::vector<CatalogEntry>& catalog, const std::vector<CheckId>& checks,
                             const SuiteOptions& options = {}) {
  std::vector<CheckId> ordered;
  for (CheckId id : kAllChecks)
    if (std::find(checks.begin(), checks.end(), id) != checks.end()) ordered.push_back(id);

  std::vector<std::vector<CheckResult>> per_entry(catalog.size());
  auto work = [&](std::size_t worker, std::size_t workers) {
    for (std::size_t i = worker; i < catalog.size(); i += workers) {
      GroupAnalysis analysis(catalog[i].group);
      for (CheckId id : ordered) per_entry[i].push_back(run_check(id, catalog[i], analysis, options));
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.jobs, catalog.size()));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }

  SuiteReport report;
  report.catalog_cap = options.catalog_cap;
  for (auto& rs : per_entry)
    for (auto& r : rs) {
      ++report.summary.total;
      switch (r.verdict) {
        case Verdict::pass: ++report.summary.passed; break;
        case Verdict::fail: ++report.summary.failed; break;
        case Verdict::not_applicable: ++report.summary.not_applicable; break;
      }
      report.results.push_back(std::move(r));
    }
  return report;
}

inline std::vector<CheckId> all_checks() { return {kAllChecks.begin(), kAllChecks.end()}; }

inline nlohmann::ordered_json report_to_json(const SuiteReport& report) {
  nlohmann::ordered_json doc;
  doc["suite_version"] = kSuiteVersion;
  doc["catalog_cap"] = report.catalog_cap;
  doc["results"] = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    nlohmann::ordered_json row;
    row["check_id"] = to_string(r.check_id);
    row["group"] = r.group_name;
    row["expected"] = r.expected;
    row["observed"] = r.observed;
    row["verdict"] = to_string(r.verdict);
    row["detail"] = r.detail;
    doc["results"].push_back(std::move(row));
  }
  doc["summary"] = {{"total", report.summary.total},
                    {"pass", report.summary.passed},
                    {"fail", report.summary.failed},
                    {"not_applicable", report.summary.not_applicable}};
  return doc;
}

inline void write_report(std::ostream& out, const SuiteReport& report) {
  out << report_to_json(report).dump(2) << '\n';
}

/// Fixed-width table, one row per result, followed by the summary line.
inline void print_report_table(std::ostream& out, const SuiteReport& report) {
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  out << pad("CHECK", 15) << pad("GROUP", 10) << pad("VERDICT", 16) << "OBSERVED\n";
  for (const auto& r : report.results)
    out << pad(to_string(r.check_id), 15) << pad(r.group_name, 10) << pad(to_string(r.verdict), 16)
        << (r.observed.empty() ? r.detail : r.observed) << '\n';
  out << "total " << report.summary.total << ", pass " << report.summary.passed << ", fail "
      << report.summary.failed << ", not-applicable " << report.summary.not_applicable << '\n';
}

}  // namespace powmatch
