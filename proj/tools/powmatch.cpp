// powmatch: command-line driver for the group / graph / matching / number
// theory / verification pipeline.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error,
// 4 input validation error, 5 certification failure.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "powmatch/powmatch.hpp"

namespace {

using namespace powmatch;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3, kInvalid = 4, kCertify = 5 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

GroupTable load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_group(in);
}

/// Writes to `path`, or to stdout when path is empty.
void emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write(out);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- group

struct GroupArgs {
  std::string kind;
  std::size_t n = 0, m = 0, k = 0;
  std::string a, b;
  std::vector<std::string> gens;
  std::string out;
  bool to_stdout = false;
};

int cmd_group(const GroupArgs& args) {
  GroupTable g = [&] {
    if (args.kind == "cyclic") return make_cyclic(args.n);
    if (args.kind == "dihedral") return make_dihedral(args.n);
    if (args.kind == "dicyclic") return make_dicyclic(args.m);
    if (args.kind == "elem2") return make_elementary_abelian_2(args.k);
    if (args.kind == "symmetric") return make_symmetric(args.n);
    if (args.kind == "product") {
      if (args.a.empty() || args.b.empty()) throw UsageError("--kind product needs --a and --b");
      return direct_product(load_group(args.a), load_group(args.b));
    }
    if (args.gens.empty()) throw UsageError("--kind perm needs at least one --gens");
    std::vector<Permutation> gens;
    for (const auto& s : args.gens) {
      try {
        gens.push_back(Permutation::parse_cycles(s));
      } catch (const ParseError& e) {
        throw UsageError(e.what());
      }
    }
    return from_permutation_generators(gens);
  }();

  // The document owns stdout when requested; the summary then goes to stderr.
  const bool doc_on_stdout = args.to_stdout || args.out.empty();
  emit(doc_on_stdout ? std::string() : args.out, [&](std::ostream& o) { write_group(o, g); });
  std::ostream& summary = doc_on_stdout ? std::cerr : std::cout;
  summary << "order " << g.order() << "\n"
          << "involutions " << involutions(g).cardinality() << "\n"
          << "odd_order_elements " << odd_order_elements(g).cardinality() << "\n"
          << "nilpotent " << yes_no(is_nilpotent(g)) << "\n"
          << "eppo " << yes_no(is_eppo(g)) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- graph

struct GraphArgs {
  std::string group;
  std::string kind = "power";
  std::string format = "edges";
  std::string out;
  bool to_stdout = false;
};

int cmd_graph(const GraphArgs& args) {
  const GroupTable g = load_group(args.group);
  const SimpleGraph graph = build_graph(g, graph_kind_from_string(args.kind));
  const bool doc_on_stdout = args.to_stdout || args.out.empty();
  emit(doc_on_stdout ? std::string() : args.out, [&](std::ostream& o) {
    if (args.format == "dot")
      write_dot(o, graph, args.kind);
    else
      write_edge_list(o, graph);
  });
  (doc_on_stdout ? std::cerr : std::cout) << "edges " << graph.edge_count() << "\n";
  return kOk;
}

// ---------------------------------------------------------------- match

struct MatchArgs {
  std::string group, graph;
  std::string graph_kind = "power";
  std::string algo = "blossom";
  std::string matching;
  bool certify = false;
  std::string out;
  bool to_stdout = false;
};

int cmd_match(const MatchArgs& args) {
  if (args.group.empty() == args.graph.empty()) throw UsageError("give exactly one of --group and --graph");
  std::optional<GroupTable> g;
  SimpleGraph graph;
  if (!args.group.empty()) {
    g = load_group(args.group);
    graph = build_graph(*g, graph_kind_from_string(args.graph_kind));
  } else {
    graph = graph_from_json(read_json_file(args.graph));
  }
  auto need_group = [&]() -> const GroupTable& {
    if (!g) throw UsageError("--algo " + args.algo + " needs --group");
    return *g;
  };

  Matching m;
  if (args.algo == "blossom") {
    m = max_matching(graph);
  } else if (args.algo == "brute") {
    m = brute_force_matching(graph);
  } else if (args.algo == "inverse-pairs") {
    m = inverse_pair_matching(need_group());
    m.set_kind(graph.kind());
  } else if (args.algo == "mp2") {
    if (graph.kind() != GraphKind::power) throw UsageError("--algo mp2 works on the power graph");
    m = augment_involutions(need_group());
  } else {  // rematch
    const GroupTable& grp = need_group();
    if (args.matching.empty()) throw UsageError("--algo rematch needs --matching");
    const SimpleGraph enhanced = enhanced_power_graph(grp);
    const Matching input = matching_from_json(read_json_file(args.matching));
    m = rematch_enhanced_to_power(grp, enhanced, input);
    graph = power_graph(grp);
  }

  if (args.certify) {
    if (!verify_matching(graph, m)) throw CertificationError("output is not a matching of the graph");
    if (args.algo == "blossom") {
      try {
        const std::size_t exact = brute_force_matching_number(graph);
        if (exact != m.size())
          throw CertificationError("blossom size " + std::to_string(m.size()) + " differs from brute force " +
                                   std::to_string(exact));
      } catch (const SizeError&) {
        std::cerr << "certify: graph exceeds the brute-force guard; cross-check skipped\n";
      }
    }
    if (args.algo == "mp2" || args.algo == "rematch") {
      const std::size_t best = max_matching(graph).size();
      if (m.size() > best) throw CertificationError("constructive matching exceeds the maximum");
    }
  }

  const bool doc_on_stdout = args.to_stdout || args.out.empty();
  emit(doc_on_stdout ? std::string() : args.out, [&](std::ostream& o) { write_matching(o, m); });
  (doc_on_stdout ? std::cerr : std::cout) << "size " << m.size() << "\ndeficiency " << m.deficiency() << "\n";
  return kOk;
}

// ---------------------------------------------------------------- nt

struct NtArgs {
  std::string mode;
  std::uint64_t max = 0;
  std::uint64_t n = 0;
  std::uint64_t pmax = 0;
  unsigned amax = 0;
  std::string out;
};

constexpr std::uint64_t kScanLimit = 100'000'000;

int cmd_nt(const NtArgs& args) {
  std::ostringstream csv;
  std::ostringstream summary;
  if (args.mode == "tau-phi-scan") {
    if (args.max < 1 || args.max > kScanLimit) throw UsageError("--max must be in 1.." + std::to_string(kScanLimit));
    csv << "n,tau,phi,tau_less_than_phi\n";
    std::vector<std::uint64_t> failures;
    for (std::uint64_t n = 1; n <= args.max; ++n) {
      const auto f = nt::factorize(n);
      const auto t = nt::tau(f), p = nt::phi(f);
      csv << n << ',' << t << ',' << p << ',' << (t < p ? "true" : "false") << '\n';
      if (t >= p) failures.push_back(n);
    }
    summary << "failures:";
    for (std::size_t i = 0; i < failures.size(); ++i) summary << (i ? "," : " ") << failures[i];
    summary << '\n';
  } else if (args.mode == "antichain") {
    const bool single = args.n != 0;
    if (single == (args.max != 0)) throw UsageError("antichain mode needs exactly one of --n and --max");
    const std::uint64_t lo = single ? args.n : 1, hi = single ? args.n : args.max;
    if (hi > kScanLimit) throw UsageError("range too large");
    csv << "n,antichain,phi,alpha_lt_phi\n";
    for (std::uint64_t n = lo; n <= hi; ++n) {
      const auto a = nt::max_divisor_antichain(n);
      const auto p = nt::phi(n);
      csv << n << ',' << a.size << ',' << p << ',' << (a.size < p ? "true" : "false") << '\n';
      if (single) {
        summary << "antichain " << a.size << "\nwitness";
        for (std::size_t i = 0; i < a.witness.size(); ++i) summary << (i ? "," : " ") << a.witness[i];
        summary << '\n';
      }
    }
  } else {  // lemma
    if (args.pmax < 2 || args.amax < 1 || args.amax > 64) throw UsageError("lemma mode needs --pmax >= 2 and --amax in 1..64");
    csv << "p,a,value,a_plus_one,part1,part2\n";
    summary << "equality:";
    bool first = true;
    for (std::uint64_t p = 2; p <= args.pmax; ++p) {
      if (!nt::is_prime(p)) continue;
      for (unsigned a = 1; a <= args.amax; ++a) {
        const auto gap = nt::lemma_gap(p, a);
        csv << p << ',' << a << ',' << gap.value << ',' << gap.a_plus_one << ',' << to_string(gap.part1) << ','
            << to_string(gap.part2) << '\n';
        if (gap.part1 == nt::LemmaGap::Part1::equality || gap.part2 == nt::LemmaGap::Part2::equality) {
          summary << (first ? " " : ",") << '(' << p << ',' << a << ')';
          first = false;
        }
      }
    }
    summary << '\n';
  }
  emit(args.out, [&](std::ostream& o) { o << csv.str(); });
  std::cout << summary.str();
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::size_t cap = 64;
  std::size_t product_cap = 0;
  std::vector<std::string> checks;
  std::string report;
  std::size_t jobs = 1;
};

int cmd_verify(const VerifyArgs& args) {
  std::vector<CheckId> checks;
  for (const auto& name : args.checks) {
    auto id = check_id_from_string(name);
    if (!id) throw UsageError("unknown check '" + name + "'");
    checks.push_back(*id);
  }
  if (checks.empty()) checks = all_checks();

  SuiteOptions options;
  options.catalog_cap = args.cap;
  options.product_cap = args.product_cap ? args.product_cap : std::max<std::size_t>(args.cap, 8);
  options.jobs = std::max<std::size_t>(args.jobs, 1);
  const SuiteReport report = run_suite(default_catalog(args.cap), checks, options);
  print_report_table(std::cout, report);
  if (!args.report.empty()) emit(args.report, [&](std::ostream& o) { write_report(o, report); });
  return report.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power graph matchings of finite groups"};
  app.require_subcommand(1, 1);

  GroupArgs ga;
  auto* group = app.add_subcommand("group", "build a group and write its Cayley table");
  group->add_option("--kind", ga.kind, "construction")
      ->required()
      ->check(CLI::IsMember({"cyclic", "dihedral", "dicyclic", "elem2", "symmetric", "product", "perm"}));
  group->add_option("--n", ga.n, "order parameter for cyclic, dihedral, symmetric");
  group->add_option("--m", ga.m, "dicyclic parameter (order 4m)");
  group->add_option("--k", ga.k, "rank of (C2)^k");
  group->add_option("--a", ga.a, "first factor group file");
  group->add_option("--b", ga.b, "second factor group file");
  group->add_option("--gens", ga.gens, "generator in cycle notation, repeatable");
  group->add_option("--out", ga.out, "output group file");
  group->add_flag("--stdout", ga.to_stdout, "write the document to standard output");

  GraphArgs gra;
  auto* graph = app.add_subcommand("graph", "export a graph of a group");
  graph->add_option("--group", gra.group, "group file")->required();
  graph->add_option("--kind", gra.kind, "graph kind")->check(CLI::IsMember({"power", "enhanced", "commuting"}));
  graph->add_option("--format", gra.format, "edges or dot")->check(CLI::IsMember({"edges", "dot"}));
  graph->add_option("--out", gra.out, "output file");
  graph->add_flag("--stdout", gra.to_stdout, "write the document to standard output");

  MatchArgs ma;
  auto* match = app.add_subcommand("match", "compute a matching");
  match->add_option("--group", ma.group, "group file");
  match->add_option("--graph", ma.graph, "graph file");
  match->add_option("--graph-kind", ma.graph_kind, "graph built from --group")
      ->check(CLI::IsMember({"power", "enhanced", "commuting"}));
  match->add_option("--algo", ma.algo, "solver")
      ->check(CLI::IsMember({"blossom", "brute", "inverse-pairs", "mp2", "rematch"}));
  match->add_option("--matching", ma.matching, "input matching over the enhanced graph (rematch)");
  match->add_flag("--certify", ma.certify, "re-validate the result");
  match->add_option("--out", ma.out, "output matching file");
  match->add_flag("--stdout", ma.to_stdout, "write the document to standard output");

  NtArgs na;
  auto* ntc = app.add_subcommand("nt", "number theory tables");
  ntc->add_option("--mode", na.mode, "table")->required()->check(CLI::IsMember({"tau-phi-scan", "antichain", "lemma"}));
  ntc->add_option("--max", na.max, "upper end of the n range");
  ntc->add_option("--n", na.n, "single n (antichain)");
  ntc->add_option("--pmax", na.pmax, "largest prime (lemma)");
  ntc->add_option("--amax", na.amax, "largest exponent (lemma)");
  ntc->add_option("--out", na.out, "CSV file (default standard output)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the theorem checks over the catalog");
  verify->add_option("--cap", va.cap, "largest group order in the catalog");
  verify->add_option("--product-cap", va.product_cap, "largest product group built by the embedding checks");
  verify->add_option("--checks", va.checks, "check ids (comma separated)")->delimiter(',');
  verify->add_option("--report", va.report, "JSON report file");
  verify->add_option("--jobs", va.jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*group) return cmd_group(ga);
    if (*graph) return cmd_graph(gra);
    if (*match) return cmd_match(ma);
    if (*ntc) return cmd_nt(na);
    return cmd_verify(va);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const CertificationError& e) {
    std::cerr << "certification failed: " << e.what() << "\n";
    return kCertify;
  } catch (const InvariantViolation& e) {
    std::cerr << "certification failed: " << e.what() << "\n";
    return kCertify;
  }
}
