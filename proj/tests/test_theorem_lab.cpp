#include <gtest/gtest.h>

#include <sstream>

#include "powmatch/powmatch.hpp"

using namespace powmatch;

namespace {

CatalogEntry entry(const std::string& name, GroupTable g) { return make_entry(name, std::move(g)); }

}  // namespace

TEST(CheckIds, RoundTripNames) {
  for (CheckId id : kAllChecks) EXPECT_EQ(check_id_from_string(to_string(id)), id);
  EXPECT_FALSE(check_id_from_string("NOPE").has_value());
  EXPECT_EQ(all_checks().size(), 17U);
}

TEST(RunCheck, NilpotentFormulaOnC2xC4) {
  const auto r = run_check(CheckId::NILP, entry("C2xC4", direct_product(make_cyclic(2), make_cyclic(4))));
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.expected, "deficiency = 2");
  EXPECT_EQ(r.observed, "deficiency 2");
}

TEST(RunCheck, SmallMuOnD4) {
  const auto r = run_check(CheckId::SMALL_MU, entry("D4", make_dihedral(4)));
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.observed, "mu = 2");
}

TEST(RunCheck, EnhancedEqualityOnC6) {
  const auto r = run_check(CheckId::ENH_EQ, entry("C6", make_cyclic(6)));
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_NE(r.observed.find("mu(P) = 3, mu(Pe) = 3"), std::string::npos);
}

TEST(RunCheck, NotApplicableWhenHypothesisFails) {
  const auto c9 = entry("C9", make_cyclic(9));
  EXPECT_EQ(run_check(CheckId::LOWER_T, c9).verdict, Verdict::not_applicable);
  EXPECT_EQ(run_check(CheckId::TWO_GROUP, c9).verdict, Verdict::not_applicable);
  EXPECT_EQ(run_check(CheckId::ODD_ORDER, entry("C4", make_cyclic(4))).verdict, Verdict::not_applicable);
  EXPECT_EQ(run_check(CheckId::BOUND_8M4, entry("C2^3", make_elementary_abelian_2(3))).verdict,
            Verdict::not_applicable);
  EXPECT_EQ(run_check(CheckId::THREE_INV, entry("C2^2", make_elementary_abelian_2(2))).verdict,
            Verdict::not_applicable);
}

TEST(RunCheck, ThreeInvolutionsOnS3) {
  const auto r = run_check(CheckId::THREE_INV, entry("S3", make_symmetric(3)));
  EXPECT_EQ(r.verdict, Verdict::pass);
}

TEST(RunCheck, EmbeddingRespectsProductCap) {
  SuiteOptions tight;
  tight.product_cap = 8;
  const auto k = entry("C2^2", make_elementary_abelian_2(2));
  EXPECT_EQ(run_check(CheckId::EMBED_CP, k, tight).verdict, Verdict::not_applicable);
  const auto r = run_check(CheckId::EMBED_CP, k);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.detail, "s = 2, p = 3");
}

TEST(RunCheck, CommutingFactorialBound) {
  // |I| = 1 gives F(1) = 2, satisfied by every even order.
  const auto r = run_check(CheckId::COM_F, entry("Q8", make_dicyclic(2)));
  EXPECT_EQ(r.verdict, Verdict::pass);
  // S4 has 9 involutions; F(9) is astronomically larger than 24.
  EXPECT_EQ(run_check(CheckId::COM_F, entry("S4", make_symmetric(4))).verdict, Verdict::not_applicable);
}

TEST(RunSuite, OddOrderOnC9) {
  const auto report = run_suite({entry("C9", make_cyclic(9))}, {CheckId::ODD_ORDER});
  ASSERT_EQ(report.results.size(), 1U);
  EXPECT_EQ(report.results[0].verdict, Verdict::pass);
  EXPECT_EQ(report.results[0].observed, "mu(P) = 4");
}

TEST(RunSuite, EmptyCatalog) {
  const auto report = run_suite({}, all_checks());
  EXPECT_TRUE(report.results.empty());
  EXPECT_EQ(report.summary.total, 0U);
  EXPECT_EQ(report.summary.passed, 0U);
  EXPECT_EQ(report.summary.failed, 0U);
  EXPECT_EQ(report.summary.not_applicable, 0U);
}

TEST(RunSuite, DefaultCatalogHasNoFailures) {
  SuiteOptions options;
  const auto report = run_suite(default_catalog(64), all_checks(), options);
  for (const auto& r : report.results)
    EXPECT_NE(r.verdict, Verdict::fail) << to_string(r.check_id) << " " << r.group_name << ": " << r.detail;
  EXPECT_EQ(report.summary.total, report.results.size());
  EXPECT_EQ(report.summary.passed + report.summary.failed + report.summary.not_applicable, report.summary.total);
}

TEST(RunSuite, ReportIsDeterministicAcrossJobCounts) {
  SuiteOptions one, four;
  four.jobs = 4;
  const auto cat = default_catalog(32);
  std::ostringstream a, b;
  write_report(a, run_suite(cat, all_checks(), one));
  write_report(b, run_suite(cat, all_checks(), four));
  EXPECT_EQ(a.str(), b.str());
  const auto doc = nlohmann::json::parse(a.str());
  EXPECT_EQ(doc["suite_version"], kSuiteVersion);
  EXPECT_EQ(doc["catalog_cap"], 64);
  EXPECT_TRUE(doc["results"].is_array());
  EXPECT_EQ(doc["summary"]["fail"], 0);
}

TEST(RunSuite, ResultsOrderedByEntryThenCheck) {
  const auto report = run_suite(default_catalog(4), {CheckId::EPPO_EQ, CheckId::ODD_ORDER});
  ASSERT_EQ(report.results.size(), 2 * default_catalog(4).size());
  EXPECT_EQ(report.results[0].group_name, "C1");
  EXPECT_EQ(report.results[0].check_id, CheckId::ODD_ORDER);
  EXPECT_EQ(report.results[1].check_id, CheckId::EPPO_EQ);
}

TEST(Report, TableListsEveryResult) {
  const auto report = run_suite(default_catalog(4), all_checks());
  std::ostringstream out;
  print_report_table(out, report);
  std::size_t lines = 0;
  for (char c : out.str()) lines += c == '\n';
  EXPECT_EQ(lines, report.results.size() + 2);
}
