#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "domchain/families.hpp"
#include "domchain/report.hpp"
#include "test_support.hpp"

using namespace domchain;
using testing_support::family;
using nlohmann::json;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(ReportTest, JsonCarriesEveryField) {
  const ParameterReport r = full_report(family("C5"));
  const std::string text = format_report(r, "c5.g6:1", {}, OutputFormat::kJson);
  ASSERT_EQ(text.back(), '\n');
  ASSERT_EQ(lines_of(text).size(), 1u);
  const json j = json::parse(text);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["source"], "c5.g6:1");
  EXPECT_EQ(j["order"], 5);
  EXPECT_EQ(j["connected"], true);
  for (Param p : kAllParams) {
    const std::string key(param_name(p));
    EXPECT_EQ(j[key], r.value(p)) << key;
    EXPECT_EQ(j["witnesses"][key].size(), static_cast<std::size_t>(r.value(p))) << key;
  }
  EXPECT_EQ(j["IS_vertex"], r.is_vertex);
  EXPECT_EQ(j["IRS_vertex"], r.irs_vertex);
}

TEST(ReportTest, JsonKeysKeepColumnOrder) {
  const std::string text =
      format_report(full_report(family("P3")), "x", {}, OutputFormat::kJson);
  std::size_t last = 0;
  for (const char* key : {"\"schema\"", "\"source\"", "\"order\"", "\"connected\"", "\"ir\"",
                          "\"gamma\"", "\"i\"", "\"alpha\"", "\"Gamma\"", "\"IR\"", "\"OIR\"",
                          "\"IS\"", "\"IRS\"", "\"witnesses\""}) {
    const std::size_t at = text.find(key);
    ASSERT_NE(at, std::string::npos) << key;
    EXPECT_GT(at, last) << key;
    last = at;
  }
}

TEST(ReportTest, JsonProjection) {
  const Param chosen[] = {Param::kGamma, Param::kIR};
  const json j = json::parse(
      format_report(full_report(family("CK3")), "s", chosen, OutputFormat::kJson));
  EXPECT_EQ(j["gamma"], 2);
  EXPECT_EQ(j["IR"], 3);
  EXPECT_FALSE(j.contains("alpha"));
}

TEST(ReportTest, CsvRows) {
  const ParameterReport r = full_report(family("C5"));
  EXPECT_EQ(report_header({}, OutputFormat::kCsv),
            "order,connected,ir,gamma,i,alpha,Gamma,IR,OIR,IS,IRS\n");
  EXPECT_EQ(format_report(r, "x", {}, OutputFormat::kCsv), "5,true,2,2,2,2,2,2,2,2,2\n");
  const Param chosen[] = {Param::kGamma, Param::kIR};
  EXPECT_EQ(report_header(chosen, OutputFormat::kCsv), "gamma,IR\n");
  EXPECT_EQ(format_report(r, "x", chosen, OutputFormat::kCsv), "2,2\n");
}

TEST(ReportTest, TableRowsAlignWithHeader) {
  const std::string header = report_header({}, OutputFormat::kTable);
  const std::string row =
      format_report(full_report(family("P4")), "some/file:12", {}, OutputFormat::kTable);
  const auto column_starts = [](const std::string& line) {
    std::vector<std::size_t> starts;
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (line[k] != ' ' && line[k] != '\n' && (k == 0 || line[k - 1] == ' ')) starts.push_back(k);
    }
    return starts;
  };
  EXPECT_EQ(column_starts(header), column_starts(row));
}

TEST(ReportTest, InputErrorRecord) {
  const json j = json::parse(format_input_error("g.g6:3", "bad \"byte\""));
  EXPECT_EQ(j["source"], "g.g6:3");
  EXPECT_EQ(j["error"], "bad \"byte\"");
  EXPECT_EQ(j["schema"], kReportSchema);
}

TEST(ReportTest, VertexList) {
  EXPECT_EQ(vertex_list(VertexSet::of({0, 2, 5})), "[0,2,5]");
  EXPECT_EQ(vertex_list(VertexSet()), "[]");
}

TEST(ReportTest, FreenessFormats) {
  const ForbiddenFamily fam = parse_forbidden_family("K3 P4");
  const FreenessResult r = is_family_free(family("P5"), fam);
  const json j = json::parse(format_freeness(r, fam, "x", OutputFormat::kJson, false));
  EXPECT_EQ(j["kind"], "hfree");
  EXPECT_EQ(j["free"], false);
  EXPECT_EQ(j["member"], "P4");
  EXPECT_EQ(j["witness"].size(), 4u);
  const auto csv = lines_of(format_freeness(r, fam, "x", OutputFormat::kCsv, true));
  ASSERT_EQ(csv.size(), 2u);
  EXPECT_EQ(csv[0], "source,family,free,member,witness");
  const auto free_csv = lines_of(format_freeness(is_family_free(family("C7"), parse_forbidden_family("K3")),
                                                 parse_forbidden_family("K3"), "y",
                                                 OutputFormat::kCsv, false));
  ASSERT_EQ(free_csv.size(), 1u);
  EXPECT_EQ(free_csv[0].substr(0, 10), "y,{K3},tru");
}

TEST(ReportTest, AuditFormatsAreOneJsonObjectPerLine) {
  const LabeledCorpus corpus(1, 4);
  const std::vector<std::string> outputs = {
      format_scan(bound_profile(corpus, parse_forbidden_family("K3"), Param::kAlpha),
                  OutputFormat::kJson),
      format_bound(ramsey_witness_search(3, 3, 6), OutputFormat::kJson),
      format_lemma(verify_lemma_bistar_reduction(1, 2, 1), OutputFormat::kJson),
      format_zverovich(zverovich_audit(corpus, 3), OutputFormat::kJson),
      format_konig(konig_audit(corpus, true), OutputFormat::kJson),
  };
  for (const std::string& text : outputs) {
    for (const std::string& line : lines_of(text)) {
      const json j = json::parse(line);
      EXPECT_EQ(j["schema"], kReportSchema);
      EXPECT_TRUE(j.contains("kind"));
    }
  }
  const json bound = json::parse(outputs[1]);
  EXPECT_EQ(bound["observed"], 6);
  EXPECT_EQ(bound["exact"], true);
  EXPECT_EQ(bound["counterexample"].get<std::string>().size(), 3u);
  const json scan = json::parse(outputs[0]);
  EXPECT_EQ(scan["orders"].size(), 4u);
  EXPECT_EQ(scan["orders"][3]["max"], 3);
}

TEST(ReportTest, CsvAuditFormatsHaveMatchingColumnCounts) {
  const LabeledCorpus corpus(1, 4);
  const auto fields = [](const std::string& line) {
    std::size_t count = 1;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') quoted = !quoted;
      if (c == ',' && !quoted) ++count;
    }
    return count;
  };
  for (const std::string& text :
       {format_scan(bound_profile(corpus, parse_forbidden_family("K3"), Param::kAlpha),
                    OutputFormat::kCsv),
        format_bound(ramsey_witness_search(3, 3, 6), OutputFormat::kCsv),
        format_lemma(verify_lemma_bistar_reduction(1, 2, 1), OutputFormat::kCsv),
        format_zverovich(zverovich_audit(corpus, 3), OutputFormat::kCsv),
        format_konig(konig_audit(corpus, true), OutputFormat::kCsv)}) {
    const auto rows = lines_of(text);
    ASSERT_GE(rows.size(), 2u);
    for (const std::string& row : rows) EXPECT_EQ(fields(row), fields(rows[0])) << row;
  }
}

TEST(ReportTest, VerifyFormats) {
  VerifyOptions options;
  options.suites = {"ramsey"};
  const VerifyReport r = run_verify(options);
  ASSERT_TRUE(r.passed());
  const json j = json::parse(format_verify(r, OutputFormat::kJson));
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["checks"].size(), r.checks.size());
  const auto table = lines_of(format_verify(r, OutputFormat::kTable));
  EXPECT_EQ(table.back(), std::to_string(r.checks.size()) + "/" +
                              std::to_string(r.checks.size()) + " claims passed");
}

TEST(ReportTest, OutputIsDeterministic) {
  const LabeledCorpus corpus(1, 5);
  SearchOptions one;
  one.jobs = 1;
  SearchOptions four;
  four.jobs = 4;
  const ForbiddenFamily fam = parse_forbidden_family("K1,2* K2* P4");
  EXPECT_EQ(format_scan(bound_profile(corpus, fam, Param::kGamma, one), OutputFormat::kJson),
            format_scan(bound_profile(corpus, fam, Param::kGamma, four), OutputFormat::kJson));
  EXPECT_EQ(format_bound(ramsey_witness_search(3, 3, 6, one), OutputFormat::kJson),
            format_bound(ramsey_witness_search(3, 3, 6, four), OutputFormat::kJson));
}

}  // namespace
