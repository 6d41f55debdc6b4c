#include "domchain/report.hpp"

#include <algorithm>
#include <json.hpp>

#include "domchain/graph_io.hpp"

namespace domchain {

using Json = nlohmann::ordered_json;

namespace {

std::string line(const Json& j) { return j.dump() + "\n"; }

std::string csv_cell(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k > 0) out += ',';
    out += csv_cell(cells[k]);
  }
  return out + "\n";
}

// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string text;
    for (std::size_t c = 0; c < row.size(); ++c) {
      text += row[c];
      if (c + 1 < row.size()) text += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += text + "\n";
  }
  return out;
}

// Report rows are printed one graph at a time, so the table columns have
// fixed widths: 16 for the source, 9 for the rest.
std::string fixed_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const std::size_t width = c == 0 ? 16 : 9;
    out += cells[c];
    if (c + 1 < cells.size()) out += std::string(cells[c].size() < width ? width - cells[c].size() + 1 : 1, ' ');
  }
  return out + "\n";
}

Json base(std::string_view kind) {
  Json j;
  j["schema"] = kReportSchema;
  j["kind"] = kind;
  return j;
}

std::vector<Param> selected(std::span<const Param> params) {
  if (params.empty()) return {kAllParams.begin(), kAllParams.end()};
  return {params.begin(), params.end()};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string optional_graph6(const std::optional<Graph>& g) {
  return g ? emit_graph6(*g) : "";
}

std::string pattern_text(const std::vector<Mask>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out += '/';
    for (std::size_t j = 0; j < rows.size(); ++j) out += ((rows[i] >> j) & 1U) ? '1' : '0';
  }
  return out;
}

std::string joined(const std::vector<int>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    out += (k > 0 ? "," : "") + std::to_string(values[k]);
  }
  return out;
}

}  // namespace

std::string vertex_list(VertexSet s) { return Json(s.to_vector()).dump(); }

std::string report_header(std::span<const Param> params, OutputFormat fmt) {
  std::vector<std::string> cells;
  if (fmt == OutputFormat::kTable) cells.push_back("source");
  if (params.empty()) {
    cells.push_back("order");
    cells.push_back("connected");
  }
  for (Param p : selected(params)) cells.emplace_back(param_name(p));
  if (fmt == OutputFormat::kCsv) return csv_row(cells);
  if (fmt == OutputFormat::kTable) return fixed_row(cells);
  return "";
}

std::string format_report(const ParameterReport& r, std::string_view source,
                          std::span<const Param> params, OutputFormat fmt) {
  const std::vector<Param> shown = selected(params);
  if (fmt == OutputFormat::kJson) {
    Json j;
    j["schema"] = kReportSchema;
    j["source"] = source;
    j["order"] = r.order;
    j["connected"] = r.connected;
    for (Param p : shown) j[std::string(param_name(p))] = r.value(p);
    if (std::find(shown.begin(), shown.end(), Param::kIS) != shown.end()) {
      j["IS_vertex"] = r.is_vertex;
    }
    if (std::find(shown.begin(), shown.end(), Param::kIRS) != shown.end()) {
      j["IRS_vertex"] = r.irs_vertex;
    }
    Json w = Json::object();
    for (Param p : shown) w[std::string(param_name(p))] = r.witness(p).to_vector();
    j["witnesses"] = std::move(w);
    return line(j);
  }
  std::vector<std::string> cells;
  if (fmt == OutputFormat::kTable) cells.emplace_back(source);
  if (params.empty()) {
    cells.push_back(std::to_string(r.order));
    cells.push_back(yes_no(r.connected));
  }
  for (Param p : shown) cells.push_back(std::to_string(r.value(p)));
  if (fmt == OutputFormat::kCsv) return csv_row(cells);
  return fixed_row(cells);
}

std::string format_input_error(std::string_view source, std::string_view message) {
  Json j;
  j["schema"] = kReportSchema;
  j["source"] = source;
  j["error"] = message;
  return line(j);
}

std::string format_freeness(const FreenessResult& r, const ForbiddenFamily& fam,
                            std::string_view source, OutputFormat fmt, bool header) {
  const std::string member = r.free ? "" : fam.members()[r.member_index].label;
  if (fmt == OutputFormat::kJson) {
    Json j = base("hfree");
    j["source"] = source;
    j["family"] = fam.label();
    j["free"] = r.free;
    if (!r.free) {
      j["member"] = member;
      j["witness"] = r.witness.to_vector();
    }
    return line(j);
  }
  const std::vector<std::string> cells = {std::string(source), fam.label(), yes_no(r.free),
                                          member, r.free ? "" : to_string(r.witness)};
  if (fmt == OutputFormat::kCsv) {
    return (header ? csv_row({"source", "family", "free", "member", "witness"}) : "") +
           csv_row(cells);
  }
  std::vector<std::vector<std::string>> rows;
  if (header) rows.push_back({"source", "family", "free", "member", "witness"});
  rows.push_back(cells);
  return table(rows);
}

std::string format_bound(const EmpiricalBound& b, OutputFormat fmt) {
  const std::string ce = optional_graph6(b.counterexample);
  const std::string pattern = pattern_text(b.counterexample_pattern);
  if (fmt == OutputFormat::kJson) {
    Json j = base("bound");
    j["symbol"] = b.symbol;
    j["params"] = b.params;
    j["observed"] = b.observed;
    j["exact"] = b.exact;
    j["candidates_checked"] = b.candidates_checked;
    if (b.counterexample) j["counterexample"] = ce;
    if (!b.counterexample_pattern.empty()) j["counterexample_pattern"] = pattern;
    return line(j);
  }
  const std::vector<std::string> head = {"symbol", "params", "observed", "exact",
                                         "candidates_checked", "counterexample",
                                         "counterexample_pattern"};
  const std::vector<std::string> cells = {b.symbol, joined(b.params),
                                          std::to_string(b.observed), yes_no(b.exact),
                                          std::to_string(b.candidates_checked), ce, pattern};
  if (fmt == OutputFormat::kCsv) return csv_row(head) + csv_row(cells);
  return table({head, cells});
}

std::string format_scan(const ScanResult& s, OutputFormat fmt) {
  const std::string param(param_name(s.param));
  if (fmt == OutputFormat::kJson) {
    Json j = base("scan");
    j["family"] = s.family;
    j["param"] = param;
    j["graphs_seen"] = s.graphs_seen;
    j["flat_tail"] = s.flat_tail();
    Json orders = Json::array();
    for (const auto& [order, stats] : s.per_order) {
      Json o;
      o["order"] = order;
      o["qualifying"] = stats.qualifying;
      o["max"] = stats.max;
      o["cumulative_max"] = *s.cumulative_max(order);
      o["witness"] = stats.witness_graph6;
      orders.push_back(std::move(o));
    }
    j["orders"] = std::move(orders);
    return line(j);
  }
  std::vector<std::vector<std::string>> rows = {
      {"family", "param", "order", "qualifying", "max", "cumulative_max", "witness"}};
  for (const auto& [order, stats] : s.per_order) {
    rows.push_back({s.family, param, std::to_string(order), std::to_string(stats.qualifying),
                    std::to_string(stats.max), std::to_string(*s.cumulative_max(order)),
                    stats.witness_graph6});
  }
  if (fmt == OutputFormat::kTable) return table(rows);
  std::string out;
  for (const auto& row : rows) out += csv_row(row);
  return out;
}

std::string format_lemma(const LemmaReport& r, OutputFormat fmt) {
  const std::string first = optional_graph6(r.first_violation);
  if (fmt == OutputFormat::kJson) {
    Json j = base("lemma");
    j["n"] = r.n;
    j["p"] = r.p;
    j["br"] = r.br;
    j["members_checked"] = r.members_checked;
    j["via_complete_bipartite"] = r.via_complete_bipartite;
    j["via_bistar"] = r.via_bistar;
    j["violations"] = r.violations;
    if (r.first_violation) {
      j["first_violation_pattern"] = *r.first_violation_pattern;
      j["first_violation"] = first;
    }
    return line(j);
  }
  const std::vector<std::string> head = {"n", "p", "br", "members_checked",
                                         "via_complete_bipartite", "via_bistar",
                                         "violations", "first_violation"};
  const std::vector<std::string> cells = {
      std::to_string(r.n), std::to_string(r.p), std::to_string(r.br),
      std::to_string(r.members_checked), std::to_string(r.via_complete_bipartite),
      std::to_string(r.via_bistar), std::to_string(r.violations), first};
  if (fmt == OutputFormat::kCsv) return csv_row(head) + csv_row(cells);
  return table({head, cells});
}

std::string format_zverovich(const ZverovichReport& r, OutputFormat fmt) {
  const std::string first = optional_graph6(r.first_violation);
  if (fmt == OutputFormat::kJson) {
    Json j = base("zverovich");
    j["k"] = r.k;
    j["graphs_seen"] = r.graphs_seen;
    j["graphs_checked"] = r.graphs_checked;
    j["tight"] = r.tight;
    j["violations"] = r.violations;
    Json profile = Json::array();
    for (const auto& [gamma, i] : r.max_i_by_gamma) {
      profile.push_back({{"gamma", gamma}, {"max_i", i}});
    }
    j["max_i_by_gamma"] = std::move(profile);
    if (r.first_violation) {
      j["first_violation_index"] = *r.first_violation_index;
      j["first_violation"] = first;
    }
    return line(j);
  }
  std::string profile;
  for (const auto& [gamma, i] : r.max_i_by_gamma) {
    profile += (profile.empty() ? "" : " ") + std::to_string(gamma) + ":" + std::to_string(i);
  }
  const std::vector<std::string> head = {"k", "graphs_seen", "graphs_checked", "tight",
                                         "violations", "max_i_by_gamma", "first_violation"};
  const std::vector<std::string> cells = {
      std::to_string(r.k), std::to_string(r.graphs_seen), std::to_string(r.graphs_checked),
      std::to_string(r.tight), std::to_string(r.violations), profile, first};
  if (fmt == OutputFormat::kCsv) return csv_row(head) + csv_row(cells);
  return table({head, cells});
}

std::string format_konig(const KonigReport& r, OutputFormat fmt) {
  const std::string first = optional_graph6(r.first_violation);
  if (fmt == OutputFormat::kJson) {
    Json j = base("konig");
    j["graphs_seen"] = r.graphs_seen;
    j["bipartite_checked"] = r.bipartite_checked;
    j["skipped_non_bipartite"] = r.skipped_non_bipartite;
    j["violations"] = r.violations;
    if (r.first_violation) {
      j["first_violation_index"] = *r.first_violation_index;
      j["first_violation"] = first;
    }
    return line(j);
  }
  const std::vector<std::string> head = {"graphs_seen", "bipartite_checked",
                                         "skipped_non_bipartite", "violations",
                                         "first_violation"};
  const std::vector<std::string> cells = {
      std::to_string(r.graphs_seen), std::to_string(r.bipartite_checked),
      std::to_string(r.skipped_non_bipartite), std::to_string(r.violations), first};
  if (fmt == OutputFormat::kCsv) return csv_row(head) + csv_row(cells);
  return table({head, cells});
}

std::string format_verify(const VerifyReport& r, OutputFormat fmt) {
  if (fmt == OutputFormat::kJson) {
    Json j = base("verify");
    j["passed"] = r.passed();
    Json checks = Json::array();
    for (const ClaimCheck& c : r.checks) {
      checks.push_back({{"suite", c.suite},
                        {"claim", c.id},
                        {"source", c.source},
                        {"passed", c.passed},
                        {"detail", c.detail}});
    }
    j["checks"] = std::move(checks);
    return line(j);
  }
  if (fmt == OutputFormat::kCsv) {
    std::string out = csv_row({"suite", "claim", "source", "passed", "detail"});
    for (const ClaimCheck& c : r.checks) {
      out += csv_row({c.suite, c.id, c.source, yes_no(c.passed), c.detail});
    }
    return out;
  }
  std::vector<std::vector<std::string>> rows;
  std::size_t passed = 0;
  for (const ClaimCheck& c : r.checks) {
    passed += c.passed ? 1 : 0;
    rows.push_back({c.passed ? "PASS" : "FAIL", c.suite, c.id, "[" + c.source + "]", c.detail});
  }
  return table(rows) + std::to_string(passed) + "/" + std::to_string(r.checks.size()) +
         " claims passed\n";
}

}  // namespace domchain
