#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domchain/hfree.hpp"
#include "domchain/ramsey_lab.hpp"
#include "domchain/solvers.hpp"
#include "domchain/verify.hpp"

namespace domchain {

enum class OutputFormat { kJson, kCsv, kTable };

inline constexpr std::string_view kReportSchema = "domchain.report/1";

// Every serializer returns complete lines ending in '\n'. JSON output is one
// object per line; CSV and table output open with a header line when
// `header` is set.

// Parameter reports. An empty `params` selects all nine parameters (plus
// order and connectivity in CSV and table form); witnesses appear only in
// JSON.
std::string format_report(const ParameterReport& r, std::string_view source,
                          std::span<const Param> params, OutputFormat fmt);
std::string report_header(std::span<const Param> params, OutputFormat fmt);
std::string format_input_error(std::string_view source, std::string_view message);

std::string format_freeness(const FreenessResult& r, const ForbiddenFamily& fam,
                            std::string_view source, OutputFormat fmt, bool header);

std::string format_bound(const EmpiricalBound& b, OutputFormat fmt);
std::string format_scan(const ScanResult& s, OutputFormat fmt);
std::string format_lemma(const LemmaReport& r, OutputFormat fmt);
std::string format_zverovich(const ZverovichReport& r, OutputFormat fmt);
std::string format_konig(const KonigReport& r, OutputFormat fmt);
std::string format_verify(const VerifyReport& r, OutputFormat fmt);

// JSON array of vertex indices, e.g. "[0,2,5]".
std::string vertex_list(VertexSet s);

}  // namespace domchain
