#include "domchain/domchain.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "domchain/corpus.hpp"
#include "domchain/error.hpp"
#include "domchain/families.hpp"
#include "domchain/graph_io.hpp"
#include "domchain/hfree.hpp"
#include "domchain/ramsey_lab.hpp"
#include "domchain/report.hpp"
#include "domchain/solvers.hpp"
#include "domchain/verify.hpp"

using namespace domchain;

struct dc_graph {
  Graph graph;
};

struct dc_graph_list {
  std::vector<ReadItem> items;
  std::vector<std::unique_ptr<dc_graph>> graphs;  // parallel to items
};

struct dc_report {
  ParameterReport report;
};

struct dc_family {
  ForbiddenFamily family;
};

struct dc_corpus {
  std::unique_ptr<Corpus> corpus;
};

namespace {

thread_local std::string last_error;
thread_local long long last_offset = -1;

dc_status fail(dc_status status, const std::string& message, long long offset = -1) {
  last_error = message;
  last_offset = offset;
  return status;
}

template <class F>
dc_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    last_offset = -1;
    return DC_OK;
  } catch (const ParseError& e) {
    return fail(DC_PARSE_ERROR, e.what(), static_cast<long long>(e.offset()));
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kInvalidArgument: return fail(DC_INVALID_ARGUMENT, e.what());
      case ErrorCode::kParse: return fail(DC_PARSE_ERROR, e.what());
      case ErrorCode::kCapacity: return fail(DC_CAPACITY_ERROR, e.what());
      case ErrorCode::kPrecondition: return fail(DC_PRECONDITION_ERROR, e.what());
    }
    return fail(DC_INTERNAL_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DC_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(DC_INTERNAL_ERROR, e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " is NULL");
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

OutputFormat to_format(dc_format f) {
  switch (f) {
    case DC_FORMAT_JSON: return OutputFormat::kJson;
    case DC_FORMAT_CSV: return OutputFormat::kCsv;
    case DC_FORMAT_TABLE: return OutputFormat::kTable;
  }
  throw InvalidArgument("unknown output format");
}

int capacity_or_default(int capacity) {
  return capacity == 0 ? default_capacity() : capacity;
}

Param param_or_throw(const char* name) {
  require(name, "parameter name");
  const auto p = parse_param(name);
  if (!p) throw InvalidArgument(std::string("unknown parameter '") + name + "'");
  return *p;
}

std::vector<Param> param_list(const char* text) {
  std::vector<Param> out;
  if (text == nullptr) return out;
  std::string_view rest(text);
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string name(rest.substr(0, comma));
    if (!name.empty()) out.push_back(param_or_throw(name.c_str()));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<std::string> split_commas(const char* text) {
  std::vector<std::string> out;
  if (text == nullptr) return out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

SearchOptions search_options(int jobs) {
  SearchOptions opts;
  opts.jobs = jobs;
  return opts;
}

}  // namespace

extern "C" {

const char* dc_version(void) { return "0.1.0"; }
const char* dc_last_error(void) { return last_error.c_str(); }
long long dc_last_error_offset(void) { return last_offset; }
void dc_string_free(char* s) { std::free(s); }
int dc_default_capacity(void) { return default_capacity(); }

dc_status dc_graph_parse_graph6(const char* text, int capacity, dc_graph** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new dc_graph{parse_graph6(text, capacity_or_default(capacity))};
  });
}

dc_status dc_graph_parse_edge_list(const char* text, int capacity, dc_graph** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new dc_graph{parse_edge_list(text, capacity_or_default(capacity))};
  });
}

dc_status dc_graph_from_edges(int order, const int* pairs, size_t edge_count,
                              dc_graph** out) {
  return guard([&] {
    require(out, "out");
    if (edge_count > 0) require(pairs, "pairs");
    std::vector<std::pair<int, int>> edges;
    for (size_t k = 0; k < edge_count; ++k) edges.emplace_back(pairs[2 * k], pairs[2 * k + 1]);
    *out = new dc_graph{Graph::from_edges(order, edges)};
  });
}

void dc_graph_free(dc_graph* g) { delete g; }

int dc_graph_order(const dc_graph* g) { return g == nullptr ? -1 : g->graph.order(); }

int dc_graph_adjacent(const dc_graph* g, int u, int v) {
  if (g == nullptr || u < 0 || v < 0 || u >= g->graph.order() || v >= g->graph.order()) {
    return 0;
  }
  return g->graph.adjacent(u, v) ? 1 : 0;
}

dc_status dc_graph_to_graph6(const dc_graph* g, char** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_out(emit_graph6(g->graph));
  });
}

dc_status dc_graph_to_edge_list(const dc_graph* g, char** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_out(emit_edge_list(g->graph));
  });
}

dc_status dc_graph_list_read(const char* text, size_t length, dc_input_format format,
                             int capacity, dc_graph_list** out) {
  return guard([&] {
    require(out, "out");
    if (length > 0) require(text, "text");
    InputFormat f = InputFormat::kAuto;
    if (format == DC_INPUT_GRAPH6) f = InputFormat::kGraph6;
    if (format == DC_INPUT_EDGE_LIST) f = InputFormat::kEdgeList;
    std::istringstream in(std::string(text == nullptr ? "" : text, length));
    auto list = std::make_unique<dc_graph_list>();
    list->items = read_graphs(in, f, capacity_or_default(capacity));
    for (const ReadItem& item : list->items) {
      list->graphs.push_back(item.graph ? std::make_unique<dc_graph>(dc_graph{*item.graph})
                                        : nullptr);
    }
    *out = list.release();
  });
}

size_t dc_graph_list_size(const dc_graph_list* list) {
  return list == nullptr ? 0 : list->items.size();
}

dc_status dc_graph_list_entry(const dc_graph_list* list, size_t index, size_t* line,
                              const dc_graph** graph, const char** error) {
  return guard([&] {
    require(list, "list");
    if (index >= list->items.size()) throw InvalidArgument("list index out of range");
    const ReadItem& item = list->items[index];
    if (line != nullptr) *line = item.line;
    if (graph != nullptr) *graph = list->graphs[index].get();
    if (error != nullptr) *error = item.graph ? nullptr : item.error.c_str();
  });
}

void dc_graph_list_free(dc_graph_list* list) { delete list; }

dc_status dc_compute(const dc_graph* g, const char* param, int* value, uint64_t* witness) {
  return guard([&] {
    require(g, "graph");
    require(value, "value");
    const Solution s = compute(g->graph, param_or_throw(param));
    *value = s.value;
    if (witness != nullptr) *witness = s.witness.mask();
  });
}

dc_status dc_report_compute(const dc_graph* g, dc_report** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = new dc_report{full_report(g->graph)};
  });
}

dc_status dc_report_value(const dc_report* r, const char* param, int* value) {
  return guard([&] {
    require(r, "report");
    require(value, "value");
    *value = r->report.value(param_or_throw(param));
  });
}

dc_status dc_report_format(const dc_report* r, const char* source, const char* params,
                           dc_format format, char** out) {
  return guard([&] {
    require(r, "report");
    require(out, "out");
    const std::vector<Param> shown = param_list(params);
    *out = copy_out(format_report(r->report, source == nullptr ? "" : source, shown,
                                  to_format(format)));
  });
}

dc_status dc_report_header(const char* params, dc_format format, char** out) {
  return guard([&] {
    require(out, "out");
    *out = copy_out(report_header(param_list(params), to_format(format)));
  });
}

void dc_report_free(dc_report* r) { delete r; }

dc_status dc_format_input_error(const char* source, const char* message, char** out) {
  return guard([&] {
    require(out, "out");
    *out = copy_out(format_input_error(source == nullptr ? "" : source,
                                       message == nullptr ? "" : message));
  });
}

const char* dc_family_grammar(void) {
  static const std::string grammar(kFamilyGrammar);
  return grammar.c_str();
}

dc_status dc_family_generate(const char* spec, dc_graph** out) {
  return guard([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new dc_graph{generate(parse_family_spec(spec))};
  });
}

dc_status dc_family_parse(const char* text, dc_family** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new dc_family{parse_forbidden_family(text)};
  });
}

void dc_family_free(dc_family* f) { delete f; }

dc_status dc_hfree_check(const dc_graph* g, const dc_family* f, const char* source,
                         dc_format format, int header, int* is_free, char** out) {
  return guard([&] {
    require(g, "graph");
    require(f, "family");
    const FreenessResult r = is_family_free(g->graph, f->family);
    if (is_free != nullptr) *is_free = r.free ? 1 : 0;
    if (out != nullptr) {
      *out = copy_out(format_freeness(r, f->family, source == nullptr ? "" : source,
                                      to_format(format), header != 0));
    }
  });
}

dc_status dc_corpus_labeled(int min_order, int max_order, dc_corpus** out) {
  return guard([&] {
    require(out, "out");
    *out = new dc_corpus{std::make_unique<LabeledCorpus>(min_order, max_order)};
  });
}

dc_status dc_corpus_from_list(const dc_graph_list* list, dc_corpus** out) {
  return guard([&] {
    require(list, "list");
    require(out, "out");
    std::vector<Graph> graphs;
    for (const ReadItem& item : list->items) {
      if (item.graph) graphs.push_back(*item.graph);
    }
    *out = new dc_corpus{std::make_unique<GraphListCorpus>(std::move(graphs), "input")};
  });
}

uint64_t dc_corpus_size(const dc_corpus* c) { return c == nullptr ? 0 : c->corpus->size(); }

void dc_corpus_free(dc_corpus* c) { delete c; }

dc_status dc_scan(const dc_corpus* c, const dc_family* f, const char* param, int jobs,
                  dc_format format, char** out) {
  return guard([&] {
    require(c, "corpus");
    require(f, "family");
    require(out, "out");
    const ScanResult s =
        bound_profile(*c->corpus, f->family, param_or_throw(param), search_options(jobs));
    *out = copy_out(format_scan(s, to_format(format)));
  });
}

dc_status dc_ramsey_classic(int m, int n, int order_cap, int jobs, dc_format format,
                            char** out) {
  return guard([&] {
    require(out, "out");
    *out = copy_out(format_bound(ramsey_witness_search(m, n, order_cap, search_options(jobs)),
                                 to_format(format)));
  });
}

dc_status dc_ramsey_bipartite(int n, int side_cap, int jobs, dc_format format, char** out) {
  return guard([&] {
    require(out, "out");
    *out = copy_out(format_bound(bipartite_ramsey_search(n, side_cap, search_options(jobs)),
                                 to_format(format)));
  });
}

dc_status dc_ramsey_lemma(int n, int p, int br, int jobs, dc_format format,
                          uint64_t* violations, char** out) {
  return guard([&] {
    require(out, "out");
    const SearchOptions opts = search_options(jobs);
    if (br <= 0) {
      const EmpiricalBound b = bipartite_ramsey_search(n, kBipartiteExhaustiveSide, opts);
      if (!b.exact) {
        throw CapacityError("BR(" + std::to_string(n) + ") is not decided within side " +
                            std::to_string(kBipartiteExhaustiveSide));
      }
      br = b.observed;
    }
    const LemmaReport r = verify_lemma_bistar_reduction(n, p, br, opts);
    if (violations != nullptr) *violations = r.violations;
    *out = copy_out(format_lemma(r, to_format(format)));
  });
}

dc_status dc_ramsey_zverovich(const dc_corpus* c, int k, int connected_only, int jobs,
                              dc_format format, uint64_t* violations, char** out) {
  return guard([&] {
    require(c, "corpus");
    require(out, "out");
    const ZverovichReport r =
        zverovich_audit(*c->corpus, k, CorpusFilter{connected_only != 0}, search_options(jobs));
    if (violations != nullptr) *violations = r.violations;
    *out = copy_out(format_zverovich(r, to_format(format)));
  });
}

dc_status dc_ramsey_konig(const dc_corpus* c, int skip_non_bipartite, int jobs,
                          dc_format format, uint64_t* violations, char** out) {
  return guard([&] {
    require(c, "corpus");
    require(out, "out");
    const KonigReport r =
        konig_audit(*c->corpus, skip_non_bipartite != 0, {}, search_options(jobs));
    if (violations != nullptr) *violations = r.violations;
    *out = copy_out(format_konig(r, to_format(format)));
  });
}

dc_status dc_ramsey_lozin(int n, const dc_corpus* c, int jobs, dc_format format,
                          char** out) {
  return guard([&] {
    require(c, "corpus");
    require(out, "out");
    *out = copy_out(
        format_bound(lozin_q_profile(n, *c->corpus, search_options(jobs)), to_format(format)));
  });
}

void dc_verify_options_init(dc_verify_options* opts) {
  if (opts == nullptr) return;
  opts->suites = nullptr;
  opts->max_order = 0;
  opts->n_min = 2;
  opts->n_max = 6;
  opts->jobs = 0;
}

const char* dc_verify_suite_names(void) {
  static const std::string names = [] {
    std::string out;
    for (std::string_view s : kVerifySuites) out += (out.empty() ? "" : ",") + std::string(s);
    return out;
  }();
  return names.c_str();
}

dc_status dc_verify(const dc_verify_options* opts, dc_format format, int* passed,
                    char** out) {
  return guard([&] {
    require(opts, "options");
    require(out, "out");
    VerifyOptions o;
    o.suites = split_commas(opts->suites);
    if (opts->max_order > 0) o.max_order = opts->max_order;
    o.n_min = opts->n_min;
    o.n_max = opts->n_max;
    o.jobs = opts->jobs;
    const VerifyReport r = run_verify(o);
    if (passed != nullptr) *passed = r.passed() ? 1 : 0;
    *out = copy_out(format_verify(r, to_format(format)));
  });
}

}  // extern "C"
