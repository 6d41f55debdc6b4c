// Command-line front end. Talks to the library only through domchain.h.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "domchain/domchain.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kComputation = 2, kVerification = 3 };

// Owns a char* handed out by the library.
struct LibString {
  char* text = nullptr;
  ~LibString() { dc_string_free(text); }
  LibString() = default;
  LibString(const LibString&) = delete;
  LibString& operator=(const LibString&) = delete;
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  ~Handle() { Free(ptr); }
  Handle() = default;
  Handle(Handle&& other) noexcept : ptr(std::exchange(other.ptr, nullptr)) {}
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
};

using GraphHandle = Handle<dc_graph, dc_graph_free>;
using ListHandle = Handle<dc_graph_list, dc_graph_list_free>;
using ReportHandle = Handle<dc_report, dc_report_free>;
using FamilyHandle = Handle<dc_family, dc_family_free>;
using CorpusHandle = Handle<dc_corpus, dc_corpus_free>;

// Thrown to leave a subcommand with a given exit code.
struct Stop {
  int code;
};

int exit_for(dc_status s) {
  return (s == DC_INVALID_ARGUMENT || s == DC_PARSE_ERROR) ? kUsage : kComputation;
}

void check(dc_status s, const std::string& context = "") {
  if (s == DC_OK) return;
  std::cerr << "domchain: " << (context.empty() ? "" : context + ": ") << dc_last_error()
            << "\n";
  throw Stop{exit_for(s)};
}

void emit(const LibString& s) { std::fputs(s.text, stdout); }

struct Common {
  std::string format = "json";
  int jobs = 0;
};

dc_format to_format(const std::string& name) {
  if (name == "csv") return DC_FORMAT_CSV;
  if (name == "table") return DC_FORMAT_TABLE;
  return DC_FORMAT_JSON;
}

void add_format(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
}

void add_jobs(CLI::App* cmd, Common& common) {
  cmd->add_option("--jobs", common.jobs, "Worker threads (0: all cores)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

struct Source {
  std::string name;  // "-" for standard input
  std::string text;
};

// The named files, or standard input when there are none.
std::vector<Source> read_sources(const std::vector<std::string>& files) {
  std::vector<Source> out;
  if (files.empty()) {
    std::string text((std::istreambuf_iterator<char>(std::cin)), {});
    out.push_back({"-", std::move(text)});
    return out;
  }
  for (const std::string& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "domchain: cannot open " << path << "\n";
      throw Stop{kUsage};
    }
    std::string text((std::istreambuf_iterator<char>(in)), {});
    out.push_back({path, std::move(text)});
  }
  return out;
}

dc_input_format input_format(const std::string& name) {
  if (name == "graph6") return DC_INPUT_GRAPH6;
  if (name == "edgelist") return DC_INPUT_EDGE_LIST;
  return DC_INPUT_AUTO;
}

struct Inputs {
  std::vector<std::string> files;
  std::string input = "auto";
  int capacity = 0;
};

void add_inputs(CLI::App* cmd, Inputs& in) {
  cmd->add_option("files", in.files, "Input files (standard input when omitted)");
  cmd->add_option("--input", in.input, "Input format")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}))
      ->capture_default_str();
  cmd->add_option("--capacity", in.capacity,
                  "Largest accepted order (default: DOMCHAIN_CAPACITY or 32)")
      ->check(CLI::Range(1, 62));
}

struct ReadSource {
  std::string name;
  ListHandle list;
};

std::vector<std::unique_ptr<ReadSource>> read_lists(const Inputs& in) {
  std::vector<std::unique_ptr<ReadSource>> out;
  for (Source& s : read_sources(in.files)) {
    auto r = std::make_unique<ReadSource>();
    r->name = s.name;
    check(dc_graph_list_read(s.text.data(), s.text.size(), input_format(in.input),
                             in.capacity, &r->list.ptr),
          s.name);
    out.push_back(std::move(r));
  }
  return out;
}

// "a..b" or a single number.
std::pair<int, int> parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    std::cerr << "domchain: bad range '" << text << "' (expected a..b)\n";
    throw Stop{kUsage};
  }
}

// Corpus from --labeled a..b or from input files.
struct CorpusInput {
  Inputs inputs;
  std::string labeled;
};

void add_corpus(CLI::App* cmd, CorpusInput& c) {
  add_inputs(cmd, c.inputs);
  cmd->add_option("--labeled", c.labeled,
                  "Use every labelled graph with order in the range a..b (b <= 7)")
      ->excludes("files");
}

// Builds one corpus handle; input files are concatenated into one list.
CorpusHandle load_corpus(const CorpusInput& c) {
  CorpusHandle corpus;
  if (!c.labeled.empty()) {
    const auto [lo, hi] = parse_range(c.labeled);
    check(dc_corpus_labeled(lo, hi, &corpus.ptr), "--labeled");
    return corpus;
  }
  std::string all;
  for (Source& s : read_sources(c.inputs.files)) all += s.text + "\n";
  ListHandle list;
  check(dc_graph_list_read(all.data(), all.size(), input_format(c.inputs.input),
                           c.inputs.capacity, &list.ptr));
  for (size_t k = 0; k < dc_graph_list_size(list.ptr); ++k) {
    size_t line = 0;
    const char* error = nullptr;
    check(dc_graph_list_entry(list.ptr, k, &line, nullptr, &error));
    if (error != nullptr) {
      std::cerr << "domchain: input entry " << line << ": " << error << "\n";
      throw Stop{kUsage};
    }
  }
  check(dc_corpus_from_list(list.ptr, &corpus.ptr));
  return corpus;
}

// ---- compute ----

struct ComputeArgs {
  Inputs inputs;
  Common common;
  std::string params;
  bool format_given = false;
};

int run_compute(ComputeArgs& a) {
  // A projection without an explicit format is meant for tabular tools.
  const std::string format = (!a.params.empty() && !a.format_given) ? "csv" : a.common.format;
  const dc_format fmt = to_format(format);
  const char* params = a.params.empty() ? nullptr : a.params.c_str();
  {
    LibString header;
    check(dc_report_header(params, fmt, &header.text), "--params");
    emit(header);
  }
  int code = kOk;
  for (const auto& src : read_lists(a.inputs)) {
    const size_t count = dc_graph_list_size(src->list.ptr);
    for (size_t k = 0; k < count; ++k) {
      size_t line = 0;
      const dc_graph* g = nullptr;
      const char* error = nullptr;
      check(dc_graph_list_entry(src->list.ptr, k, &line, &g, &error));
      const std::string where = src->name + ":" + std::to_string(line);
      std::string failure;
      ReportHandle report;
      if (error != nullptr) {
        failure = error;
      } else if (dc_report_compute(g, &report.ptr) != DC_OK) {
        failure = std::string("graph of order ") + std::to_string(dc_graph_order(g)) + ": " +
                  dc_last_error();
      }
      if (!failure.empty()) {
        code = kComputation;
        std::cerr << "domchain: " << where << ": " << failure << "\n";
        if (fmt == DC_FORMAT_JSON) {
          LibString record;
          check(dc_format_input_error(where.c_str(), failure.c_str(), &record.text));
          emit(record);
        }
        continue;
      }
      LibString row;
      check(dc_report_format(report.ptr, where.c_str(), params, fmt, &row.text));
      emit(row);
    }
  }
  return code;
}

// ---- gen ----

struct GenArgs {
  std::string spec;
  bool report = false;
  bool edge_list = false;
  Common common;
};

int run_gen(GenArgs& a) {
  GraphHandle g;
  check(dc_family_generate(a.spec.c_str(), &g.ptr));
  LibString text;
  check(a.edge_list ? dc_graph_to_edge_list(g.ptr, &text.text)
                    : dc_graph_to_graph6(g.ptr, &text.text));
  std::fputs(text.text, stdout);
  if (!a.edge_list) std::fputs("\n", stdout);
  if (a.report) {
    ReportHandle report;
    check(dc_report_compute(g.ptr, &report.ptr), a.spec);
    const dc_format fmt = to_format(a.common.format);
    LibString header;
    check(dc_report_header(nullptr, fmt, &header.text));
    emit(header);
    LibString row;
    check(dc_report_format(report.ptr, a.spec.c_str(), nullptr, fmt, &row.text));
    emit(row);
  }
  return kOk;
}

// ---- hfree ----

struct HfreeArgs {
  Inputs inputs;
  std::string family;
  Common common;
};

int run_hfree(HfreeArgs& a) {
  FamilyHandle fam;
  check(dc_family_parse(a.family.c_str(), &fam.ptr), "--family");
  const dc_format fmt = to_format(a.common.format);
  int code = kOk;
  bool header = true;
  for (const auto& src : read_lists(a.inputs)) {
    const size_t count = dc_graph_list_size(src->list.ptr);
    for (size_t k = 0; k < count; ++k) {
      size_t line = 0;
      const dc_graph* g = nullptr;
      const char* error = nullptr;
      check(dc_graph_list_entry(src->list.ptr, k, &line, &g, &error));
      const std::string where = src->name + ":" + std::to_string(line);
      if (error != nullptr) {
        code = kComputation;
        std::cerr << "domchain: " << where << ": " << error << "\n";
        continue;
      }
      LibString row;
      check(dc_hfree_check(g, fam.ptr, where.c_str(), fmt, header ? 1 : 0, nullptr, &row.text),
            where);
      header = false;
      emit(row);
    }
  }
  return code;
}

// ---- scan ----

struct ScanArgs {
  CorpusInput corpus;
  std::string family;
  std::string param;
  Common common;
};

int run_scan(ScanArgs& a) {
  FamilyHandle fam;
  check(dc_family_parse(a.family.c_str(), &fam.ptr), "--family");
  CorpusHandle corpus = load_corpus(a.corpus);
  LibString out;
  check(dc_scan(corpus.ptr, fam.ptr, a.param.c_str(), a.common.jobs,
                to_format(a.common.format), &out.text));
  emit(out);
  return kOk;
}

// ---- ramsey ----

struct RamseyArgs {
  Common common;
  int m = 3;
  int n = 3;
  int cap = 6;
  int side_cap = 5;
  int p = 2;
  int br = 0;
  int k = 3;
  bool all_graphs = false;
  bool skip_non_bipartite = false;
  CorpusInput corpus;
};

// ---- verify ----

struct VerifyArgs {
  Common common;
  std::string suites;
  int max_order = 0;
  std::string n_range = "2..6";
};

int run_verify(VerifyArgs& a) {
  dc_verify_options opts;
  dc_verify_options_init(&opts);
  opts.suites = a.suites.empty() ? nullptr : a.suites.c_str();
  opts.max_order = a.max_order;
  std::tie(opts.n_min, opts.n_max) = parse_range(a.n_range);
  opts.jobs = a.common.jobs;
  int passed = 0;
  LibString out;
  check(dc_verify(&opts, to_format(a.common.format), &passed, &out.text));
  emit(out);
  return passed ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact domination-chain parameters, graph families and Ramsey-type checks"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(dc_version()));

  ComputeArgs compute;
  auto* cmd_compute = app.add_subcommand("compute", "All nine parameters per input graph");
  add_inputs(cmd_compute, compute.inputs);
  add_format(cmd_compute, compute.common);
  cmd_compute->add_option("--params", compute.params,
                          "Comma-separated projection, e.g. gamma,IR (CSV unless --format)");

  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "Generate a family member");
  cmd_gen->add_option("spec", gen.spec, std::string("Family spec: ") + dc_family_grammar())
      ->required();
  cmd_gen->add_flag("--report", gen.report, "Also print the parameter report");
  cmd_gen->add_flag("--edge-list", gen.edge_list, "Emit an edge list instead of graph6");
  add_format(cmd_gen, gen.common);

  HfreeArgs hfree;
  auto* cmd_hfree = app.add_subcommand("hfree", "Check freeness from a forbidden family");
  cmd_hfree->add_option("--family", hfree.family,
                        "Members separated by ';' or spaces; BSVn^p for bistar variants")
      ->required();
  add_inputs(cmd_hfree, hfree.inputs);
  add_format(cmd_hfree, hfree.common);

  ScanArgs scan;
  auto* cmd_scan = app.add_subcommand("scan", "Per-order maxima over connected free graphs");
  cmd_scan->add_option("--family", scan.family, "Forbidden family")->required();
  cmd_scan->add_option("--param", scan.param, "Parameter name")->required();
  add_corpus(cmd_scan, scan.corpus);
  add_format(cmd_scan, scan.common);
  add_jobs(cmd_scan, scan.common);

  RamseyArgs ramsey;
  auto* cmd_ramsey = app.add_subcommand("ramsey", "Ramsey-type searches and audits");
  cmd_ramsey->require_subcommand(1, 1);
  cmd_ramsey->fallthrough();
  add_format(cmd_ramsey, ramsey.common);
  add_jobs(cmd_ramsey, ramsey.common);
  auto* r_classic = cmd_ramsey->add_subcommand("classic", "Smallest order forcing K_m or E_n");
  r_classic->add_option("--m", ramsey.m)->check(CLI::PositiveNumber)->capture_default_str();
  r_classic->add_option("--n", ramsey.n)->check(CLI::PositiveNumber)->capture_default_str();
  r_classic->add_option("--cap", ramsey.cap, "Largest order searched")
      ->check(CLI::Range(1, 32))
      ->capture_default_str();
  auto* r_bip = cmd_ramsey->add_subcommand("bipartite", "Bipartite Ramsey number BR(n)");
  r_bip->add_option("--n", ramsey.n)->check(CLI::PositiveNumber)->capture_default_str();
  r_bip->add_option("--side-cap", ramsey.side_cap, "Largest side searched")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* r_lemma = cmd_ramsey->add_subcommand(
      "lemma", "Every bistar variant with BR(n) leaves holds K_{n,n} or BS_n^p");
  r_lemma->add_option("--n", ramsey.n)->check(CLI::PositiveNumber)->capture_default_str();
  r_lemma->add_option("--p", ramsey.p)->check(CLI::Range(2, 32))->capture_default_str();
  r_lemma->add_option("--br", ramsey.br, "Leaves per side (default: search BR(n))")
      ->check(CLI::PositiveNumber);
  auto* r_zv = cmd_ramsey->add_subcommand(
      "zverovich", "i <= gamma(k-2) - (k-3) on bistar-variant-free graphs");
  r_zv->add_option("--k", ramsey.k)->check(CLI::Range(3, 32))->capture_default_str();
  r_zv->add_flag("--all", ramsey.all_graphs, "Include disconnected graphs");
  add_corpus(r_zv, ramsey.corpus);
  auto* r_konig = cmd_ramsey->add_subcommand("konig", "alpha + nu = |V| on bipartite graphs");
  r_konig->add_flag("--skip-non-bipartite", ramsey.skip_non_bipartite,
                    "Skip instead of rejecting non-bipartite graphs");
  add_corpus(r_konig, ramsey.corpus);
  auto* r_lozin = cmd_ramsey->add_subcommand(
      "lozin", "Lower bound on q(n) from {nK2, K_{n,n}}-free bipartite graphs");
  r_lozin->add_option("--n", ramsey.n)->check(CLI::PositiveNumber)->capture_default_str();
  add_corpus(r_lozin, ramsey.corpus);

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Run the claim verification suites");
  cmd_verify->add_option("--suite", verify.suites,
                         std::string("Comma-separated suites: ") + dc_verify_suite_names());
  cmd_verify->add_option("--max-order", verify.max_order, "Corpus order for exhaustive suites")
      ->check(CLI::Range(1, 7));
  cmd_verify->add_option("--n", verify.n_range, "Family sizes a..b for the oracle suite")
      ->capture_default_str();
  add_format(cmd_verify, verify.common);
  add_jobs(cmd_verify, verify.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  compute.format_given = cmd_compute->count("--format") > 0;

  try {
    if (*cmd_compute) return run_compute(compute);
    if (*cmd_gen) return run_gen(gen);
    if (*cmd_hfree) return run_hfree(hfree);
    if (*cmd_scan) return run_scan(scan);
    if (*cmd_verify) return run_verify(verify);
    if (*cmd_ramsey) {
      const dc_format fmt = to_format(ramsey.common.format);
      const int jobs = ramsey.common.jobs;
      LibString out;
      uint64_t violations = 0;
      if (*r_classic) {
        check(dc_ramsey_classic(ramsey.m, ramsey.n, ramsey.cap, jobs, fmt, &out.text));
      } else if (*r_bip) {
        check(dc_ramsey_bipartite(ramsey.n, ramsey.side_cap, jobs, fmt, &out.text));
      } else if (*r_lemma) {
        check(dc_ramsey_lemma(ramsey.n, ramsey.p, ramsey.br, jobs, fmt, &violations, &out.text));
      } else {
        CorpusHandle corpus = load_corpus(ramsey.corpus);
        if (*r_zv) {
          check(dc_ramsey_zverovich(corpus.ptr, ramsey.k, ramsey.all_graphs ? 0 : 1, jobs, fmt,
                                    &violations, &out.text));
        } else if (*r_konig) {
          check(dc_ramsey_konig(corpus.ptr, ramsey.skip_non_bipartite ? 1 : 0, jobs, fmt,
                                &violations, &out.text));
        } else {
          check(dc_ramsey_lozin(ramsey.n, corpus.ptr, jobs, fmt, &out.text));
        }
      }
      emit(out);
      return violations == 0 ? kOk : kVerification;
    }
  } catch (const Stop& stop) {
    std::fflush(stdout);
    return stop.code;
  }
  return kUsage;
}
