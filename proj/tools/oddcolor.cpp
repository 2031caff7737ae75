// oddcolor: command-line front end. Exit codes: 0 ok, 1 negative verdict,
// 2 input error.
#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddcolor/cnf.hpp"
#include "oddcolor/coloring.hpp"
#include "oddcolor/discharging.hpp"
#include "oddcolor/formats.hpp"
#include "oddcolor/generators.hpp"
#include "oddcolor/reducer.hpp"
#include "oddcolor/solver.hpp"

using namespace oddcolor;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kNegative = 1, kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << data;
}

// One decoded record of an input stream; `error` set when it failed to parse.
struct Record {
  std::size_t index = 0;
  Graph graph;
  std::optional<PlaneGraph> plane;
  std::optional<std::string> error;
};

// Decodes a planar_code or graph6 stream. Bad records are kept as errors so
// that scans can skip them; a missing header or truncation ends the stream.
std::vector<Record> read_records(const std::string& bytes) {
  std::vector<Record> out;
  if (looks_like_planar_code(bytes)) {
    std::istringstream in(bytes);
    PlanarCodeReader reader(in);
    while (true) {
      Record r;
      r.index = out.size();
      try {
        auto p = reader.next();
        if (!p) break;
        r.graph = p->graph();
        r.plane = std::move(*p);
      } catch (const FormatError& e) {
        r.error = e.what();
        out.push_back(std::move(r));
        if (in.eof()) break;
        continue;
      }
      out.push_back(std::move(r));
    }
    return out;
  }
  std::size_t start = 0, line_no = 0;
  while (start < bytes.size()) {
    std::size_t end = bytes.find('\n', start);
    if (end == std::string::npos) end = bytes.size();
    std::string_view line(bytes.data() + start, end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      Record r;
      r.index = out.size();
      try {
        r.graph = parse_graph6(line);
      } catch (const FormatError& e) {
        r.error = "line " + std::to_string(line_no) + ": " + e.what() + " (stream byte " +
                  std::to_string(start + e.offset()) + ")";
      } catch (const GraphError& e) {
        r.error = "line " + std::to_string(line_no) + ": " + e.what();
      }
      out.push_back(std::move(r));
    }
    start = end + 1;
  }
  return out;
}

// All records, failing on the first bad one.
std::vector<Record> load_strict(const std::string& path) {
  auto records = read_records(read_all(path));
  for (const auto& r : records)
    if (r.error) throw InputError("record " + std::to_string(r.index) + ": " + *r.error);
  if (records.empty()) throw InputError(path + " contains no graphs");
  return records;
}

std::vector<Record> select(std::vector<Record> records, std::optional<std::size_t> index) {
  if (!index) return records;
  if (*index >= records.size())
    throw InputError("index " + std::to_string(*index) + " out of range (" + std::to_string(records.size()) + " graphs)");
  return {std::move(records[*index])};
}

ordered_json color_array(const Coloring& c) {
  ordered_json a = ordered_json::array();
  for (Vertex v = 1; v <= c.order(); ++v) a.push_back(c[v]);
  return a;
}

ordered_json colorset_json(ColorSet s) { return s.to_vector(); }

std::string status_name(ChromaticResult::Status s) {
  switch (s) {
    case ChromaticResult::Status::Exact: return "exact";
    case ChromaticResult::Status::ExceedsBound: return "exceeds_bound";
    case ChromaticResult::Status::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

// chi ------------------------------------------------------------------------

struct ChiArgs {
  std::string input;
  int max_k = 9;
  std::uint64_t budget = 0;
  std::optional<std::size_t> index;
  std::string export_cnf;
  int cnf_k = 0;
  bool chromatic = false;
};

int cmd_chi(const ChiArgs& a) {
  auto records = select(load_strict(a.input), a.index);
  if (!a.export_cnf.empty()) {
    if (records.size() != 1) throw InputError("--export-cnf needs a single graph; pass --index");
    write_file(a.export_cnf, export_cnf(records[0].graph, a.cnf_k > 0 ? a.cnf_k : a.max_k));
  }
  int rc = kOk;
  SolveOptions so;
  so.node_budget = a.budget;
  for (const auto& r : records) {
    ChromaticResult res = odd_chromatic_number(r.graph, a.max_k, so);
    ordered_json j;
    j["index"] = r.index;
    j["n"] = r.graph.order();
    j["m"] = r.graph.size();
    j["chi_o"] = res.exact() ? ordered_json(res.value) : ordered_json(nullptr);
    j["status"] = status_name(res.status);
    j["max_k"] = a.max_k;
    j["nodes"] = res.nodes;
    if (res.witness) j["witness"] = color_array(*res.witness);
    if (a.chromatic) {
      ChromaticResult c = chromatic_number(r.graph, a.max_k, so);
      j["chi"] = c.exact() ? ordered_json(c.value) : ordered_json(nullptr);
    }
    std::cout << j.dump() << '\n';
    if (!res.exact()) rc = kNegative;
  }
  return rc;
}

// verify ---------------------------------------------------------------------

int cmd_verify(const std::string& input, const std::string& coloring_path, std::optional<std::size_t> index) {
  auto records = select(load_strict(input), index);
  if (records.size() > 1) throw InputError("input holds several graphs; pass --index");
  const Graph& g = records[0].graph;
  Coloring c;
  try {
    c = parse_coloring(read_all(coloring_path), g.order());
  } catch (const ColoringError& e) {
    throw InputError(std::string("coloring: ") + e.what());
  }
  if (!c.total()) {
    std::vector<Vertex> missing;
    for (Vertex v = 1; v <= g.order(); ++v)
      if (!c.assigned(v)) missing.push_back(v);
    ordered_json j;
    j["verdict"] = false;
    j["uncolored"] = missing;
    std::cout << j.dump() << '\n';
    return kNegative;
  }
  OddReport rep = is_odd_coloring(g, c);
  ordered_json j;
  j["verdict"] = rep.verdict;
  j["proper"] = rep.proper;
  j["colors_used"] = c.colors_used();
  ordered_json odd = ordered_json::object();
  for (Vertex v = 1; v <= g.order(); ++v)
    if (g.degree(v) > 0) odd[std::to_string(v)] = colorset_json(rep.odd[static_cast<std::size_t>(v)]);
  j["odd_sets"] = odd;
  j["failing"] = rep.failing;
  ordered_json mono = ordered_json::array();
  for (auto [u, v] : rep.monochromatic) mono.push_back({u, v});
  j["monochromatic"] = mono;
  std::cout << j.dump() << '\n';
  return rep.verdict ? kOk : kNegative;
}

// gen ------------------------------------------------------------------------

int cmd_gen(const std::string& family, const std::string& param, const std::string& out, const std::string& format,
            bool all_trees, bool subdivided) {
  std::vector<FamilySpec> specs;
  try {
    if (all_trees) {
      FamilySpec probe = parse_family(family, "");
      if (probe.family != Family::C5BlockTree) throw InputError("--all applies to c5-block-tree only");
      int blocks = std::stoi(param);
      if (blocks < 1) throw InputError("--all needs a positive block count");
      specs = all_c5_block_trees(blocks);
    } else {
      specs.push_back(parse_family(family, param));
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::string data;
  std::vector<PlaneGraph> planes;
  for (const auto& s : specs) {
    Generated g = make(s);
    if (subdivided) {
      g.graph = subdivide(g.graph);
      if (g.plane) g.plane = subdivide(*g.plane);
    }
    if (format == "g6") {
      data += encode_graph6(g.graph) + "\n";
    } else {
      if (!g.plane) throw InputError("family has no plane embedding for this parameter; use --format g6");
      planes.push_back(*g.plane);
    }
  }
  if (format == "pc") data = encode_planar_code(planes);
  write_file(out, data);
  return kOk;
}

// color9 ---------------------------------------------------------------------

ordered_json trace_json(const std::vector<TraceStep>& trace, std::size_t index) {
  ordered_json a = ordered_json::array();
  for (const auto& s : trace) {
    ordered_json j;
    j["graph"] = index;
    j["kind"] = s.kind;
    j["site"] = s.site;
    j["graphSizeBefore"] = s.graph_size_before;
    if (!s.note.empty()) j["note"] = s.note;
    a.push_back(j);
  }
  return a;
}

void write_fixture(const std::filesystem::path& dir, const std::string& stem, const Graph& g, const std::string& log) {
  std::filesystem::create_directories(dir);
  write_file((dir / (stem + ".g6")).string(), encode_graph6(g) + "\n");
  write_file((dir / (stem + ".log")).string(), log);
}

int cmd_color9(const std::string& input, const std::string& trace_path, const std::string& fixtures,
               std::uint64_t budget, std::optional<std::size_t> index) {
  auto records = select(load_strict(input), index);
  Color9Options opt;
  if (budget != 0) opt.fallback_budget = budget;
  ordered_json all_steps = ordered_json::array();
  int rc = kOk;
  for (const auto& r : records) {
    if (!r.plane) throw InputError("color9 needs planar_code input (an embedding)");
    ordered_json j;
    j["index"] = r.index;
    j["n"] = r.graph.order();
    try {
      Color9Result res = color9(*r.plane, opt);
      j["verified"] = true;
      j["colors_used"] = res.coloring.colors_used();
      j["fallbacks"] = res.fallbacks;
      j["coloring"] = color_array(res.coloring);
      for (auto& s : trace_json(res.trace, r.index)) all_steps.push_back(std::move(s));
      if (res.fallbacks > 0 && !fixtures.empty())
        write_fixture(fixtures, "color9-fallback-" + std::to_string(r.index), r.graph,
                      std::to_string(res.fallbacks) + " exact-search fallback(s) during color9\n");
    } catch (const CounterexampleFound& e) {
      j["verified"] = false;
      j["counterexample"] = e.graph6();
      if (!fixtures.empty())
        write_fixture(fixtures, "color9-counterexample-" + std::to_string(r.index), r.graph, std::string(e.what()) + "\n");
      rc = kNegative;
    }
    std::cout << j.dump() << '\n';
  }
  if (!trace_path.empty()) write_file(trace_path, all_steps.dump(2) + "\n");
  return rc;
}

// audit ----------------------------------------------------------------------

int cmd_audit(const std::string& input, const std::string& report_path, std::optional<std::size_t> index) {
  auto records = select(load_strict(input), index);
  std::string report = "[\n";
  int rc = kOk;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (!r.plane) throw InputError("audit needs planar_code input (an embedding)");
    AuditResult a = audit(*r.plane);
    ordered_json j;
    j["index"] = r.index;
    j["n"] = r.graph.order();
    j["initial_total"] = a.initial.total;
    j["final_total"] = a.discharge.state.total;
    j["transfers"] = a.discharge.transfers.size();
    j["hypotheses"] = a.report.hypotheses();
    j["conditional_ok"] = a.report.conditional_ok();
    std::cout << j.dump() << '\n';
    if (a.initial.total != -144 || a.discharge.state.total != -144 || !a.report.conditional_ok()) rc = kNegative;
    if (!report_path.empty()) {
      ordered_json full = ordered_json::parse(audit_json(*r.plane, a));
      ordered_json wrapped;
      wrapped["index"] = r.index;
      for (auto& [k, v] : full.items()) wrapped[k] = v;
      std::string body = wrapped.dump(2);
      report += body + (i + 1 < records.size() ? ",\n" : "\n");
    }
  }
  report += "]\n";
  if (!report_path.empty()) write_file(report_path, report);
  return rc;
}

// scan -----------------------------------------------------------------------

struct ScanArgs {
  std::string input;
  int threshold = 5;
  std::optional<int> girth_min;
  int jobs = 1;
  std::uint64_t budget = 0;
  std::string fixtures;
  bool subdivide_input = false;
};

struct ScanOutcome {
  bool skipped = false;
  ordered_json line;
  bool exceeds = false;
  bool unknown = false;
  bool error = false;
  std::string exhaustion_log;
  Graph scanned;
};

ScanOutcome scan_one(const Record& r, const ScanArgs& a) {
  ScanOutcome o;
  o.line["index"] = r.index;
  if (r.error) {
    o.error = true;
    o.line["error"] = *r.error;
    return o;
  }
  const Graph base = r.graph;
  o.scanned = a.subdivide_input ? subdivide(base) : base;
  const Graph& g = o.scanned;
  auto gi = girth(g);
  if (a.girth_min && gi && *gi < *a.girth_min) {
    o.skipped = true;
    return o;
  }
  o.line["n"] = g.order();
  o.line["m"] = g.size();
  o.line["girth"] = gi ? ordered_json(*gi) : ordered_json(nullptr);

  std::ostringstream log;
  log << "graph6 " << encode_graph6(g) << "\n";
  std::optional<int> value;
  std::optional<Coloring> witness;
  bool budget_hit = false;
  std::uint64_t remaining = a.budget;
  for (int k = 1; k <= a.threshold + 1; ++k) {
    SolveOptions so;
    so.node_budget = remaining;
    SolveResult s = find_odd_coloring(g, k, so);
    log << "k=" << k << " nodes=" << s.nodes << " status="
        << (s.status == SolveStatus::Found ? "found" : s.status == SolveStatus::Exhausted ? "exhausted" : "budget")
        << "\n";
    if (a.budget != 0) remaining = remaining > s.nodes ? remaining - s.nodes : 1;
    if (s.status == SolveStatus::Found) {
      value = k;
      witness = s.witness;
      break;
    }
    if (s.status == SolveStatus::BudgetExhausted) {
      budget_hit = true;
      break;
    }
  }
  if (value) {
    o.line["chi_o"] = *value;
    o.exceeds = *value > a.threshold;
  } else if (budget_hit) {
    o.line["chi_o"] = nullptr;
    o.unknown = true;
  } else {
    o.line["chi_o"] = nullptr;
    o.exceeds = true;
  }
  o.line["verdict"] = o.unknown ? "unknown" : o.exceeds ? "exceeds" : "within";
  if (witness) {
    if (!is_odd_coloring(g, *witness).verdict) throw std::logic_error("scan: witness failed re-verification");
    o.line["witness"] = color_array(*witness);
    if (a.subdivide_input && *value <= 4) {
      // An odd 4-coloring of S(G) restricts to a proper coloring of G.
      Coloring restricted(base.order(), witness->palette());
      for (Vertex v = 1; v <= base.order(); ++v) restricted.assign(v, (*witness)[v]);
      o.line["restriction_proper"] = is_proper(base, restricted);
    }
  }
  if (o.exceeds) {
    log << (value ? "least odd palette " + std::to_string(*value) : "no odd coloring with k <= " + std::to_string(a.threshold + 1))
        << "\n";
    o.exhaustion_log = log.str();
  }
  return o;
}

int cmd_scan(const ScanArgs& a) {
  auto records = read_records(read_all(a.input));
  std::vector<ScanOutcome> results(records.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < records.size();) results[i] = scan_one(records[i], a);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, a.jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t scanned = 0, skipped = 0, exceeds = 0, unknown = 0, errors = 0, restriction_failures = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& o = results[i];
    if (o.skipped) {
      ++skipped;
      continue;
    }
    std::cout << o.line.dump() << '\n';
    if (o.error) {
      ++errors;
      continue;
    }
    ++scanned;
    exceeds += o.exceeds;
    unknown += o.unknown;
    if (o.line.contains("restriction_proper") && !o.line["restriction_proper"].get<bool>()) ++restriction_failures;
    if (o.exceeds && !a.fixtures.empty())
      write_fixture(a.fixtures, "scan-" + std::to_string(records[i].index), o.scanned, o.exhaustion_log);
  }
  std::cerr << "scanned " << scanned << ", skipped " << skipped << ", above threshold " << exceeds << ", undecided "
            << unknown << ", errors " << errors << "\n";
  if (exceeds == 0 && unknown == 0 && errors == 0)
    std::cerr << "no graph in this stream needs more than " << a.threshold
              << " colors; this is evidence for the bound on this corpus, not a proof\n";
  if (restriction_failures > 0) std::cerr << restriction_failures << " restriction(s) to V(G) were not proper\n";
  if (errors > 0) return kInputError;
  return exceeds > 0 || restriction_failures > 0 ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd colorings of graphs: exact solver, verifier, generators, 9-coloring of plane graphs, discharging audit"};
  app.require_subcommand(1);

  std::uint64_t env_budget = 0;
  try {
    env_budget = budget_from_env();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  ChiArgs chi;
  chi.budget = env_budget;
  std::size_t chi_index = 0;
  auto* c_chi = app.add_subcommand("chi", "odd chromatic number up to --max-k");
  c_chi->add_option("--input", chi.input, "graph6 or planar_code file ('-' for stdin)")->required();
  c_chi->add_option("--max-k", chi.max_k, "largest palette to try")->check(CLI::Range(1, kMaxPalette));
  c_chi->add_option("--budget", chi.budget, "search node budget, 0 = unlimited");
  auto* chi_index_opt = c_chi->add_option("--index", chi_index, "only the graph with this 0-based index");
  c_chi->add_option("--export-cnf", chi.export_cnf, "write the DIMACS encoding for k = --cnf-k (default --max-k)");
  c_chi->add_option("--cnf-k", chi.cnf_k, "palette for --export-cnf")->check(CLI::Range(1, kMaxPalette));
  c_chi->add_flag("--chromatic", chi.chromatic, "also report the ordinary chromatic number");

  std::string v_input, v_coloring;
  std::size_t v_index = 0;
  auto* c_verify = app.add_subcommand("verify", "check an odd coloring");
  c_verify->add_option("--input", v_input, "graph file")->required();
  c_verify->add_option("--coloring", v_coloring, "coloring (JSON or 'v c' lines)")->required();
  auto* v_index_opt = c_verify->add_option("--index", v_index, "graph index within the input");

  std::string g_family, g_param, g_out = "-", g_format = "g6";
  bool g_all = false, g_subdivide = false;
  auto* c_gen = app.add_subcommand("gen", "generate a named family");
  c_gen->add_option("--family", g_family, "cycle, path, complete, kite, wheel, subdivided-complete, c5-block-tree, icosahedron")
      ->required();
  c_gen->add_option("--param", g_param, "size, or parent:index list for c5-block-tree");
  c_gen->add_option("--out", g_out, "output file ('-' for stdout)");
  c_gen->add_option("--format", g_format, "g6 or pc")->check(CLI::IsMember({"g6", "pc"}));
  c_gen->add_flag("--all", g_all, "c5-block-tree: every tree with --param blocks");
  c_gen->add_flag("--subdivide", g_subdivide, "emit the complete subdivision");

  std::string c9_input, c9_trace, c9_fixtures;
  std::uint64_t c9_budget = env_budget;
  std::size_t c9_index = 0;
  auto* c_color9 = app.add_subcommand("color9", "odd coloring with at most 9 colors via reductions");
  c_color9->add_option("--input", c9_input, "planar_code file")->required();
  c_color9->add_option("--trace", c9_trace, "write the reduction trace as JSON");
  c_color9->add_option("--fixtures", c9_fixtures, "directory for fallback/counterexample fixtures");
  c_color9->add_option("--budget", c9_budget, "node budget of the exact-search fallback");
  auto* c9_index_opt = c_color9->add_option("--index", c9_index, "only the graph with this index");

  std::string a_input, a_report;
  std::size_t a_index = 0;
  auto* c_audit = app.add_subcommand("audit", "discharging charges, transfers and structural predicates");
  c_audit->add_option("--input", a_input, "planar_code file")->required();
  c_audit->add_option("--report", a_report, "write the full JSON report");
  auto* a_index_opt = c_audit->add_option("--index", a_index, "only the graph with this index");

  ScanArgs scan;
  scan.budget = env_budget;
  int girth_min = 0;
  auto* c_scan = app.add_subcommand("scan", "odd chromatic number of every graph in a stream, against a threshold");
  c_scan->add_option("--input", scan.input, "graph6 or planar_code stream")->required();
  c_scan->add_option("--threshold", scan.threshold, "flag graphs needing more colors")->check(CLI::Range(1, kMaxPalette - 1));
  auto* girth_opt = c_scan->add_option("--girth-min", girth_min, "only graphs with at least this girth");
  c_scan->add_option("--jobs", scan.jobs, "worker threads")->check(CLI::PositiveNumber);
  c_scan->add_option("--budget", scan.budget, "node budget per graph");
  c_scan->add_option("--fixtures", scan.fixtures, "directory for counterexample fixtures");
  c_scan->add_flag("--subdivide", scan.subdivide_input, "scan the complete subdivision of each graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  auto opt_index = [](CLI::Option* o, std::size_t v) { return o->count() > 0 ? std::optional<std::size_t>(v) : std::nullopt; };
  try {
    if (*c_chi) {
      chi.index = opt_index(chi_index_opt, chi_index);
      return cmd_chi(chi);
    }
    if (*c_verify) return cmd_verify(v_input, v_coloring, opt_index(v_index_opt, v_index));
    if (*c_gen) return cmd_gen(g_family, g_param, g_out, g_format, g_all, g_subdivide);
    if (*c_color9) return cmd_color9(c9_input, c9_trace, c9_fixtures, c9_budget, opt_index(c9_index_opt, c9_index));
    if (*c_audit) return cmd_audit(a_input, a_report, opt_index(a_index_opt, a_index));
    if (*c_scan) {
      if (girth_opt->count() > 0) scan.girth_min = girth_min;
      return cmd_scan(scan);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ColoringError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
