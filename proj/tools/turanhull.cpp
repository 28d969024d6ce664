// Command-line front end: Turán vectors, clique vectors, hull membership
// certificates and exhaustive theorem sweeps.
//
// Exit codes: 0 success / inside / no failures, 2 usage error, 3 outside the
// hull, 4 verification failures, 5 parse error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "turanhull/complex.hpp"
#include "turanhull/complex_io.hpp"
#include "turanhull/graph.hpp"
#include "turanhull/graph_io.hpp"
#include "turanhull/hull.hpp"
#include "turanhull/report.hpp"
#include "turanhull/turan.hpp"
#include "turanhull/verify.hpp"

namespace th = turanhull;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitOutside = 3;
constexpr int kExitFailures = 4;
constexpr int kExitParse = 5;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw UsageError("--input: cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("--output: cannot write " + path);
  out << text;
}

std::string csv_row(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string rational_list(const std::vector<th::Rational>& c, std::size_t len) {
  std::string s = "(";
  for (std::size_t i = 0; i < len; ++i) s += (i ? "," : "") + c[i].to_string();
  return s + ")";
}

std::string describe_violation(const th::Violation& v, const th::IntVector& f, const th::IntVector& g) {
  switch (v.kind) {
    case th::ViolationKind::support:
      return "support: f_" + std::to_string(v.i) + " = " + std::to_string(f.at(v.i)) + " > 0 past the support of g";
    case th::ViolationKind::first_coordinate:
      return "first coordinate: f_1 = " + std::to_string(f.at(1)) + " > g_1 = " + std::to_string(g.at(1));
    case th::ViolationKind::pair:
      return "pair (" + std::to_string(v.i) + "," + std::to_string(v.j) + "): " + std::to_string(f.at(v.i)) + "*" +
             std::to_string(g.at(v.j)) + " > " + std::to_string(f.at(v.j)) + "*" + std::to_string(g.at(v.i));
    case th::ViolationKind::none:
      break;
  }
  return "none";
}

struct Common {
  std::string format = "text";
};

void add_format(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

int run_turan(int n, int r, bool with_graph, const Common& common) {
  const th::IntVector t = th::turan_clique_vector(n, r);
  if (with_graph && n > th::kMaxLabel) throw UsageError("--graph: graph output supports n <= 64");
  if (common.format == "json") {
    json j = {{"n", n}, {"r", r}, {"parts", th::turan_parts(n, r)}, {"clique_vector", t.entries()}};
    if (with_graph) j["graph"] = th::graph_to_json(th::turan_graph(n, r));
    std::cout << j.dump() << "\n";
  } else if (common.format == "csv") {
    std::cout << "n,r," << "t\n" << n << "," << r << ",\"" << csv_row(t.entries()) << "\"\n";
  } else {
    std::cout << t.to_string() << "\n";
    if (with_graph) std::cout << th::to_edge_list(th::turan_graph(n, r));
  }
  return kExitOk;
}

int run_check(const std::string& f_text, const std::string& g_text, int n, int r, const Common& common) {
  th::IntVector f;
  th::IntVector g;
  try {
    f = th::parse_int_vector(f_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("-f: ") + e.what());
  }
  if (!g_text.empty()) {
    try {
      g = th::parse_int_vector(g_text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("-g: ") + e.what());
    }
  } else {
    if (n < 1 || r < 1) throw UsageError("check needs either -g or both -n and -r");
    g = th::turan_clique_vector(n, r);
  }
  const std::size_t d = std::max(f.size(), g.size());
  f = f.resized(d);
  g = g.resized(d);
  if (!g.has_zero_tail_form()) throw UsageError("-g: generator has an internal zero");

  const th::HullCertificate by_inequalities = th::membership_inequalities(f, g);
  const th::HullCertificate by_coefficients = th::membership_coefficients(f, g);
  if (by_inequalities.verdict != by_coefficients.verdict) {
    std::cerr << "membership oracles disagree\n";
    return kExitFailures;
  }
  const bool inside = by_coefficients.inside();
  if (common.format == "json") {
    json j = {{"f", f.entries()},
              {"g", g.entries()},
              {"verdict", inside ? "inside" : "outside"},
              {"inequalities", th::certificate_to_json(by_inequalities)},
              {"coefficients", th::certificate_to_json(by_coefficients)}};
    std::cout << j.dump() << "\n";
  } else if (common.format == "csv") {
    std::cout << "verdict,violation,i,j\n"
              << (inside ? "inside" : "outside") << "," << th::to_string(by_inequalities.violation.kind) << ","
              << by_inequalities.violation.i << "," << by_inequalities.violation.j << "\n";
  } else {
    std::cout << (inside ? "inside" : "outside") << "\n";
    const std::size_t shown = std::max<std::size_t>(g.support(), 1);
    if (inside) {
      std::cout << "c = " << rational_list(by_coefficients.coefficients, std::min(shown, d)) << "\n";
    } else {
      std::cout << "violation " << describe_violation(by_inequalities.violation, f, g) << "\n";
    }
  }
  return inside ? kExitOk : kExitOutside;
}

int run_cliques(const std::string& input, const std::string& graph6, const Common& common) {
  const th::Graph g = graph6.empty() ? th::parse_graph(read_input(input)) : th::parse_graph6(graph6);
  const th::IntVector c = th::clique_vector(g);
  const int omega = th::clique_number(g);
  if (common.format == "json") {
    std::cout << json{{"n", g.order()}, {"clique_vector", c.entries()}, {"clique_number", omega}}.dump() << "\n";
  } else if (common.format == "csv") {
    std::cout << "n,omega,c\n" << g.order() << "," << omega << ",\"" << csv_row(c.entries()) << "\"\n";
  } else {
    std::cout << c.to_string() << "\nomega=" << omega << "\n";
  }
  return kExitOk;
}

int run_fvector(const std::string& input, int r, const Common& common) {
  const th::SimplicialComplex c = th::parse_complex(read_input(input));
  const th::IntVector f = th::face_vector(c);
  const th::Graph graph = th::underlying_graph(c);
  int chromatic = 0;
  while (chromatic < graph.order() && !th::is_r_colorable(graph, chromatic + 1)) ++chromatic;
  if (graph.order() > 0) ++chromatic;
  if (common.format == "json") {
    json j = {{"n", c.ground_size()}, {"face_vector", f.entries()}, {"chromatic_number", chromatic}};
    if (r > 0) j["r_colorable"] = chromatic <= r;
    std::cout << j.dump() << "\n";
  } else if (common.format == "csv") {
    std::cout << "n,chromatic,f\n" << c.ground_size() << "," << chromatic << ",\"" << csv_row(f.entries()) << "\"\n";
  } else {
    std::cout << f.to_string() << "\nchromatic=" << chromatic << "\n";
    if (r > 0) std::cout << r << "-colorable: " << (chromatic <= r ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

std::string render_report(const th::VerificationReport& rep, const std::string& format) {
  if (format == "json") return th::report_to_json(rep).dump(2) + "\n";
  if (format == "csv") return th::report_csv_header() + "\n" + th::report_csv_row(rep) + "\n";
  std::ostringstream out;
  out << rep.theorem << " n=" << rep.n << " r=" << rep.r;
  if (rep.k > 0) out << " k=" << rep.k;
  out << " mode=" << rep.mode << ": " << rep.instances_checked << " checked, " << rep.instances_skipped << " skipped, "
      << rep.failure_count << " failures -> " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& [name, value] : rep.counters) out << "  " << name << " = " << value << "\n";
  for (const auto& failure : rep.failures) out << "  failure " << failure.dump() << "\n";
  return out.str();
}

struct VerifyArgs {
  std::string theorem;
  int n = 0;
  int r = 0;
  int k = 2;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  bool long_run = false;
  int workers = 1;
  std::uint64_t chunk_begin = 0;
  std::uint64_t chunk_end = 0;
  bool timing = false;
  bool quiet = false;
  std::string output;
};

int run_verify(const VerifyArgs& a, const Common& common) {
  th::SweepOptions options;
  options.workers = a.workers;
  options.long_run = a.long_run;
  options.timing = a.timing;
  if (a.chunk_end > 0) {
    if (a.chunk_end <= a.chunk_begin) throw UsageError("--chunk-end must exceed --chunk-begin");
    options.range = th::IndexRange{a.chunk_begin, a.chunk_end};
  }
  if (!a.quiet) options.progress = [](const std::string& line) { std::cerr << line << "\n"; };

  th::VerificationReport rep;
  try {
    if (a.theorem == "thm31") {
      rep = th::check_theorem_3_1(a.n, a.r, options);
    } else if (a.theorem == "zykov") {
      rep = th::check_zykov(a.n, a.r, options);
    } else if (a.theorem == "thm11") {
      rep = th::check_theorem_1_1(a.n, a.r, options);
    } else {
      rep = th::check_section5_chain(a.samples, a.n, a.r, a.k, a.seed, options);
    }
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    if (msg.find("long-run") != std::string::npos) msg += " (pass --long-run)";
    throw UsageError("-n/-r: " + msg);
  }
  write_output(a.output, render_report(rep, common.format));
  return rep.passed() ? kExitOk : kExitFailures;
}

int run_merge(const std::vector<std::string>& inputs, const std::string& output, const Common& common) {
  std::optional<th::VerificationReport> merged;
  for (const auto& path : inputs) {
    json j;
    try {
      j = json::parse(read_input(path));
    } catch (const json::parse_error& e) {
      throw th::ParseError(path + ": " + e.what(), 0, e.byte);
    }
    th::VerificationReport part = th::report_from_json(j);
    if (!merged) {
      merged = std::move(part);
    } else {
      th::merge_into(*merged, part);
    }
  }
  if (!merged) throw UsageError("merge needs at least one report");
  if (merged->theorem == "zykov" && merged->range_begin == 0 && merged->range_end == th::labeled_graph_count(merged->n))
    th::check_zykov_attainment(*merged);
  write_output(output, render_report(*merged, common.format));
  return merged->passed() ? kExitOk : kExitFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Face vectors of colored complexes, Turán clique vectors and exact hull membership"};
  app.require_subcommand(1);
  Common common;

  int n = 0;
  int r = 0;
  bool with_graph = false;
  auto* turan = app.add_subcommand("turan", "Clique vector of the Turán graph T(n, r)");
  turan->add_option("-n", n, "Order")->required()->check(CLI::Range(1, 100000));
  turan->add_option("-r", r, "Number of parts")->required()->check(CLI::Range(1, 100000));
  turan->add_flag("--graph", with_graph, "Also print the edge list");
  add_format(turan, common);

  std::string f_text;
  std::string g_text;
  auto* check = app.add_subcommand("check", "Membership of f in the hull of the truncations of g (or of t(n, r))");
  check->add_option("-f", f_text, "Comma-separated vector f")->required();
  check->add_option("-g", g_text, "Comma-separated generator g");
  check->add_option("-n", n, "Order for g = t(n, r)")->check(CLI::Range(1, 100000));
  check->add_option("-r", r, "Parts for g = t(n, r)")->check(CLI::Range(1, 100000));
  add_format(check, common);

  std::string input;
  std::string graph6;
  auto* cliques = app.add_subcommand("cliques", "Clique vector and clique number of a graph");
  cliques->add_option("-i,--input", input, "Graph file (edge list, graph6 or JSON); '-' or omitted reads stdin");
  cliques->add_option("--graph6", graph6, "Inline graph6 string");
  add_format(cliques, common);

  auto* fvector = app.add_subcommand("fvector", "Face vector and chromatic number of a complex");
  fvector->add_option("-i,--input", input, "Complex file (text or JSON); '-' or omitted reads stdin");
  fvector->add_option("-r", r, "Also report r-colorability")->check(CLI::Range(1, 64));
  add_format(fvector, common);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Exhaustive or randomized theorem sweep");
  verify->add_option("theorem", va.theorem, "thm31 | zykov | thm11 | sec5")->required()->check(CLI::IsMember({"thm31", "zykov", "thm11", "sec5"}));
  verify->add_option("-n", va.n, "Order")->required()->check(CLI::Range(1, 12));
  verify->add_option("-r", va.r, "Clique number / color bound")->required()->check(CLI::Range(1, 64));
  verify->add_option("-k", va.k, "Face size for sec5")->check(CLI::Range(2, 12));
  verify->add_option("--samples", va.samples, "Random samples for sec5");
  verify->add_option("--seed", va.seed, "Seed for sec5");
  verify->add_flag("--long-run", va.long_run, "Allow n = 7 graph sweeps and n = 6 complex sweeps");
  verify->add_option("--workers", va.workers, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--chunk-begin", va.chunk_begin, "First instance index of this chunk");
  verify->add_option("--chunk-end", va.chunk_end, "One past the last instance index of this chunk");
  verify->add_flag("--timing", va.timing, "Record wall time in the report");
  verify->add_flag("-q,--quiet", va.quiet, "No progress on stderr");
  verify->add_option("-o,--output", va.output, "Report file (default stdout)");
  add_format(verify, common);

  std::vector<std::string> merge_inputs;
  std::string merge_output;
  auto* merge = app.add_subcommand("merge", "Merge chunk reports of one sweep");
  merge->add_option("reports", merge_inputs, "JSON report files")->required();
  merge->add_option("-o,--output", merge_output, "Merged report file (default stdout)");
  add_format(merge, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*turan) return run_turan(n, r, with_graph, common);
    if (*check) return run_check(f_text, g_text, n, r, common);
    if (*cliques) return run_cliques(input, graph6, common);
    if (*fvector) return run_fvector(input, r, common);
    if (*verify) return run_verify(va, common);
    if (*merge) return run_merge(merge_inputs, merge_output, common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const th::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
