// cli.cpp — subcommands construct, spectrum, count, enumerate, verify, report.
#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "specsat/config.hpp"
#include "specsat/error.hpp"
#include "specsat/graph6.hpp"
#include "specsat/harness.hpp"

namespace specsat::cli {
namespace {

struct Common {
  std::string config;
  int jobs = 1;
  double tol = kDefaultTol;
  std::string out;
  std::string format;
  bool strict = false;
  bool omit_timing = false;
  CLI::Option* jobs_opt = nullptr;
  CLI::Option* tol_opt = nullptr;
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format, std::vector<std::string> formats) {
  sub->add_option("--config", c.config, "Battery config JSON (default: $SPECSAT_CONFIG, then built-in)");
  c.jobs_opt = sub->add_option("--jobs", c.jobs, "Worker threads (config value if omitted)")->check(CLI::PositiveNumber);
  c.tol_opt = sub->add_option("--tol", c.tol, "Spectral enclosure width (config value if omitted, 1e-10)")
                  ->check(CLI::PositiveNumber);
  sub->add_option("--out", c.out, "Write output here instead of standard output");
  c.format = default_format;
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  sub->add_flag("--strict-hypotheses", c.strict, "Skip bounds whose size hypotheses fail instead of evaluating them");
  sub->add_flag("--omit-timing", c.omit_timing, "Leave wallclock_ms out of reports");
}

CampaignOptions campaign_options(const Common& c) {
  CampaignOptions opt = CampaignOptions::from_config(load_config(c.config));
  if (c.jobs_opt->count() > 0) opt.jobs = c.jobs;
  if (c.tol_opt->count() > 0) opt.tol = c.tol;
  if (c.strict) opt.policy = HypothesisPolicy::kStrict;
  return opt;
}

struct Source {
  std::string family;
  std::string input;
  int n = 0;
  int r = 2;
  int q = 0;
  std::vector<int> sizes;
};

void add_source(CLI::App* sub, Source& s) {
  sub->add_option("--family", s.family, "turan | Y | L | T | multipartite")
      ->check(CLI::IsMember({"turan", "Y", "L", "T", "multipartite"}));
  sub->add_option("--input", s.input, "graph6 file, '-' for standard input");
  sub->add_option("--n", s.n, "Vertices");
  sub->add_option("--r", s.r, "Parts")->capture_default_str();
  sub->add_option("--q", s.q, "Added edges");
  sub->add_option("--sizes", s.sizes, "Part sizes for --family multipartite")->delimiter(',');
}

PartitionedGraph build_family(const Source& s) {
  if (s.family == "multipartite") {
    require(!s.sizes.empty(), ErrorKind::kInvalidArgument, "--family multipartite needs --sizes");
    return perturbed_multipartite(s.sizes, {}, {});
  }
  require(s.n > 0, ErrorKind::kInvalidArgument, "--family needs --n");
  if (s.family == "turan") return turan(s.n, s.r);
  if (s.family == "Y") return y_graph(s.n, s.r, s.q);
  if (s.family == "L") return l_graph(s.n, s.r, s.q);
  return t_star_graph(s.n, s.r, s.q);
}

struct Loaded {
  std::vector<Graph> graphs;
  std::optional<PartitionedGraph> family;
};

Loaded load_graphs(const Source& s, std::istream& in) {
  require(s.family.empty() != s.input.empty(), ErrorKind::kInvalidArgument, "give exactly one of --family or --input");
  Loaded l;
  if (!s.family.empty()) {
    l.family = build_family(s);
    l.graphs.push_back(l.family->graph);
    return l;
  }
  if (s.input == "-") {
    l.graphs = read_graph6_lines(in);
  } else {
    std::ifstream file(s.input);
    require(static_cast<bool>(file), ErrorKind::kInvalidArgument, "cannot open '" + s.input + "'");
    l.graphs = read_graph6_lines(file);
  }
  require(!l.graphs.empty(), ErrorKind::kInvalidArgument, "no graphs in input");
  return l;
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out);
  require(static_cast<bool>(file), ErrorKind::kInvalidArgument, "cannot write '" + c.out + "'");
  file << text;
}

std::string fmt_double(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

int cmd_construct(const Common& c, const Source& s, std::istream& in, std::ostream& out) {
  require(!s.family.empty(), ErrorKind::kInvalidArgument, "construct needs --family");
  const Loaded l = load_graphs(s, in);
  const PartitionedGraph& pg = *l.family;
  if (c.format == "json") {
    Json j = {{"graph6", emit_graph6(pg.graph)}, {"label", member_label(pg)}, {"sidecar", sidecar(pg)}};
    emit(c, out, j.dump(2) + "\n");
  } else {
    emit(c, out, emit_graph6(pg.graph) + "\n" + sidecar(pg).dump() + "\n");
  }
  return kExitOk;
}

int cmd_spectrum(const Common& c, const Source& s, std::istream& in, std::ostream& out) {
  const CampaignOptions opt = campaign_options(c);
  const Loaded l = load_graphs(s, in);
  std::string text = c.format == "csv" ? "graph6,lambda,lo,hi,iterations,converged\n" : "";
  for (const Graph& g : l.graphs) {
    const SpectralResult res = spectral_radius(g, opt.tol);
    if (c.format == "csv") {
      text += emit_graph6(g) + "," + fmt_double(res.lambda) + "," + fmt_double(res.interval.lo) + "," +
              fmt_double(res.interval.hi) + "," + std::to_string(res.iterations) + "," +
              (res.converged ? "true" : "false") + "\n";
    } else {
      Json j = {{"lambda", res.lambda}, {"interval", to_json(res.interval)}, {"iterations", res.iterations},
                {"converged", res.converged}};
      if (!l.family) j["graph6"] = emit_graph6(g);
      text += j.dump() + "\n";
    }
  }
  emit(c, out, text);
  return kExitOk;
}

struct CountArgs {
  std::string pattern;
  std::vector<int> edge;
  bool tau = false;
  int c_n = 0;
};

int cmd_count(const Common& c, const Source& s, const CountArgs& a, std::istream& in, std::ostream& out) {
  const Pattern p = named_pattern(a.pattern);
  if (s.family.empty() && s.input.empty()) {
    require(a.c_n > 0, ErrorKind::kInvalidArgument, "count needs a graph (--family / --input) or --c-n");
    emit(c, out, Json({{"pattern", p.name}, {"n", a.c_n}, {"c", c_n_F(a.c_n, p)}}).dump() + "\n");
    return kExitOk;
  }
  const Loaded l = load_graphs(s, in);
  std::string text;
  for (const Graph& g : l.graphs) {
    Json j = {{"pattern", p.name}};
    if (!l.family) j["graph6"] = emit_graph6(g);
    j["copies"] = l.family ? count_copies(p, *l.family) : count_copies(p, g);
    if (!a.edge.empty()) {
      require(a.edge.size() == 2, ErrorKind::kInvalidArgument, "--edge takes u,v");
      j["through_edge"] = count_copies_through_edge(p, g, Edge(a.edge[0], a.edge[1]));
    }
    if (a.tau) j["tau"] = l.family ? covering_number(p, *l.family) : covering_number(p, g);
    if (a.c_n > 0) j["c"] = c_n_F(a.c_n, p);
    text += j.dump() + "\n";
  }
  emit(c, out, text);
  return kExitOk;
}

int cmd_enumerate(const Common& c, const Source& s, int all_n, std::ostream& out) {
  std::string text;
  Json rows = Json::array();
  if (all_n > 0) {
    for (const Graph& g : enumerate_all_graphs(all_n)) {
      text += emit_graph6(g) + "\n";
      rows.push_back({{"graph6", emit_graph6(g)}});
    }
  } else {
    require(s.n > 0, ErrorKind::kInvalidArgument, "enumerate needs --all N or --n/--r/--q");
    for (const PartitionedGraph& pg : enumerate_family(s.n, s.r, s.q)) {
      text += emit_graph6(pg.graph) + "\n";
      rows.push_back({{"label", member_label(pg)}, {"graph6", emit_graph6(pg.graph)}, {"sidecar", sidecar(pg)}});
    }
  }
  emit(c, out, c.format == "json" ? rows.dump(2) + "\n" : text);
  return kExitOk;
}

int render_reports(const Common& c, const std::vector<VerificationReport>& reports, bool single, std::ostream& out) {
  std::string text;
  if (c.format == "csv") {
    text = csv_header() + "\n";
    for (const auto& r : reports) text += to_csv(r);
  } else if (single) {
    text = to_json(reports.front(), !c.omit_timing).dump(2) + "\n";
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, !c.omit_timing));
    text = arr.dump(2) + "\n";
  }
  emit(c, out, text);
  for (const auto& r : reports)
    if (r.status == Status::kFail) return kExitFail;
  return kExitOk;
}

struct VerifyArgs {
  std::string theorem;
  CLI::Option* n = nullptr;
  int n_value = 0, r = 2, q = 0, s = 0;
  double eps = 0.075;
  std::string pattern;
  CLI::Option* q_opt = nullptr;
  CLI::Option* s_opt = nullptr;
  CLI::Option* r_opt = nullptr;
  CLI::Option* eps_opt = nullptr;
};

int cmd_verify(const Common& c, const VerifyArgs& v, std::ostream& out) {
  const CampaignOptions opt = campaign_options(c);
  if (v.n->count() == 0) return render_reports(c, run_battery(v.theorem, opt), false, out);
  Json params = {{"n", v.n_value}};
  if (v.r_opt->count() > 0 || v.theorem != "ning-zhai") params["r"] = v.r;
  if (v.q_opt->count() > 0) params["q"] = v.q;
  if (v.s_opt->count() > 0) params["s"] = v.s;
  if (v.eps_opt->count() > 0) params["eps"] = v.eps;
  if (!v.pattern.empty()) params["pattern"] = v.pattern;
  return render_reports(c, {run_campaign(v.theorem, params, opt)}, true, out);
}

int cmd_report(const Common& c, const std::vector<std::string>& files, std::istream& in, std::ostream& out) {
  std::vector<VerificationReport> reports;
  for (const std::string& path : files) {
    Json doc;
    try {
      if (path == "-") {
        doc = Json::parse(in);
      } else {
        std::ifstream file(path);
        require(static_cast<bool>(file), ErrorKind::kInvalidArgument, "cannot open '" + path + "'");
        doc = Json::parse(file);
      }
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorKind::kParseError, "'" + path + "': " + e.what());
    }
    if (doc.is_array()) {
      for (const Json& j : doc) reports.push_back(report_from_json(j));
    } else {
      reports.push_back(report_from_json(doc));
    }
  }
  render_reports(c, reports, false, out);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"specsat: spectral supersaturation toolkit for complete multipartite graphs and their perturbations"};
  app.require_subcommand(1);

  // One Common per subcommand: each has its own default format.
  Common c_construct, c_spectrum, c_count, c_enumerate, c_verify, c_report;
  Source source;

  auto* construct = app.add_subcommand("construct", "Build T_{n,r}, the matching (Y), triangle/star (L) or star (T) hosts");
  add_common(construct, c_construct, "graph6", {"graph6", "json"});
  add_source(construct, source);

  auto* spectrum = app.add_subcommand("spectrum", "Certified spectral radius of a named family or graph6 input");
  add_common(spectrum, c_spectrum, "json", {"json", "csv"});
  add_source(spectrum, source);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Copies N_F(G), copies through an edge, c(n,F) and covering number");
  add_common(count, c_count, "json", {"json"});
  add_source(count, source);
  count->add_option("--pattern", count_args.pattern, "K<k>, C<k>, P<k>, S<k>, B<k>, W<k> or g6:<graph6>")->required();
  count->add_option("--edge", count_args.edge, "Count copies through u,v")->delimiter(',');
  count->add_flag("--tau", count_args.tau, "Also compute the covering number");
  count->add_option("--c-n", count_args.c_n, "Also report c(n,F) for this n");

  int all_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Isomorphism classes of T_{n,r} plus q edges, or of all graphs on n <= 8");
  add_common(enumerate, c_enumerate, "graph6", {"graph6", "json"});
  add_source(enumerate, source);
  enumerate->add_option("--all", all_n, "Every graph on this many vertices")->check(CLI::Range(1, 8));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a verification campaign; the configured battery when --n is omitted");
  add_common(verify, c_verify, "json", {"json", "csv"});
  verify->add_option("--theorem", verify_args.theorem, "Campaign")->required()->check(CLI::IsMember(theorem_names()));
  verify_args.n = verify->add_option("--n", verify_args.n_value, "Vertices");
  verify_args.r_opt = verify->add_option("--r", verify_args.r, "Parts")->capture_default_str();
  verify_args.q_opt = verify->add_option("--q", verify_args.q, "Added edges");
  verify_args.s_opt = verify->add_option("--s", verify_args.s, "Covering size");
  verify_args.eps_opt = verify->add_option("--eps", verify_args.eps, "Shift residual epsilon")->capture_default_str();
  verify->add_option("--pattern", verify_args.pattern, "Pattern F (default K_{r+1})");

  std::vector<std::string> report_files;
  auto* report = app.add_subcommand("report", "Flatten or merge report JSON files");
  add_common(report, c_report, "csv", {"csv", "json"});
  report->add_option("files", report_files, "Report JSON files ('-' for standard input)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(c_construct, source, in, out);
    if (spectrum->parsed()) return cmd_spectrum(c_spectrum, source, in, out);
    if (count->parsed()) return cmd_count(c_count, source, count_args, in, out);
    if (enumerate->parsed()) return cmd_enumerate(c_enumerate, source, all_n, out);
    if (verify->parsed()) return cmd_verify(c_verify, verify_args, out);
    if (report->parsed()) return cmd_report(c_report, report_files, in, out);
  } catch (const Error& e) {
    err << "specsat: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "specsat: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"specsat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace specsat::cli
