#include "flatcert/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flatcert/io.hpp"
#include "flatcert/jets.hpp"
#include "flatcert/kernels.hpp"
#include "flatcert/lojasiewicz.hpp"
#include "flatcert/witness.hpp"

#ifndef FLATCERT_VERSION
#define FLATCERT_VERSION "0.0.0"
#endif

namespace flatcert::cli {

namespace {

using io::Json;

struct RunConfig {
  std::string format = "json";
  std::string out_path;
  int threads = 0;

  // certify-flatness
  std::string family = "earring";
  int dim = 0;
  int pmax = 8;
  double r = 0.1;
  std::size_t count = 200;
  std::int64_t max_index = 0;
  std::string points_path;
  bool header = false;

  // shared
  std::uint64_t seed = 0;
  double tol = kDefaultNullTolerance;

  // loj-exponent / flatness-bound / witness-eval
  std::string field = "earring";
  std::string zero;
  std::string k_range = "2..6";
  std::size_t samples = 2000;
  double floor = kDefaultDistFloor;
  std::string mode = "norm";
  int nmax = 10;
  double radius = 0.2;
  double c_bound = 1.0;

  // jet-report
  std::int64_t circles = 20;
  int mmax = 4;
  int jet_order = 0;
  std::string arcs_path;
  std::vector<std::string> arc_csv_paths;

  // distance / witness-eval
  std::string in_path;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  int a = 0, b = 0;
  auto parse = [&](std::string_view s, int& v) {
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && p == s.data() + s.size();
  };
  std::string_view sv(text);
  if (dots == std::string::npos) {
    if (!parse(sv, a)) throw UsageError("bad range '" + text + "' (expected a..b)");
    return {a, a};
  }
  if (!parse(sv.substr(0, dots), a) || !parse(sv.substr(dots + 2), b) || a > b) {
    throw UsageError("bad range '" + text + "' (expected a..b with a <= b)");
  }
  return {a, b};
}

std::string default_zero_set(const std::string& field) {
  if (field == "earring") return "earring";
  if (field == "axis") return "x-axis";
  return "origin";
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return in;
}

Json envelope(const std::string& command, Json config, Json result) {
  return Json{{"schema", io::kSchema},
              {"tool", "flatcert"},
              {"version", FLATCERT_VERSION},
              {"command", command},
              {"config", std::move(config)},
              {"result", std::move(result)}};
}

class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  template <typename Report>
  void emit(const std::string& command, const Json& config, const Report& report) {
    std::ostringstream buf;
    if (cfg_.format == "csv") {
      buf << "# schema=" << io::kSchema << " tool=flatcert version=" << FLATCERT_VERSION << " command=" << command
          << '\n'
          << "# config=" << config.dump() << '\n';
      io::write_csv(buf, report);
    } else {
      buf << envelope(command, config, io::to_json(report)).dump(2) << '\n';
    }
    write(buf.str());
  }

  void write(const std::string& text) {
    if (cfg_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(cfg_.out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + cfg_.out_path + "'");
    f << text;
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

std::vector<Point> read_points(const RunConfig& cfg) {
  if (cfg.in_path.empty()) return io::read_points_csv(std::cin, cfg.header);
  auto in = open_input(cfg.in_path);
  return io::read_points_csv(in, cfg.header);
}

int cmd_certify_flatness(const RunConfig& cfg, Emitter& emit) {
  Json config{{"family", cfg.points_path.empty() ? cfg.family : "points"},
              {"pmax", cfg.pmax},
              {"tol", cfg.tol}};
  FlatnessCertificate cert;
  if (!cfg.points_path.empty()) {
    auto in = open_input(cfg.points_path);
    const auto pts = io::read_points_csv(in, cfg.header);
    config["points"] = cfg.points_path;
    cert = certify_flatness_via_directions(pts, cfg.pmax, cfg.tol);
  } else {
    Family family = EarringFamily{};
    if (cfg.family == "earring") {
      EarringFamily f;
      if (cfg.max_index > 0) f.max_index = cfg.max_index;
      family = f;
    } else if (cfg.family == "spheres") {
      family = SphereFamily(cfg.dim > 0 ? cfg.dim : 3);
    } else if (cfg.family == "x-axis") {
      family = AxisFamily{cfg.dim > 0 ? cfg.dim : 2, 0};
    } else {
      throw UsageError("unknown family '" + cfg.family + "'");
    }
    config["dim"] = family_dim(family);
    config["r"] = cfg.r;
    config["count"] = cfg.count;
    config["seed"] = cfg.seed;
    if (cfg.max_index > 0) config["max_index"] = cfg.max_index;
    cert = certify_flatness_via_directions(family, cfg.pmax, cfg.r, cfg.count, cfg.seed, cfg.tol);
  }
  emit.emit("certify-flatness", config, cert);
  return cert.valid() ? kExitOk : kExitCertificationFailed;
}

int cmd_loj_exponent(const RunConfig& cfg, Emitter& emit) {
  const auto [k_first, k_last] = parse_range(cfg.k_range);
  const std::size_t dim = cfg.dim > 0 ? static_cast<std::size_t>(cfg.dim) : 2;
  const std::string zero = cfg.zero.empty() ? default_zero_set(cfg.field) : cfg.zero;
  const auto field = field_by_name(cfg.field, dim);
  const auto dist = distance_map_by_name(zero, dim);
  const auto report = fit_exponent(field, dist, k_first, k_last, cfg.samples, cfg.seed, cfg.floor);
  Json config{{"field", cfg.field}, {"zero", zero},      {"dim", dim},         {"k_first", k_first},
              {"k_last", k_last},   {"samples", cfg.samples}, {"seed", cfg.seed}, {"dist_floor", cfg.floor}};
  emit.emit("loj-exponent", config, report);
  return kExitOk;
}

int cmd_flatness_bound(const RunConfig& cfg, Emitter& emit) {
  const std::size_t dim = cfg.dim > 0 ? static_cast<std::size_t>(cfg.dim) : 2;
  BoundMode mode;
  if (cfg.mode == "norm") {
    mode = BoundMode::norm;
  } else if (cfg.mode == "set") {
    mode = BoundMode::set_distance;
  } else {
    throw UsageError("unknown mode '" + cfg.mode + "' (expected norm|set)");
  }
  const std::string zero = cfg.zero.empty() ? default_zero_set(cfg.field) : cfg.zero;
  const auto field = field_by_name(cfg.field, dim);
  const auto dist = distance_map_by_name(zero, dim);
  const auto report =
      check_flatness_bound(field, mode, dist, cfg.nmax, cfg.radius, cfg.samples, cfg.seed, cfg.c_bound);
  Json config{{"field", cfg.field},   {"mode", to_string(mode)}, {"zero", zero},
              {"dim", dim},           {"nmax", cfg.nmax},        {"radius", cfg.radius},
              {"samples", cfg.samples}, {"seed", cfg.seed},      {"c_bound", cfg.c_bound}};
  emit.emit("flatness-bound", config, report);
  return kExitOk;
}

int cmd_jet_report(const RunConfig& cfg, Emitter& emit) {
  std::vector<ArcJet> arcs;
  Json config{{"mmax", cfg.mmax}, {"tol", cfg.tol}};
  if (!cfg.arcs_path.empty()) {
    auto in = open_input(cfg.arcs_path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw UsageError("cannot parse '" + cfg.arcs_path + "': " + e.what());
    }
    arcs = io::arc_jets_from_json(j);
    config["arcs"] = cfg.arcs_path;
  } else if (!cfg.arc_csv_paths.empty()) {
    const int K = cfg.jet_order > 0 ? cfg.jet_order : 2 * cfg.mmax;
    for (const auto& path : cfg.arc_csv_paths) {
      auto in = open_input(path);
      const auto samples = io::read_arc_samples_csv(in, cfg.header);
      arcs.push_back(numeric_jet(samples, K));
    }
    config["arc_csv"] = cfg.arc_csv_paths;
    config["K"] = K;
  } else {
    if (cfg.family != "earring") throw UsageError("jet-report presets: only --family earring");
    if (cfg.circles < 1) throw UsageError("--n must be >= 1");
    // x^m restricted to C_n starts at order 2m, so 2·mmax sees every form.
    const int K = cfg.jet_order > 0 ? cfg.jet_order : 2 * cfg.mmax;
    for (std::int64_t n = 1; n <= cfg.circles; ++n) arcs.push_back(circle_arc_jet(n, K));
    config["family"] = "earring";
    config["n"] = cfg.circles;
    config["K"] = K;
  }
  const auto report = jet_nondegeneracy(arcs, cfg.mmax, cfg.tol);
  emit.emit("jet-report", config, report);
  return kExitOk;
}

int cmd_distance(const RunConfig& cfg, Emitter& emit) {
  const auto pts = read_points(cfg);
  for (const Point& p : pts) require_dim(p, 2, "distance");
  const auto d = kernels::parallel::earring_distances(pts);
  std::ostringstream buf;
  io::write_points_with_column(buf, pts, d, "distance", cfg.header);
  emit.write(buf.str());
  return kExitOk;
}

int cmd_witness_eval(const RunConfig& cfg, Emitter& emit) {
  const auto pts = read_points(cfg);
  const std::size_t dim = pts.empty() ? (cfg.dim > 0 ? static_cast<std::size_t>(cfg.dim) : 2) : pts.front().dim();
  const auto field = field_by_name(cfg.field, dim);
  const auto values = kernels::parallel::field_values(field, pts);
  std::ostringstream buf;
  io::write_points_with_column(buf, pts, values, cfg.field, cfg.header);
  emit.write(buf.str());
  return kExitOk;
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", cfg.out_path, "Write the report to PATH instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Flatness certification and Lojasiewicz exponent toolkit", "flatcert"};
  app.set_version_flag("--version", FLATCERT_VERSION);
  app.require_subcommand(1);
  app.add_option("--threads", cfg.threads, "OpenMP thread count (0: runtime default)");

  auto* certify = app.add_subcommand("certify-flatness", "Certify that no Taylor form of degree <= pmax survives");
  certify->add_option("--family", cfg.family, "earring | spheres | x-axis")
      ->check(CLI::IsMember({"earring", "spheres", "x-axis"}));
  certify->add_option("--dim", cfg.dim, "Ambient dimension (spheres: >= 3)");
  certify->add_option("--pmax", cfg.pmax, "Highest degree to certify");
  certify->add_option("--r", cfg.r, "Sampling radius around the origin");
  certify->add_option("--count", cfg.count, "Number of secant directions");
  certify->add_option("--seed", cfg.seed, "Sampling seed");
  certify->add_option("--tol", cfg.tol, "Relative singular-value threshold");
  certify->add_option("--max-index", cfg.max_index, "Earring: sample circles 1..N only");
  certify->add_option("--points", cfg.points_path, "CSV of zero-set points instead of a family");
  certify->add_flag("--header", cfg.header, "Point CSV has a header row");
  add_output_options(certify, cfg);

  auto* loj = app.add_subcommand("loj-exponent", "Per-annulus Lojasiewicz exponent estimates");
  loj->add_option("--field", cfg.field, "earring | sq | axis | flat-radial");
  loj->add_option("--zero", cfg.zero, "earring | origin | x-axis (default: the field's zero set)");
  loj->add_option("--k", cfg.k_range, "Dyadic annuli a..b");
  loj->add_option("--samples", cfg.samples, "Samples per annulus");
  loj->add_option("--seed", cfg.seed, "Sampling seed");
  loj->add_option("--floor", cfg.floor, "Exclude samples with distance <= floor");
  loj->add_option("--dim", cfg.dim, "Dimension for sq/axis/flat-radial");
  add_output_options(loj, cfg);

  auto* bound = app.add_subcommand("flatness-bound", "sup |f|/d^N over a ball, N = 1..nmax");
  bound->add_option("--field", cfg.field, "earring | sq | axis | flat-radial");
  bound->add_option("--mode", cfg.mode, "norm | set")->check(CLI::IsMember({"norm", "set"}));
  bound->add_option("--zero", cfg.zero, "Zero set for set mode");
  bound->add_option("--nmax", cfg.nmax, "Largest exponent N");
  bound->add_option("--radius", cfg.radius, "Ball radius");
  bound->add_option("--samples", cfg.samples, "Sample count");
  bound->add_option("--seed", cfg.seed, "Sampling seed");
  bound->add_option("--c-bound", cfg.c_bound, "Constant above which a sample counts as a violation");
  bound->add_option("--dim", cfg.dim, "Dimension for sq/axis/flat-radial");
  add_output_options(bound, cfg);

  auto* jets = app.add_subcommand("jet-report", "Tangent and arc-restriction predicates per degree");
  jets->add_option("--family", cfg.family, "Preset arc family (earring)");
  jets->add_option("--n", cfg.circles, "Earring preset: circles 1..n");
  jets->add_option("--mmax", cfg.mmax, "Highest degree");
  jets->add_option("--K", cfg.jet_order, "Jet order (default 2*mmax)");
  jets->add_option("--tol", cfg.tol, "Relative singular-value threshold");
  auto* arcs_opt = jets->add_option("--arcs", cfg.arcs_path, "JSON file of arc jets");
  jets->add_option("--arc-csv", cfg.arc_csv_paths, "CSV arc samples (s, x1..xn); repeatable")->excludes(arcs_opt);
  jets->add_flag("--header", cfg.header, "Arc CSV files have a header row");
  add_output_options(jets, cfg);

  auto* distance = app.add_subcommand("distance", "Append the distance to the earring to each CSV point");
  distance->add_option("--in", cfg.in_path, "Point CSV (default stdin)");
  distance->add_option("--out", cfg.out_path, "Output CSV (default stdout)");
  distance->add_flag("--header", cfg.header, "Input has / output gets a header row");

  auto* witness = app.add_subcommand("witness-eval", "Append a named field's value to each CSV point");
  witness->add_option("--field", cfg.field, "earring | sq | axis | flat-radial");
  witness->add_option("--in", cfg.in_path, "Point CSV (default stdin)");
  witness->add_option("--out", cfg.out_path, "Output CSV (default stdout)");
  witness->add_flag("--header", cfg.header, "Input has / output gets a header row");
  witness->add_option("--dim", cfg.dim, "Dimension when the input is empty");

  std::vector<std::string> argv_store{"flatcert"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cfg.threads > 0) kernels::set_threads(cfg.threads);
    Emitter emit(cfg, out);
    if (certify->parsed()) return cmd_certify_flatness(cfg, emit);
    if (loj->parsed()) return cmd_loj_exponent(cfg, emit);
    if (bound->parsed()) return cmd_flatness_bound(cfg, emit);
    if (jets->parsed()) return cmd_jet_report(cfg, emit);
    if (distance->parsed()) return cmd_distance(cfg, emit);
    if (witness->parsed()) return cmd_witness_eval(cfg, emit);
  } catch (const std::exception& e) {
    err << "flatcert: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace flatcert::cli
