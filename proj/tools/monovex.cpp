// monovex: command-line front end for the monovex toolkit.
//
// Every subcommand reads a complex in the canonical JSON format (from
// --input, or stdin when it is absent or "-"), prints a JSON report on
// stdout and, with --out, also writes report.json plus any CSV/OFF files.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monovex/catalog.hpp"
#include "monovex/cubical.hpp"
#include "monovex/errors.hpp"
#include "monovex/export.hpp"
#include "monovex/fuzz.hpp"
#include "monovex/grid_extension.hpp"
#include "monovex/homotopy.hpp"
#include "monovex/io.hpp"
#include "monovex/monotone_path.hpp"
#include "monovex/retraction.hpp"

namespace {

using nlohmann::json;
using namespace monovex;

constexpr int kExitUsage = 64;
constexpr int kExitViolation = 1;

struct Common {
  std::string input;
  std::string out;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open input file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

SpanComplex load(const Common& c) { return parse_complex(read_input(c.input)); }

json point_json(const Point& p) {
  json arr = json::array();
  for (const auto& x : p) arr.push_back(x.str());
  return arr;
}

void write_file(const std::string& dir, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(dir);
  std::ofstream out(std::filesystem::path(dir) / name);
  if (!out) throw PreconditionError("cannot write " + name + " in '" + dir + "'");
  out << text;
}

int emit(const Common& c, const json& report, int code) {
  std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!c.out.empty()) write_file(c.out, "report.json", text);
  return code;
}

Dyadic parse_dyadic_flag(const std::string& text, const char* flag) {
  try {
    return Dyadic::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(flag) + ": " + e.what());
  }
}

// ------------------------------------------------------------------ commands

int run_check(const Common& c) {
  SpanComplex a = load(c);
  MonovexVerdict v = is_monovex(a);
  json r{{"command", "check"}, {"dim", a.dim()}, {"boxes", a.boxes().size()}, {"monovex", v.is_monovex}};
  r["witness"] = v.witness ? json::array({point_json(v.witness->first), point_json(v.witness->second)}) : json(nullptr);
  int code = 0;
  if (v.witness && monotone_reachable(a, v.witness->first, v.witness->second)) {
    r["error"] = "witness pair is reachable";
    code = kExitViolation;
  }
  return emit(c, r, code);
}

int run_path(const Common& c, const std::string& from, const std::string& to) {
  SpanComplex a = load(c);
  Point x = parse_point(from), y = parse_point(to);
  auto path = monotone_reachable(a, x, y);
  json r{{"command", "path"}, {"from", point_json(x)}, {"to", point_json(y)}, {"reachable", path.has_value()}};
  int code = 0;
  if (path) {
    r["path"] = json::parse(dump_path(*path));
    bool valid = validate_monotone(*path, a);
    r["valid"] = valid;
    if (!valid) code = static_cast<int>(ErrorKind::kInvariant);
    if (!c.out.empty()) write_file(c.out, "mesh.off", off_polylines({path->waypoints}));
  }
  return emit(c, r, code);
}

int run_betti(const Common& c, const std::string& resolution, bool cycles) {
  SpanComplex a = load(c);
  json r{{"command", "betti"}, {"dim", a.dim()}};
  int code = 0;
  if (!a.is_closed()) {
    r["method"] = "order-complex";
    r["betti"] = order_complex_betti(a);
    return emit(c, r, code);
  }
  Lattice grid = resolution.empty() || resolution == "aligned_grid"
                     ? aligned_grid(a)
                     : Lattice::uniform(a.dim(), parse_dyadic_flag(resolution, "--resolution"));
  auto cubes = CubicalComplex::from_complex(a, grid);
  BettiReport b = betti_numbers(cubes);
  r["method"] = "cubical";
  r["resolution"] = grid.steps().front().str();
  r["betti"] = b.betti;
  r["cells"] = b.cells;
  r["euler"] = b.euler;
  r["euler_consistent"] = b.euler_consistent;
  r["components_consistent"] = b.components_consistent;
  r["boundary_squared_zero"] = b.boundary_squared_zero;
  if (!b.ok()) code = kExitViolation;
  if (cycles && !c.out.empty()) {
    std::vector<std::pair<Point, Point>> segments;
    for (const auto& cycle : h1_representatives(cubes)) segments.insert(segments.end(), cycle.begin(), cycle.end());
    write_file(c.out, "mesh.off", off_segments(segments));
  }
  return emit(c, r, code);
}

int run_extend(const Common& c, int depth) {
  SpanComplex a = load(c);
  const std::size_t m = std::min<std::size_t>(a.dim(), 2);
  auto corners = snapped_hull_corners(a, m);
  ExtensionField field = extend(cube_seed(m, corners), depth, a);
  PropertyReport p = check_property_P(field);
  json r{{"command", "extend"}, {"domain_dim", m}, {"depth", depth}, {"samples", field.evaluated()}};
  json seed = json::array();
  for (const auto& q : corners) seed.push_back(point_json(q));
  r["seed"] = seed;
  r["property_P"] = {{"boxes", p.boxes_checked}, {"samples", p.samples_checked}, {"violations", p.violations.size()}};
  std::size_t holder_violations = 0;
  if (depth >= 1) {
    HolderReport h = holder_report(field);
    json levels = json::array();
    for (const auto& l : h.levels) {
      json M = json::array(), N = json::array();
      for (const auto& v : l.max_M) M.push_back(v.str());
      for (const auto& v : l.max_N) N.push_back(v.str());
      levels.push_back({{"level", l.level}, {"rotation_axis", l.rotation_axis}, {"cells", l.cells}, {"max_M", M},
                        {"max_N", N}, {"halving_violations", l.halving_violations},
                        {"growth_violations", l.growth_violations}});
    }
    json est = json::array();
    for (const auto& e : h.exponent_estimates) est.push_back(e ? json(*e) : json(nullptr));
    r["holder"] = {{"levels", levels}, {"exponent_estimates", est}, {"violations", h.violations()}};
    holder_violations = h.violations();
  }
  if (!c.out.empty()) write_file(c.out, "field.csv", field_csv(field));
  return emit(c, r, p.ok() && holder_violations == 0 ? 0 : kExitViolation);
}

int run_contract(const Common& c, int levels, const std::string& delta, const std::string& to, int gdelta_depth) {
  SpanComplex a = load(c);
  const Dyadic delta0 = parse_dyadic_flag(delta, "--delta");
  Point x0 = to.empty() ? default_samples(a).front() : parse_point(to);
  HomotopyField h = contract_to_point(a, x0, levels, delta0);
  json r{{"command", "contract"}, {"base", point_json(x0)}, {"levels", levels}, {"delta0", delta0.str()},
         {"samples", h.samples.size()}};
  std::size_t junction = h.junction_violations(), range = h.range_violations(a), ends = h.endpoint_violations();
  Dyadic worst(0);
  for (const auto& j : h.junctions) worst = max(worst, j.defect);
  r["cantor"] = {{"junctions", h.junctions.size()}, {"junction_violations", junction},
                 {"max_junction_defect", worst.str()}, {"range_violations", range},
                 {"endpoint_violations", ends}};
  std::size_t gdelta_violations = 0;
  if (gdelta_depth > 0) {
    PathField g = build_g_delta(a, delta0, gdelta_depth);
    GDeltaAudit au = audit_g_delta(g, default_samples(a), gdelta_depth);
    r["g_delta"] = {{"delta", delta0.str()}, {"depth", gdelta_depth}, {"samples", au.samples},
                    {"start_violations", au.start_violations}, {"end_violations", au.end_violations},
                    {"hull_violations", au.hull_violations}, {"range_violations", au.range_violations},
                    {"max_start", au.max_start.str()}, {"max_end", au.max_end.str()},
                    {"max_hull", au.max_hull.str()}};
    gdelta_violations = au.violations();
  }
  if (!c.out.empty()) {
    write_file(c.out, "homotopy.csv", homotopy_csv(h));
    write_file(c.out, "mesh.off", off_polylines(homotopy_trajectories(h)));
  }
  bool ok = junction == 0 && range == 0 && ends == 0 && gdelta_violations == 0;
  return emit(c, r, ok ? 0 : kExitViolation);
}

std::vector<Point> exterior_points(const SpanComplex& a, std::size_t count, std::uint64_t seed) {
  std::vector<Point> hull_pts;
  for (const auto& b : a.boxes()) {
    hull_pts.push_back(b.lower_corner());
    hull_pts.push_back(b.upper_corner());
  }
  BoxRegion hull = bhull(hull_pts);
  std::mt19937_64 rng(seed);
  constexpr int kBits = 6;
  std::vector<Point> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 1000 * count; ++attempt) {
    Point p(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Dyadic width = hull[i].hi() - hull[i].lo() + Dyadic(1);
      BigInt span = (width.scaled(kBits + 1)).floor();
      std::uniform_int_distribution<long long> u(0, static_cast<long long>(span));
      p[i] = hull[i].lo() - width.half() + Dyadic(BigInt(u(rng)), kBits);
    }
    if (!contains(a, p)) out.push_back(std::move(p));
  }
  return out;
}

int run_retract(const Common& c, const std::string& from, std::size_t iterations, std::size_t trials,
                std::uint64_t seed, std::size_t probes) {
  SpanComplex a = load(c);
  std::vector<Point> starts = from.empty() ? exterior_points(a, trials, seed) : std::vector<Point>{parse_point(from)};
  RetractionParams params;
  params.probes = probes;
  json traj = json::array();
  std::ostringstream csv;
  csv << "trajectory,k,distance,bound,ok\n";
  std::size_t violations = 0, unverified = 0, q_warnings = 0;
  for (std::size_t t = 0; t < starts.size(); ++t) {
    Trajectory tr = iterate_retraction(a, starts[t], iterations, params);
    violations += tr.violations();
    json steps = json::array();
    for (const auto& s : tr.steps) {
      unverified += s.delta_verified ? 0 : 1;
      q_warnings += s.q_order_ok ? 0 : 1;
      steps.push_back({{"x", point_json(s.x)}, {"g", point_json(s.g)}, {"d", s.d.str()}, {"d_next", s.d_next.str()},
                       {"q_size", s.q_size}, {"delta_verified", s.delta_verified}, {"q_order_ok", s.q_order_ok},
                       {"g_in_G", s.g_in_G}, {"F_in_G", s.f_in_G}, {"G_in_ball", s.G_in_ball},
                       {"ball_ok", s.ball_ok}, {"decay_ok", s.decay_ok}, {"within_eps", s.within_eps},
                       {"within_three_tenths", s.within_three_tenths}});
    }
    json dist = json::array();
    for (const auto& d : tr.distances) dist.push_back(d.str());
    traj.push_back({{"start", point_json(tr.start)}, {"distances", dist}, {"reached_set", tr.reached_set},
                    {"violations", tr.violations()}, {"steps", steps}});
    std::istringstream rows(decay_csv(tr));
    std::string line;
    std::getline(rows, line);
    while (std::getline(rows, line)) csv << t << "," << line << "\n";
  }
  json r{{"command", "retract"}, {"iterations", iterations}, {"probes", probes}, {"trajectories", traj},
         {"violations", violations}, {"unverified_radii", unverified}, {"q_order_warnings", q_warnings}};
  if (!c.out.empty()) write_file(c.out, "decay.csv", csv.str());
  return emit(c, r, violations == 0 ? 0 : kExitViolation);
}

int run_minkowski(const Common& c, const std::string& lo, const std::string& hi) {
  SpanComplex a = load(c);
  BoxRegion r = BoxRegion::closed(parse_point(lo), parse_point(hi));
  SpanComplex sum = minkowski_box(a, r);
  std::cout << dump_complex(sum);
  if (!c.out.empty()) {
    MonovexVerdict before = is_monovex(a), after = is_monovex(sum);
    json report{{"command", "minkowski"}, {"input_monovex", before.is_monovex}, {"sum_monovex", after.is_monovex}};
    write_file(c.out, "report.json", report.dump(2) + "\n");
    write_file(c.out, "sum.json", dump_complex(sum));
    write_file(c.out, "mesh.off", off_boxes(sum));
  }
  return 0;
}

int run_examples(const Common& c, const std::string& name, const CatalogParams& params, bool list) {
  if (list || name.empty()) {
    for (const auto& n : catalog_names()) std::cout << n << "\t" << catalog_help(n) << "\n";
    return 0;
  }
  SpanComplex a = catalog(name, params);
  std::cout << dump_complex(a);
  if (!c.out.empty()) {
    write_file(c.out, "complex.json", dump_complex(a));
    if (name == "example3" || name == "example4") {
      Dyadic h = params.h.is_zero() ? Dyadic::pow2(name == "example3" ? -3 : -4) : params.h;
      VoxelGrid grid = name == "example3" ? example3_raster(h) : example4_raster(h, params.t);
      write_file(c.out, "mesh.off", voxel_off(grid));
    } else {
      write_file(c.out, "mesh.off", off_boxes(a));
    }
  }
  return 0;
}

int run_fuzz_command(const Common& c, const FuzzConfig& config) {
  FuzzReport rep = run_fuzz(config);
  json trials = json::array();
  for (const auto& t : rep.trials) {
    trials.push_back({{"index", t.index}, {"dim", t.dim}, {"found", t.found}, {"attempts", t.attempts},
                      {"boxes", t.complex.boxes().size()}, {"betti", t.betti}, {"acyclic", t.acyclic}});
  }
  json discoveries = json::array();
  for (auto i : rep.discoveries) discoveries.push_back(json::parse(dump_complex(rep.trials[i].complex)));
  json r{{"command", "fuzz"}, {"mode", to_string(config.mode)}, {"seed", config.seed}, {"trials", config.trials},
         {"not_found", rep.not_found}, {"violations", rep.violations}, {"discoveries", discoveries},
         {"results", trials}};
  return emit(c, r, rep.violations.empty() ? 0 : kExitViolation);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for monovex sets over axis-aligned box complexes"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", common.input, "Complex file (canonical JSON); stdin when absent or '-'");
    sub->add_option("--out", common.out, "Directory for report.json and auxiliary files");
  };

  auto* check = app.add_subcommand("check", "Decide monovexity and print a witness pair if not");
  add_common(check);

  std::string from, to;
  auto* path = app.add_subcommand("path", "Monotone path between two points");
  add_common(path);
  path->add_option("--from", from, "Start point, e.g. 1/2,0")->required();
  path->add_option("--to", to, "End point")->required();

  std::string resolution;
  bool cycles = false;
  auto* betti = app.add_subcommand("betti", "Betti numbers over GF(2)");
  add_common(betti);
  betti->add_option("--resolution", resolution, "Grid step (dyadic) or 'aligned_grid'");
  betti->add_flag("--cycles", cycles, "Write H1 cycle representatives to mesh.off");

  int depth = 4;
  auto* ext = app.add_subcommand("extend", "Grid extension of the snapped hull corners, with Property (P) and Hoelder table");
  add_common(ext);
  ext->add_option("--depth", depth, "Refinement depth")->check(CLI::Range(0, 20));

  int levels = 3, gdelta_depth = 3;
  std::string delta = "1/2";
  auto* contract = app.add_subcommand("contract", "Cantor homotopy to a base point and g_delta audit");
  add_common(contract);
  contract->add_option("--depth", levels, "Cantor levels")->check(CLI::Range(1, 24));
  contract->add_option("--delta", delta, "delta_0 (dyadic)");
  contract->add_option("--to", to, "Base point (default: first cell representative)");
  contract->add_option("--gdelta-depth", gdelta_depth, "Extension depth of the g_delta audit; 0 skips it")
      ->check(CLI::Range(0, 8));

  std::size_t iterations = 4, trials = 10, probes = 200;
  std::uint64_t seed = 1;
  auto* retract = app.add_subcommand("retract", "Iterated retraction with the decay audit");
  add_common(retract);
  retract->add_option("--from", from, "Start point (default: --trials random exterior points)");
  retract->add_option("--iterations", iterations, "Number of iterations K");
  retract->add_option("--trials", trials, "Random start points");
  retract->add_option("--seed", seed, "Seed for the start points");
  retract->add_option("--probes", probes, "Probes per local radius");

  std::string lo, hi;
  auto* mink = app.add_subcommand("minkowski", "Minkowski sum with a closed box; prints the sum");
  add_common(mink);
  mink->add_option("--lo", lo, "Lower corner of the box")->required();
  mink->add_option("--hi", hi, "Upper corner of the box")->required();

  std::string name, eps = "1/4", t_text = "1";
  int k_squares = 3;
  bool list = false;
  auto* examples = app.add_subcommand("examples", "Print a catalog complex");
  examples->add_option("name", name, "Example name");
  examples->add_option("--out", common.out, "Directory for complex.json and mesh.off");
  examples->add_option("--K", k_squares, "Squares in example1")->check(CLI::Range(1, 60));
  examples->add_option("--eps", eps, "eps of example2_closed");
  examples->add_option("--resolution", resolution, "Raster step of example3/example4");
  examples->add_option("--T", t_text, "Truncation of the line in example4");
  examples->add_flag("--list", list, "List the catalog");

  FuzzConfig fuzz;
  std::string mode = "closed";
  auto* fz = app.add_subcommand("fuzz", "Random monovex complexes and their homology");
  fz->add_option("--out", common.out, "Directory for report.json");
  fz->add_option("--mode", mode, "closed, open or half-open");
  fz->add_option("--trials", fuzz.trials, "Number of trials");
  fz->add_option("--seed", fuzz.seed, "Seed");
  fz->add_option("--dim", fuzz.dim, "Ambient dimension (0: random 1..3)")->check(CLI::Range(0, 3));
  fz->add_option("--boxes", fuzz.max_boxes, "Box budget")->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return run_check(common);
    if (*path) return run_path(common, from, to);
    if (*betti) return run_betti(common, resolution, cycles);
    if (*ext) return run_extend(common, depth);
    if (*contract) return run_contract(common, levels, delta, to, gdelta_depth);
    if (*retract) return run_retract(common, from, iterations, trials, seed, probes);
    if (*mink) return run_minkowski(common, lo, hi);
    if (*examples) {
      CatalogParams params;
      params.k_squares = k_squares;
      params.eps = parse_dyadic_flag(eps, "--eps");
      params.t = parse_dyadic_flag(t_text, "--T");
      if (!resolution.empty()) params.h = parse_dyadic_flag(resolution, "--resolution");
      return run_examples(common, name, params, list);
    }
    if (*fz) {
      fuzz.mode = parse_fuzz_mode(mode);
      return run_fuzz_command(common, fuzz);
    }
  } catch (const Error& e) {
    std::cerr << "monovex: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "monovex: internal error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::kInvariant);
  }
  return kExitUsage;
}
