// npannulus: command-line front end.
//
// Exit status: 0 success, 2 invariant violation, 3 input error, 4 solver
// failure.  Failures print one JSON error record on stderr.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "npannulus/npannulus.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace npannulus;

namespace {

constexpr int kExitInvariant = 2;
constexpr int kExitInput = 3;
constexpr int kExitSolver = 4;

int exit_code_for(const Error& e) {
  const std::string kind = e.kind();
  if (kind == "solver") return kExitSolver;
  if (kind == "decay" || kind == "realization") return kExitInvariant;
  return kExitInput;
}

void print_error(const std::string& kind, const std::string& message, int code) {
  json rec = {{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
  std::cerr << rec.dump() << '\n';
}

/// Run settings after merging the --config file with command-line flags.
struct RunConfig {
  std::optional<std::string> map_path;
  std::optional<double> ri;
  std::optional<double> re;
  std::optional<int> order;
  int nq = 512;
  std::string out_dir;
  std::optional<double> rho;
  std::vector<double> ratios{0.5, 0.8, 0.95, 1.1 / 1.15};
};

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("config file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ArgumentError("config file: top level must be an object");
  RunConfig cfg;
  const fs::path base = fs::path(path).parent_path();
  try {
    for (const auto& [key, v] : doc.items()) {
      if (key == "map") {
        const fs::path p = v.get<std::string>();
        cfg.map_path = (p.is_relative() ? base / p : p).string();
      } else if (key == "ri") {
        cfg.ri = v.get<double>();
      } else if (key == "re") {
        cfg.re = v.get<double>();
      } else if (key == "order") {
        cfg.order = v.get<int>();
      } else if (key == "nq") {
        cfg.nq = v.get<int>();
      } else if (key == "out") {
        cfg.out_dir = v.get<std::string>();
      } else if (key == "rho") {
        cfg.rho = v.get<double>();
      } else if (key == "ratios") {
        cfg.ratios = v.get<std::vector<double>>();
      } else {
        throw ArgumentError("config file: unknown key '" + key + "'");
      }
    }
  } catch (const json::type_error& e) {
    throw ArgumentError(std::string("config file: wrong value type: ") + e.what());
  }
  return cfg;
}

struct Globals {
  std::string config;
  std::string out_dir;
  bool quiet = false;
};

/// Per-subcommand flags; unset values fall back to the config file.
struct Flags {
  std::string map;
  std::optional<double> ri, re, rho, radius;
  std::optional<int> order, nq;
  std::string out;
  std::string svg;
  std::string ratios;
  std::string which = "np";
  std::string anchor = "inner";
  int m_max = 400;
  int top = 20;
};

class Context {
 public:
  Context(const Globals& g, const Flags& f, int default_order) : quiet_(g.quiet) {
    if (!g.config.empty()) cfg_ = load_config(g.config);
    if (!g.out_dir.empty()) cfg_.out_dir = g.out_dir;
    if (!f.map.empty()) cfg_.map_path = f.map;
    if (f.ri) cfg_.ri = f.ri;
    if (f.re) cfg_.re = f.re;
    if (f.order) cfg_.order = *f.order;
    if (!cfg_.order) cfg_.order = default_order;
    if (f.nq) cfg_.nq = *f.nq;
    if (f.rho) cfg_.rho = f.rho;
    if (!f.ratios.empty()) cfg_.ratios = parse_ratios(f.ratios);
    if (*cfg_.order < 1) throw ArgumentError("order must be >= 1");
    if (cfg_.nq < 16 || cfg_.nq % 2 != 0) throw ArgumentError("nq must be even and >= 16");
    if (cfg_.rho && !(*cfg_.rho >= 0.0 && *cfg_.rho < 1.0)) throw ArgumentError("rho must lie in [0, 1)");
    for (double r : cfg_.ratios) {
      if (!(r > 0.0 && r < 1.0)) throw ArgumentError("every ratio must lie in (0, 1)");
    }
  }

  const RunConfig& config() const { return cfg_; }
  int order() const { return *cfg_.order; }

  AnnulusGeometry geometry() const {
    AnnulusGeometry g = cfg_.map_path ? load_map_file(*cfg_.map_path) : reference_geometry();
    return AnnulusGeometry(g.map, cfg_.ri.value_or(g.r_inner), cfg_.re.value_or(g.r_outer));
  }

  /// Geometry that has passed the univalence diagnostics.
  AnnulusGeometry checked_geometry() const {
    const auto g = geometry();
    const auto rep = validate_geometry(g, 2048);
    if (!rep.ok()) {
      throw GeometryError("geometry validation failed: derivative zeros outside r_i = " +
                          std::to_string(rep.derivative_zeros_outside_inner) +
                          ", inner self-intersects = " + std::to_string(rep.inner_self_intersects) +
                          ", outer self-intersects = " + std::to_string(rep.outer_self_intersects) +
                          ", curves cross = " + std::to_string(rep.curves_cross));
    }
    return g;
  }

  fs::path resolve(const std::string& file) const {
    fs::path p = file;
    if (p.is_relative() && !cfg_.out_dir.empty()) p = fs::path(cfg_.out_dir) / p;
    return p;
  }

  /// Writes `text` to `file`, or to stdout when `file` is empty.
  void emit(const std::string& file, const std::string& text) const {
    if (file.empty()) {
      std::cout << text;
      return;
    }
    const fs::path p = resolve(file);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw ArgumentError("cannot write '" + p.string() + "'");
    out << text;
    log("wrote " + p.string());
  }

  void log(const std::string& msg) const {
    if (!quiet_) std::cerr << msg << '\n';
  }

  static std::vector<double> parse_ratios(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ArgumentError("cannot parse ratio '" + item + "'");
      }
    }
    if (out.empty()) throw ArgumentError("empty ratio list");
    return out;
  }

 private:
  RunConfig cfg_;
  bool quiet_;
};

std::string to_text(const CsvTable& t) {
  std::ostringstream os;
  t.write(os);
  return os.str();
}

std::string spectrum_csv(const std::vector<double>& computed, const ReferenceComparison& cmp) {
  CsvTable t{{"index", "lambda", "reference", "rel_diff"}, {}};
  for (std::size_t k = 0; k < computed.size(); ++k) {
    const auto& p = cmp.paired[k];
    t.rows.push_back({std::to_string(p.index), format_number(p.computed), format_number(p.reference),
                      format_number(p.rel_diff)});
  }
  return to_text(t);
}

struct SpectrumChecks {
  double twin = 0.0;
  bool contained = true;
  bool ok() const { return twin < 1e-8 && contained; }
};

SpectrumChecks check_spectrum(const SpectrumReport& s) {
  return {twin_asymmetry(s.realized),
          s.realized.front() <= 0.5 + 1e-8 && s.realized.back() >= -0.5 - 1e-8};
}

json gershgorin_report(const AnnulusGeometry& geom, const GrunskyTable& table, int order,
                       std::optional<double> rho_override, int m_max) {
  const auto scaled = scale_table(table, geom.r_inner);
  const double rho = rho_override.value_or(scaled.rho_fit);
  const double r = geom.ratio();
  const auto B = build_reduced_b(geom, scaled, order);
  const auto mu = eigenvalues(B.entries);
  const auto disks = analytic_disks(r, rho, m_max);
  std::vector<Disk> plain;
  for (const auto& d : disks) plain.push_back(d.disk());
  const auto tail = analytic_tail_interval(r, rho, m_max);
  const auto analytic = check_containment(mu, plain, tail);
  std::vector<Disk> entry;
  for (const auto& e : entry_disks(B.entries)) entry.push_back(e.disk());
  const auto ent = check_containment(mu, entry);
  const auto disjoint = disjointness_threshold(r, rho, disks);

  json jd = json::array();
  for (const auto& d : disks) {
    jd.push_back({{"m", d.m},
                  {"center", d.center},
                  {"radius", d.radius},
                  {"M1_row", d.m1_row},
                  {"M1_col", d.m1_col},
                  {"M2_row", d.m2_row},
                  {"M2_col", d.m2_col}});
  }
  json je = json::array();
  for (const auto& e : analytic.entries) {
    je.push_back({{"mu", {e.value.real(), e.value.imag()}}, {"nearest_m", e.nearest < 0 ? 0 : e.nearest + 1},
                  {"margin", e.margin}});
  }
  json out = {{"ratio", r},
              {"order", order},
              {"rho", rho},
              {"rho_source", rho_override ? "override" : "fit"},
              {"rho_fit", scaled.rho_fit},
              {"m_max", m_max},
              {"disks", jd},
              {"tail_interval", {tail.first, tail.second}},
              {"containment",
               {{"ok", analytic.ok()},
                {"worst_margin", analytic.worst_margin},
                {"violations", analytic.violations},
                {"eigenvalues", je}}},
              {"entry_containment",
               {{"ok", ent.ok()}, {"worst_margin", ent.worst_margin}, {"violations", ent.violations}}}};
  if (disjoint.m0) {
    out["m0"] = *disjoint.m0;
  } else {
    out["m0"] = nullptr;
    out["m0_reason"] = disjoint.reason;
  }
  return out;
}

struct CrossRow {
  double grunsky = 0.0;
  double oracle = 0.0;
};

std::string crosscheck_csv(const std::vector<double>& g, const std::vector<double>& o, double* worst) {
  CsvTable t{{"index", "grunsky", "oracle", "abs_gap", "rel_gap"}, {}};
  *worst = 0.0;
  for (std::size_t k = 0; k < std::min(g.size(), o.size()); ++k) {
    const double gap = std::abs(g[k] - o[k]);
    *worst = std::max(*worst, gap);
    t.rows.push_back({std::to_string(k + 1), format_number(g[k]), format_number(o[k]), format_number(gap),
                      format_number(gap / std::abs(g[k]))});
  }
  return to_text(t);
}

// --- subcommands -------------------------------------------------------------

int cmd_grunsky(const Context& ctx, const Flags& f) {
  const auto geom = ctx.geometry();
  const auto table = compute_table(geom.map, ctx.order());
  std::ostringstream os;
  write_grunsky_csv(os, table);
  ctx.emit(f.out, os.str());
  if (f.radius) {
    // the report goes to stdout unless the table already does
    const auto rep = check_strong_grunsky(table, *f.radius);
    json j = {{"radius", rep.radius}, {"max_row_sum", rep.max_row_sum()}, {"flagged_rows", rep.flagged_rows},
              {"row_sums", rep.row_sums}, {"ok", rep.ok()}};
    (f.out.empty() ? std::cerr : std::cout) << j.dump() << '\n';
    if (!rep.ok()) return kExitInvariant;
  }
  return 0;
}

int cmd_matrix(const Context& ctx, const Flags& f) {
  const auto geom = ctx.geometry();
  const int N = ctx.order();
  const auto table = compute_table(geom.map, N);
  std::ostringstream os;
  if (f.which == "np") {
    write_matrix_text(os, build_np_matrix(geom, table, N).entries);
  } else {
    write_matrix_text(os, build_reduced_b(geom, scale_table(table, geom.r_inner), N).entries);
  }
  ctx.emit(f.out, os.str());
  return 0;
}

int cmd_spectrum(const Context& ctx, const Flags& f) {
  const auto geom = ctx.checked_geometry();
  const int N = ctx.order();
  const auto spec = np_spectrum(geom, compute_table(geom.map, N), N);
  const auto cmp = compare_to_reference(spec.realized, truncated_annulus_spectrum(geom.ratio(), N));
  ctx.emit(f.out, spectrum_csv(spec.realized, cmp));
  if (!f.svg.empty()) {
    ScatterSeries s{"distorted", "#1f77b4", {}, spec.realized};
    for (std::size_t k = 0; k < spec.realized.size(); ++k) s.x.push_back(static_cast<double>(k + 1));
    ctx.emit(f.svg, svg_scatter("NP eigenvalues", "index", "eigenvalue", {s}));
  }
  const auto checks = check_spectrum(spec);
  ctx.log("max_imag " + format_number(spec.max_imag) + ", twin asymmetry " + format_number(checks.twin));
  return checks.ok() ? 0 : kExitInvariant;
}

int cmd_sweep(const Context& ctx, const Flags& f) {
  const auto geom = ctx.geometry();
  const bool fixed_inner = f.anchor == "inner";
  const auto pts = sweep_hausdorff(geom.map, fixed_inner ? geom.r_inner : geom.r_outer,
                                   fixed_inner ? SweepAnchor::fixed_inner : SweepAnchor::fixed_outer,
                                   ctx.config().ratios, ctx.order());
  CsvTable t{{"r", "hausdorff"}, {}};
  ScatterSeries s{"d_H", "#1f77b4", {}, {}};
  bool all_ok = true;
  for (const auto& p : pts) {
    t.rows.push_back({format_number(p.ratio), p.hausdorff ? format_number(*p.hausdorff) : "nan"});
    if (p.hausdorff) {
      s.x.push_back(p.ratio);
      s.y.push_back(*p.hausdorff);
    } else {
      all_ok = false;
      ctx.log("ratio " + format_number(p.ratio) + " failed: " + p.error);
    }
  }
  ctx.emit(f.out, to_text(t));
  if (!f.svg.empty()) ctx.emit(f.svg, svg_scatter("Hausdorff distance to [-1/2, 1/2]", "r", "d_H", {s}));
  return all_ok ? 0 : kExitInvariant;
}

int cmd_gershgorin(const Context& ctx, const Flags& f) {
  const auto geom = ctx.checked_geometry();
  const int N = ctx.order();
  if (f.m_max < 1) throw ArgumentError("mmax must be >= 1");
  const auto rep = gershgorin_report(geom, compute_table(geom.map, N), N, ctx.config().rho, f.m_max);
  ctx.emit(f.out, rep.dump(2) + "\n");
  return rep["containment"]["ok"].get<bool>() && rep["entry_containment"]["ok"].get<bool>() ? 0 : kExitInvariant;
}

int cmd_oracle(const Context& ctx, const Flags& f) {
  const auto geom = ctx.checked_geometry();
  const auto nq = static_cast<std::size_t>(ctx.config().nq);
  const auto A = assemble_oracle(geom, nq);
  for (const auto& w : A.warnings) ctx.log("warning: " + w);
  const auto spec = realize(eigenvalues(A.entries));
  CsvTable t{{"index", "lambda"}, {}};
  for (std::size_t k = 0; k < spec.realized.size(); ++k) {
    t.rows.push_back({std::to_string(k + 1), format_number(spec.realized[k])});
  }
  ctx.emit(f.out, to_text(t));
  return 0;
}

int cmd_crosscheck(const Context& ctx, const Flags& f) {
  const auto geom = ctx.checked_geometry();
  const int N = ctx.order();
  const auto nq = static_cast<std::size_t>(ctx.config().nq);
  const auto k = static_cast<std::size_t>(std::max(f.top, 1));
  const auto full_g = np_spectrum(geom, compute_table(geom.map, N), N).realized;
  const auto A = assemble_oracle(geom, nq);
  for (const auto& w : A.warnings) ctx.log("warning: " + w);
  const auto full_o = realize(eigenvalues(A.entries)).realized;
  double worst = 0.0;
  ctx.emit(f.out, crosscheck_csv(largest_magnitude(full_g, k), largest_magnitude(full_o, k), &worst));
  ctx.log("matched gap over the top " + std::to_string(k) + ": " + format_number(matched_gap(full_g, full_o, k)));
  return 0;
}

int cmd_reproduce(const Context& ctx, const Flags& f) {
  std::string dir = f.out.empty() ? ctx.config().out_dir : f.out;
  if (dir.empty()) dir = "reproduce_out";
  fs::create_directories(dir);
  const fs::path root = fs::absolute(dir);
  auto path = [&](const std::string& name) { return (root / name).string(); };

  const auto geom = ctx.checked_geometry();
  const int N = ctx.order();
  const auto nq = static_cast<std::size_t>(ctx.config().nq);
  const double r = geom.ratio();
  ctx.log("Grunsky table, order " + std::to_string(N));
  const auto table = compute_table(geom.map, N);
  ctx.log("NP matrix " + std::to_string(2 * (2 * N + 1)) + " x " + std::to_string(2 * (2 * N + 1)));
  const auto spec = np_spectrum(geom, table, N);
  const auto reference = truncated_annulus_spectrum(r, N);
  const auto cmp = compare_to_reference(spec.realized, reference);
  const auto checks = check_spectrum(spec);

  CsvTable eig{{"index", "distorted", "circular"}, {}};
  CsvTable rel{{"index", "circular", "distorted", "rel_diff"}, {}};
  ScatterSeries s_dist{"distorted annulus", "#1f77b4", {}, {}}, s_circ{"circular annulus", "#d62728", {}, {}};
  ScatterSeries s_rel{"|rel diff|", "#2ca02c", {}, {}};
  for (const auto& p : cmp.paired) {
    eig.rows.push_back({std::to_string(p.index), format_number(p.computed), format_number(p.reference)});
    rel.rows.push_back(
        {std::to_string(p.index), format_number(p.reference), format_number(p.computed), format_number(p.rel_diff)});
    s_dist.x.push_back(p.index);
    s_dist.y.push_back(p.computed);
    s_circ.x.push_back(p.index);
    s_circ.y.push_back(p.reference);
    s_rel.x.push_back(p.reference);
    s_rel.y.push_back(std::log10(std::max(std::abs(p.rel_diff), 1e-300)));
  }
  ctx.emit(path("eigenvalues.csv"), to_text(eig));
  ctx.emit(path("rel_diff.csv"), to_text(rel));
  ctx.emit(path("eigenvalues.svg"), svg_scatter("NP eigenvalues", "index", "eigenvalue", {s_dist, s_circ}));
  ctx.emit(path("rel_diff.svg"),
           svg_scatter("Relative difference to the circular annulus", "circular eigenvalue", "log10 |rel diff|",
                       {s_rel}));

  ctx.log("Gershgorin disks");
  bool disks_ok = true;
  json disks;
  if (geom.map.terms().empty()) {
    disks = {{"skipped", "all map coefficients vanish; the reduced matrix is diagonal"}};
  } else {
    disks = gershgorin_report(geom, table, N, ctx.config().rho, 400);
    disks_ok = disks["containment"]["ok"].get<bool>() && disks["entry_containment"]["ok"].get<bool>();
    ScatterSeries centers{"disk centers", "#9467bd", {}, {}}, mus{"eigenvalues of B", "#ff7f0e", {}, {}};
    for (const auto& d : disks["disks"]) {
      centers.x.push_back(d["m"].get<double>());
      centers.y.push_back(std::log10(d["center"].get<double>()));
    }
    std::size_t idx = 0;
    for (const auto& e : disks["containment"]["eigenvalues"]) {
      mus.x.push_back(static_cast<double>(++idx));
      mus.y.push_back(std::log10(std::max(std::abs(e["mu"][0].get<double>()), 1e-300)));
    }
    ctx.emit(path("disks.svg"), svg_scatter("Disk centers and eigenvalues of B", "m / index", "log10 value",
                                            {centers, mus}));
  }
  ctx.emit(path("disks.json"), disks.dump(2) + "\n");

  ctx.log("Nystrom cross-check, n_q = " + std::to_string(nq));
  const auto A = assemble_oracle(geom, nq);
  for (const auto& w : A.warnings) ctx.log("warning: " + w);
  const std::size_t top = 20;
  const auto full_o = realize(eigenvalues(A.entries)).realized;
  double rank_gap = 0.0;
  ctx.emit(path("crosscheck.csv"),
           crosscheck_csv(largest_magnitude(spec.realized, top), largest_magnitude(full_o, top), &rank_gap));
  const double gap = matched_gap(spec.realized, full_o, top);

  json summary = {{"order", N},
                  {"matrix_size", 2 * (2 * N + 1)},
                  {"ratio", r},
                  {"eigenvalue_count", spec.realized.size()},
                  {"max_imag", spec.max_imag},
                  {"twin_asymmetry", checks.twin},
                  {"contained", checks.contained},
                  {"max_abs_rel_diff", cmp.max_abs_rel_diff()},
                  {"gershgorin_ok", disks_ok},
                  {"nq", nq},
                  {"crosscheck_rank_gap", rank_gap},
                  {"crosscheck_matched_gap", gap}};
  ctx.emit(path("summary.json"), summary.dump(2) + "\n");
  return checks.ok() && disks_ok ? 0 : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neumann-Poincare spectrum of thin doubly connected domains"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--config", globals.config, "JSON run configuration");
  app.add_option("--out", globals.out_dir, "Output directory for relative output paths");
  app.add_flag("--quiet", globals.quiet, "Suppress progress messages");

  Flags flags;
  auto add_map = [&](CLI::App* sub) {
    sub->add_option("--map", flags.map, "Map file (JSON); defaults to the built-in reference map");
    sub->add_option("--ri", flags.ri, "Inner radius override");
    sub->add_option("--re", flags.re, "Outer radius override");
  };
  auto add_order = [&](CLI::App* sub) { sub->add_option("--order,-N", flags.order, "Truncation order N"); };
  auto add_out = [&](CLI::App* sub, const std::string& what) { sub->add_option("--out", flags.out, what); };

  auto* grunsky = app.add_subcommand("grunsky", "Grunsky coefficient table as CSV");
  add_map(grunsky);
  add_order(grunsky);
  add_out(grunsky, "CSV file");
  grunsky->add_option("--radius", flags.radius, "Radius for the strong Grunsky inequality report");

  auto* matrix = app.add_subcommand("matrix", "Truncated NP matrix or reduced matrix B as text");
  add_map(matrix);
  add_order(matrix);
  add_out(matrix, "Text file");
  matrix->add_option("--which", flags.which, "np or b")->check(CLI::IsMember({"np", "b"}));

  auto* spectrum = app.add_subcommand("spectrum", "NP eigenvalues with the circular reference");
  add_map(spectrum);
  add_order(spectrum);
  add_out(spectrum, "CSV file");
  spectrum->add_option("--svg", flags.svg, "Scatter plot");

  auto* sweep = app.add_subcommand("sweep", "Hausdorff distance to [-1/2, 1/2] over radius ratios");
  add_map(sweep);
  add_order(sweep);
  add_out(sweep, "CSV file");
  sweep->add_option("--ratios", flags.ratios, "Comma-separated ratios r_i/r_e");
  sweep->add_option("--anchor", flags.anchor, "Radius held fixed: inner or outer")
      ->check(CLI::IsMember({"inner", "outer"}));
  sweep->add_option("--svg", flags.svg, "Scatter plot");

  auto* gersh = app.add_subcommand("gershgorin", "Gershgorin disks and containment report");
  add_map(gersh);
  add_order(gersh);
  add_out(gersh, "JSON file");
  gersh->add_option("--rho", flags.rho, "Decay rate override");
  gersh->add_option("--mmax", flags.m_max, "Number of analytic disks");

  auto* oracle = app.add_subcommand("oracle", "Nystrom eigenvalues");
  add_map(oracle);
  oracle->add_option("--nq", flags.nq, "Nodes per curve");
  add_out(oracle, "CSV file");

  auto* cross = app.add_subcommand("crosscheck", "Grunsky matrix against the Nystrom oracle");
  add_map(cross);
  add_order(cross);
  cross->add_option("--nq", flags.nq, "Nodes per curve");
  cross->add_option("--top", flags.top, "Number of largest-magnitude eigenvalues");
  add_out(cross, "CSV file");

  auto* repro = app.add_subcommand("reproduce", "Full reference run: CSV, JSON and SVG artifacts");
  add_map(repro);
  add_order(repro);
  repro->add_option("--nq", flags.nq, "Nodes per curve");
  repro->add_option("--rho", flags.rho, "Decay rate override");
  add_out(repro, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("argument", e.what(), kExitInput);
    return kExitInput;
  }

  try {
    const Context ctx(globals, flags, *repro ? 250 : 100);
    if (*grunsky) return cmd_grunsky(ctx, flags);
    if (*matrix) return cmd_matrix(ctx, flags);
    if (*spectrum) return cmd_spectrum(ctx, flags);
    if (*sweep) return cmd_sweep(ctx, flags);
    if (*gersh) return cmd_gershgorin(ctx, flags);
    if (*oracle) return cmd_oracle(ctx, flags);
    if (*cross) return cmd_crosscheck(ctx, flags);
    if (*repro) return cmd_reproduce(ctx, flags);
  } catch (const Error& e) {
    const int code = exit_code_for(e);
    print_error(e.kind(), e.what(), code);
    return code;
  } catch (const fs::filesystem_error& e) {
    print_error("io", e.what(), kExitInput);
    return kExitInput;
  }
  return kExitInput;
}
