#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ausglue/errors.hpp"
#include "ausglue/report.hpp"
#include "ausglue/tower.hpp"

using namespace ausglue;

namespace {

constexpr int kExitFailedClaim = 1;
constexpr int kExitInputError = 2;

struct RunConfig {
  std::string dynkin;
  std::string orientation = "linear";
  std::string quiver_file;
  std::string nakayama;
  std::string auslander_of;
  int k = 1;
  int n = 1;
  bool glued = false;
  int budget = 500;
  std::string field;
  std::string dot_path;
  std::string json_path;
  bool quiet = false;
};

struct Source {
  FinCategory algebra;
  std::string description;
  std::optional<DynkinSpec> dynkin;
};

Source load_source(const RunConfig& cfg) {
  int given = !cfg.dynkin.empty() + !cfg.quiver_file.empty() + !cfg.nakayama.empty() + !cfg.auslander_of.empty();
  if (given != 1) throw InvalidParams("give exactly one of --dynkin, --quiver, --nakayama, --auslander-of");
  Source s;
  if (!cfg.dynkin.empty()) {
    DynkinSpec spec = DynkinSpec::parse(cfg.dynkin, cfg.orientation);
    s.algebra = path_category(spec);
    s.description = spec.name() + " " + spec.orientation_string();
    s.dynkin = spec;
  } else if (!cfg.quiver_file.empty()) {
    QuiverSpecFile f = load_quiver_spec(cfg.quiver_file);
    s.algebra = category_from_presentation(f.presentation);
    s.description = cfg.quiver_file;
    if (f.dynkin && f.presentation.relations().empty()) s.dynkin = f.dynkin;
  } else if (!cfg.nakayama.empty()) {
    auto comma = cfg.nakayama.find(',');
    if (comma == std::string::npos) throw InvalidParams("--nakayama expects m,l");
    int m = 0, l = 0;
    try {
      m = std::stoi(cfg.nakayama.substr(0, comma));
      l = std::stoi(cfg.nakayama.substr(comma + 1));
    } catch (const std::exception&) {
      throw InvalidParams("--nakayama expects two integers m,l");
    }
    s.algebra = category_from_presentation(nakayama_linear(m, l));
    s.description = "Nakayama(" + std::to_string(m) + "," + std::to_string(l) + ")";
  } else {
    DynkinSpec spec = DynkinSpec::parse(cfg.auslander_of, cfg.orientation);
    s.algebra = auslander_algebra(knit(path_category(spec)));
    s.description = "Auslander(" + spec.name() + " " + spec.orientation_string() + ")";
  }
  return s;
}

GlueInput higher_input(const Source& src, const RunConfig& cfg) {
  GlueInput in;
  in.algebra = src.algebra;
  in.cluster = cluster_tilting_from_tau_n(src.algebra, cfg.n);
  in.labels = cluster_labels(src.algebra, in.cluster);
  in.n = cfg.n;
  in.k = cfg.k;
  return in;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidParams("cannot write " + path);
  out << text;
}

int cmd_ar(const RunConfig& cfg) {
  Source src = load_source(cfg);
  if (!cfg.glued) {
    ARQuiver q = knit(src.algebra, cfg.budget);
    emit(ar_dot(q), cfg.dot_path);
    if (!cfg.json_path.empty()) emit(ar_json(q), cfg.json_path);
    return 0;
  }
  Glued s;
  if (cfg.n == 1) {
    ARQuiver q = knit(src.algebra, cfg.budget);
    s = build_sk(src.algebra, cfg.k, &q);
  } else {
    s = build_mk(higher_input(src, cfg));
  }
  emit(glued_dot(s), cfg.dot_path);
  if (!cfg.json_path.empty()) emit(glued_json(s), cfg.json_path);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  Source src = load_source(cfg);
  TowerReport r;
  if (cfg.n == 1) {
    r = src.dynkin ? verify_theorem_dynkin(*src.dynkin, cfg.k)
                   : verify_theorem_hereditary(src.algebra, cfg.k, src.description);
  } else {
    r = verify_theorem_higher(higher_input(src, cfg), src.description);
  }
  std::string json = report_json(r);
  if (cfg.json_path.empty()) {
    std::cout << json;
  } else {
    emit(json, cfg.json_path);
    if (!cfg.quiet) {
      int failed = 0;
      for (const auto& c : r.claims) failed += c.status == "fail";
      std::cout << r.input << " k=" << r.k << " n=" << r.n << ": " << (r.passed() ? "pass" : "fail") << " ("
                << r.claims.size() << " claims, " << failed << " failed)\n";
    }
  }
  return r.passed() ? 0 : kExitFailedClaim;
}

int cmd_angles(const RunConfig& cfg) {
  if (cfg.n < 2) throw InvalidParams("angles need n >= 2");
  Source src = load_source(cfg);
  GlueInput in = higher_input(src, cfg);
  auto ct = is_cluster_tilting(in.cluster, in.n, in.algebra);
  if (!ct.ok) throw NotClusterTilting(ct.witness);
  auto angles = connecting_angles(in);
  if (!cfg.json_path.empty()) emit(angles_json(angles), cfg.json_path);
  if (cfg.json_path != "-")
    for (const auto& a : angles) std::cout << a.str() << "\n";
  return 0;
}

void add_source_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--dynkin", cfg.dynkin, "Dynkin type such as A3 or D4");
  cmd->add_option("--orientation", cfg.orientation, "linear, alt, or one f/b flag per edge");
  cmd->add_option("--quiver", cfg.quiver_file, "bound quiver spec file");
  cmd->add_option("--nakayama", cfg.nakayama, "linear Nakayama algebra m,l");
  cmd->add_option("--auslander-of", cfg.auslander_of, "Auslander algebra of a Dynkin type");
  cmd->add_option("--k", cfg.k, "number of glued copies beyond the first")->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", cfg.n, "cluster tilting degree")->check(CLI::PositiveNumber);
  cmd->add_option("--field", cfg.field, "q for the rationals, or a prime such as 32003");
  cmd->add_option("--json", cfg.json_path, "write JSON here ('-' for stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Glued higher Auslander algebras: AR quivers, verification reports, connecting angles"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* ar = app.add_subcommand("ar", "AR quiver as DOT (and JSON)");
  add_source_options(ar, cfg);
  ar->add_flag("--glued", cfg.glued, "quiver of the glued category instead");
  ar->add_option("--budget", cfg.budget, "knitting vertex budget")->check(CLI::PositiveNumber);
  ar->add_option("--dot", cfg.dot_path, "write DOT here instead of stdout");

  auto* verify = app.add_subcommand("verify", "JSON verification report; exit 1 if a claim fails");
  add_source_options(verify, cfg);
  verify->add_flag("--quiet", cfg.quiet, "no summary line when writing JSON to a file");

  auto* angles = app.add_subcommand("angles", "connecting angles of a cluster tilting subcategory");
  add_source_options(angles, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    Field f = cfg.field.empty() ? field_from_env(Field::prime()) : Field::parse(cfg.field);
    FieldGuard guard(f);
    if (ar->parsed()) return cmd_ar(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return cmd_angles(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
