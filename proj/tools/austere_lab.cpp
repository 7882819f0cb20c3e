// Command-line surface: each verification campaign behind one subcommand,
// seeded and reproducible, with JSON (or CSV) reports.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "austere/campaigns.hpp"
#include "austere/matrix_io.hpp"

using namespace austere;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("AUSTERE_LAB_SEED")) return std::strtoull(env, nullptr, 10);
  return 12345;
}

int emit(const Report& rep, const std::string& out_path, const std::string& format) {
  const bool ok = rep.print(std::cerr);
  const std::string payload = (format == "csv") ? rep.to_csv() : rep.to_json().dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write report to '" << out_path << "'\n";
      return 2;
    }
    out << payload;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification lab for austere matrix families and their Dupin geometry"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.seed = default_seed();
  std::string field_str = "R";
  std::string out_path;
  std::string format = "json";

  app.set_config("--config", "", "read defaults from a TOML/INI file (flags win)");
  app.add_option("--seed", cfg.seed, "root random seed (env AUSTERE_LAB_SEED)");
  app.add_option("--trials", cfg.trials, "trial count override (0 = command default)");
  app.add_option("--threads", cfg.threads, "worker threads (0 = auto, 1 = serial)");
  app.add_option("--tol-structural", cfg.tol_structural, "structural tolerance");
  app.add_option("--tol-spectral", cfg.tol_spectral, "spectral tolerance");
  app.add_option("--out", out_path, "write the report to this path");
  app.add_option("--format", format, "report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto add_common = [&](CLI::App* sub, bool with_n, bool with_field) {
    sub->fallthrough();  // global flags may follow the subcommand
    if (with_n) sub->add_option("--n", cfg.n, "matrix size");
    if (with_field) sub->add_option("--field", field_str, "base field: R, C or H");
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "principal curvatures of one point");
  spectrum->add_option("--matrix", cfg.matrix_arg, "matrix file or diag:...[/sqrtK] shorthand");
  add_common(spectrum, false, true);

  add_common(app.add_subcommand("austere", "spectrum symmetry + flat normal bundle"), true, true);
  add_common(app.add_subcommand("flat-normal", "shape-operator commutators"), true, true);
  CLI::App* dupin = app.add_subcommand("dupin", "curvature-circle constancy");
  add_common(dupin, false, true);
  dupin->add_option("--trace-csv", cfg.trace_csv_path, "write one circle trace as CSV");
  add_common(app.add_subcommand("reducibility", "curvature-sphere span ranks"), false, true);
  add_common(app.add_subcommand("brackets", "conullity bracket obstructions"), false, false);
  add_common(app.add_subcommand("c4", "critical-orbit geometry"), false, true);
  add_common(app.add_subcommand("regularity", "Gram/eigenvalue dichotomy"), true, false);
  add_common(app.add_subcommand("subspace", "exact austere-subspace families"), true, false);
  add_common(app.add_subcommand("bound", "dimension bound ingredients"), false, false);
  add_common(app.add_subcommand("all", "every campaign at acceptance scale"), false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.field = parse_field(field_str);
    const Report rep = run_campaign(cfg);
    return emit(rep, out_path, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
