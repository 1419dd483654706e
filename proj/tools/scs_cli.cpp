// scs: point evaluations, amplitude scans, heatmaps and invariant suites for
// entangled spin coherent states.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 degenerate state (point only).

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "scs/scan.hpp"
#include "scs/verify.hpp"

namespace {

using scs::scan::Mode;
using scs::scan::UsageError;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

struct Flags {
  std::string mode = "pure";
  double j1 = 0.5;
  double j2 = 0.5;
  std::string z1 = "1";
  std::string z2 = "1";
  std::string z1b = "1";
  std::string z2b = "1";
  double phi = 0.0;
  double phi2 = 0.0;
  double p1 = 0.5;
  std::string preset;
  double zmin = 0.0;
  double zmax = 3.0;
  int steps = 151;
  std::string out;
  std::uint64_t seed = 42;
  unsigned threads = 0;
};

struct Options {
  CLI::Option* mode = nullptr;
  CLI::Option* j1 = nullptr;
  CLI::Option* j2 = nullptr;
  CLI::Option* phi = nullptr;
  CLI::Option* phi2 = nullptr;
  CLI::Option* p1 = nullptr;
  CLI::Option* z1b = nullptr;
  CLI::Option* z2b = nullptr;
};

Options add_state_flags(CLI::App* cmd, Flags& f) {
  Options o;
  o.mode = cmd->add_option("--mode", f.mode, "pure or mixed")
               ->check(CLI::IsMember({"pure", "mixed"}));
  o.j1 = cmd->add_option("--j1", f.j1, "spin of subsystem 1 (0.5, 1, 1.5, ...)");
  o.j2 = cmd->add_option("--j2", f.j2, "spin of subsystem 2");
  o.phi = cmd->add_option("--phi", f.phi, "relative phase (component 1)");
  o.phi2 = cmd->add_option("--phi2", f.phi2, "relative phase of component 2");
  o.p1 = cmd->add_option("--p1", f.p1, "weight of component 1");
  o.z1b = cmd->add_option("--z1b", f.z1b, "component-2 amplitude Z1");
  o.z2b = cmd->add_option("--z2b", f.z2b, "component-2 amplitude Z2");
  cmd->add_option("--preset", f.preset, "fig1a..fig1d, fig2a..fig2c, fig3, fig4");
  return o;
}

scs::Complex complex_flag(const std::string& name, const std::string& text) {
  const auto z = scs::scan::parse_complex(text);
  if (!z) throw UsageError(name + ": cannot parse complex number '" + text + "'");
  return *z;
}

scs::SpinJ spin_flag(const std::string& name, double value) {
  try {
    return scs::SpinJ::from_value(value);
  } catch (const scs::InvalidSpin& e) {
    throw UsageError(name + ": " + e.what());
  }
}

// Preset first, explicit flags on top.
scs::scan::ScanConfig build_config(const Flags& f, const Options& o) {
  scs::scan::ScanConfig config;
  config.j1 = spin_flag("--j1", f.j1);
  config.j2 = spin_flag("--j2", f.j2);
  config.z1b = complex_flag("--z1b", f.z1b);
  config.z2b = complex_flag("--z2b", f.z2b);
  config.phi = f.phi;
  config.phi2 = f.phi2;
  config.p1 = f.p1;
  config.mode = f.mode == "mixed" ? Mode::Mixed : Mode::Pure;
  if (!f.preset.empty()) {
    scs::scan::apply_preset(f.preset, config);
    if (o.mode->count()) config.mode = f.mode == "mixed" ? Mode::Mixed : Mode::Pure;
    if (o.j1->count()) config.j1 = spin_flag("--j1", f.j1);
    if (o.j2->count()) config.j2 = spin_flag("--j2", f.j2);
    if (o.phi->count()) config.phi = f.phi;
    if (o.phi2->count()) config.phi2 = f.phi2;
    if (o.p1->count()) config.p1 = f.p1;
    if (o.z1b->count()) config.z1b = complex_flag("--z1b", f.z1b);
    if (o.z2b->count()) config.z2b = complex_flag("--z2b", f.z2b);
  }
  config.zmin = f.zmin;
  config.zmax = f.zmax;
  config.steps = f.steps;
  return config;
}

int run_point(const Flags& f, const Options& o) {
  scs::scan::ScanConfig config = build_config(f, o);
  if (!(config.p1 >= 0.0 && config.p1 <= 1.0)) {
    throw UsageError("--p1 must lie in [0, 1]");
  }
  const scs::Complex z1 = complex_flag("--z1", f.z1);
  const scs::Complex z2 = complex_flag("--z2", f.z2);
  scs::scan::PointRequest request;
  request.mode = config.mode;
  request.comp1 = scs::scan::pure_params(config, z1, z2);
  const auto mixture = scs::scan::mixture_at(config, z1, z2);
  request.comp2 = mixture.comp2;
  request.p1 = config.p1;
  try {
    std::cout << scs::scan::point_report(request).dump(2) << '\n';
  } catch (const scs::DegenerateState& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  }
  return 0;
}

int run_scan(const Flags& f, const Options& o) {
  const scs::scan::ScanConfig config = build_config(f, o);
  config.validate();
  const auto rows = scs::scan::run_scan(config, f.threads);
  const std::string csv = scs::scan::render_csv(rows, config.mode);
  if (f.out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream file(f.out, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + f.out + "' for writing");
    file << csv;
  }
  if (const auto degenerate = scs::scan::count_degenerate(rows); degenerate > 0) {
    std::cerr << "degenerate grid points: " << degenerate << '\n';
  }
  return 0;
}

int run_heatmap(const std::string& input, const std::string& out) {
  std::ifstream file(input, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + input + "'");
  const std::string csv((std::istreambuf_iterator<char>(file)),
                        std::istreambuf_iterator<char>());
  const std::string pgm = scs::scan::csv_to_pgm(csv);
  if (out.empty()) {
    std::cout << pgm;
  } else {
    std::ofstream image(out, std::ios::binary);
    if (!image) throw UsageError("cannot open '" + out + "' for writing");
    image << pgm;
  }
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed) {
  if (!scs::verify::is_known_suite(suite)) {
    throw UsageError("unknown suite '" + suite + "'");
  }
  bool ok = true;
  for (const auto& r : scs::verify::run_suite(suite, seed)) {
    std::cout << scs::verify::format_result(r) << '\n';
    ok = ok && r.passed;
  }
  std::cout << (ok ? "all invariants passed" : "invariant failures") << '\n';
  return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement of spin coherent states"};
  app.require_subcommand(1);

  Flags point_flags;
  auto* point = app.add_subcommand("point", "evaluate one parameter point (JSON)");
  const Options point_opts = add_state_flags(point, point_flags);
  point->add_option("--z1", point_flags.z1, "amplitude Z1 (re or re+imi)");
  point->add_option("--z2", point_flags.z2, "amplitude Z2");

  Flags scan_flags;
  auto* scan = app.add_subcommand("scan", "grid scan over real amplitudes (CSV)");
  const Options scan_opts = add_state_flags(scan, scan_flags);
  scan->add_option("--zmin", scan_flags.zmin, "lower amplitude bound");
  scan->add_option("--zmax", scan_flags.zmax, "upper amplitude bound");
  scan->add_option("--steps", scan_flags.steps, "grid points per axis");
  scan->add_option("--out", scan_flags.out, "output CSV path (default stdout)");
  scan->add_option("--seed", scan_flags.seed, "accepted for interface symmetry");
  scan->add_option("--threads", scan_flags.threads, "worker threads (0 = all)");

  std::string heat_in;
  std::string heat_out;
  auto* heatmap = app.add_subcommand("heatmap", "render scan CSV as binary PGM");
  heatmap->add_option("csv", heat_in, "scan CSV")->required();
  heatmap->add_option("--out", heat_out, "output PGM path (default stdout)");

  std::string suite = "all";
  std::uint64_t seed = 42;
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", suite, "su2, pure, mixed, oracle or all");
  verify->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*point) return run_point(point_flags, point_opts);
    if (*scan) return run_scan(scan_flags, scan_opts);
    if (*heatmap) return run_heatmap(heat_in, heat_out);
    if (*verify) return run_verify(suite, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const scs::InvalidMixture& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
