// Command-line front end: frequency and period sweeps of the Duffing
// oscillator as CSV, plus a single-point comparison of every method.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lplde/errors.hpp"
#include "lplde/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 1;
constexpr int kExitAllRowsFailed = 2;

struct Options {
  std::optional<double> omega, mu, amplitude, min, max;
  int steps = 100;
  int order = 3;
  std::string methods = "lp3,lplde_pms,lplde_printed,engine_n";
  std::string out;
  bool use_printed_pms = false;
};

void add_common(CLI::App* cmd, Options& o, bool ranged) {
  cmd->add_option("--omega", o.omega, "Linear frequency omega (default 1)");
  cmd->add_option("--mu", o.mu, "Cubic coupling mu (default 1)");
  cmd->add_option("--amplitude", o.amplitude, "Amplitude A (default 1)");
  cmd->add_option("--order", o.order, "Expansion order of the engine column")->capture_default_str();
  cmd->add_option("--out", o.out, "Output path (stdout when omitted)");
  if (!ranged) return;
  cmd->add_option("--min", o.min, "Lower end of the swept parameter");
  cmd->add_option("--max", o.max, "Upper end of the swept parameter");
  cmd->add_option("--steps", o.steps, "Number of grid points")->capture_default_str();
  cmd->add_option("--methods", o.methods, "Comma-separated subset of "
                  "lp3,lplde_pms,lplde_printed,engine_n,exact")->capture_default_str();
  cmd->add_flag("--use-printed-pms", o.use_printed_pms,
                "Report the printed PMS frequency in the lplde_pms column");
}

lplde::SweepConfig to_config(const Options& o, lplde::SweepMode mode) {
  lplde::SweepConfig c;
  c.mode = mode;
  c.omega = o.omega.value_or(1.0);
  c.mu = o.mu.value_or(1.0);
  c.amplitude = o.amplitude.value_or(1.0);
  const double default_min = mode == lplde::SweepMode::MU ? -0.9 : 0.1;
  c.min = o.min.value_or(default_min);
  c.max = o.max.value_or(10.0);
  c.steps = o.steps;
  c.engine_order = o.order;
  c.methods = lplde::parse_methods(o.methods);
  c.use_printed_pms = o.use_printed_pms;
  c.output_path = o.out;
  return c;
}

template <typename Write>
int emit(const std::string& path, Write&& write) {
  if (path.empty()) {
    write(std::cout);
    return kExitOk;
  }
  std::ofstream file(path);
  if (!file) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitInvalidConfig;
  }
  write(file);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lindstedt-Poincare with linear delta expansion for the Duffing oscillator"};
  app.require_subcommand(1);

  Options o;
  auto* amp = app.add_subcommand("sweep-amplitude", "Omega^2 versus amplitude");
  auto* mu = app.add_subcommand("sweep-mu", "Period versus mu");
  auto* err = app.add_subcommand("sweep-error", "Relative period error versus mu > 0");
  auto* show = app.add_subcommand("show", "Every method at a single point");
  for (auto* cmd : {amp, mu, err}) add_common(cmd, o, true);
  add_common(show, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalidConfig;
  }

  try {
    if (show->parsed()) {
      lplde::ModelSpec spec{o.omega.value_or(1.0), o.mu.value_or(1.0), o.amplitude.value_or(1.0),
                            0.0, o.order};
      const lplde::ShowReport report = lplde::show(spec, o.order);
      return emit(o.out, [&](std::ostream& os) { lplde::write_show(os, report); });
    }
    const lplde::SweepMode mode = amp->parsed()  ? lplde::SweepMode::AMPLITUDE
                                  : mu->parsed() ? lplde::SweepMode::MU
                                                 : lplde::SweepMode::ERROR;
    const lplde::SweepTable table = lplde::run_sweep(to_config(o, mode));
    const int rc = emit(o.out, [&](std::ostream& os) { lplde::write_csv(os, table); });
    if (rc != kExitOk) return rc;
    return table.all_failed() ? kExitAllRowsFailed : kExitOk;
  } catch (const lplde::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
}
