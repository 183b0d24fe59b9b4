#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lplde/exact_oracle.hpp"
#include "lplde/model.hpp"

namespace lplde {

enum class SweepMode { AMPLITUDE, MU, ERROR };

/// Approximations that can appear as CSV columns. EXACT is always written as
/// the `exact` column and is accepted in method lists for convenience.
enum class Method { LP3, LPLDE_PMS, LPLDE_PRINTED, ENGINE_N, EXACT };

std::string_view column_name(Method method);

/// Parses a comma-separated list such as "lp3,lplde_pms,engine_n" (case
/// insensitive). Throws InvalidConfig on unknown or empty entries.
std::vector<Method> parse_methods(std::string_view list);

struct SweepConfig {
  SweepMode mode = SweepMode::AMPLITUDE;
  double omega = 1.0;
  double mu = 1.0;         ///< fixed in AMPLITUDE mode
  double amplitude = 1.0;  ///< fixed in MU and ERROR modes
  double min = 0.1;
  double max = 10.0;
  int steps = 100;
  std::vector<Method> methods{Method::LP3, Method::LPLDE_PMS, Method::LPLDE_PRINTED,
                              Method::ENGINE_N};
  int engine_order = 3;
  /// Report the printed PMS frequency in the lplde_pms column.
  bool use_printed_pms = false;
  std::string output_path;  ///< empty means stdout

  /// Throws InvalidConfig.
  void validate() const;
  [[nodiscard]] double grid_point(int i) const;
};

/// Approximate Omega^2 of one method at one model point. For mu < 0 the
/// PMS-based methods fall back to lambda = 0 and set `pms_fallback`.
struct MethodValue {
  double omega_squared = 0.0;
  double lambda = 0.0;
  bool pms_fallback = false;
};

MethodValue evaluate_method(Method method, const ModelSpec& spec, int engine_order,
                            bool use_printed_pms = false);

struct SweepRow {
  double param = 0.0;
  double exact = 0.0;
  std::vector<double> values;  ///< Omega^2 (AMPLITUDE) or period (MU, ERROR)
  std::vector<double> errors;  ///< relative error in Omega or in the period
  std::vector<std::string> flags;
  bool failed = false;
};

struct SweepTable {
  SweepMode mode = SweepMode::AMPLITUDE;
  std::vector<Method> methods;  ///< column order, EXACT removed
  std::vector<SweepRow> rows;

  [[nodiscard]] bool all_failed() const;
};

SweepTable sweep_amplitude(const SweepConfig& config);
SweepTable sweep_mu(const SweepConfig& config);
SweepTable sweep_error(const SweepConfig& config);
SweepTable run_sweep(const SweepConfig& config);

/// 12 significant digits, `nan` for missing values.
std::string format_number(double value);

/// Header `param,exact,<method>...,err_<method>...,flags`, one line per row.
void write_csv(std::ostream& out, const SweepTable& table);

struct ShowLine {
  std::string method;
  double omega_squared = 0.0;
  double period = 0.0;
  double err_omega_squared = 0.0;  ///< relative to the exact Omega^2
  double err_period = 0.0;
  double lambda = 0.0;
  std::string flags;
};

/// Every method and every exact route at a single model point.
struct ShowReport {
  ModelSpec spec;
  std::vector<ShowLine> lines;
};

ShowReport show(const ModelSpec& spec, int engine_order);
void write_show(std::ostream& out, const ShowReport& report);

}  // namespace lplde
