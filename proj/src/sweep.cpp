#include "lplde/sweep.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "lplde/closed_forms.hpp"
#include "lplde/engine.hpp"
#include "lplde/errors.hpp"
#include "lplde/pms.hpp"

namespace lplde {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void add_flag(std::vector<std::string>& flags, std::string flag) {
  if (std::find(flags.begin(), flags.end(), flag) == flags.end()) flags.push_back(std::move(flag));
}

double period_of(double omega_squared) {
  return omega_squared > 0.0 ? kTwoPi / std::sqrt(omega_squared) : kNaN;
}

double relative_error(double approx, double exact) { return std::abs(approx - exact) / exact; }

ModelSpec point_spec(const SweepConfig& c, double param) {
  ModelSpec s{c.omega, c.mu, c.amplitude, 0.0, c.engine_order};
  if (c.mode == SweepMode::AMPLITUDE) {
    s.amplitude = param;
  } else {
    s.mu = param;
  }
  return s;
}

std::vector<Method> columns(const std::vector<Method>& methods) {
  std::vector<Method> out;
  for (Method m : methods) {
    if (m != Method::EXACT && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

SweepRow compute_row(const SweepConfig& c, const std::vector<Method>& cols, double param) {
  SweepRow row;
  row.param = param;
  const ModelSpec spec = point_spec(c, param);
  const bool amplitude_mode = c.mode == SweepMode::AMPLITUDE;
  if (!spec.bounded()) {
    row.exact = kNaN;
    row.values.assign(cols.size(), kNaN);
    row.errors.assign(cols.size(), kNaN);
    row.flags.emplace_back("unbounded");
    row.failed = true;
    return row;
  }

  double exact_omega = kNaN;
  try {
    exact_omega = omega_exact(spec);
  } catch (const Error&) {
    add_flag(row.flags, "oracle_error");
    row.failed = true;
  }
  row.exact = amplitude_mode ? exact_omega * exact_omega : kTwoPi / exact_omega;

  for (Method m : cols) {
    const MethodValue mv = evaluate_method(m, spec, c.engine_order, c.use_printed_pms);
    if (mv.pms_fallback) add_flag(row.flags, "pms_fallback_lambda0");
    if (!(mv.omega_squared > 0.0)) add_flag(row.flags, "nonpositive_omega2");
    if (amplitude_mode) {
      row.values.push_back(mv.omega_squared);
      row.errors.push_back(mv.omega_squared > 0.0
                               ? relative_error(std::sqrt(mv.omega_squared), exact_omega)
                               : kNaN);
    } else {
      const double t = period_of(mv.omega_squared);
      row.values.push_back(t);
      row.errors.push_back(relative_error(t, row.exact));
    }
  }
  return row;
}

SweepTable sweep(const SweepConfig& config, SweepMode expected) {
  if (config.mode != expected) throw InvalidConfig("sweep called with a mismatched mode");
  config.validate();
  SweepTable table;
  table.mode = config.mode;
  table.methods = columns(config.methods);
  for (int i = 0; i < config.steps; ++i) {
    table.rows.push_back(compute_row(config, table.methods, config.grid_point(i)));
  }
  return table;
}

}  // namespace

std::string_view column_name(Method method) {
  switch (method) {
    case Method::LP3: return "lp3";
    case Method::LPLDE_PMS: return "lplde_pms";
    case Method::LPLDE_PRINTED: return "lplde_printed";
    case Method::ENGINE_N: return "engine_n";
    case Method::EXACT: return "exact";
  }
  return "?";
}

std::vector<Method> parse_methods(std::string_view list) {
  std::vector<Method> out;
  while (true) {
    const auto comma = list.find(',');
    const std::string token = lower(trim(list.substr(0, comma)));
    bool known = false;
    for (Method m : {Method::LP3, Method::LPLDE_PMS, Method::LPLDE_PRINTED, Method::ENGINE_N,
                     Method::EXACT}) {
      if (token == column_name(m)) {
        out.push_back(m);
        known = true;
      }
    }
    if (!known) throw InvalidConfig("unknown method '" + token + "'");
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

void SweepConfig::validate() const {
  if (steps < 2) throw InvalidConfig("steps must be at least 2");
  if (!(min < max)) throw InvalidConfig("min must be smaller than max");
  if (methods.empty()) throw InvalidConfig("no method selected");
  if (engine_order < 0 || engine_order > kMaxOrder) {
    throw InvalidConfig("engine order must lie in [0, " + std::to_string(kMaxOrder) + "]");
  }
  if (!(omega > 0.0)) throw InvalidConfig("omega must be positive");
  if (mode == SweepMode::AMPLITUDE && !(min > 0.0)) {
    throw InvalidConfig("amplitude sweep needs a positive range");
  }
  if (mode != SweepMode::AMPLITUDE && !(amplitude > 0.0)) {
    throw InvalidConfig("amplitude must be positive");
  }
  if (mode == SweepMode::ERROR && !(min > 0.0)) {
    throw InvalidConfig("error sweep is defined for mu > 0 only");
  }
}

double SweepConfig::grid_point(int i) const {
  if (i == steps - 1) return max;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

MethodValue evaluate_method(Method method, const ModelSpec& spec, int engine_order,
                            bool use_printed_pms) {
  const bool fallback = spec.mu < 0.0;
  const ModelSpec lp = spec.with_lambda(0.0);
  switch (method) {
    case Method::LP3:
      return {omega2_order3(lp).omega_squared, 0.0, false};
    case Method::LPLDE_PMS:
    case Method::LPLDE_PRINTED: {
      if (fallback) return {omega2_order3(lp).omega_squared, 0.0, true};
      const bool printed = method == Method::LPLDE_PRINTED || use_printed_pms;
      const FrequencyResult r = printed ? omega2_pms_printed(spec) : omega2_pms_derived(spec);
      return {r.omega_squared, r.lambda_used, false};
    }
    case Method::ENGINE_N: {
      const ModelSpec s = lp.with_order(engine_order);
      if (fallback) return {frequency_squared(run(s)).omega_squared, 0.0, true};
      const PmsResult r = pms_lambda_numeric(s);
      return {r.omega_squared, r.lambda, false};
    }
    case Method::EXACT:
      return {std::pow(omega_exact(spec), 2), 0.0, false};
  }
  return {kNaN, 0.0, false};
}

bool SweepTable::all_failed() const {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.failed; });
}

SweepTable sweep_amplitude(const SweepConfig& config) { return sweep(config, SweepMode::AMPLITUDE); }
SweepTable sweep_mu(const SweepConfig& config) { return sweep(config, SweepMode::MU); }
SweepTable sweep_error(const SweepConfig& config) { return sweep(config, SweepMode::ERROR); }

SweepTable run_sweep(const SweepConfig& config) {
  switch (config.mode) {
    case SweepMode::AMPLITUDE: return sweep_amplitude(config);
    case SweepMode::MU: return sweep_mu(config);
    case SweepMode::ERROR: return sweep_error(config);
  }
  throw InvalidConfig("unknown sweep mode");
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_csv(std::ostream& out, const SweepTable& table) {
  out << "param,exact";
  for (Method m : table.methods) out << ',' << column_name(m);
  for (Method m : table.methods) out << ",err_" << column_name(m);
  out << ",flags\n";
  for (const SweepRow& row : table.rows) {
    out << format_number(row.param) << ',' << format_number(row.exact);
    for (double v : row.values) out << ',' << format_number(v);
    for (double e : row.errors) out << ',' << format_number(e);
    out << ',';
    for (std::size_t i = 0; i < row.flags.size(); ++i) out << (i ? ";" : "") << row.flags[i];
    out << '\n';
  }
}

ShowReport show(const ModelSpec& spec, int engine_order) {
  spec.validate();
  if (!spec.bounded()) throw UnboundedMotion("show: omega^2 + mu A^2 <= 0");
  ShowReport report{spec, {}};

  const PeriodResult reference = spec.mu >= 0.0 ? period_elliptic(spec) : period_quadrature(spec);
  const double exact_t = reference.period;
  const double exact_w2 = std::pow(kTwoPi / exact_t, 2);

  auto exact_line = [&](const std::string& name, double period, std::string flags) {
    const double w2 = std::pow(kTwoPi / period, 2);
    report.lines.push_back({name, w2, period, relative_error(w2, exact_w2),
                            relative_error(period, exact_t), 0.0, std::move(flags)});
  };
  auto exact_route = [&](const std::string& name, auto&& route) {
    try {
      exact_line(name, route(spec).period, "");
    } catch (const Error&) {
      report.lines.push_back({name, kNaN, kNaN, kNaN, kNaN, 0.0, "unsupported"});
    }
  };
  exact_route("exact_elliptic", [](const ModelSpec& s) { return period_elliptic(s); });
  exact_route("exact_quadrature", [](const ModelSpec& s) { return period_quadrature(s); });
  exact_route("exact_ode", [](const ModelSpec& s) { return period_ode(s); });

  for (Method m : {Method::LP3, Method::LPLDE_PMS, Method::LPLDE_PRINTED, Method::ENGINE_N}) {
    const MethodValue mv = evaluate_method(m, spec, engine_order);
    const double t = period_of(mv.omega_squared);
    std::string flags = mv.pms_fallback ? "pms_fallback_lambda0" : "";
    if (!(mv.omega_squared > 0.0)) flags += flags.empty() ? "nonpositive_omega2" : ";nonpositive_omega2";
    report.lines.push_back({std::string(column_name(m)), mv.omega_squared, t,
                            relative_error(mv.omega_squared, exact_w2), relative_error(t, exact_t),
                            mv.lambda, flags});
  }
  return report;
}

void write_show(std::ostream& out, const ShowReport& report) {
  const ModelSpec& s = report.spec;
  out << "# omega=" << format_number(s.omega) << " mu=" << format_number(s.mu)
      << " amplitude=" << format_number(s.amplitude) << '\n';
  out << "method,omega2,period,err_omega2,err_period,lambda,flags\n";
  for (const ShowLine& l : report.lines) {
    out << l.method << ',' << format_number(l.omega_squared) << ',' << format_number(l.period) << ','
        << format_number(l.err_omega_squared) << ',' << format_number(l.err_period) << ','
        << format_number(l.lambda) << ',' << l.flags << '\n';
  }
}

}  // namespace lplde
