#include "oscfreq/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <variant>

#include "oscfreq/errors.hpp"
#include "oscfreq/exact.hpp"
#include "oscfreq/iaff.hpp"
#include "oscfreq/model.hpp"
#include "oscfreq/reference.hpp"
#include "oscfreq/spec_io.hpp"
#include "oscfreq/sweep.hpp"

namespace oscfreq::cli {

namespace {

constexpr std::array<double, 11> kTable1Amplitudes = {0.02, 0.04, 0.1, 0.16, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
constexpr std::array<double, 7> kTable2Amplitudes = {0.1, 0.2, 0.4, 0.5, 5.0, 10.0, 100.0};

// ---------------------------------------------------------------------------
// Tabular output

using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

std::string format_number(double x, bool csv) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), csv ? "%.17g" : "%.7f", x);
  return buf.data();
}

std::string cell_text(const Cell& c, bool csv) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d, csv);
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return csv ? "" : "-";
}

std::string render(const Table& table, bool csv) {
  std::ostringstream os;
  if (csv) {
    for (std::size_t i = 0; i < table.header.size(); ++i) os << (i ? "," : "") << table.header[i];
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i], true);
      os << '\n';
    }
    return os.str();
  }

  std::vector<std::size_t> width(table.header.size());
  for (std::size_t i = 0; i < width.size(); ++i) width[i] = table.header[i].size();
  std::vector<std::vector<std::string>> text;
  for (const auto& row : table.rows) {
    auto& line = text.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(cell_text(row[i], false));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << "  ";
      os << std::string(width[i] - cells[i].size(), ' ') << cells[i];
    }
    os << '\n';
  };
  emit(table.header);
  for (const auto& line : text) emit(line);
  return os.str();
}

void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open '" + tmp.string() + "' for writing");
    f << content;
    f.flush();
    if (!f) {
      f.close();
      std::filesystem::remove(tmp);
      throw Error("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot move output into '" + path + "': " + ec.message());
  }
}

// ---------------------------------------------------------------------------
// Config resolution

struct Resolved {
  OscillatorSpec spec;
  EvalContext ctx;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read spec file '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

ToleranceProfile tolerances(const RunConfig& cfg) {
  ToleranceProfile tol;
  if (cfg.rel_tol) {
    tol.quad_rel_tol = *cfg.rel_tol;
    tol.ode_rel_tol = *cfg.rel_tol;
  }
  tol.validate();
  return tol;
}

Resolved resolve_spec(const RunConfig& cfg) {
  if (cfg.preset && cfg.spec_file) throw DomainError("give either --preset or --spec, not both");
  EvalContext ctx;
  ctx.tol = tolerances(cfg);
  if (cfg.spec_file) return {parse_spec(read_file(*cfg.spec_file)), ctx};
  if (!cfg.preset) throw DomainError("an oscillator is required: use --preset NAME or --spec FILE");

  std::map<std::string, double> params;
  if (cfg.lambda) params["lambda"] = *cfg.lambda;
  if (cfg.epsilon) params["epsilon"] = *cfg.epsilon;
  OscillatorSpec spec = preset(*cfg.preset, params);
  if (*cfg.preset == "stretched-wire" || *cfg.preset == "stretched-wire-cubic") ctx.wire_lambda = cfg.lambda;
  return {std::move(spec), ctx};
}

std::vector<Method> resolve_methods(const RunConfig& cfg, const std::vector<std::string>& fallback) {
  const auto& tokens = cfg.methods.empty() ? fallback : cfg.methods;
  std::vector<Method> out;
  for (const auto& t : tokens) out.push_back(Method::parse(t, cfg.k));
  if (out.empty()) throw DomainError("method list must not be empty");
  return out;
}

double require_amplitude(const RunConfig& cfg) {
  if (!cfg.amplitude) throw DomainError("--amplitude is required for '" + cfg.command + "'");
  if (!(*cfg.amplitude > 0.0)) throw DomainError("--amplitude must be > 0");
  return *cfg.amplitude;
}

Cell opt(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

// ---------------------------------------------------------------------------
// Commands

Table cmd_freq(const RunConfig& cfg) {
  const Resolved r = resolve_spec(cfg);
  const double a = require_amplitude(cfg);
  Table t{{"method", "A", "omega", "period", "k"}, {}};
  for (const Method& m : resolve_methods(cfg, {"iaff"})) {
    const MethodResult res = evaluate_method(r.spec, a, m, r.ctx);
    t.rows.push_back({m.name(), a, res.omega, res.period, opt(res.k)});
  }
  return t;
}

Table cmd_period(const RunConfig& cfg) {
  const Resolved r = resolve_spec(cfg);
  const double a = require_amplitude(cfg);
  Table t{{"method", "A", "T", "T1", "T2"}, {}};
  for (const Method& m : resolve_methods(cfg, {"iaff"})) {
    const MethodResult res = evaluate_method(r.spec, a, m, r.ctx);
    t.rows.push_back({m.name(), a, res.period, opt(res.plus_branch_period), opt(res.minus_branch_period)});
  }
  return t;
}

Table cmd_sweep(const RunConfig& cfg) {
  const Resolved r = resolve_spec(cfg);
  if (!cfg.a_start || !cfg.a_end || !cfg.points) {
    throw DomainError("sweep needs --a-start, --a-end and --points");
  }
  const auto amplitudes = amplitude_grid(*cfg.a_start, *cfg.a_end, *cfg.points, cfg.log_spaced);
  const auto methods = resolve_methods(cfg, {"iaff", "hb1", "exact-quad"});
  const auto rows = evaluate_sweep(r.spec, amplitudes, methods, r.ctx);

  Table t;
  t.header.push_back("A");
  for (const Method& m : methods) t.header.push_back("omega_" + m.name());
  for (const Method& m : methods) {
    if (!m.is_exact()) t.header.push_back("err_pct_" + m.name());
  }
  for (const SweepRow& row : rows) {
    std::vector<Cell> cells{row.amplitude};
    for (double w : row.omega) cells.emplace_back(w);
    for (double e : row.err_pct) cells.emplace_back(e);
    t.rows.push_back(std::move(cells));
  }
  return t;
}

Table table1(const RunConfig& cfg) {
  const double lambda = cfg.lambda.value_or(0.5);
  EvalContext ctx;
  ctx.tol = tolerances(cfg);
  const OscillatorSpec cubic = taylor_cubic(lambda);
  const OscillatorSpec wire = preset("stretched-wire", {{"lambda", lambda}});
  Table t{{"A", "omega_iaff", "omega_belendez", "omega_exact"}, {}};
  for (double a : kTable1Amplitudes) {
    t.rows.push_back({a, frequency(cubic, a, ctx.tol).omega, belendez_wire_frequency(lambda, a),
                      exact_frequency(wire, a, ctx.tol)});
  }
  return t;
}

Table table2(const RunConfig& cfg) {
  const double eps = cfg.epsilon.value_or(1.0);
  const ToleranceProfile tol = tolerances(cfg);
  const OscillatorSpec spec = preset("mixed-parity", {{"epsilon", eps}});
  Table t{{"A", "T_iaff", "T_exact", "err_pct"}, {}};
  for (double a : kTable2Amplitudes) {
    const double t_iaff = period_mixed(spec, a, tol).period;
    const double t_exact = exact_period_mixed(spec, a, tol);
    t.rows.push_back({a, t_iaff, t_exact, 100.0 * std::abs(t_iaff - t_exact) / t_exact});
  }
  return t;
}

Table cmd_table(const RunConfig& cfg) {
  if (cfg.preset == "table1") return table1(cfg);
  if (cfg.preset == "table2") return table2(cfg);
  throw DomainError("table needs --preset table1 or --preset table2");
}

Table cmd_compare(const RunConfig& cfg) {
  const Resolved r = resolve_spec(cfg);
  const double a = require_amplitude(cfg);
  std::vector<std::string> fallback = {"iaff", "hb1"};
  if (cfg.k) fallback.push_back("fixed-k");
  if (r.ctx.wire_lambda) fallback.push_back("belendez");
  fallback.push_back("exact-ode");
  const auto methods = resolve_methods(cfg, fallback);

  const double omega_exact = evaluate_method(r.spec, a, Method{MethodKind::ExactQuad}, r.ctx).omega;
  Table t{{"method", "omega", "period", "err_pct"}, {}};
  for (const Method& m : methods) {
    const MethodResult res = evaluate_method(r.spec, a, m, r.ctx);
    t.rows.push_back({m.name(), res.omega, res.period, 100.0 * std::abs(res.omega - omega_exact) / omega_exact});
  }
  t.rows.push_back({std::string("exact-quad"), omega_exact, 2.0 * std::numbers::pi / omega_exact, 0.0});
  return t;
}

}  // namespace

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, int& exit_code) {
  RunConfig cfg;
  CLI::App app{"Approximate and exact frequencies of conservative nonlinear oscillators u'' + f(u) = 0", "oscfreq"};
  app.add_option("command", cfg.command, "freq | period | sweep | table | compare")
      ->required()
      ->check(CLI::IsMember({"freq", "period", "sweep", "table", "compare"}));
  app.add_option("--preset", cfg.preset,
                 "stretched-wire, stretched-wire-cubic, power-3-4, mixed-parity; table1/table2 for 'table'");
  app.add_option("--spec", cfg.spec_file, "JSON spec file")->check(CLI::ExistingFile);
  app.add_option("--lambda", cfg.lambda, "stretched-wire lambda in (0, 1]");
  app.add_option("--epsilon", cfg.epsilon, "mixed-parity epsilon");
  app.add_option("--amplitude", cfg.amplitude, "release amplitude A > 0");
  app.add_option("--a-start", cfg.a_start, "first sweep amplitude");
  app.add_option("--a-end", cfg.a_end, "last sweep amplitude");
  app.add_option("--points", cfg.points, "sweep point count (>= 2)");
  app.add_flag("--log", cfg.log_spaced, "log-spaced sweep");
  app.add_option("--method", cfg.methods, "iaff, fixed-k, hb1, belendez, exact-quad, exact-ode")->delimiter(',');
  app.add_option("--k", cfg.k, "collocation value for fixed-k, in (0, 1]");
  app.add_option("--rel-tol", cfg.rel_tol, "relative tolerance for quadrature and ODE integration");
  app.add_option("--output", cfg.output, "write to FILE instead of stdout");
  app.add_option("--format", cfg.format, "csv or text")->check(CLI::IsMember({"csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e);
    return std::nullopt;
  }
  exit_code = 0;
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Table table;
    if (cfg.command == "freq") {
      table = cmd_freq(cfg);
    } else if (cfg.command == "period") {
      table = cmd_period(cfg);
    } else if (cfg.command == "sweep") {
      table = cmd_sweep(cfg);
    } else if (cfg.command == "table") {
      table = cmd_table(cfg);
    } else if (cfg.command == "compare") {
      table = cmd_compare(cfg);
    } else {
      throw DomainError("unknown command '" + cfg.command + "'");
    }
    const bool csv = cfg.format ? *cfg.format == "csv" : cfg.command == "sweep";
    const std::string text = render(table, csv);
    if (cfg.output) {
      write_atomically(*cfg.output, text);
    } else {
      out << text;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "oscfreq: error: " << e.what() << '\n';
    return 1;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  int code = 0;
  auto cfg = parse_command_line(argc, argv, code);
  if (!cfg) return code;
  return run(*cfg, out, err);
}

}  // namespace oscfreq::cli
