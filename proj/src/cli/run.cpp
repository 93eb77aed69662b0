#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "renyi/cli.hpp"
#include "renyi/density_json.hpp"
#include "renyi/entropy.hpp"
#include "renyi/errors.hpp"
#include "renyi/exponents.hpp"
#include "renyi/optimizer.hpp"

namespace renyi::cli {

namespace {

using nlohmann::ordered_json;

constexpr double kDefaultAlpha = 0.5;

// Closed-form comparisons for the optimize command.
constexpr double kGapTol = 1e-6;
constexpr double kRatioTol = 2e-3;

std::string command_name(Command c) {
  switch (c) {
    case Command::Constants: return "constants";
    case Command::Entropy: return "entropy";
    case Command::Verify: return "verify";
    case Command::Optimize: return "optimize";
    case Command::Report: return "report";
  }
  return "unknown";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

ordered_json num(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

ordered_json envelope(const RunConfig& cfg) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command_name(cfg.command);
  j["grid_n"] = cfg.grid_n;
  return j;
}

// A table of named rows, emitted as JSON or CSV.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<ordered_json>> rows;

  void write(const RunConfig& cfg, ordered_json head, std::ostream& os) const {
    if (cfg.format == OutputFormat::Csv) {
      for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
      os << '\n';
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          os << (i ? "," : "");
          const ordered_json& v = row[i];
          if (v.is_string()) {
            os << csv_quote(v.get<std::string>());
          } else if (v.is_boolean()) {
            os << (v.get<bool>() ? "true" : "false");
          } else if (v.is_number_integer()) {
            os << v.get<long long>();
          } else if (v.is_number()) {
            os << format_number(v.get<double>());
          } else if (!v.is_null()) {
            os << csv_quote(v.dump());
          }
        }
        os << '\n';
      }
      return;
    }
    ordered_json list = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json r;
      for (std::size_t i = 0; i < row.size(); ++i) r[columns[i]] = row[i];
      list.push_back(r);
    }
    head["rows"] = list;
    os << head.dump(2) << '\n';
  }
};

int cmd_constants(const RunConfig& cfg, std::ostream& os) {
  const double alpha = cfg.alpha.value_or(kDefaultAlpha);
  Table t;
  t.columns = {"r", "m", "alpha", "kind", "value"};
  for (double rv : cfg.r_values) {
    const Exponent r(rv);
    for (int m : cfg.m_values) {
      auto row = [&](ConstantKind kind, std::optional<double> a) {
        const EpiConstant c = make_constant(kind, r, m, a);
        t.rows.push_back({num(rv), m, a ? num(*a) : ordered_json(), to_string(kind), num(c.value)});
      };
      if (r.above_one()) {
        row(ConstantKind::RamSasonC, std::nullopt);
        row(ConstantKind::BobkovChistyakovC, std::nullopt);
        row(ConstantKind::LiAlpha, std::nullopt);
        row(ConstantKind::BobkovMarsigliettiAlpha, std::nullopt);
        row(ConstantKind::GeneralC, alpha);
      } else {
        row(ConstantKind::LogConcaveC, std::nullopt);
        row(ConstantKind::LogConcaveAlpha, std::nullopt);
        row(ConstantKind::LogConcaveGeneralC, alpha);
      }
    }
  }
  t.write(cfg, envelope(cfg), os);
  return 0;
}

int cmd_entropy(const RunConfig& cfg, std::ostream& os) {
  NumericsConfig nc;
  nc.grid_n = cfg.grid_n;
  Table t;
  t.columns = {"density", "p", "h", "N", "richardson_delta", "resolution_warning"};
  for (const std::string& spec : cfg.density_specs) {
    const Density1D d = parse_density(spec);
    for (double p : cfg.orders) {
      const EntropyValue h = renyi_entropy(d, p, nc);
      t.rows.push_back({d.describe(), num(p), num(h.nats), num(entropy_power(h)), num(h.richardson_delta),
                        h.resolution_warning});
    }
  }
  t.write(cfg, envelope(cfg), os);
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  VerifyConfig vc;
  vc.numerics.grid_n = cfg.grid_n;
  if (cfg.entropy_tol) vc.entropy_tol = *cfg.entropy_tol;
  if (cfg.power_rel_tol) vc.power_rel_tol = *cfg.power_rel_tol;
  if (cfg.info_tol) vc.info_tol = *cfg.info_tol;
  const std::vector<EpiReport> reports = run_suite(cfg.suite, vc);
  std::size_t failures = 0;
  for (const EpiReport& r : reports) failures += r.pass ? 0 : 1;

  if (cfg.format == OutputFormat::Csv) {
    os << csv_header() << '\n';
    for (const EpiReport& r : reports) os << to_csv_row(r) << '\n';
  } else {
    ordered_json j = envelope(cfg);
    j["suite"] = cfg.suite;
    j["total"] = reports.size();
    j["failed"] = failures;
    ordered_json list = ordered_json::array();
    for (const EpiReport& r : reports) list.push_back(ordered_json::parse(to_json(r).dump()));
    j["reports"] = list;
    os << j.dump(2) << '\n';
  }
  return failures == 0 ? 0 : 1;
}

int cmd_optimize(const RunConfig& cfg, std::ostream& os) {
  const double alpha = cfg.alpha.value_or(kDefaultAlpha);
  Table t;
  t.columns = {"objective", "r", "m", "alpha", "value", "closed_form", "difference", "pass", "argmin", "method"};
  bool all_pass = true;
  auto weights_text = [](const WeightVector& w) {
    std::string s;
    for (double v : w.values()) s += (s.empty() ? "" : " ") + format_number(v);
    return s;
  };
  for (double rv : cfg.r_values) {
    const Exponent r(rv);
    for (int m : cfg.m_values) {
      auto emit = [&](const std::string& name, const SimplexSearchResult& res, double target, double tol,
                      ordered_json a) {
        const double diff = res.value - target;
        const bool pass = std::abs(diff) < tol;
        all_pass = all_pass && pass;
        t.rows.push_back({name, num(rv), m, a, num(res.value), num(target), num(diff), pass, weights_text(res.argmin),
                          to_string(res.method)});
      };
      const double log_c = r.above_one() ? std::log(ram_sason_constant(r, m)) : std::log(logconcave_constant(r, m));
      emit("A", minimize_gap(r, m), log_c, kGapTol, ordered_json());
      const double log_general = r.above_one() ? std::log(general_constant(r, m, alpha))
                                               : std::log(logconcave_general_constant(r, m, alpha));
      emit("mixed", minimize_mixed(r, m, alpha), log_general, kGapTol, num(alpha));
      if (r.above_one()) emit("A/H", minimize_gap_over_entropy(r, m), 1.0 / li_exponent(r) - 1.0, kRatioTol, ordered_json());
    }
  }
  t.write(cfg, envelope(cfg), os);
  return all_pass ? 0 : 1;
}

int cmd_report(const RunConfig& cfg, std::ostream& os) {
  std::vector<EpiReport> reports;
  for (const std::string& path : cfg.inputs) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open report file " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("report file " + path + " is not valid JSON: " + e.what());
    }
    if (!j.contains("reports") || !j["reports"].is_array()) throw UsageError("report file " + path + " has no reports");
    for (const auto& r : j["reports"]) reports.push_back(report_from_json(r));
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const EpiReport& a, const EpiReport& b) { return a.inputs_digest < b.inputs_digest; });
  os << csv_header() << '\n';
  for (const EpiReport& r : reports) os << to_csv_row(r) << '\n';
  return 0;
}

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

std::size_t grid_n_from_env() {
  const char* v = std::getenv(kGridEnvVar);
  if (v == nullptr || *v == '\0') return kDefaultGridN;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0') throw UsageError(std::string(kGridEnvVar) + " is not an integer: " + v);
  return static_cast<std::size_t>(n);
}

void validate(const RunConfig& cfg) {
  if (!power_of_two(cfg.grid_n) || cfg.grid_n < 1024) {
    throw UsageError("grid size must be a power of two >= 1024, got " + std::to_string(cfg.grid_n));
  }
  auto positive = [](const std::optional<double>& v, const char* name) {
    if (v && !(*v > 0.0)) throw UsageError(std::string(name) + " must be positive");
  };
  positive(cfg.entropy_tol, "entropy tolerance");
  positive(cfg.power_rel_tol, "power tolerance");
  positive(cfg.info_tol, "information tolerance");
  if (cfg.alpha && !(*cfg.alpha > 0.0 && *cfg.alpha < 1.0)) throw UsageError("--alpha must lie in (0, 1)");
  switch (cfg.command) {
    case Command::Constants:
    case Command::Optimize:
      if (cfg.r_values.empty() || cfg.m_values.empty()) throw UsageError("need at least one r and one m");
      for (double r : cfg.r_values) {
        if (!(r > 0.0) || r == 1.0) throw UsageError("orders r must be positive and != 1");
      }
      for (int m : cfg.m_values) {
        if (m < 2) throw UsageError("m must be at least 2");
        if (cfg.command == Command::Optimize && m > 4) throw UsageError("optimize supports m <= 4");
      }
      break;
    case Command::Entropy:
      if (cfg.density_specs.empty()) throw UsageError("entropy needs at least one --density");
      if (cfg.orders.empty()) throw UsageError("entropy needs at least one order --p");
      for (double p : cfg.orders) {
        if (!(p > 0.0)) throw UsageError("orders must be positive");
      }
      break;
    case Command::Verify: {
      const auto names = suite_names();
      if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
        throw UsageError("unknown suite \"" + cfg.suite + "\"");
      }
      break;
    }
    case Command::Report:
      if (cfg.inputs.empty()) throw UsageError("report needs at least one input file");
      break;
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    std::ostringstream buf;
    int status = 0;
    switch (cfg.command) {
      case Command::Constants: status = cmd_constants(cfg, buf); break;
      case Command::Entropy: status = cmd_entropy(cfg, buf); break;
      case Command::Verify: status = cmd_verify(cfg, buf); break;
      case Command::Optimize: status = cmd_optimize(cfg, buf); break;
      case Command::Report: status = cmd_report(cfg, buf); break;
    }
    if (cfg.output_path) {
      std::ofstream file(*cfg.output_path);
      if (!file) throw UsageError("cannot write " + *cfg.output_path);
      file << buf.str();
    } else {
      out << buf.str();
    }
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    // Bad densities or orders on the command line.
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace renyi::cli
