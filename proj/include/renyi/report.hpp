#pragma once

// One inequality check: both sides, the gap lhs - rhs and the verdict, plus
// serialisation to JSON records and CSV rows.

#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace renyi {

enum class CheckKind {
  InfoIneq,
  DCT,
  DCT_m,
  CForm,
  AlphaForm,
  GeneralForm,
  CharactRHS,
  Monotonicity,
  ShiftedMonotonicity,
  Pushforward,
  Invariance,
  Equivalence,
};

std::string to_string(CheckKind kind);

inline constexpr int kReportSchemaVersion = 1;

struct EpiReport {
  CheckKind kind = CheckKind::DCT;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // lhs - rhs
  bool pass = false;
  double tolerance = 0.0;
  std::string inputs;         // canonical text of the inputs
  std::string inputs_digest;  // FNV-1a of `inputs`, 16 hex digits

  // Parameters echoed into CSV rows; NaN / 0 when not applicable.
  double r = std::numeric_limits<double>::quiet_NaN();
  int m = 0;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double c = std::numeric_limits<double>::quiet_NaN();

  std::optional<double> aux_gap;  // second gap for two-sided probes
  std::vector<std::string> notes;
};

/// Fills gap, pass (gap >= -tolerance) and the digest.
EpiReport make_report(CheckKind kind, double lhs, double rhs, double tolerance, std::string inputs);

std::string fnv1a_hex(const std::string& text);

nlohmann::json to_json(const EpiReport& report);
EpiReport report_from_json(const nlohmann::json& j);

/// kind,r,m,alpha,c,lhs,rhs,gap,pass
std::string csv_header();
std::string to_csv_row(const EpiReport& report);

/// Full-precision text for a double; "nan" and "inf" spelled out.
std::string format_number(double x);

}  // namespace renyi
