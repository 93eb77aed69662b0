#include "renyi/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

const CheckKind kAllKinds[] = {
    CheckKind::InfoIneq,     CheckKind::DCT,          CheckKind::DCT_m,      CheckKind::CForm,
    CheckKind::AlphaForm,    CheckKind::GeneralForm,  CheckKind::CharactRHS, CheckKind::Monotonicity,
    CheckKind::ShiftedMonotonicity, CheckKind::Pushforward, CheckKind::Invariance, CheckKind::Equivalence,
};

nlohmann::json number_json(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

double number_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  const std::string s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::InfoIneq: return "InfoIneq";
    case CheckKind::DCT: return "DCT";
    case CheckKind::DCT_m: return "DCT_m";
    case CheckKind::CForm: return "CForm";
    case CheckKind::AlphaForm: return "AlphaForm";
    case CheckKind::GeneralForm: return "GeneralForm";
    case CheckKind::CharactRHS: return "CharactRHS";
    case CheckKind::Monotonicity: return "Monotonicity";
    case CheckKind::ShiftedMonotonicity: return "ShiftedMonotonicity";
    case CheckKind::Pushforward: return "Pushforward";
    case CheckKind::Invariance: return "Invariance";
    case CheckKind::Equivalence: return "Equivalence";
  }
  return "unknown";
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

EpiReport make_report(CheckKind kind, double lhs, double rhs, double tolerance, std::string inputs) {
  EpiReport rep;
  rep.kind = kind;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.gap = lhs - rhs;
  // +inf - +inf is not a verdict either way.
  rep.pass = !std::isnan(rep.gap) && rep.gap >= -tolerance;
  rep.tolerance = tolerance;
  rep.inputs_digest = fnv1a_hex(inputs);
  rep.inputs = std::move(inputs);
  return rep;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json to_json(const EpiReport& rep) {
  nlohmann::json j{
      {"kind", to_string(rep.kind)},
      {"lhs", number_json(rep.lhs)},
      {"rhs", number_json(rep.rhs)},
      {"gap", number_json(rep.gap)},
      {"pass", rep.pass},
      {"tolerance", number_json(rep.tolerance)},
      {"inputs", rep.inputs},
      {"inputs_digest", rep.inputs_digest},
      {"r", number_json(rep.r)},
      {"m", rep.m},
      {"alpha", number_json(rep.alpha)},
      {"c", number_json(rep.c)},
  };
  if (rep.aux_gap) j["aux_gap"] = number_json(*rep.aux_gap);
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

EpiReport report_from_json(const nlohmann::json& j) {
  try {
    EpiReport rep;
    const std::string kind = j.at("kind").get<std::string>();
    bool known = false;
    for (CheckKind k : kAllKinds) {
      if (to_string(k) == kind) {
        rep.kind = k;
        known = true;
      }
    }
    if (!known) throw DomainError("unknown check kind \"" + kind + "\"");
    rep.lhs = number_from_json(j.at("lhs"));
    rep.rhs = number_from_json(j.at("rhs"));
    rep.gap = number_from_json(j.at("gap"));
    rep.pass = j.at("pass").get<bool>();
    rep.tolerance = number_from_json(j.value("tolerance", nlohmann::json(0.0)));
    rep.inputs = j.value("inputs", std::string{});
    rep.inputs_digest = j.value("inputs_digest", fnv1a_hex(rep.inputs));
    rep.r = number_from_json(j.value("r", nlohmann::json()));
    rep.m = j.value("m", 0);
    rep.alpha = number_from_json(j.value("alpha", nlohmann::json()));
    rep.c = number_from_json(j.value("c", nlohmann::json()));
    if (j.contains("aux_gap")) rep.aux_gap = number_from_json(j.at("aux_gap"));
    if (j.contains("notes")) rep.notes = j.at("notes").get<std::vector<std::string>>();
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed report record: ") + e.what());
  }
}

std::string csv_header() { return "kind,r,m,alpha,c,lhs,rhs,gap,pass"; }

std::string to_csv_row(const EpiReport& rep) {
  std::ostringstream os;
  os << to_string(rep.kind) << ',' << format_number(rep.r) << ',' << rep.m << ',' << format_number(rep.alpha) << ','
     << format_number(rep.c) << ',' << format_number(rep.lhs) << ',' << format_number(rep.rhs) << ','
     << format_number(rep.gap) << ',' << (rep.pass ? "true" : "false");
  return os.str();
}

}  // namespace renyi
