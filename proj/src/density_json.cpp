#include "renyi/density_json.hpp"

#include <string>
#include <vector>

#include "renyi/errors.hpp"

namespace renyi {

namespace {

double number(const nlohmann::json& spec, const char* key) {
  auto it = spec.find(key);
  if (it == spec.end()) throw DomainError(std::string("density spec is missing \"") + key + "\"");
  if (!it->is_number()) throw DomainError(std::string("density field \"") + key + "\" must be a number");
  return it->get<double>();
}

}  // namespace

Density1D density_from_json(const nlohmann::json& spec) {
  if (!spec.is_object()) throw DomainError("density spec must be a JSON object");
  auto kind_it = spec.find("kind");
  if (kind_it == spec.end() || !kind_it->is_string()) throw DomainError("density spec needs a string \"kind\"");
  const std::string kind = kind_it->get<std::string>();

  if (kind == "normal") return Density1D::normal(number(spec, "sigma2"));
  if (kind == "uniform") return Density1D::uniform(number(spec, "a"), number(spec, "b"));
  if (kind == "exponential") {
    const bool reflected = spec.value("reflected", false);
    return Density1D::exponential(number(spec, "rate"), reflected);
  }
  if (kind == "laplace") return Density1D::laplace(number(spec, "scale"));
  if (kind == "grid") {
    auto fs_it = spec.find("fs");
    if (fs_it == spec.end() || !fs_it->is_array()) throw DomainError("grid density needs an \"fs\" array");
    std::vector<double> fs;
    fs.reserve(fs_it->size());
    for (const auto& v : *fs_it) {
      if (!v.is_number()) throw DomainError("grid values must be numbers");
      fs.push_back(v.get<double>());
    }
    if (spec.contains("n")) {
      const double n = number(spec, "n");
      if (n != static_cast<double>(fs.size())) {
        throw DomainError("grid \"n\" = " + std::to_string(n) + " does not match " + std::to_string(fs.size()) + " values");
      }
    }
    return Density1D::grid(number(spec, "xs_min"), number(spec, "xs_max"), std::move(fs));
  }
  throw DomainError("unknown density kind \"" + kind + "\"");
}

Density1D parse_density(std::string_view text) {
  nlohmann::json spec;
  try {
    spec = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("density spec is not valid JSON: ") + e.what());
  }
  return density_from_json(spec);
}

nlohmann::json density_to_json(const Density1D& d) {
  using nlohmann::json;
  switch (d.family()) {
    case Density1D::Family::Normal:
      return json{{"kind", "normal"}, {"sigma2", std::get<Density1D::Normal>(d.kind()).sigma2}};
    case Density1D::Family::Uniform: {
      const auto& u = std::get<Density1D::Uniform>(d.kind());
      return json{{"kind", "uniform"}, {"a", u.a}, {"b", u.b}};
    }
    case Density1D::Family::Exponential: {
      const auto& e = std::get<Density1D::Exponential>(d.kind());
      json out{{"kind", "exponential"}, {"rate", e.rate}};
      if (e.reflected) out["reflected"] = true;
      return out;
    }
    case Density1D::Family::Laplace:
      return json{{"kind", "laplace"}, {"scale", std::get<Density1D::Laplace>(d.kind()).scale}};
    case Density1D::Family::Grid: {
      const GridData& g = d.grid_data();
      std::vector<double> fs(g.values().begin(), g.values().end());
      return json{{"kind", "grid"}, {"xs_min", g.x0()}, {"xs_max", g.x_end()}, {"n", fs.size()}, {"fs", fs}};
    }
  }
  return json{};
}

}  // namespace renyi
