#include "config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "rdi/errors.hpp"
#include "rdi/units.hpp"

namespace rdi::cli {
namespace {

using nlohmann::json;

json positive_number(const std::string& description) {
  return {{"type", "number"}, {"exclusiveMinimum", 0}, {"description", description}};
}

json family_requires(const std::string& family, const std::vector<std::string>& keys) {
  return {{"if", {{"properties", {{"scenario", {{"properties", {{"family", {{"const", family}}}}}}}}}}},
          {"then", {{"properties", {{"physics", {{"required", keys}}}}}}}};
}

json build_schema() {
  json physics_props = {
      {"magnetic_field_T", positive_number("uniform magnetic field along z, tesla")},
      {"a1_m", positive_number("ellipse semi-axis along x, metres")},
      {"a2_m", positive_number("ellipse semi-axis along y, metres")},
      {"omega_rad_per_s", positive_number("ellipse angular frequency, rad/s")},
      {"a0_T", positive_number("plane-wave amplitude expressed as a magnetic field, tesla")},
      {"wavelength_m", positive_number("plane-wave wavelength, metres")},
      {"bagrov_a", positive_number("longitudinal profile parameter a, dimensionless")},
      {"kappa_per_m2",
       {{"type", "number"}, {"minimum", 0}, {"description", "quartic envelope coefficient, 1/m^2"}}},
      {"pz_amplitude",
       {{"type", "number"}, {"minimum", -10}, {"maximum", 10}, {"description", "p_z amplitude in units of m c"}}},
      {"intensity_W_per_cm2", positive_number("stated laser intensity, recorded only")},
      {"stated_omega_rad_per_s", positive_number("angular frequency quoted alongside the data, recorded only")},
  };
  json grid_axis = {{"type", "integer"}, {"minimum", 1}, {"maximum", 1001}};
  json schema = {
      {"$schema", "https://json-schema.org/draft/2020-12/schema"},
      {"$id", "https://rdi.invalid/schemas/scenario-config.json"},
      {"title", "RDI scenario configuration"},
      {"description", "Sectioned key-value document (YAML). Physical quantities carry their SI unit in the key name."},
      {"type", "object"},
      {"additionalProperties", false},
      {"required", {"scenario", "physics"}},
      {"properties",
       {{"scenario",
         {{"type", "object"},
          {"additionalProperties", false},
          {"required", {"name", "family"}},
          {"properties",
           {{"name", {{"type", "string"}, {"minLength", 1}}},
            {"family", {{"enum", {"planar", "volkov", "redmond", "bagrov"}}}}}}}},
        {"physics", {{"type", "object"}, {"additionalProperties", false}, {"properties", physics_props}}},
        {"grid",
         {{"type", "object"},
          {"additionalProperties", false},
          {"properties",
           {{"nt", grid_axis},
            {"nx", grid_axis},
            {"ny", grid_axis},
            {"trajectory_steps", {{"type", "integer"}, {"minimum", 100}, {"maximum", 10000000}}}}}}},
        {"output",
         {{"type", "object"},
          {"additionalProperties", false},
          {"properties", {{"directory", {{"type", "string"}, {"minLength", 1}}}}}}},
        {"tolerances",
         {{"type", "object"}, {"additionalProperties", {{"type", "number"}, {"exclusiveMinimum", 0}}}}}}},
      {"allOf",
       {family_requires("planar", {"magnetic_field_T", "a1_m", "a2_m", "omega_rad_per_s"}),
        family_requires("redmond", {"magnetic_field_T", "a0_T", "wavelength_m"}),
        family_requires("bagrov", {"magnetic_field_T", "a0_T", "wavelength_m", "bagrov_a"}),
        family_requires("volkov", {"magnetic_field_T", "a0_T", "wavelength_m", "kappa_per_m2", "pz_amplitude"})}},
  };
  return schema;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

bool has_type(const json& v, const std::string& type) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "boolean") return v.is_boolean();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  if (type == "null") return v.is_null();
  return false;
}

void check(const json& v, const json& s, const std::string& path);

bool matches(const json& v, const json& s, const std::string& path) {
  try {
    check(v, s, path);
    return true;
  } catch (const ConfigError&) {
    return false;
  }
}

void check(const json& v, const json& s, const std::string& path) {
  const std::string where = path.empty() ? "document" : path;
  if (s.contains("type") && !has_type(v, s["type"].get<std::string>()))
    throw ConfigError(where + " must be of type " + s["type"].get<std::string>(), path);
  if (s.contains("const") && v != s["const"]) throw ConfigError(where + " must equal " + s["const"].dump(), path);
  if (s.contains("enum")) {
    bool ok = false;
    for (const auto& e : s["enum"]) ok = ok || v == e;
    if (!ok) throw ConfigError(where + " must be one of " + s["enum"].dump(), path);
  }
  if (v.is_number()) {
    const double x = v.get<double>();
    if (s.contains("exclusiveMinimum") && !(x > s["exclusiveMinimum"].get<double>()))
      throw ConfigError(where + " must be greater than " + s["exclusiveMinimum"].dump(), path);
    if (s.contains("minimum") && !(x >= s["minimum"].get<double>()))
      throw ConfigError(where + " must be at least " + s["minimum"].dump(), path);
    if (s.contains("maximum") && !(x <= s["maximum"].get<double>()))
      throw ConfigError(where + " must be at most " + s["maximum"].dump(), path);
  }
  if (v.is_string() && s.contains("minLength") && v.get<std::string>().size() < s["minLength"].get<std::size_t>())
    throw ConfigError(where + " is too short", path);
  if (v.is_object()) {
    if (s.contains("required"))
      for (const auto& key : s["required"])
        if (!v.contains(key.get<std::string>()))
          throw ConfigError("missing required key " + join(path, key.get<std::string>()),
                            join(path, key.get<std::string>()));
    const json props = s.value("properties", json::object());
    for (const auto& [key, value] : v.items()) {
      const std::string sub = join(path, key);
      if (props.contains(key)) {
        check(value, props[key], sub);
      } else if (s.contains("additionalProperties")) {
        const json& extra = s["additionalProperties"];
        if (extra.is_boolean() && !extra.get<bool>())
          throw ConfigError("unknown key " + sub + " (quantities carry their SI unit in the key, e.g. a1_m)", sub);
        if (extra.is_object()) check(value, extra, sub);
      }
    }
  }
  if (s.contains("allOf"))
    for (const auto& part : s["allOf"]) check(v, part, path);
  if (s.contains("if") && s.contains("then") && matches(v, s["if"], path)) check(v, s["then"], path);
}

json scalar_to_json(const YAML::Node& n) {
  const std::string& text = n.Scalar();
  if (n.Tag() == "!") return text;  // quoted
  if (text == "true" || text == "false") return text == "true";
  if (text == "null" || text == "~") return nullptr;
  static const std::regex integer(R"([-+]?[0-9]+)");
  static const std::regex real(R"([-+]?(\.[0-9]+|[0-9]+(\.[0-9]*)?)([eE][-+]?[0-9]+)?)");
  if (std::regex_match(text, integer)) return std::stoll(text);
  if (std::regex_match(text, real)) return std::stod(text);
  return text;
}

json yaml_to_json(const YAML::Node& n) {
  switch (n.Type()) {
    case YAML::NodeType::Map: {
      json o = json::object();
      for (const auto& kv : n) o[kv.first.as<std::string>()] = yaml_to_json(kv.second);
      return o;
    }
    case YAML::NodeType::Sequence: {
      json a = json::array();
      for (const auto& e : n) a.push_back(yaml_to_json(e));
      return a;
    }
    case YAML::NodeType::Scalar:
      return scalar_to_json(n);
    default:
      return nullptr;
  }
}

double get(const json& physics, const char* key) { return physics.value(key, 0.0); }

void check_guards(const ScenarioConfig& c, const ScaledParameters& p) {
  if (c.family == FamilyKind::planar) {
    if (!(std::fmax(p.beta1, p.beta2) < 1.0))
      throw ConfigError("superluminality guard: omega * max(a1, a2) = " +
                            std::to_string(std::fmax(p.beta1, p.beta2)) + " c must be below c",
                        "physics.omega_rad_per_s");
  } else {
    // The packet center of the circular drive moves at a0~ c.
    if (!(p.a0_tilde < 1.0))
      throw ConfigError("superluminality guard: packet-center speed a0 e/(m omega) = " +
                            std::to_string(p.a0_tilde) + " c must be below c",
                        "physics.a0_T");
  }
}

}  // namespace

const json& config_schema() {
  static const json schema = build_schema();
  return schema;
}

void validate_against_schema(const json& doc, const json& schema) { check(doc, schema, ""); }

json yaml_file_to_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return yaml_to_json(YAML::Load(buf.str()));
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("config is not valid YAML: ") + e.what(), "document");
  }
}

ScenarioConfig parse_config(const json& doc) {
  validate_against_schema(doc, config_schema());
  ScenarioConfig c;
  c.name = doc["scenario"]["name"].get<std::string>();
  c.family = parse_family(doc["scenario"]["family"].get<std::string>());
  const json& ph = doc["physics"];
  c.si.magnetic_field_T = get(ph, "magnetic_field_T");
  c.si.a1_m = get(ph, "a1_m");
  c.si.a2_m = get(ph, "a2_m");
  c.si.omega_rad_per_s = get(ph, "omega_rad_per_s");
  c.si.a0_T = get(ph, "a0_T");
  c.si.wavelength_m = get(ph, "wavelength_m");
  c.si.bagrov_a = get(ph, "bagrov_a");
  c.si.kappa_per_m2 = get(ph, "kappa_per_m2");
  c.si.pz_amplitude = get(ph, "pz_amplitude");
  if (ph.contains("intensity_W_per_cm2")) c.si.intensity_W_per_cm2 = ph["intensity_W_per_cm2"].get<double>();
  if (ph.contains("stated_omega_rad_per_s")) c.si.stated_omega_rad_per_s = ph["stated_omega_rad_per_s"].get<double>();
  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    c.grid.nt = g.value("nt", c.grid.nt);
    c.grid.nx = g.value("nx", c.grid.nx);
    c.grid.ny = g.value("ny", c.grid.ny);
    c.trajectory_steps = g.value("trajectory_steps", c.trajectory_steps);
  }
  if (doc.contains("output")) c.output_directory = doc["output"].value("directory", "");
  if (doc.contains("tolerances"))
    for (const auto& [law, value] : doc["tolerances"].items()) c.tolerances[law] = value.get<double>();
  check_guards(c, nondimensionalize(c));
  return c;
}

ScenarioConfig load_config(const std::string& path) { return parse_config(yaml_file_to_json(path)); }

ScaledParameters nondimensionalize(const ScenarioConfig& c) {
  const SiParameters& s = c.si;
  ScaledParameters p;
  p.family = c.family;
  const double omega_si = c.family == FamilyKind::planar ? s.omega_rad_per_s : units::laser_omega(s.wavelength_m);
  p.omega = units::rate_to_scaled(omega_si);
  p.mu = 1.0 / p.omega;
  p.eB = units::field_to_scaled(s.magnetic_field_T);
  p.b = p.eB / p.omega;
  if (c.family == FamilyKind::planar) {
    p.a1 = units::length_to_scaled(s.a1_m);
    p.a2 = units::length_to_scaled(s.a2_m);
    p.beta1 = p.a1 * p.omega;
    p.beta2 = p.a2 * p.omega;
  } else {
    p.a0 = units::field_to_scaled(s.a0_T);
    p.a0_tilde = p.a0 / p.omega;
    p.bagrov_a = s.bagrov_a;
    p.kappa = s.kappa_per_m2 * units::length_unit * units::length_unit;
    p.pz_amplitude = s.pz_amplitude;
  }
  return p;
}

SiParameters dimensionalize(const ScaledParameters& p) {
  SiParameters s;
  s.magnetic_field_T = units::field_to_si(p.eB);
  if (p.family == FamilyKind::planar) {
    s.omega_rad_per_s = units::rate_to_si(p.omega);
    s.a1_m = units::length_to_si(p.a1);
    s.a2_m = units::length_to_si(p.a2);
  } else {
    s.wavelength_m = 2.0 * std::numbers::pi * units::codata::c / units::rate_to_si(p.omega);
    s.a0_T = units::field_to_si(p.a0);
    s.bagrov_a = p.bagrov_a;
    s.kappa_per_m2 = p.kappa / (units::length_unit * units::length_unit);
    s.pz_amplitude = p.pz_amplitude;
  }
  return s;
}

Scenario build_scenario(const ScenarioConfig& c) {
  const ScaledParameters p = nondimensionalize(c);
  CircleParams circle{p.a0, p.eB, p.omega};
  switch (c.family) {
    case FamilyKind::planar: {
      Scenario s = ellipse_scenario(c.name, EllipseParams{p.a1, p.a2, p.eB, p.omega});
      s.larmor_gate = std::fmax(p.beta1, p.beta2) < 0.1;
      return s;
    }
    case FamilyKind::redmond:
      return redmond_scenario(c.name, circle);
    case FamilyKind::bagrov:
      return bagrov_scenario(c.name, BagrovParams{circle, p.bagrov_a});
    case FamilyKind::volkov:
      return inhomogeneous_scenario(c.name, InhomogeneousParams{circle, p.kappa, p.pz_amplitude});
  }
  throw ConfigError("unsupported family", "scenario.family");
}

json parameter_record(const ScenarioConfig& c, const ScaledParameters& p) {
  json scaled = {{"omega", p.omega}, {"mu", p.mu}, {"b", p.b}, {"eB", p.eB}};
  if (c.family == FamilyKind::planar) {
    scaled.update({{"beta1", p.beta1}, {"beta2", p.beta2}, {"a1", p.a1}, {"a2", p.a2}});
  } else {
    scaled.update({{"a0_tilde", p.a0_tilde}, {"a0", p.a0}});
    if (c.family == FamilyKind::bagrov) scaled["bagrov_a"] = p.bagrov_a;
    if (c.family == FamilyKind::volkov) scaled.update({{"kappa", p.kappa}, {"pz_amplitude", p.pz_amplitude}});
  }
  const SiParameters back = dimensionalize(p);
  json si = {{"magnetic_field_T", back.magnetic_field_T}};
  if (c.family == FamilyKind::planar) {
    si.update({{"a1_m", back.a1_m}, {"a2_m", back.a2_m}, {"omega_rad_per_s", back.omega_rad_per_s}});
  } else {
    si.update({{"a0_T", back.a0_T}, {"wavelength_m", back.wavelength_m}});
    if (c.family == FamilyKind::bagrov) si["bagrov_a"] = back.bagrov_a;
    if (c.family == FamilyKind::volkov) si.update({{"kappa_per_m2", back.kappa_per_m2}, {"pz_amplitude", back.pz_amplitude}});
  }

  json notes = json::array();
  if (c.family != FamilyKind::planar) {
    const double laser = units::laser_omega(c.si.wavelength_m);
    const double cyclotron = units::cyclotron_omega(c.si.magnetic_field_T);
    json n = {{"quantity", "omega"},
              {"used_laser_omega_rad_per_s", laser},
              {"cyclotron_omega_eB_over_m_rad_per_s", cyclotron}};
    if (c.si.stated_omega_rad_per_s) {
      const double stated = *c.si.stated_omega_rad_per_s;
      n["stated_omega_rad_per_s"] = stated;
      n["stated_matches_cyclotron"] = std::fabs(stated - cyclotron) <= 0.05 * stated;
      n["stated_matches_laser"] = std::fabs(stated - laser) <= 0.05 * stated;
      n["discrepancy"] = !(n["stated_matches_cyclotron"].get<bool>());
    }
    notes.push_back(n);
    if (c.si.intensity_W_per_cm2) {
      // Circular polarization: I = c eps0 E0^2 with constant |E| = E0, and B0 = E0 / c.
      const double intensity = *c.si.intensity_W_per_cm2 * 1e4;
      const double e0 = std::sqrt(intensity / (units::codata::c * units::codata::epsilon0));
      const double b0 = e0 / units::codata::c;
      notes.push_back({{"quantity", "amplitude"},
                       {"stated_intensity_W_per_cm2", *c.si.intensity_W_per_cm2},
                       {"a0_from_intensity_T", b0},
                       {"a0_configured_T", c.si.a0_T},
                       {"a0_tilde_configured", p.a0_tilde},
                       {"consistent", std::fabs(b0 - c.si.a0_T) <= 0.05 * c.si.a0_T}});
    }
  }
  return {{"scenario", c.name},
          {"family", family_name(c.family)},
          {"scaled", scaled},
          {"si_roundtrip", si},
          {"notes", notes}};
}

GridConfig parse_grid(const std::string& text) {
  static const std::regex pattern(R"(([0-9]{1,4})x([0-9]{1,4})x([0-9]{1,4}))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw ConfigError("grid must look like NxNxN, got '" + text + "'", "grid");
  GridConfig g{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])};
  if (g.nt < 1 || g.nx < 1 || g.ny < 1 || g.nt > 1001 || g.nx > 1001 || g.ny > 1001)
    throw ConfigError("grid dimensions must lie in [1, 1001]", "grid");
  return g;
}

std::pair<std::string, double> parse_tolerance(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("tolerance must look like law=value, got '" + text + "'", "tol");
  const std::string law = text.substr(0, eq);
  const std::string value = text.substr(eq + 1);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size() || !(v > 0.0) || !std::isfinite(v))
    throw ConfigError("tolerance value for '" + law + "' must be a positive number", "tol");
  return {law, v};
}

}  // namespace rdi::cli
