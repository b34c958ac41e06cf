#include "emit.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "rdi/errors.hpp"
#include "rdi/rdi.hpp"
#include "rdi/units.hpp"

namespace rdi::cli {
namespace {

using nlohmann::json;

void dump_into(std::string& out, const json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(key).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(out, value, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        newline(depth + 1);
        dump_into(out, j[i], indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

double density_of(const DiracColumn<double>& psi) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += norm2(psi[i]);
  return s;
}

void append_row(std::string& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out += ',';
    first = false;
    out += format_double(v);
  }
  out += '\n';
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) throw ArgumentError("non-finite value cannot be serialized");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump_json(const json& j, int indent) {
  std::string out;
  dump_into(out, j, indent, 0);
  out += '\n';
  return out;
}

json report_to_json(const ResidualReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"law", e.law},
                       {"max_residual", e.max_residual},
                       {"mean_residual", e.mean_residual},
                       {"points", e.points},
                       {"tolerance", e.tolerance},
                       {"pass", e.pass}});
  return {{"scenario", r.scenario}, {"all_pass", r.all_pass()}, {"entries", entries}};
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw IoError("SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

OutputBundle::OutputBundle(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec || !std::filesystem::is_directory(dir_))
    throw IoError("cannot create output directory " + dir_.string() + (ec ? ": " + ec.message() : ""));
}

void OutputBundle::write(const std::string& name, const std::string& content) {
  const auto path = dir_ / name;
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("failed writing " + path.string());
  }
  const std::string hash = sha256_hex(content);
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) {
      hashes_[i] = hash;
      sizes_[i] = content.size();
      return;
    }
  names_.push_back(name);
  hashes_.push_back(hash);
  sizes_.push_back(content.size());
}

void OutputBundle::write_manifest(const json& extra) {
  json files = json::array();
  for (std::size_t i = 0; i < names_.size(); ++i)
    files.push_back({{"path", names_[i]}, {"sha256", hashes_[i]}, {"bytes", sizes_[i]}});
  json constants = json::object();
  for (const auto& [name, value] : units::constant_table()) constants[name] = value;
  json m = {{"files", files}, {"constants", constants}, {"constants_source", "CODATA 2018"}};
  for (const auto& [key, value] : extra.items()) m[key] = value;
  const std::string text = dump_json(m);
  const auto path = dir_ / "manifest.json";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

std::string density_csv(const Scenario& s, const GridSpec& grid) {
  std::vector<Point<double>> pts(grid.size());
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = s.lab_point(grid.point(i));
  const auto rho = parallel_map(pts.size(), [&](std::size_t i) { return density_of(s.column(pts[i])); });
  std::string out = "t,x,y,z,density\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    append_row(out, {units::time_to_si(p[0]), units::length_to_si(p[1]), units::length_to_si(p[2]),
                     units::length_to_si(p[3]), rho[i]});
  }
  return out;
}

std::string fields_csv(const Scenario& s, const GridSpec& grid) {
  std::string out = "t,x,y,z,Ex,Ey,Ez,Bx,By,Bz\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point<double> p = s.lab_point(grid.point(i));
    const EMSample<double> f = s.fields(p);
    append_row(out, {units::time_to_si(p[0]), units::length_to_si(p[1]), units::length_to_si(p[2]),
                     units::length_to_si(p[3]), f.E[0], f.E[1], f.E[2], f.B[0], f.B[1], f.B[2]});
  }
  return out;
}

std::string trajectory_csv(const Trajectory& traj, int stride) {
  if (stride < 1) stride = 1;
  std::string out = "t,x,y,z,vx,vy,vz,gamma\n";
  const std::size_t n = traj.samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i % static_cast<std::size_t>(stride) != 0 && i + 1 != n) continue;
    const auto& s = traj.samples[i];
    append_row(out, {units::time_to_si(s.t), units::length_to_si(s.x[0]), units::length_to_si(s.x[1]),
                     units::length_to_si(s.x[2]), s.v[0], s.v[1], s.v[2], s.gamma});
  }
  return out;
}

}  // namespace rdi::cli
