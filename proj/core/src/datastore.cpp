#include "rammscatter/datastore.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ramm {

using nlohmann::json;

namespace {
constexpr int kSchemaVersion = 1;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}
}  // namespace

void save_farfield(const FarField& ff, const std::string& path) {
  ff.validate();
  int nm = num_modes(ff.L);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "farfield";
  j["L"] = ff.L;
  j["a"] = ff.a;
  j["source"] = ff.source;
  j["noise_level"] = ff.noise_level;
  j["noise_seed"] = ff.noise_seed;
  std::vector<double> re, im;
  re.reserve(nm * nm);
  im.reserve(nm * nm);
  for (int r = 0; r < nm; ++r)
    for (int c = 0; c < nm; ++c) {
      re.push_back(ff.B(r, c).real());
      im.push_back(ff.B(r, c).imag());
    }
  j["re"] = re;
  j["im"] = im;
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << j.dump(1) << "\n";
}

FarField load_farfield(const std::string& path) {
  json j = read_json(path);
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
    throw ValidationError(path + ": missing schema_version");
  if (j["schema_version"].get<int>() != kSchemaVersion)
    throw ValidationError(path + ": unsupported schema_version");
  if (j.value("kind", "") != "farfield")
    throw ValidationError(path + ": not a far-field file");
  for (const char* key : {"L", "a", "re", "im"})
    if (!j.contains(key)) throw ValidationError(path + std::string(": missing field ") + key);

  FarField ff;
  ff.L = j["L"].get<int>();
  ff.a = j["a"].get<double>();
  ff.source = j.value("source", "file");
  ff.noise_level = j.value("noise_level", 0.0);
  ff.noise_seed = j.value("noise_seed", 0ULL);
  if (ff.L < 0 || ff.L > 200) throw ValidationError(path + ": implausible degree L");
  int nm = num_modes(ff.L);
  std::vector<double> re = j["re"].get<std::vector<double>>();
  std::vector<double> im = j["im"].get<std::vector<double>>();
  if (static_cast<int>(re.size()) != nm * nm || im.size() != re.size())
    throw ValidationError(path + ": matrix size does not match L");
  ff.B.resize(nm, nm);
  for (int r = 0; r < nm; ++r)
    for (int c = 0; c < nm; ++c) {
      double x = re[r * nm + c], y = im[r * nm + c];
      if (!std::isfinite(x) || !std::isfinite(y))
        throw ValidationError(path + ": non-finite matrix entry");
      ff.B(r, c) = cd(x, y);
    }
  ff.validate();
  return ff;
}

void emit_table(const std::string& path, const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  for (size_t i = 0; i < header.size(); ++i)
    out << header[i] << (i + 1 < header.size() ? "," : "");
  out << "\n";
  char buf[40];
  for (const auto& row : rows) {
    if (row.size() != header.size())
      throw ValidationError("emit_table: row width does not match header");
    for (size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.16e", row[i]);
      out << buf << (i + 1 < row.size() ? "," : "");
    }
    out << "\n";
  }
}

Table load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw ValidationError(path + ": empty table");
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) t.header.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ls(line);
    std::vector<double> row;
    while (std::getline(ls, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ValidationError(path + ": non-numeric cell '" + cell + "'");
      }
    }
    if (row.size() != t.header.size())
      throw ValidationError(path + ": ragged row");
    t.rows.push_back(row);
  }
  return t;
}

ExperimentConfig load_config(const std::string& path) {
  json j = read_json(path);
  ExperimentConfig cfg;
  if (j.contains("potential")) {
    const json& p = j["potential"];
    std::string type = p.value("type", "ball");
    if (type == "ball") {
      cfg.q = Potential::ball(p.value("q0", 1.0), p.value("R", 1.0));
    } else if (type == "shells") {
      std::vector<double> edges = p.at("edges").get<std::vector<double>>();
      std::vector<double> values = p.at("values").get<std::vector<double>>();
      cfg.q = Potential::shells(edges, values);
    } else {
      throw ValidationError(path + ": unknown potential type '" + type + "'");
    }
  }
  cfg.L = j.value("L", cfg.L);
  cfg.grid_n = j.value("grid_n", cfg.grid_n);
  cfg.tol = j.value("tol", cfg.tol);
  cfg.a1 = j.value("a1", cfg.a1);
  cfg.b = j.value("b", cfg.b);
  cfg.n_r = j.value("n_r", cfg.n_r);
  cfg.reg = j.value("reg", cfg.reg);
  cfg.c_budget = j.value("c_budget", cfg.c_budget);
  cfg.seed = j.value("seed", cfg.seed);
  if (j.contains("deltas")) cfg.deltas = j["deltas"].get<std::vector<double>>();
  if (j.contains("xis")) {
    for (const auto& row : j["xis"]) {
      std::vector<double> v = row.get<std::vector<double>>();
      if (v.size() != 3) throw ValidationError(path + ": xi must have 3 components");
      cfg.xis.push_back(Vec3(v[0], v[1], v[2]));
    }
  }
  if (cfg.L < 0 || cfg.grid_n < 8 || cfg.tol <= 0.0)
    throw ValidationError(path + ": invalid solver parameters");
  return cfg;
}

}  // namespace ramm
