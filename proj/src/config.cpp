#include "hitchin/config.hpp"

#include <fstream>
#include <sstream>

namespace hitchin {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<int64_t> parse_int_list(const std::string& v, const std::string& key) {
  std::vector<int64_t> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw ConfigError("bad integer '" + item + "' in " + key);
    }
  }
  return out;
}

int64_t parse_int(const std::string& v, const std::string& key) {
  try {
    return std::stoll(trim(v));
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for " + key);
  }
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected 'key = value', got '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));

    if (key == "p") {
      cfg.p = parse_int(val, key);
    } else if (key == "ext") {
      cfg.ext = static_cast<int>(parse_int(val, key));
    } else if (key == "f") {
      cfg.f_coeffs = parse_int_list(val, key);
    } else if (key == "genus") {
      cfg.genus = static_cast<int>(parse_int(val, key));
    } else if (key == "subset") {
      for (int64_t i : parse_int_list(val, key)) cfg.subset.insert(static_cast<int>(i));
    } else if (key == "m_weierstrass") {
      for (int64_t i : parse_int_list(val, key))
        cfg.m_weierstrass.push_back(static_cast<int>(i));
    } else if (key == "seed") {
      cfg.seed = static_cast<uint64_t>(parse_int(val, key));
    } else if (key == "format") {
      if (val == "json") cfg.format = OutputFormat::Json;
      else if (val == "csv") cfg.format = OutputFormat::Csv;
      else if (val == "table") cfg.format = OutputFormat::Table;
      else throw ConfigError("unknown format '" + val + "'");
    } else if (key == "budget") {
      cfg.budget = parse_int(val, key);
    } else if (key == "delta") {
      cfg.delta = static_cast<int>(parse_int(val, key));
    } else if (key == "a_coeffs") {
      cfg.a_coeffs = parse_int_list(val, key);
    } else if (key == "b_coeffs") {
      cfg.b_coeffs = parse_int_list(val, key);
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  if (cfg.p == 0) throw ConfigError("missing key: p");
  if (cfg.f_coeffs.empty()) throw ConfigError("missing key: f");
  if (cfg.genus == 0) throw ConfigError("missing key: genus");
  if (cfg.subset.empty()) throw ConfigError("missing key: subset");
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

Instance build_instance(const RunConfig& cfg) {
  Instance inst;
  try {
    const FieldCtx& F = FieldCtx::get(cfg.p, cfg.ext);
    std::vector<Fq> coeffs;
    for (int64_t c : cfg.f_coeffs) coeffs.emplace_back(F, c);
    Poly f(F, std::move(coeffs));
    inst.curve = std::make_unique<HyperCurve>(validate_curve(F, f, cfg.genus));
    inst.cover = std::make_unique<CoverModel>(*inst.curve, cfg.subset);

    if (static_cast<int>(cfg.m_weierstrass.size()) != cfg.genus - 1)
      throw ConfigError("m_weierstrass needs exactly g-1 indices");
    auto ws = inst.curve->weierstrass_points();
    DivisorX D;
    for (int i : cfg.m_weierstrass) {
      if (i < 0 || i >= static_cast<int>(ws.size()))
        throw ConfigError("m_weierstrass index out of range");
      D.add(ws[i], 1);
    }
    inst.M = std::make_unique<PicClass>(class_of_divisor(*inst.curve, D));
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("invalid configuration: ") + e.what());
  }
  return inst;
}

BasePoint configured_base_point(const Instance& inst, const RunConfig& cfg) {
  if (cfg.a_coeffs || cfg.b_coeffs) {
    if (!cfg.a_coeffs || !cfg.b_coeffs)
      throw ConfigError("a_coeffs and b_coeffs must be pinned together");
    BasePoint bp = [&] {
      try {
        return base_point_from_coeffs(*inst.cover, *cfg.a_coeffs, *cfg.b_coeffs);
      } catch (const PreconditionViolated& e) {
        throw ConfigError(std::string("pinned base point: ") + e.what());
      }
    }();
    if (!is_ni(bp))
      throw NotNodalIntegral("pinned base point is not nodal-integral");
    return bp;
  }
  std::mt19937_64 rng(cfg.seed);
  return sample_base_point(*inst.cover, rng);
}

}  // namespace hitchin
