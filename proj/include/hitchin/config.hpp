#ifndef HITCHIN_CONFIG_HPP
#define HITCHIN_CONFIG_HPP

#include <memory>
#include <optional>
#include <string>

#include "hitchin/spectral.hpp"

namespace hitchin {

enum class OutputFormat { Json, Csv, Table };

/// Parsed run configuration. File format: one `key = value` per line,
/// `#` comments, comma-separated integer lists. Keys:
///   p             odd prime characteristic
///   ext           ambient extension degree (default 4)
///   f             coefficients of f, constant term first, monic
///   genus         expected genus (validated against deg f = 2g+1)
///   subset        Weierstrass indices of the 2-torsion twist (even count)
///   m_weierstrass g-1 Weierstrass indices whose point sum defines M
///   seed          sampling seed (default 0)
///   format        json | csv | table (default table)
///   budget        search budget (default 100000)
///   delta         wobbly-search delta (optional)
///   a_coeffs      optional pinned base point: coefficient indices for a
///   b_coeffs      optional pinned base point: coefficient indices for b
struct RunConfig {
  int64_t p = 0;
  int ext = 4;
  std::vector<int64_t> f_coeffs;
  int genus = 0;
  std::set<int> subset;
  std::vector<int> m_weierstrass;
  uint64_t seed = 0;
  OutputFormat format = OutputFormat::Table;
  int64_t budget = 100000;
  std::optional<int> delta;
  std::optional<std::vector<int64_t>> a_coeffs, b_coeffs;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// The configured curve, cover, and M class, with lifetimes tied together.
struct Instance {
  std::unique_ptr<HyperCurve> curve;
  std::unique_ptr<CoverModel> cover;
  std::unique_ptr<PicClass> M;
};

/// Builds and validates; every defect surfaces as ConfigError.
Instance build_instance(const RunConfig& cfg);

/// The configured base point: pinned coefficients if present (must pass the
/// nodal-integral test), otherwise seeded rejection sampling. Failures
/// throw NotNodalIntegral / BudgetExhausted.
BasePoint configured_base_point(const Instance& inst, const RunConfig& cfg);

}  // namespace hitchin

#endif
