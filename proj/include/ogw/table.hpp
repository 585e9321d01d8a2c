#pragma once

// Per-degree invariant tables, their JSON/CSV forms, and the golden
// fixtures the verification suite compares against.

#include "ogw/amodel.hpp"
#include "ogw/bmodel.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace ogw {

inline constexpr const char* kEngineVersion = "1.0.0";

struct InvariantRow {
  int degree = 0;  // odd disk degree 2d-1
  int insertion = 0;
  Rat amplitude;
  std::optional<Rat> invariant;

  bool integral() const { return invariant && is_integer(*invariant); }
};

struct InvariantTable {
  GeometryData geometry;
  std::string pipeline;
  std::optional<CoveringParams> covering;
  std::vector<InvariantRow> rows;
};

inline std::string sign_name(CoveringSign s) {
  switch (s) {
    case CoveringSign::Tables: return "tables";
    case CoveringSign::Literal: return "literal";
    case CoveringSign::None: return "none";
  }
  return "?";
}

inline nlohmann::json geometry_json(const GeometryData& g) {
  return {{"N", g.N}, {"degrees", g.degrees}, {"dimension", g.dimension()}};
}

inline nlohmann::json to_json(const InvariantTable& t) {
  nlohmann::json params = {{"pipeline", t.pipeline}};
  if (t.covering) params["covering"] = {{"D", t.covering->D}, {"sign", sign_name(t.covering->sign)}};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json row = {{"degree", r.degree}, {"insertion", r.insertion}, {"amplitude", to_string(r.amplitude)}};
    if (r.invariant) {
      row["invariant"] = to_string(*r.invariant);
      row["integral"] = r.integral();
    }
    rows.push_back(std::move(row));
  }
  return {{"geometry", geometry_json(t.geometry)}, {"params", params}, {"rows", rows}, {"engine_version", kEngineVersion}};
}

inline std::string to_csv(const InvariantTable& t) {
  std::ostringstream os;
  os << "degree,insertion,amplitude" << (t.covering ? ",invariant,integral" : "") << "\n";
  for (const auto& r : t.rows) {
    os << r.degree << "," << r.insertion << "," << to_string(r.amplitude);
    if (t.covering) os << "," << (r.invariant ? to_string(*r.invariant) : "") << "," << (r.integral() ? "true" : "false");
    os << "\n";
  }
  return os.str();
}

/// Disk amplitudes of a Calabi-Yau target through degree 2 dmax - 1 from the
/// B-model chain, optionally resummed into invariants.
inline InvariantTable bmodel_table(const GeometryData& g, int dmax, std::optional<CoveringParams> covering) {
  InvariantTable t{g, "bmodel", covering, {}};
  const GradedSeries amp = disk_amplitudes(g, dmax);
  std::vector<Rat> n;
  if (covering) n = covering_invert(amp, *covering);
  const int a = (g.dimension() - 1) / 2;
  for (int d = 1; d <= dmax; ++d) {
    InvariantRow r{2 * d - 1, a, amp[2 * d - 1], std::nullopt};
    if (covering) r.invariant = n[static_cast<std::size_t>(d - 1)];
    t.rows.push_back(std::move(r));
  }
  return t;
}

/// One-point amplitudes of a hypersurface from localization, continued one
/// degree by inverting the mirror transformation. Degrees whose insertion
/// power is not an integer are skipped.
inline InvariantTable amodel_table(const GeometryData& g, int dmax) {
  InvariantTable t{g, "amodel", std::nullopt, {}};
  for (int d = 1; d <= dmax; ++d) {
    const int d_odd = 2 * d - 1;
    if (auto a = open_dimension(g, d_odd)) t.rows.push_back({d_odd, *a, open_gw(g, *a, d_odd), std::nullopt});
  }
  return t;
}

// ---------------------------------------------------------------------------
// Golden fixtures.

struct GoldenTable {
  std::string name;
  GeometryData geometry;
  std::string kind;  // calabi_yau, fano, general_type
  nlohmann::json raw;

  /// Value of `field` in the row of the given degree, if present.
  std::optional<Rat> value(int degree, const std::string& field) const {
    for (const auto& row : raw.at("rows"))
      if (row.at("degree").get<int>() == degree && row.contains(field)) return parse_rat(row.at(field).get<std::string>());
    return std::nullopt;
  }
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& row : raw.at("rows")) out.push_back(row.at("degree").get<int>());
    return out;
  }
};

inline GoldenTable load_golden(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path.string());
  nlohmann::json j = nlohmann::json::parse(in);
  const auto& geo = j.at("geometry");
  return {path.stem().string(), make_geometry(geo.at("N").get<int>(), geo.at("degrees").get<std::vector<int>>()),
          j.at("kind").get<std::string>(), j};
}

inline std::vector<GoldenTable> load_golden_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<GoldenTable> out;
  for (const auto& f : files) out.push_back(load_golden(f));
  return out;
}

}  // namespace ogw
