#pragma once

#include "ogw/rational.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ogw {

struct InvalidGeometry : std::invalid_argument {
  explicit InvalidGeometry(const std::string& w) : std::invalid_argument("invalid geometry: " + w) {}
};

/// Fermat-type complete intersection of degrees (k_1..k_m) in CP^{N-1}.
struct GeometryData {
  int N = 0;
  std::vector<int> degrees;

  int codim() const { return static_cast<int>(degrees.size()); }
  int degree_sum() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }
  Int degree_product() const {
    Int p = 1;
    for (int k : degrees) p *= k;
    return p;
  }
  int dimension() const { return N - 1 - codim(); }

  bool is_hypersurface() const { return degrees.size() == 1; }
  bool is_cy() const { return degree_sum() == N; }
  bool is_fano() const { return degree_sum() < N; }
  bool is_general_type() const { return degree_sum() > N; }

  /// The single degree of a hypersurface.
  int k() const {
    if (!is_hypersurface()) throw InvalidGeometry("operation needs a hypersurface, got " + label());
    return degrees.front();
  }

  std::string label() const {
    std::string s = "N=" + std::to_string(N) + " k=";
    for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
    return s;
  }

  friend bool operator==(const GeometryData&, const GeometryData&) = default;
  friend auto operator<=>(const GeometryData&, const GeometryData&) = default;
};

inline GeometryData make_geometry(int N, std::vector<int> degrees) {
  if (degrees.empty()) throw InvalidGeometry("empty degree list");
  for (int k : degrees)
    if (k < 1 || k % 2 == 0) throw InvalidGeometry("degree " + std::to_string(k) + " is not a positive odd integer");
  GeometryData g{N, std::move(degrees)};
  if (g.codim() > 6) throw InvalidGeometry("at most six defining equations are supported");
  if (g.dimension() < 1) throw InvalidGeometry(g.label() + " has dimension < 1");
  return g;
}

inline GeometryData hypersurface(int N, int k) { return make_geometry(N, {k}); }

}  // namespace ogw
