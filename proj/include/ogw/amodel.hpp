#pragma once

// A-model side: localization graph sums for multi-point disk amplitudes up
// to degree 5, the generalized mirror transformation, and the multiple
// covering formulas.

#include "ogw/vsc_open.hpp"

#include <algorithm>

namespace ogw {

struct UnsupportedDegree : std::invalid_argument {
  explicit UnsupportedDegree(int d_odd)
      : std::invalid_argument("no localization formula for disk degree " + std::to_string(d_odd)) {}
};

using InsertionList = std::vector<int>;

namespace detail {

/// h_a(x, y) = (x^a - y^a)/(x - y) in z_vx, z_vy.
inline MPoly h_poly(int a, int vx, int vy) {
  MPoly p;
  for (int i = 0; i < a; ++i) p.add_term(mono::mul(mono::unit(vx, i), mono::unit(vy, a - 1 - i)), Rat(1));
  return p;
}

/// prod_i (c z_0^{a_i - 1} + sum over edges h_{a_i}), times z_0^n so that
/// every factor is polynomial; the caller divides by z_0^n.
inline MPoly insertion_product(const InsertionList& ins, const Rat& c, const std::vector<std::pair<int, int>>& edges) {
  MPoly p(Rat(1));
  const MPoly z0 = MPoly::var(0);
  for (int a : ins) {
    MPoly h;
    for (auto [x, y] : edges) h += h_poly(a, x, y);
    p = p * (MPoly::monomial(c, mono::unit(0, a)) + z0 * h);
  }
  return p;
}

inline Rat graph_residue(const Integrand& f, int nvars, TagMask midpoints = 0) {
  ContourSpec spec;
  for (int i = 0; i < nvars; ++i) spec.emplace_back(i, midpoints & midpoint_tag(i));
  return iterated_contour(f.build(), spec);
}

}  // namespace detail

/// <prod O_{h^{a_i}}>_{disk, d_odd} for d_odd in {1, 3, 5}.
inline Rat open_gw_local(const GeometryData& g, const InsertionList& ins, int d_odd) {
  check_odd_degree(d_odd);
  if (d_odd > 5) throw UnsupportedDegree(d_odd);
  for (int a : ins)
    if (a < 0) throw std::invalid_argument("insertion powers must be non-negative");
  const int n = static_cast<int>(ins.size());
  const Rat K(g.degree_product());
  const int m = g.codim();
  auto base = [&](int nvars) {
    Integrand f;
    for (int i = 0; i < nvars; ++i) f.zpow(i, -g.N);
    f.zpow(0, -n);
    return f;
  };
  // 1/(K z^m) at vertex v.
  auto vertex = [&](Integrand& f, int v) {
    f *= Rat(1) / K;
    f.zpow(v, -m);
  };

  // Single half edge of full degree.
  Integrand single = base(1);
  f_factor(g, d_odd).multiply_into(single, 0);
  single *= make_rat(2, d_odd);
  single.zpow(0, 1);
  single *= detail::insertion_product(ins, make_rat(d_odd, 2), {});
  Rat total = detail::graph_residue(single, 1);
  if (d_odd == 1) return total;

  // Half edge of degree d_odd - 2 followed by one full edge.
  {
    const int half = d_odd - 2;
    Integrand f = base(2);
    f_factor(g, half).multiply_into(f, 0);
    f *= edge_polynomial(g, 0, 1);
    f *= MPoly::var(1) - MPoly::var(0);
    vertex(f, 0);
    f.divide(linear({{0, make_rat(d_odd, half)}, {1, Rat(-1)}}));
    f *= detail::insertion_product(ins, make_rat(half, 2), {{0, 1}});
    total += detail::graph_residue(f, 2);
  }
  if (d_odd == 3) return total;

  // Half edge of degree 1 followed by a chain of two full edges.
  {
    Integrand f = base(3);
    f_factor(g, 1).multiply_into(f, 0);
    f *= edge_polynomial(g, 0, 1);
    f *= edge_polynomial(g, 1, 2);
    f *= MPoly::var(2) - MPoly::var(1);
    vertex(f, 0);
    f.divide(linear({{0, Rat(3)}, {1, Rat(-1)}}));
    vertex(f, 1);
    f.divide(midpoint_form(0, 1, 2), 1, midpoint_tag(1));
    f *= detail::insertion_product(ins, make_rat(1, 2), {{0, 1}, {1, 2}});
    total += detail::graph_residue(f, 3, midpoint_tag(1));
  }
  // Half edge of degree 1 with two full edges at its vertex.
  {
    Integrand f = base(3);
    f_factor(g, 1).multiply_into(f, 0);
    f *= edge_polynomial(g, 0, 1);
    f *= edge_polynomial(g, 0, 2);
    vertex(f, 0);
    vertex(f, 0);
    f *= make_rat(1, 4);  // 1/2 symmetry times 1/(2 z_0)
    f.zpow(0, -1);
    f *= detail::insertion_product(ins, make_rat(1, 2), {{0, 1}, {0, 2}});
    total += detail::graph_residue(f, 3);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Generalized mirror transformation.

/// Sum of the partition terms of the transformation (everything except the
/// one-point amplitude). Needs amplitudes only up to degree d_odd - 2.
inline Rat gmt_correction(const GeometryData& g, int a, int d_odd) {
  check_odd_degree(d_odd);
  const int k = g.k();
  const int d = (d_odd + 1) / 2;
  Rat total = 0;
  for (int f = 1; f < d; ++f)
    for (const Parts& sigma : partitions(f)) {
      InsertionList ins{a};
      Rat closed = 1;
      bool forbidden = false;
      for (int fj : sigma) {
        const int ins_power = 1 + (k - g.N) * fj;
        const int closed_power = g.N - 3 - (k - g.N) * fj;
        if (ins_power < 0 || closed_power < 0) {
          forbidden = true;
          break;
        }
        ins.push_back(ins_power);
        closed *= closed_w(g, closed_power, 0, fj) / Rat(k);
      }
      if (forbidden) continue;
      total += symmetry_factor(sigma) * open_gw_local(g, ins, d_odd - 2 * f) * closed;
    }
  return total;
}

inline Rat gmt_rhs(const GeometryData& g, int a, int d_odd) {
  return open_gw_local(g, {a}, d_odd) + gmt_correction(g, a, d_odd);
}

/// <O_{h^a}>_{d_odd} recovered from w_disk by inverting the transformation;
/// reaches one degree beyond the localization formulas.
inline Rat open_gw_from_gmt(const GeometryData& g, int a, int d_odd) {
  return open_vsc(g, a, d_odd) - gmt_correction(g, a, d_odd);
}

/// One-point amplitude: localization where available, inverted
/// transformation one degree further.
inline Rat open_gw(const GeometryData& g, int a, int d_odd) {
  return d_odd <= 5 ? open_gw_local(g, {a}, d_odd) : open_gw_from_gmt(g, a, d_odd);
}

/// Kahler equation <O_{h^a} (O_h)^m> = <O_{h^a}> (d_odd/2)^m.
inline bool kahler_check(const GeometryData& g, int a, int m, int d_odd) {
  if (!g.is_cy()) throw InvalidGeometry("the Kahler equation is stated for Calabi-Yau targets");
  InsertionList ins{a};
  ins.insert(ins.end(), static_cast<std::size_t>(m), 1);
  return open_gw_local(g, ins, d_odd) == open_gw_local(g, {a}, d_odd) * ogw::pow(make_rat(d_odd, 2), m);
}

// ---------------------------------------------------------------------------
// Multiple covering formulas.

/// Sign attached to the l-th cover in dimension 2D + 3 (D >= 1).
enum class CoveringSign {
  Tables,   // (-1)^{(l-1)D}: reproduces the published invariants
  Literal,  // (-1)^{lD}: differs from Tables by the overall sign (-1)^D
  None,
};

struct CoveringParams {
  int D = 0;  // target dimension 2D + 3
  CoveringSign sign = CoveringSign::Tables;
};

inline CoveringParams covering_for(const GeometryData& g, CoveringSign sign = CoveringSign::Tables) {
  const int dim = g.dimension();
  if (dim < 3 || dim % 2 == 0) throw InvalidGeometry("covering formula needs odd dimension >= 3, got " + std::to_string(dim));
  return {(dim - 3) / 2, sign};
}

namespace detail {

/// Weight of n_{2d-1} q^{(2d-1)(2l-1)/2}.
inline Rat covering_weight(const CoveringParams& p, int d_odd, int l_odd, int l) {
  if (p.D == 0) return make_rat(d_odd, l_odd);
  long exponent = 0;
  if (p.sign == CoveringSign::Tables) exponent = static_cast<long>(l - 1) * p.D;
  if (p.sign == CoveringSign::Literal) exponent = static_cast<long>(l) * p.D;
  return exponent % 2 ? make_rat(-1, l_odd) : make_rat(1, l_odd);
}

}  // namespace detail

/// Sum over l, d of weight * n_{2d-1} q^{(2d-1)(2l-1)/2}, through q^{dmax - 1/2}.
inline GradedSeries covering_forward(const std::vector<Rat>& n, const CoveringParams& p, int dmax) {
  GradedSeries s(Grading::Half, 2 * dmax - 1);
  for (std::size_t i = 0; i < n.size(); ++i) {
    const int d_odd = 2 * static_cast<int>(i) + 1;
    for (int l = 1; d_odd * (2 * l - 1) <= 2 * dmax - 1; ++l) {
      const int idx = d_odd * (2 * l - 1);
      s.set(idx, s[idx] + detail::covering_weight(p, d_odd, 2 * l - 1, l) * n[i]);
    }
  }
  return s;
}

/// Solve the covering relation for n_1, n_3, ... as far as the amplitude is known.
inline std::vector<Rat> covering_invert(const GradedSeries& amplitude, const CoveringParams& p) {
  for (int e = 0; e <= amplitude.trunc(); e += 2)
    if (amplitude[e] != 0) throw std::invalid_argument("covering_invert: amplitude has integer-power terms");
  std::vector<Rat> n;
  for (int d_odd = 1; d_odd <= amplitude.trunc(); d_odd += 2) {
    Rat rest = amplitude[d_odd];
    // Contributions of lower n with d_odd = d' (2l - 1), l >= 2.
    for (int l_odd = 3; l_odd <= d_odd; l_odd += 2) {
      if (d_odd % l_odd != 0) continue;
      const int lower = d_odd / l_odd;
      rest -= detail::covering_weight(p, lower, l_odd, (l_odd + 1) / 2) * n[static_cast<std::size_t>(lower / 2)];
    }
    n.push_back(rest / detail::covering_weight(p, d_odd, 1, 1));
  }
  return n;
}

struct IntegralityReport {
  bool all_integral = true;
  std::vector<int> non_integral_degrees;  // odd degrees 2d-1
};

inline IntegralityReport integrality(const std::vector<Rat>& n) {
  IntegralityReport r;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (!is_integer(n[i])) {
      r.all_integral = false;
      r.non_integral_degrees.push_back(2 * static_cast<int>(i) + 1);
    }
  return r;
}

}  // namespace ogw
