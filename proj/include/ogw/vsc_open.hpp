#pragma once

// Open virtual structure constants w_disk(O_{h^a})_{2d-1}.
//
// The half edge attached to the real locus carries f_{2d-1}(z), a Laurent
// monomial in z. Each j-term of the sum glues a closed chain of length j to
// the half edge of degree 2d-2j-1.

#include "ogw/vsc_closed.hpp"

namespace ogw {

/// c * z^power.
struct LaurentMonomial {
  Rat coefficient;
  int power = 0;

  void multiply_into(Integrand& f, int var) const {
    f *= coefficient;
    f.zpow(var, power);
  }
};

inline void check_odd_degree(int d_odd) {
  if (d_odd < 1 || d_odd % 2 == 0) throw std::invalid_argument("disk degree must be a positive odd integer");
}

/// f^{N,k}_{2d-1}(z); numerator products run over every degree k_a.
inline LaurentMonomial f_factor(const GeometryData& g, int d_odd) {
  check_odd_degree(d_odd);
  const int d = (d_odd + 1) / 2;
  LaurentMonomial f{make_rat(2, d_odd), 0};
  for (int k : g.degrees) {
    const int top = k * d - (k + 1) / 2;
    for (int j = 0; j <= top; ++j) f.coefficient *= make_rat(k * d_odd - 2 * j, d_odd);
    f.power += top + 1;
  }
  for (int j = 1; j < d; ++j) f.coefficient /= ogw::pow(make_rat(d_odd - 2 * j, d_odd), g.N);
  f.power -= g.N * (d - 1);
  return f;
}

/// The insertion power a at which w_disk(O_{h^a})_{d_odd} can be nonzero, or
/// nullopt when that power is not a non-negative integer.
inline std::optional<int> open_dimension(const GeometryData& g, int d_odd) {
  const int twice = g.dimension() - 1 + (g.N - g.degree_sum()) * d_odd;
  if (twice < 0 || twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

namespace detail {

inline Rat open_vsc_term(const GeometryData& g, int a, int d_odd, int j) {
  const int half = d_odd - 2 * j;  // degree of the half edge
  Integrand f;
  for (int i = 0; i <= j; ++i) f.zpow(i, -g.N);
  f_factor(g, half).multiply_into(f, 0);
  f.zpow(j, a);
  if (j >= 1) {
    const Rat K(g.degree_product());
    for (int i = 1; i <= j; ++i) f *= edge_polynomial(g, i - 1, i);
    f *= Rat(1) / K;
    f.zpow(0, -g.codim());
    f.divide(linear({{0, make_rat(2, half) + 1}, {1, Rat(-1)}}));
    for (int i = 1; i < j; ++i) {
      f *= Rat(1) / K;
      f.zpow(i, -g.codim());
      f.divide(midpoint_form(i - 1, i, i + 1), 1, midpoint_tag(i));
    }
  }
  ContourSpec spec;
  for (int i = 0; i <= j; ++i) spec.emplace_back(i, (i > 0 && i < j) ? midpoint_tag(i) : TagMask{0});
  return iterated_contour(f.build(), spec);
}

}  // namespace detail

/// w_disk(O_{h^a})_{d_odd}; off-dimension inputs give 0.
inline Rat open_vsc(const GeometryData& g, int a, int d_odd) {
  check_odd_degree(d_odd);
  if (a < 0) throw std::invalid_argument("open_vsc: cohomology power must be non-negative");
  const int d = (d_odd + 1) / 2;
  if (d > kMaxVars) throw std::invalid_argument("open_vsc: degree out of range");
  Rat total = 0;
  for (int j = 0; j < d; ++j) total += detail::open_vsc_term(g, a, d_odd, j);
  return total;
}

/// Same quantity from the ordered-partition form (residues at 0 only).
inline Rat open_vsc_partitions(const GeometryData& g, int a, int d_odd) {
  check_odd_degree(d_odd);
  const int d = (d_odd + 1) / 2;
  const Rat K(g.degree_product());
  Rat total = 0;
  for (int j = 0; j < d; ++j) {
    const int half = d_odd - 2 * j;
    std::vector<Parts> sigmas = j == 0 ? std::vector<Parts>{Parts{}} : ordered_partitions(j);
    for (const Parts& sigma : sigmas) {
      const int l = static_cast<int>(sigma.size());
      if (l + 1 > kMaxVars) throw std::invalid_argument("open_vsc_partitions: degree out of range");
      auto part = [&](int i) { return sigma[static_cast<std::size_t>(i - 1)]; };
      Integrand f;
      for (int i = 0; i <= l; ++i) f.zpow(i, -g.N);
      f_factor(g, half).multiply_into(f, 0);
      f.zpow(l, a);
      for (int i = 1; i <= l; ++i) {
        detail::edge_rational(f, g, part(i), i - 1, i);
        f *= make_rat(1, part(i));
      }
      if (l >= 1) {
        const Rat p1 = make_rat(1, part(1));
        f *= Rat(1) / K;
        f.zpow(0, -g.codim());
        f.divide(linear({{0, make_rat(2, half) + p1}, {1, -p1}}));
      }
      for (int i = 1; i < l; ++i) {
        const Rat pa = make_rat(1, part(i)), pb = make_rat(1, part(i + 1));
        f *= Rat(1) / K;
        f.zpow(i, -g.codim());
        f.divide(linear({{i, pa + pb}, {i - 1, -pa}, {i + 1, -pb}}));
      }
      ContourSpec spec;
      for (int i = 0; i <= l; ++i) spec.emplace_back(i);
      total += iterated_contour(f.build(), spec);
    }
  }
  return total;
}

}  // namespace ogw
