#pragma once

// B-model pipeline: tension series tau, Picard-Fuchs operator, the chain
// F_o built from the virtual structure constants, mirror map and disk
// amplitudes, plus the period endpoints of the direct integration.

#include "ogw/vsc_closed.hpp"

#include <map>
#include <string>

namespace ogw {

/// Sum_d 2 prod_a (k_a (2d-1))!! / ((2d-1)!!)^N q^{(2d-1)/2}, d = 1..dmax.
inline GradedSeries tau_series(const GeometryData& g, int dmax) {
  if (!g.is_cy()) throw InvalidGeometry("tau is defined for Calabi-Yau targets, got " + g.label());
  GradedSeries t(Grading::Half, 2 * dmax - 1);
  for (int d = 1; d <= dmax; ++d) {
    const long odd = 2L * d - 1;
    Int num = 2;
    for (int k : g.degrees) num *= double_factorial(k * odd);
    Int den = 1;
    for (int i = 0; i < g.N; ++i) den *= double_factorial(odd);
    Rat c(num, den);
    c.canonicalize();
    t.set(static_cast<int>(odd), c);
  }
  return t;
}

struct PFOperator {
  GeometryData geometry;

  int order() const { return pf_order(geometry); }
};

/// (d/dx)^{N-m} - (prod k_a) e^x prod_a prod_{j=1}^{k_a-1} (k_a d/dx + j).
inline LogSeries pf_apply(const PFOperator& op, const LogSeries& s) {
  LogSeries lead = s;
  for (int i = 0; i < op.order(); ++i) lead = diff_x(lead);
  LogSeries tail = s;
  for (int k : op.geometry.degrees)
    for (int j = 1; j < k; ++j) tail = Rat(k) * diff_x(tail) + Rat(j) * tail;
  tail = Rat(op.geometry.degree_product()) * shift(tail, 2);
  return lead - tail;
}

/// Compose with (d/dx - 1/2), which kills the source term C e^{x/2}.
inline LogSeries open_pf_apply(const PFOperator& op, const LogSeries& s) {
  LogSeries r = pf_apply(op, s);
  return diff_x(r) - make_rat(1, 2) * r;
}

struct InhomogeneityError : std::runtime_error {
  explicit InhomogeneityError(const std::string& w) : std::runtime_error("PF image of tau is not C q^{1/2}: " + w) {}
};

/// The constant C in pf(tau) = C q^{1/2}, after checking every other
/// retained coefficient vanishes.
inline Rat tension_constant(const GeometryData& g, int dmax) {
  const LogSeries img = pf_apply(PFOperator{g}, LogSeries(tau_series(g, dmax)));
  const GradedSeries& s = img.pure();
  for (int e = 0; e <= s.trunc(); ++e)
    if (e != 1 && s[e] != 0) throw InhomogeneityError("index " + std::to_string(e) + " is " + to_string(s[e]));
  return s[1];
}

/// 2^a (1/L_a) D ... (1/L_1) D (tau / L_0), a = (dim - 1)/2.
inline GradedSeries f_open(const GeometryData& g, const VSCTable& t) {
  const int dim = g.dimension();
  if (dim % 2 == 0) throw InvalidGeometry("F_o needs odd dimension, got " + g.label());
  const int a = (dim - 1) / 2;
  const int dmax = t.generating.front().trunc() / 2;
  GradedSeries s = tau_series(g, dmax) * series_invert(t.generating[0]);
  for (int i = 1; i <= a; ++i) s = series_invert(t.generating[static_cast<std::size_t>(i)]) * diff_x(s);
  return ogw::pow(Rat(2), a) * s;
}

inline GradedSeries f_open(const GeometryData& g, int dmax) { return f_open(g, vsc_recursion(g, dmax)); }

/// t - x = sum_d L_1^d / d q^d.
inline GradedSeries mirror_map(const VSCTable& t) {
  const int dmax = t.generating.front().trunc() / 2;
  GradedSeries m(Grading::Integer, 2 * dmax);
  for (int d = 1; d <= dmax; ++d) m.set(2 * d, t.at(1, d) / Rat(d));
  return m;
}

/// <O_{h^a}>_{disk, 2d-1} as the coefficients of e^{(2d-1)t/2}.
inline GradedSeries disk_amplitudes(const GeometryData& g, int dmax) {
  const VSCTable t = vsc_recursion(g, dmax);
  return invert_map(mirror_map(t), f_open(g, t));
}

// ---------------------------------------------------------------------------
// Periods from direct integration.

/// Rational-linear combination of series multiplied by opaque constants,
/// keyed by the constant's name ("1" for rational terms).
struct FormalCombination {
  std::map<std::string, LogSeries> terms;

  friend FormalCombination operator-(const FormalCombination& a, const FormalCombination& b) {
    FormalCombination r = a;
    for (const auto& [sym, s] : b.terms) {
      auto it = r.terms.find(sym);
      if (it == r.terms.end())
        r.terms.emplace(sym, Rat(-1) * s);
      else
        it->second = it->second - s;
    }
    return r;
  }
};

inline const std::string kInvFourPiI = "1/(4*pi*i)";
inline std::string two_over_pi_power(int k) { return "(2/pi)^" + std::to_string((k - 1) / 2); }

struct AppendixPeriods {
  GradedSeries w0;
  LogSeries w1;
  Rat A;
  FormalCombination tension_plus, tension_minus;
};

/// A = 1 for even m and 3 for odd m, m = (k-1)/2.
inline Rat parity_constant(int k) { return ((k - 1) / 2) % 2 == 0 ? Rat(1) : Rat(3); }

inline AppendixPeriods appendix_periods(const GeometryData& g, int dmax) {
  if (!g.is_cy() || !g.is_hypersurface()) throw InvalidGeometry("periods need a Calabi-Yau hypersurface");
  const int k = g.k();
  AppendixPeriods p;
  p.w0 = GradedSeries(Grading::Integer, 2 * dmax);
  for (int d = 0; d <= dmax; ++d) {
    Int den = 1;
    for (int i = 0; i < k; ++i) den *= factorial(static_cast<unsigned long>(d));
    Rat c(factorial(static_cast<unsigned long>(k * d)), den);
    c.canonicalize();
    p.w0.set(2 * d, c);
  }
  p.w1 = pf_solutions(g, 1, dmax);
  p.A = parity_constant(k);
  const LogSeries tau(tau_series(g, dmax));
  for (int sign : {1, -1}) {
    FormalCombination& t = sign > 0 ? p.tension_plus : p.tension_minus;
    t.terms.emplace(kInvFourPiI, p.w1);
    t.terms.emplace("1", Rat(Rat(sign) * p.A / 4) * LogSeries(p.w0));
    t.terms.emplace(two_over_pi_power(k), Rat(sign) * make_rat(1, 8) * tau);
  }
  return p;
}

}  // namespace ogw
