#pragma once

// Closed virtual structure constants.
//
// Two routes: the Picard-Fuchs recursion on the hypergeometric solutions
// w_j, and the localization residue over chains z_0 - z_1 - ... - z_d. For
// complete intersections the hypergeometric numerator and the edge
// polynomial become products over the degrees, and the vertex factor
// k z becomes prod_a k_a z.

#include "ogw/geometry.hpp"
#include "ogw/partitions.hpp"
#include "ogw/residue.hpp"
#include "ogw/series.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <utility>

namespace ogw {

struct CancellationFailure : std::logic_error {
  explicit CancellationFailure(const std::string& w) : std::logic_error("logarithmic part did not cancel: " + w) {}
};

// ---------------------------------------------------------------------------
// Integrand assembly shared by every residue formula.

/// Product of numerator polynomial, Laurent monomials and linear factors.
class Integrand {
 public:
  Integrand& operator*=(const MPoly& p) {
    num_ = num_ * p;
    return *this;
  }
  Integrand& operator*=(const Rat& c) {
    num_ *= c;
    return *this;
  }
  /// Multiply by z_v^e, e of either sign.
  Integrand& zpow(int v, int e) {
    if (e > 0) num_ = num_ * MPoly::monomial(Rat(1), mono::unit(v, e));
    if (e < 0) den_.emplace_back(LinearForm::var(v), -e, TagMask{0});
    return *this;
  }
  Integrand& divide(const LinearForm& form, int e = 1, TagMask tags = 0) {
    den_.emplace_back(form, e, tags);
    return *this;
  }
  RatFun build() const { return RatFun::fraction(num_, den_); }

 private:
  MPoly num_{Rat(1)};
  std::vector<std::tuple<LinearForm, int, TagMask>> den_;
};

/// prod_a prod_{j=0}^{k_a} (j z + (k_a - j) w) with z = z_vz, w = z_vw.
inline MPoly edge_polynomial(const GeometryData& g, int vz, int vw) {
  MPoly p(Rat(1));
  for (int k : g.degrees)
    for (int j = 0; j <= k; ++j) p = p * linear({{vz, Rat(j)}, {vw, Rat(k - j)}}).to_poly();
  return p;
}

/// Tag carried by the midpoint factor 2 z_i - z_{i-1} - z_{i+1}.
inline TagMask midpoint_tag(int i) { return TagMask{1} << i; }

inline LinearForm midpoint_form(int prev, int i, int next) {
  return linear({{i, Rat(2)}, {prev, Rat(-1)}, {next, Rat(-1)}});
}

// ---------------------------------------------------------------------------
// Hypergeometric solutions.

/// w_j = (1/j!) d^j/dy^j w(x,y) at y = 0, truncated at q^dmax.
inline LogSeries pf_solutions(const GeometryData& g, int j, int dmax) {
  if (j < 0) throw std::invalid_argument("pf_solutions: j must be non-negative");
  if (dmax < 0) throw std::invalid_argument("pf_solutions: dmax must be non-negative");
  const auto J = static_cast<std::size_t>(j);
  std::vector<GradedSeries> parts(J + 1, GradedSeries(Grading::Integer, 2 * dmax));

  // c holds the y-Taylor coefficients (through y^j) of the d-th ratio.
  std::vector<Rat> c(J + 1);
  c[0] = 1;
  for (int d = 0; d <= dmax; ++d) {
    if (d > 0) {
      for (int k : g.degrees)
        for (long i = static_cast<long>(k) * (d - 1) + 1; i <= static_cast<long>(k) * d; ++i)
          for (std::size_t n = J + 1; n-- > 0;) c[n] = Rat(i) * c[n] + (n ? Rat(k) * c[n - 1] : Rat(0));
      for (int r = 0; r < g.N; ++r)
        for (std::size_t n = 0; n <= J; ++n) c[n] = (c[n] - (n ? c[n - 1] : Rat(0))) / Rat(d);
    }
    // e^{xy} contributes x^i y^i / i!.
    for (std::size_t i = 0; i <= J; ++i) parts[i].set(2 * d, c[J - i] / Rat(factorial(i)));
  }
  return LogSeries(std::move(parts));
}

// ---------------------------------------------------------------------------
// Picard-Fuchs recursion.

struct VSCTable {
  GeometryData geometry;
  std::vector<GradedSeries> generating;  // L_n(q), n = 0 .. order
  std::map<std::pair<int, int>, Rat> entries;

  const Rat& at(int n, int d) const { return entries.at({n, d}); }
  int order() const { return static_cast<int>(generating.size()) - 1; }
};

/// Number of L_n beyond L_0: the order N - m of the Picard-Fuchs operator.
inline int pf_order(const GeometryData& g) { return g.N - g.codim(); }

inline VSCTable vsc_recursion(const GeometryData& g, int dmax) {
  if (!g.is_cy()) throw InvalidGeometry("the recursion needs a Calabi-Yau geometry, got " + g.label());
  VSCTable t{g, {}, {}};
  const int order = pf_order(g);
  std::vector<GradedSeries> inv;
  for (int j = 0; j <= order; ++j) {
    LogSeries w = pf_solutions(g, j, dmax);
    GradedSeries Lj;
    if (j == 0) {
      Lj = w.pure();
    } else {
      LogSeries s = inv[0] * w;
      for (int i = 1; i < j; ++i) s = inv[static_cast<std::size_t>(i)] * diff_x(s);
      s = diff_x(s);
      if (!s.is_pure()) throw CancellationFailure("L_" + std::to_string(j) + " for " + g.label());
      Lj = s.part(0);
    }
    inv.push_back(series_invert(Lj));
    for (int d = 0; d <= dmax; ++d) t.entries[{j, d}] = Lj.at_power(d);
    t.generating.push_back(std::move(Lj));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Residue route.

namespace detail {

/// Chain integrand: prod z_i^{-N}, z_0^a, z_d^b, edge polynomials and the
/// vertex factors 1/(K z_i^m (2 z_i - z_{i-1} - z_{i+1})). Negative a, b
/// are allowed here.
inline Rat chain_residue(const GeometryData& g, int a, int b, int d) {
  if (d < 1 || d + 1 > kMaxVars) throw std::invalid_argument("chain residue: degree out of range");
  Integrand f;
  for (int i = 0; i <= d; ++i) f.zpow(i, -g.N);
  f.zpow(0, a).zpow(d, b);
  for (int i = 1; i <= d; ++i) f *= edge_polynomial(g, i - 1, i);
  const Rat K(g.degree_product());
  for (int i = 1; i < d; ++i) {
    f *= Rat(1) / K;
    f.zpow(i, -g.codim());
    f.divide(midpoint_form(i - 1, i, i + 1), 1, midpoint_tag(i));
  }
  ContourSpec spec;
  for (int i = 0; i <= d; ++i) spec.emplace_back(i, (i > 0 && i < d) ? midpoint_tag(i) : TagMask{0});
  return iterated_contour(f.build(), spec);
}

/// E^{N,k}_d(z_vz, z_vw) as an integrand factor, degrees multiplied out.
inline void edge_rational(Integrand& f, const GeometryData& g, int d, int vz, int vw) {
  const Rat inv_d = make_rat(1, d);
  for (int k : g.degrees)
    for (int j = 0; j <= k * d; ++j) f *= (inv_d * linear({{vz, Rat(j)}, {vw, Rat(k * d - j)}})).to_poly();
  for (int j = 1; j < d; ++j) f.divide(inv_d * linear({{vw, Rat(j)}, {vz, Rat(d - j)}}), g.N);
}

}  // namespace detail

/// w(O_{h^a} O_{h^b})_{0,d} from the chain form, memoized.
inline Rat closed_w(const GeometryData& g, int a, int b, int d) {
  if (a < 0 || b < 0) throw std::invalid_argument("closed_w: cohomology powers must be non-negative");
  if (d < 1) throw std::invalid_argument("closed_w: degree must be positive");
  using Key = std::tuple<GeometryData, int, int, int>;
  static std::mutex mu;
  static std::map<Key, Rat> cache;
  const Key key{g, a, b, d};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Rat v = detail::chain_residue(g, a, b, d);
  std::lock_guard lock(mu);
  cache.emplace(key, v);
  return v;
}

/// Same quantity from the sum over ordered partitions with residues at 0 only.
inline Rat closed_w_partitions(const GeometryData& g, int a, int b, int d) {
  Rat total = 0;
  const Rat K(g.degree_product());
  for (const Parts& sigma : ordered_partitions(d)) {
    const int l = static_cast<int>(sigma.size());
    if (l + 1 > kMaxVars) throw std::invalid_argument("closed_w_partitions: degree out of range");
    Integrand f;
    for (int i = 0; i <= l; ++i) f.zpow(i, -g.N);
    f.zpow(0, a).zpow(l, b);
    for (int j = 1; j <= l; ++j) {
      const int dj = sigma[static_cast<std::size_t>(j - 1)];
      detail::edge_rational(f, g, dj, j - 1, j);
      f *= make_rat(1, dj);
    }
    for (int j = 1; j < l; ++j) {
      const Rat pa = make_rat(1, sigma[static_cast<std::size_t>(j - 1)]);
      const Rat pb = make_rat(1, sigma[static_cast<std::size_t>(j)]);
      f *= Rat(1) / K;
      f.zpow(j, -g.codim());
      f.divide(linear({{j, pa + pb}, {j - 1, -pa}, {j + 1, -pb}}));
    }
    ContourSpec spec;
    for (int i = 0; i <= l; ++i) spec.emplace_back(i);
    total += iterated_contour(f.build(), spec);
  }
  return total;
}

/// L_n^{k,k,d} of a Calabi-Yau hypersurface from the chain residue.
inline Rat vsc_residue(const GeometryData& g, int n, int d) {
  if (!g.is_cy() || !g.is_hypersurface()) throw InvalidGeometry("vsc_residue needs a Calabi-Yau hypersurface");
  const int k = g.k();
  return make_rat(d, k) * detail::chain_residue(g, k - 2 - n, n - 1, d);
}

/// L_n^{k,k,d} from the ordered-partition form.
inline Rat vsc_residue_partitions(const GeometryData& g, int n, int d) {
  if (!g.is_cy() || !g.is_hypersurface()) throw InvalidGeometry("vsc_residue needs a Calabi-Yau hypersurface");
  const int k = g.k();
  return make_rat(d, k) * closed_w_partitions(g, k - 2 - n, n - 1, d);
}

}  // namespace ogw
