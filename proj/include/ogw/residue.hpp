#pragma once

// Rational functions with factored linear denominators, and iterated
// residues over them.
//
// A RatFun is a finite sum of terms numerator / prod_i L_i^{e_i}, where every
// L_i is a normalized homogeneous linear form (leading coefficient 1). Terms
// sharing a denominator are merged. Each denominator factor carries a tag
// mask recording which contour it belongs to; a ContourSpec names, per
// variable, the tags whose poles the contour encircles. Tags survive the
// substitutions performed by earlier residues, so "the pole of
// 1/(2 z_i - z_{i-1} - z_{i+1})" keeps meaning the locus of that factor after
// z_{i-1} has been integrated out.

#include "ogw/mpoly.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ogw {

struct ResidueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonIsolatedPole : ResidueError {
  explicit NonIsolatedPole(const std::string& w) : ResidueError("non-isolated pole: " + w) {}
};
struct HigherOrderPole : ResidueError {
  explicit HigherOrderPole(const std::string& w) : ResidueError("higher-order pole: " + w) {}
};

using TagMask = std::uint32_t;

struct DenFactor {
  LinearForm form;  // normalized
  int exponent = 0;
  TagMask tags = 0;

  friend bool operator<(const DenFactor& a, const DenFactor& b) {
    if (a.form < b.form) return true;
    if (b.form < a.form) return false;
    return std::tie(a.exponent, a.tags) < std::tie(b.exponent, b.tags);
  }
  friend bool operator==(const DenFactor& a, const DenFactor& b) {
    return a.exponent == b.exponent && a.tags == b.tags && a.form == b.form;
  }
};

/// Sorted by form, one entry per distinct form.
using Denominator = std::vector<DenFactor>;

namespace detail {

/// Multiply `den` by form^exponent (form already normalized).
inline void merge_factor(Denominator& den, const LinearForm& form, int exponent, TagMask tags) {
  if (exponent == 0) return;
  for (auto it = den.begin(); it != den.end(); ++it) {
    if (it->form == form) {
      it->exponent += exponent;
      it->tags |= tags;
      if (it->exponent == 0) den.erase(it);
      return;
    }
    if (form < it->form) {
      den.insert(it, DenFactor{form, exponent, tags});
      return;
    }
  }
  den.push_back(DenFactor{form, exponent, tags});
}

}  // namespace detail

class RatFun {
 public:
  using Terms = std::map<Denominator, MPoly>;

  RatFun() = default;
  RatFun(const MPoly& p) { add(p, {}); }  // NOLINT(google-explicit-constructor)
  RatFun(const Rat& c) : RatFun(MPoly(c)) {}  // NOLINT(google-explicit-constructor)

  /// num / prod form^exponent; forms need not be normalized.
  static RatFun fraction(const MPoly& num, const std::vector<std::tuple<LinearForm, int, TagMask>>& factors) {
    MPoly n = num;
    Denominator den;
    for (auto [form, e, tags] : factors) {
      if (form.is_zero()) throw NonIsolatedPole("zero linear form in denominator");
      const Rat lead = form.normalize();
      if (lead != 1) n *= ogw::pow(lead, -e);
      detail::merge_factor(den, form, e, tags);
    }
    RatFun r;
    r.add(n, den);
    return r;
  }
  /// 1 / (form^exponent), tagged.
  static RatFun inverse(const LinearForm& form, int exponent = 1, TagMask tags = 0) {
    return fraction(MPoly(Rat(1)), {{form, exponent, tags}});
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const MPoly& num, const Denominator& den) {
    if (num.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(den, num);
    if (!inserted) {
      it->second += num;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  RatFun& operator+=(const RatFun& o) {
    for (const auto& [den, num] : o.terms_) add(num, den);
    return *this;
  }
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + b * Rat(-1); }
  friend RatFun operator*(RatFun a, const Rat& s) {
    if (s == 0) return RatFun();
    for (auto& [den, num] : a.terms_) num *= s;
    return a;
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    RatFun r;
    for (const auto& [da, na] : a.terms_)
      for (const auto& [db, nb] : b.terms_) {
        Denominator den = da;
        for (const auto& f : db) detail::merge_factor(den, f.form, f.exponent, f.tags);
        r.add(na * nb, den);
      }
    return r;
  }
  friend RatFun operator*(const RatFun& a, const MPoly& p) {
    RatFun r;
    for (const auto& [den, num] : a.terms_) r.add(num * p, den);
    return r;
  }

  /// Single fraction (numerator, denominator) over the lcm of all factors.
  std::pair<MPoly, MPoly> to_fraction() const {
    std::map<LinearForm, int> lcm;
    for (const auto& [den, num] : terms_)
      for (const auto& f : den) lcm[f.form] = std::max(lcm[f.form], f.exponent);
    MPoly numer;
    for (const auto& [den, num] : terms_) {
      MPoly t = num;
      for (const auto& [form, e] : lcm) {
        int have = 0;
        for (const auto& f : den)
          if (f.form == form) have = f.exponent;
        if (e > have) t = t * form.to_poly().pow(e - have);
      }
      numer += t;
    }
    MPoly denom(Rat(1));
    for (const auto& [form, e] : lcm) denom = denom * form.to_poly().pow(e);
    return {numer, denom};
  }

  /// Equality by cross-multiplication.
  friend bool equivalent(const RatFun& a, const RatFun& b) {
    const auto [na, da] = a.to_fraction();
    const auto [nb, db] = b.to_fraction();
    return na * db == nb * da;
  }

  /// Scalar value once every variable has been integrated out.
  Rat scalar() const {
    Rat acc = 0;
    for (const auto& [den, num] : terms_) {
      if (!den.empty() || !num.is_constant()) throw std::logic_error("rational function still depends on variables");
      acc += num.constant();
    }
    return acc;
  }

  std::size_t term_count() const { return terms_.size(); }

 private:
  Terms terms_;
};

namespace detail {

/// Residue of num/den in z_v at z_v = point (a form in the other variables).
/// Every factor involving z_v is shifted to t + B' with t = z_v - point and
/// expanded in t; the numerator is re-expanded around the point; the result
/// is the coefficient of t^{m-1}, m the pole order.
inline void residue_term(const MPoly& num, const Denominator& den, int v, const LinearForm& point,
                         std::optional<int> max_order, RatFun& out) {
  LinearForm pole = LinearForm::var(v) - point;
  pole.normalize();

  int m = 0;
  Denominator fixed;
  struct Moving {
    LinearForm form;  // normalized B'
    Rat scale;        // B' = scale * form
    int exponent;
    TagMask tags;
  };
  std::vector<Moving> moving;
  for (const auto& f : den) {
    if (f.form == pole) {
      m = f.exponent;
      continue;
    }
    if (f.form[v] == 0) {
      fixed.push_back(f);
      continue;
    }
    if (f.form.leading_var() != v || f.form[v] != 1)
      throw std::logic_error("variable z" + std::to_string(v) + " is not the lowest remaining variable");
    // z_v + B at z_v = point + t becomes t + (B + point).
    LinearForm b = f.form - LinearForm::var(v) + point;
    if (b.is_zero()) throw NonIsolatedPole("factor " + f.form.str() + " vanishes identically at the pole");
    const Rat s = b.normalize();
    moving.push_back({b, s, f.exponent, f.tags});
  }
  if (m <= 0) return;
  if (max_order && m > *max_order)
    throw HigherOrderPole("order " + std::to_string(m) + " along z" + std::to_string(v) + " = " + point.str());

  // Numerator coefficients of t^s, s < m, after z_v -> point + t.
  const auto by_power = num.coefficients_in(v);
  const MPoly p = point.to_poly();
  std::vector<MPoly> ns(static_cast<std::size_t>(m));
  if (point.is_zero()) {
    for (int s = 0; s < m && s < static_cast<int>(by_power.size()); ++s) ns[s] = by_power[s];
  } else {
    std::vector<MPoly> ppow{MPoly(Rat(1))};
    for (int r = 0; r < static_cast<int>(by_power.size()); ++r) {
      if (by_power[r].is_zero()) continue;
      while (static_cast<int>(ppow.size()) <= r) ppow.push_back(ppow.back() * p);
      for (int s = 0; s <= r && s < m; ++s) ns[s].add_product(by_power[r], ppow[r - s], Rat(binomial(r, s)));
    }
  }

  // Distribute t-powers over the moving factors: sum_l j_l = m - 1 - s.
  std::vector<int> js(moving.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t l, int budget) {
    if (l == moving.size()) {
      // Whatever the moving factors did not use comes from the numerator.
      const MPoly& coeff = ns[static_cast<std::size_t>(budget)];
      if (coeff.is_zero()) return;
      Rat c = 1;
      Denominator d = fixed;
      for (std::size_t i = 0; i < moving.size(); ++i) {
        const auto& mv = moving[i];
        c *= gbinomial(-mv.exponent, static_cast<unsigned long>(js[i]));
        c *= ogw::pow(mv.scale, -(mv.exponent + js[i]));
        merge_factor(d, mv.form, mv.exponent + js[i], mv.tags);
      }
      out.add(coeff * c, d);
      return;
    }
    for (int j = 0; j <= budget; ++j) {
      js[l] = j;
      rec(l + 1, budget - j);
    }
    js[l] = 0;
  };
  rec(0, m - 1);
}

/// Distinct poles of a term in z_v selected by `mask`, plus 0 if present.
inline std::vector<LinearForm> term_poles(const Denominator& den, int v, TagMask mask,
                                          const std::vector<LinearForm>& extra) {
  std::vector<LinearForm> poles;
  auto push = [&](const LinearForm& p) {
    for (const auto& q : poles)
      if (q == p) return;
    poles.push_back(p);
  };
  for (const auto& f : den) {
    if (f.form[v] == 0) continue;
    if (f.form.is_monomial()) {
      push(LinearForm());
    } else if (f.tags & mask) {
      // z_v + B = 0  <=>  z_v = -B.
      push(Rat(-1) * (f.form - LinearForm::var(v)));
    }
  }
  for (const auto& e : extra)
    for (const auto& f : den) {
      LinearForm pole = LinearForm::var(v) - e;
      pole.normalize();
      if (f.form == pole) push(e);
    }
  return poles;
}

}  // namespace detail

/// Coefficient of z_v^{-1} in the Laurent expansion at z_v = 0.
inline RatFun residue_at_zero(const RatFun& f, int v) {
  RatFun out;
  for (const auto& [den, num] : f.terms()) detail::residue_term(num, den, v, LinearForm(), std::nullopt, out);
  return out;
}

/// Residue at z_v = point. Only simple poles are accepted unless max_order
/// is raised; `point` must not involve z_v.
inline RatFun residue_at_linear_pole(const RatFun& f, int v, const LinearForm& point, std::optional<int> max_order = 1) {
  if (point[v] != 0) throw std::invalid_argument("pole location may not involve the integration variable");
  RatFun out;
  for (const auto& [den, num] : f.terms()) detail::residue_term(num, den, v, point, max_order, out);
  return out;
}

/// One integration: variable, the pole tags its contour encircles (0 is
/// always encircled), and optionally explicit extra pole locations.
struct ContourStage {
  ContourStage(int v, TagMask tags = 0, std::vector<LinearForm> extra = {})
      : var(v), encircled(tags), extra_poles(std::move(extra)) {}

  int var;
  TagMask encircled;
  std::vector<LinearForm> extra_poles;
};

using ContourSpec = std::vector<ContourStage>;

inline RatFun contour_stage(const RatFun& f, const ContourStage& st) {
  RatFun out;
  for (const auto& [den, num] : f.terms())
    for (const auto& p : detail::term_poles(den, st.var, st.encircled, st.extra_poles))
      detail::residue_term(num, den, st.var, p, std::nullopt, out);
  return out;
}

/// Iterated residue in ascending variable order; the result must be a scalar.
inline Rat iterated_contour(const RatFun& f, const ContourSpec& spec) {
  for (std::size_t i = 1; i < spec.size(); ++i)
    if (spec[i].var <= spec[i - 1].var) throw std::invalid_argument("contour variables must be strictly ascending");
  RatFun cur = f;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    try {
      cur = contour_stage(cur, spec[i]);
    } catch (const NonIsolatedPole& e) {
      throw NonIsolatedPole("stage " + std::to_string(i) + ": " + e.what());
    } catch (const HigherOrderPole& e) {
      throw HigherOrderPole("stage " + std::to_string(i) + ": " + e.what());
    }
    if (cur.is_zero()) return Rat(0);
  }
  return cur.scalar();
}

}  // namespace ogw
