#pragma once

// Truncated formal series in q = e^x with integer or half-integer exponents.
//
// Exponents are stored doubled: index e stands for q^{e/2}. A series of
// integer grading never holds a nonzero coefficient at an odd index. The
// truncation index is carried explicitly and coefficients beyond it are
// unknown, so every binary operation returns the smaller of the operands'
// guaranteed ranges.

#include "ogw/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ogw {

enum class Grading { Integer, Half };

struct ZeroConstantTerm : std::domain_error {
  ZeroConstantTerm() : std::domain_error("series has a vanishing constant term") {}
};

struct NotAMirrorMap : std::domain_error {
  explicit NotAMirrorMap(const std::string& why) : std::domain_error("not a mirror map: " + why) {}
};

inline Grading coarser(Grading a, Grading b) {
  return (a == Grading::Half || b == Grading::Half) ? Grading::Half : Grading::Integer;
}

class GradedSeries {
 public:
  GradedSeries() : GradedSeries(Grading::Integer, 0) {}
  GradedSeries(Grading g, int trunc) : grading_(g), coeffs_(static_cast<std::size_t>(check_trunc(trunc)) + 1) {}

  static GradedSeries zero(Grading g, int trunc) { return {g, trunc}; }
  static GradedSeries one(Grading g, int trunc) {
    GradedSeries s(g, trunc);
    s.coeffs_[0] = 1;
    return s;
  }
  /// c * q^{index/2}.
  static GradedSeries monomial(Grading g, int index, const Rat& c, int trunc) {
    GradedSeries s(g, trunc);
    if (index <= trunc) s.set(index, c);
    return s;
  }
  /// sum_d c[d] q^d, known through q^{c.size()-1}.
  static GradedSeries from_integer_powers(const std::vector<Rat>& c) {
    if (c.empty()) throw std::invalid_argument("empty coefficient list");
    GradedSeries s(Grading::Integer, 2 * (static_cast<int>(c.size()) - 1));
    for (std::size_t d = 0; d < c.size(); ++d) s.coeffs_[2 * d] = c[d];
    return s;
  }

  Grading grading() const { return grading_; }
  int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of q^{index/2}.
  const Rat& operator[](int index) const {
    if (index < 0 || index > trunc()) throw std::out_of_range("series index " + std::to_string(index) + " beyond truncation");
    return coeffs_[static_cast<std::size_t>(index)];
  }
  /// Coefficient of q^d for integer d.
  const Rat& at_power(int d) const { return (*this)[2 * d]; }

  void set(int index, const Rat& c) {
    if (index < 0 || index > trunc()) throw std::out_of_range("series index beyond truncation");
    if (grading_ == Grading::Integer && (index & 1) && c != 0) grading_ = Grading::Half;
    coeffs_[static_cast<std::size_t>(index)] = c;
  }

  /// Lowest index with a nonzero coefficient, or trunc()+1 when none is known.
  int valuation() const {
    for (int e = 0; e <= trunc(); ++e)
      if (coeffs_[static_cast<std::size_t>(e)] != 0) return e;
    return trunc() + 1;
  }

  bool is_zero() const { return valuation() > trunc(); }

  GradedSeries truncated(int t) const {
    if (t > trunc()) throw std::out_of_range("cannot extend truncation");
    GradedSeries r(grading_, t);
    std::copy_n(coeffs_.begin(), t + 1, r.coeffs_.begin());
    return r;
  }

  /// Odd (half-integer) indices only?
  bool odd_supported() const {
    for (int e = 0; e <= trunc(); e += 2)
      if (coeffs_[static_cast<std::size_t>(e)] != 0) return false;
    return true;
  }

  GradedSeries& operator+=(const GradedSeries& o) { return *this = *this + o; }
  GradedSeries& operator-=(const GradedSeries& o) { return *this = *this - o; }

  friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
    GradedSeries r(coarser(a.grading_, b.grading_), std::min(a.trunc(), b.trunc()));
    for (int e = 0; e <= r.trunc(); ++e) r.coeffs_[e] = a.coeffs_[e] + b.coeffs_[e];
    return r;
  }
  friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
    GradedSeries r(coarser(a.grading_, b.grading_), std::min(a.trunc(), b.trunc()));
    for (int e = 0; e <= r.trunc(); ++e) r.coeffs_[e] = a.coeffs_[e] - b.coeffs_[e];
    return r;
  }
  friend GradedSeries operator-(const GradedSeries& a) { return a * Rat(-1); }
  friend GradedSeries operator*(const GradedSeries& a, const Rat& c) {
    GradedSeries r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }
  friend GradedSeries operator*(const Rat& c, const GradedSeries& a) { return a * c; }

  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) { return series_mul(a, b); }
  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.trunc() == b.trunc() && a.coeffs_ == b.coeffs_;
  }

  /// Cauchy product; truncation accounts for the operands' valuations.
  friend GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) {
    const int va = a.valuation(), vb = b.valuation();
    const int t = std::min(a.trunc() + vb, b.trunc() + va);
    GradedSeries r(coarser(a.grading_, b.grading_), t);
    for (int i = va; i <= a.trunc() && i <= t; ++i) {
      const Rat& ai = a.coeffs_[i];
      if (ai == 0) continue;
      for (int j = vb; j <= b.trunc() && i + j <= t; ++j) {
        const Rat& bj = b.coeffs_[j];
        if (bj != 0) r.coeffs_[i + j] += ai * bj;
      }
    }
    return r;
  }

  /// Multiplicative inverse; requires a nonzero constant term.
  friend GradedSeries series_invert(const GradedSeries& a) {
    if (a.coeffs_[0] == 0) throw ZeroConstantTerm();
    GradedSeries r(a.grading_, a.trunc());
    const Rat inv0 = Rat(1) / a.coeffs_[0];
    r.coeffs_[0] = inv0;
    for (int n = 1; n <= a.trunc(); ++n) {
      Rat acc = 0;
      for (int i = 1; i <= n; ++i)
        if (a.coeffs_[i] != 0) acc += a.coeffs_[i] * r.coeffs_[n - i];
      r.coeffs_[n] = -acc * inv0;
    }
    return r;
  }

  /// exp of a series without constant term.
  friend GradedSeries series_exp(const GradedSeries& g) {
    if (g.coeffs_[0] != 0) throw std::domain_error("series_exp needs a vanishing constant term");
    GradedSeries f(g.grading_, g.trunc());
    f.coeffs_[0] = 1;
    // n f_n = sum_i i g_i f_{n-i}; valid in the doubled index as well.
    for (int n = 1; n <= g.trunc(); ++n) {
      Rat acc = 0;
      for (int i = 1; i <= n; ++i)
        if (g.coeffs_[i] != 0) acc += Rat(i) * g.coeffs_[i] * f.coeffs_[n - i];
      f.coeffs_[n] = acc / n;
    }
    return f;
  }

  /// d/dx with q = e^x: q^{e/2} -> (e/2) q^{e/2}.
  friend GradedSeries diff_x(const GradedSeries& a) {
    GradedSeries r(a.grading_, a.trunc());
    for (int e = 1; e <= a.trunc(); ++e)
      if (a.coeffs_[e] != 0) r.coeffs_[e] = a.coeffs_[e] * make_rat(e, 2);
    return r;
  }

  /// Multiply by q^{shift/2}; the known range moves with it.
  friend GradedSeries shift(const GradedSeries& a, int by) {
    if (by < 0) throw std::invalid_argument("negative shift");
    Grading g = (by & 1) ? Grading::Half : a.grading_;
    GradedSeries r(g, a.trunc() + by);
    for (int e = 0; e <= a.trunc(); ++e) r.coeffs_[e + by] = a.coeffs_[e];
    return r;
  }

 private:
  static int check_trunc(int t) {
    if (t < 0) throw std::invalid_argument("negative truncation");
    return t;
  }

  Grading grading_;
  std::vector<Rat> coeffs_;
};

inline GradedSeries series_pow(const GradedSeries& a, int n) {
  if (n < 0) return series_pow(series_invert(a), -n);
  GradedSeries r = GradedSeries::one(a.grading(), a.trunc());
  GradedSeries base = a;
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

/// sum_i x^i * parts[i](q). x-degree is tiny, so each power is kept separately.
class LogSeries {
 public:
  LogSeries() = default;
  explicit LogSeries(GradedSeries s) : parts_{std::move(s)} {}
  explicit LogSeries(std::vector<GradedSeries> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("LogSeries needs at least one part");
    const int t = trunc();
    for (auto& p : parts_)
      if (p.trunc() != t) p = p.truncated(std::min(p.trunc(), t));
  }

  int x_degree() const {
    for (int i = static_cast<int>(parts_.size()) - 1; i > 0; --i)
      if (!parts_[i].is_zero()) return i;
    return 0;
  }
  int trunc() const {
    int t = parts_.at(0).trunc();
    for (const auto& p : parts_) t = std::min(t, p.trunc());
    return t;
  }
  const GradedSeries& part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }
  std::size_t size() const { return parts_.size(); }

  /// True when every x^i part with i > 0 vanishes through truncation.
  bool is_pure() const { return x_degree() == 0; }
  /// The x^0 part, after checking that nothing logarithmic survives.
  const GradedSeries& pure() const {
    if (!is_pure()) throw std::logic_error("logarithmic part did not cancel");
    return parts_.at(0);
  }

  friend LogSeries operator+(const LogSeries& a, const LogSeries& b) {
    const std::size_t n = std::max(a.size(), b.size());
    std::vector<GradedSeries> parts;
    parts.reserve(n);
    const int t = std::min(a.trunc(), b.trunc());
    const Grading g = coarser(a.part(0).grading(), b.part(0).grading());
    for (std::size_t i = 0; i < n; ++i) {
      GradedSeries s = GradedSeries::zero(g, t);
      if (i < a.size()) s = s + a.parts_[i];
      if (i < b.size()) s = s + b.parts_[i];
      parts.push_back(std::move(s));
    }
    return LogSeries(std::move(parts));
  }
  friend LogSeries operator*(const Rat& c, const LogSeries& a) {
    LogSeries r = a;
    for (auto& p : r.parts_) p = p * c;
    return r;
  }
  friend LogSeries operator-(const LogSeries& a, const LogSeries& b) { return a + Rat(-1) * b; }
  friend LogSeries operator*(const GradedSeries& s, const LogSeries& a) {
    std::vector<GradedSeries> parts;
    parts.reserve(a.size());
    for (const auto& p : a.parts_) parts.push_back(s * p);
    return LogSeries(std::move(parts));
  }

  /// d/dx with the product rule across the x-polynomial structure.
  friend LogSeries diff_x(const LogSeries& a) {
    std::vector<GradedSeries> parts;
    parts.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      GradedSeries s = diff_x(a.parts_[i]);
      if (i + 1 < a.size()) s = s + Rat(static_cast<long>(i + 1)) * a.parts_[i + 1];
      parts.push_back(std::move(s));
    }
    return LogSeries(std::move(parts));
  }

  /// Multiply by q^{shift/2}.
  friend LogSeries shift(const LogSeries& a, int s) {
    std::vector<GradedSeries> parts;
    for (const auto& p : a.parts_) parts.push_back(shift(p, s));
    return LogSeries(std::move(parts));
  }

  /// q^{1/2} -> -q^{1/2}: negates every odd-index coefficient.
  friend LogSeries flip_half(const LogSeries& a) {
    std::vector<GradedSeries> parts;
    for (const auto& p : a.parts_) {
      GradedSeries s = p;
      for (int e = 1; e <= s.trunc(); e += 2) s.set(e, -s[e]);
      parts.push_back(std::move(s));
    }
    return LogSeries(std::move(parts));
  }

 private:
  std::vector<GradedSeries> parts_;
};

/// Sum_d g_d q(Q)^d for a series q(Q) with valuation >= 2 (integer grading).
inline GradedSeries compose_integer(const GradedSeries& g, const GradedSeries& q) {
  const int t = q.trunc();
  GradedSeries acc = GradedSeries::zero(Grading::Integer, t);
  GradedSeries qp = GradedSeries::one(Grading::Integer, t);
  for (int d = 0; 2 * d <= g.trunc(); ++d) {
    if (d > 0) qp = (qp * q).truncated(t);
    if (qp.valuation() > t) break;
    if (g.at_power(d) != 0) acc = acc + qp * g.at_power(d);
  }
  // g_d for d past g's truncation is unknown; q^d has valuation d * v(q).
  const int vq = q.valuation();
  const int known = (g.trunc() / 2 + 1) * vq - 1;
  if (known < t) return acc.truncated(known);
  return acc;
}

/// Given t(x) = x + g(e^x), return target(x(t)) as a series in Q = e^t.
///
/// q = e^x solves q = Q exp(-g(q)); the fixed-point iteration gains one order
/// in Q per pass. Then q^{1/2} = Q^{1/2} exp(-g(q)/2) is substituted into the
/// target, which is a series in q^{1/2}.
inline GradedSeries invert_map(const GradedSeries& t_minus_x, const GradedSeries& target) {
  if (t_minus_x.grading() != Grading::Integer) throw NotAMirrorMap("half-integer exponents in t(x) - x");
  if (t_minus_x[0] != 0) throw NotAMirrorMap("constant term in t(x) - x");
  const int tg = t_minus_x.trunc() - (t_minus_x.trunc() & 1);
  const int out_trunc = std::min(target.trunc(), tg + 1);

  GradedSeries q = GradedSeries::monomial(Grading::Integer, 2, Rat(1), tg);
  for (int pass = 0; pass <= tg / 2; ++pass) {
    GradedSeries h = compose_integer(t_minus_x, q);
    q = shift(series_exp(-h).truncated(tg - 2), 2);
  }
  const GradedSeries h = compose_integer(t_minus_x, q);
  const GradedSeries e = series_exp(Rat(-1, 2) * h);
  // q^{1/2} as a series in Q^{1/2}.
  GradedSeries s(Grading::Half, out_trunc);
  for (int i = 0; i <= e.trunc() && i + 1 <= out_trunc; ++i) s.set(i + 1, e[i]);

  GradedSeries result = GradedSeries::zero(Grading::Half, out_trunc);
  GradedSeries sp = GradedSeries::one(Grading::Half, out_trunc);
  for (int idx = 0; idx <= out_trunc; ++idx) {
    if (idx > 0) sp = (sp * s).truncated(out_trunc);
    if (target[idx] != 0) result = result + sp * target[idx];
  }
  return result;
}

}  // namespace ogw
