#pragma once

// Sparse multivariate polynomials over Rat in variables z_0 .. z_7.
//
// A monomial is a packed 64-bit key, one byte per variable, so monomial
// multiplication is integer addition. Exponents are capped at 127 and the cap
// is checked on every product.

#include "ogw/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ogw {

inline constexpr int kMaxVars = 8;

namespace mono {

using Key = std::uint64_t;
inline constexpr Key kOverflowMask = 0x8080808080808080ULL;

inline int exponent(Key k, int v) { return static_cast<int>((k >> (8 * v)) & 0xFF); }

inline Key unit(int v, int e = 1) {
  if (v < 0 || v >= kMaxVars) throw std::out_of_range("variable index out of range");
  if (e < 0 || e > 127) throw std::overflow_error("monomial exponent out of range");
  return static_cast<Key>(e) << (8 * v);
}

inline Key mul(Key a, Key b) {
  const Key r = a + b;
  if (r & kOverflowMask) throw std::overflow_error("monomial exponent overflow");
  return r;
}

inline Key without(Key k, int v) { return k & ~(Key{0xFF} << (8 * v)); }

inline int total_degree(Key k) {
  int d = 0;
  for (int v = 0; v < kMaxVars; ++v) d += exponent(k, v);
  return d;
}

}  // namespace mono

class MPoly {
 public:
  using Terms = std::map<mono::Key, Rat>;

  MPoly() = default;
  MPoly(const Rat& c) {  // NOLINT(google-explicit-constructor): scalars embed as constants
    if (c != 0) terms_.emplace(0, c);
  }
  MPoly(long c) : MPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly var(int v) { return monomial(Rat(1), mono::unit(v)); }
  static MPoly monomial(const Rat& c, mono::Key k) {
    MPoly p;
    if (c != 0) p.terms_.emplace(k, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  Rat constant() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  int degree_in(int v) const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, mono::exponent(k, v));
    return d;
  }

  /// Coefficient polynomials of z_v^0, z_v^1, ... (z_v removed).
  std::vector<MPoly> coefficients_in(int v) const {
    std::vector<MPoly> out(static_cast<std::size_t>(std::max(degree_in(v), -1) + 1));
    for (const auto& [k, c] : terms_) out[static_cast<std::size_t>(mono::exponent(k, v))].terms_.emplace(mono::without(k, v), c);
    return out;
  }

  void add_term(mono::Key k, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  MPoly& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }
  /// this += a * b * s without building the intermediate product.
  void add_product(const MPoly& a, const MPoly& b, const Rat& s = Rat(1)) {
    if (s == 0) return;
    Rat tmp;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        tmp = ca * cb;
        if (s != 1) tmp *= s;
        add_term(mono::mul(ka, kb), tmp);
      }
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) { return a *= Rat(-1); }
  friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
  friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    r.add_product(a, b);
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(int e) const {
    if (e < 0) throw std::domain_error("negative polynomial power");
    MPoly r(Rat(1)), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  /// Formal partial derivative in z_v.
  MPoly diff(int v) const {
    MPoly r;
    for (const auto& [k, c] : terms_) {
      const int e = mono::exponent(k, v);
      if (e > 0) r.add_term(k - mono::unit(v), c * e);
    }
    return r;
  }

  /// Replace z_v by the polynomial p everywhere.
  MPoly substitute(int v, const MPoly& p) const {
    const auto coeffs = coefficients_in(v);
    MPoly r, pp(Rat(1));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i > 0) pp = pp * p;
      if (!coeffs[i].is_zero()) r.add_product(coeffs[i], pp);
    }
    return r;
  }

  Rat evaluate(const std::array<Rat, kMaxVars>& point) const {
    Rat acc = 0;
    for (const auto& [k, c] : terms_) {
      Rat t = c;
      for (int v = 0; v < kMaxVars; ++v)
        if (int e = mono::exponent(k, v); e > 0) t *= ogw::pow(point[v], e);
      acc += t;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.get_str();
      for (int v = 0; v < kMaxVars; ++v)
        if (int e = mono::exponent(k, v); e > 0) os << "*z" << v << (e > 1 ? "^" + std::to_string(e) : "");
    }
    return os.str();
  }

 private:
  Terms terms_;
};

/// Homogeneous linear form sum_v c_v z_v.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(const std::vector<Rat>& c) {
    if (c.size() > kMaxVars) throw std::out_of_range("too many variables in linear form");
    for (std::size_t i = 0; i < c.size(); ++i) c_[i] = c[i];
  }
  static LinearForm var(int v, const Rat& c = Rat(1)) {
    LinearForm f;
    f.c_.at(static_cast<std::size_t>(v)) = c;
    return f;
  }

  const Rat& operator[](int v) const { return c_.at(static_cast<std::size_t>(v)); }
  Rat& operator[](int v) { return c_.at(static_cast<std::size_t>(v)); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  /// Index of the first variable with a nonzero coefficient, or -1.
  int leading_var() const {
    for (int v = 0; v < kMaxVars; ++v)
      if (c_[v] != 0) return v;
    return -1;
  }
  /// Single-variable form c * z_v?
  bool is_monomial() const {
    int n = 0;
    for (const auto& x : c_) n += (x != 0);
    return n == 1;
  }

  /// Scale so the leading coefficient is 1; returns the removed factor.
  Rat normalize() {
    const int v = leading_var();
    if (v < 0) return Rat(0);
    const Rat lead = c_[v];
    if (lead != 1)
      for (auto& x : c_) x /= lead;
    return lead;
  }

  MPoly to_poly() const {
    MPoly p;
    for (int v = 0; v < kMaxVars; ++v) p.add_term(mono::unit(v), c_[v]);
    return p;
  }

  friend LinearForm operator+(LinearForm a, const LinearForm& b) {
    for (int v = 0; v < kMaxVars; ++v) a.c_[v] += b.c_[v];
    return a;
  }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) {
    for (int v = 0; v < kMaxVars; ++v) a.c_[v] -= b.c_[v];
    return a;
  }
  friend LinearForm operator*(const Rat& s, LinearForm a) {
    for (auto& x : a.c_) x *= s;
    return a;
  }
  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.c_ == b.c_; }
  friend bool operator<(const LinearForm& a, const LinearForm& b) {
    for (int v = 0; v < kMaxVars; ++v) {
      const int c = cmp(a.c_[v], b.c_[v]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  std::string str() const { return to_poly().str(); }

 private:
  std::array<Rat, kMaxVars> c_{};
};

/// Sum of c_v z_v built from (variable, coefficient) pairs.
inline LinearForm linear(std::initializer_list<std::pair<int, Rat>> terms) {
  LinearForm f;
  for (const auto& [v, c] : terms) f[v] += c;
  return f;
}

}  // namespace ogw
