#pragma once

#include <array>
#include <map>
#include <string>

#include "qhodge/scalar_field.hpp"

namespace qhodge {

/// Element of ℚ(q^{1/2})[i], i² = -1. q is real, so conj only flips i.
class ComplexQ {
 public:
  ComplexQ() = default;
  ComplexQ(QRational re, QRational im = QRational()) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  ComplexQ(int v) : re_(v) {}  // NOLINT
  static ComplexQ i() { return ComplexQ(QRational(), QRational(1)); }

  const QRational& re() const { return re_; }
  const QRational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  ComplexQ conj() const { return {re_, -im_}; }
  ComplexQ inverse() const;

  ComplexQ operator-() const { return {-re_, -im_}; }
  ComplexQ& operator+=(const ComplexQ& o);
  ComplexQ& operator-=(const ComplexQ& o);
  ComplexQ& operator*=(const ComplexQ& o);
  friend ComplexQ operator+(ComplexQ a, const ComplexQ& b) { return a += b; }
  friend ComplexQ operator-(ComplexQ a, const ComplexQ& b) { return a -= b; }
  friend ComplexQ operator*(ComplexQ a, const ComplexQ& b) { return a *= b; }
  friend ComplexQ operator/(const ComplexQ& a, const ComplexQ& b) { return a * b.inverse(); }
  friend bool operator==(const ComplexQ& a, const ComplexQ& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  std::string to_string() const;

 private:
  QRational re_;
  QRational im_;
};

/// Exact complex rational, the value of a ComplexQ at a numeric q.
struct ComplexRational {
  Rational re;
  Rational im;
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) { return a.re == b.re && a.im == b.im; }
};

/// Real symbols adjoined to the coefficient field.
enum class Sym : int { alpha = 0, beta = 1, gamma = 2, m = 3, mc = 4 };
inline constexpr int kSymCount = 5;
std::string sym_name(Sym s);  // "alpha", "beta", "gamma", "m", "mc"

/// Laurent polynomial in the real symbols α, β, γ, m, m̌ with coefficients
/// in ℚ(q^{1/2})[i].
class ParamPoly {
 public:
  using Exponents = std::array<int, kSymCount>;
  using Terms = std::map<Exponents, ComplexQ>;

  ParamPoly() = default;
  ParamPoly(const ComplexQ& c);   // NOLINT(google-explicit-constructor)
  ParamPoly(const QRational& c);  // NOLINT(google-explicit-constructor)
  ParamPoly(int c);               // NOLINT(google-explicit-constructor)
  static ParamPoly symbol(Sym s, int power = 1);

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient; precondition is_constant().
  ComplexQ constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Highest / lowest power of a symbol across terms (0 for zero).
  int max_power(Sym s) const;
  int min_power(Sym s) const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

  /// Division by a single-term ParamPoly (throws otherwise).
  ParamPoly divided_by(const ParamPoly& monomial) const;
  ParamPoly pow(int e) const;
  /// Complex conjugate; the symbols are real.
  ParamPoly conj() const;
  /// Replaces every occurrence of s by `value`. Negative powers need a
  /// single-term value.
  ParamPoly substitute(Sym s, const ParamPoly& value) const;
  /// Replaces s² by `square`; fails if an odd power of s remains.
  ParamPoly substitute_square(Sym s, const ParamPoly& square) const;
  /// Evaluates every coefficient at q = q0 (symbols kept).
  ParamPoly evaluate_q(const Rational& q0) const;
  /// Exact value at q = q0 once all symbols are gone.
  ComplexRational value_at(const Rational& q0) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace qhodge

namespace qhodge {
inline bool is_zero(const ParamPoly& x) { return x.is_zero(); }
inline bool is_zero(const ComplexQ& x) { return x.is_zero(); }
}  // namespace qhodge
