#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhodge {

using Rational = mpq_class;

/// Raised when a rational function is evaluated at a pole, or when an odd
/// power of q^{1/2} is evaluated at a q0 that is not a rational square.
class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Laurent polynomial in s = q^{1/2} with rational coefficients.
///
/// All exponents are stored in units of s, so q^k is s^{2k}. The stored
/// coefficient vector never has zero entries at either end.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Rational c, int s_power = 0);  // NOLINT(google-explicit-constructor)

  static LaurentPoly q_power(int k, Rational c = 1) { return LaurentPoly(std::move(c), 2 * k); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest / highest s-power carrying a nonzero coefficient. Undefined for zero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int s_power) const;
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  /// True when only even s-powers occur, i.e. this is a Laurent polynomial in q.
  bool is_in_q() const;

  LaurentPoly shifted(int s_shift) const;
  Rational evaluate_s(const Rational& s0) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Human-readable form in powers of q, ascending.
  std::string to_string() const;

 private:
  friend class QRational;
  LaurentPoly(int low, std::vector<Rational> coeffs);
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;  // coeffs_[i] multiplies s^(low_ + i)
};

/// Element of the field Q(q^{1/2}) in reduced canonical form.
///
/// Canonical form: gcd(num, den) = 1, den has lowest power 0 and leading
/// coefficient 1. Zero is stored as 0/1. Two values are equal iff their
/// canonical forms coincide.
class QRational {
 public:
  QRational() : den_(1) {}
  QRational(int v) : num_(Rational(v)), den_(1) {}             // NOLINT
  QRational(Rational v) : num_(std::move(v)), den_(1) {}       // NOLINT
  QRational(LaurentPoly p) : num_(std::move(p)), den_(1) {}    // NOLINT

  /// Reduced canonical form of n/d. Throws std::domain_error if d = 0.
  static QRational normalize(LaurentPoly n, LaurentPoly d);
  static QRational q(int k = 1) { return QRational(LaurentPoly::q_power(k)); }
  static QRational sqrt_q(int k = 1) { return QRational(LaurentPoly(1, k)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_in_q() const { return num_.is_in_q() && den_.is_in_q(); }
  /// Constant value; precondition is_constant().
  Rational constant() const;

  QRational operator-() const;
  QRational& operator+=(const QRational& o);
  QRational& operator-=(const QRational& o);
  QRational& operator*=(const QRational& o);
  QRational& operator/=(const QRational& o);
  friend QRational operator+(QRational a, const QRational& b) { return a += b; }
  friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
  friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
  friend QRational operator/(QRational a, const QRational& b) { return a /= b; }
  friend bool operator==(const QRational& a, const QRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  QRational inverse() const;
  QRational pow(int e) const;

  /// Exact value at s = s0 (s = q^{1/2}).
  Rational evaluate_s(const Rational& s0) const;
  /// Exact value at q = q0. Odd s-powers need q0 to be a rational square.
  Rational evaluate_at(const Rational& q0) const;
  /// Sign of the value at q = q0.
  int sign_at(const Rational& q0) const;

  std::string to_string() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

inline QRational normalize(LaurentPoly n, LaurentPoly d) { return QRational::normalize(std::move(n), std::move(d)); }
inline Rational evaluate_at(const QRational& x, const Rational& q0) { return x.evaluate_at(q0); }
inline int sign_at(const QRational& x, const Rational& q0) { return x.sign_at(q0); }

/// Exact square root of a nonnegative rational, if it is a perfect square.
bool rational_sqrt(const Rational& x, Rational& root);
/// Parses "p", "-p" or "p/r" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& r);

namespace poly {
// Dense univariate helpers over Q; index = power. Used by gcd and by the
// spectrum module. Vectors are kept without trailing zeros.
using Dense = std::vector<Rational>;
void trim(Dense& p);
Dense mul(const Dense& a, const Dense& b);
void divmod(const Dense& a, const Dense& b, Dense& quot, Dense& rem);
Dense gcd(Dense a, Dense b);  // monic, or empty if both are zero
Dense derivative(const Dense& p);
Rational evaluate(const Dense& p, const Rational& x);
}  // namespace poly

}  // namespace qhodge
