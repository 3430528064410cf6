#include "qhodge/scalar_field.hpp"

#include <algorithm>
#include <sstream>

namespace qhodge {

namespace poly {

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void divmod(const Dense& a, const Dense& b, Dense& quot, Dense& rem) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  rem = a;
  trim(rem);
  quot.clear();
  if (rem.size() < b.size()) return;
  quot.assign(rem.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (!rem.empty() && rem.size() >= b.size()) {
    std::size_t shift = rem.size() - b.size();
    Rational f = rem.back() / lead;
    quot[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= f * b[j];
    rem.pop_back();  // leading term cancels exactly
    trim(rem);
  }
  trim(quot);
}

Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

Dense derivative(const Dense& p) {
  if (p.size() <= 1) return {};
  Dense d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  trim(d);
  return d;
}

Rational evaluate(const Dense& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// LaurentPoly

// mpq_class(n, d) is not reduced; everything downstream assumes canonical input.
LaurentPoly::LaurentPoly(Rational c, int s_power) : low_(s_power) {
  c.canonicalize();
  if (c != 0) coeffs_.push_back(std::move(c));
  else low_ = 0;
}

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

Rational LaurentPoly::coeff(int s_power) const {
  if (coeffs_.empty() || s_power < low_ || s_power > high()) return 0;
  return coeffs_[static_cast<std::size_t>(s_power - low_)];
}

bool LaurentPoly::is_in_q() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0 && ((low_ + static_cast<int>(i)) % 2 != 0)) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::shifted(int s_shift) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += s_shift;
  return r;
}

Rational LaurentPoly::evaluate_s(const Rational& s0) const {
  if (is_zero()) return 0;
  if (s0 == 0) {
    if (low_ < 0) throw EvaluationError("negative power of q evaluated at q = 0");
    return coeff(0);
  }
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s0 + *it;
  Rational base = 1;
  int e = low_ < 0 ? -low_ : low_;
  for (int i = 0; i < e; ++i) base *= s0;
  if (low_ < 0) return acc / base;
  return acc * base;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  std::vector<Rational> r(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[static_cast<std::size_t>(low_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(r);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPoly(a.low_ + b.low_, poly::mul(a.coeffs_, b.coeffs_));
}

namespace {

std::string q_power_string(int s_power) {
  if (s_power % 2 == 0) return "q^" + std::to_string(s_power / 2);
  return "q^(" + std::to_string(s_power) + "/2)";
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    int e = low_ + static_cast<int>(i);
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << rational_to_string(mag);
    } else {
      if (mag != 1) out << rational_to_string(mag) << "*";
      if (e == 2) out << "q";
      else out << q_power_string(e);
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// QRational

QRational QRational::normalize(LaurentPoly n, LaurentPoly d) {
  if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
  QRational r;
  if (n.is_zero()) return r;
  if (d.is_monomial()) {
    Rational inv = 1 / d.leading();
    r.num_ = n.shifted(-d.low()) * inv;
    r.den_ = LaurentPoly(1);
    return r;
  }
  int offset = n.low() - d.low();
  poly::Dense nd = n.coeffs_;
  poly::Dense dd = d.coeffs_;
  poly::Dense g = poly::gcd(nd, dd);
  if (g.size() > 1) {
    poly::Dense q, rem;
    poly::divmod(nd, g, q, rem);
    nd = std::move(q);
    poly::divmod(dd, g, q, rem);
    dd = std::move(q);
  }
  Rational lead = dd.back();
  for (auto& c : nd) c /= lead;
  for (auto& c : dd) c /= lead;
  r.num_ = LaurentPoly(offset, std::move(nd));
  r.den_ = LaurentPoly(0, std::move(dd));
  return r;
}

bool QRational::is_one() const { return den_.is_monomial() && num_ == LaurentPoly(1); }

bool QRational::is_constant() const {
  return den_.is_monomial() && (num_.is_zero() || (num_.is_monomial() && num_.low() == 0));
}

Rational QRational::constant() const {
  if (!is_constant()) throw std::logic_error("QRational::constant on non-constant value " + to_string());
  return num_.coeff(0);
}

QRational QRational::operator-() const {
  QRational r = *this;
  r.num_ = -r.num_;
  return r;
}

QRational& QRational::operator+=(const QRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  bool d1 = den_.is_monomial();
  bool d2 = o.den_.is_monomial();
  if (d1 && d2) {
    num_ += o.num_;
    if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  if (den_ == o.den_) return *this = normalize(num_ + o.num_, den_);
  return *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRational& QRational::operator-=(const QRational& o) { return *this += -o; }

QRational& QRational::operator*=(const QRational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QRational();
  if (den_.is_monomial() && o.den_.is_monomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  return *this = normalize(num_ * o.num_, den_ * o.den_);
}

QRational& QRational::operator/=(const QRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(q)");
  if (is_zero()) return *this;
  return *this = normalize(num_ * o.den_, den_ * o.num_);
}

QRational QRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(q)");
  return normalize(den_, num_);
}

QRational QRational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QRational r(1), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Rational QRational::evaluate_s(const Rational& s0) const {
  Rational d = den_.evaluate_s(s0);
  if (d == 0) {
    throw EvaluationError("pole: denominator " + den_.to_string() + " vanishes at q^(1/2) = " +
                          rational_to_string(s0));
  }
  return num_.evaluate_s(s0) / d;
}

namespace {

Rational evaluate_even(const LaurentPoly& p, const Rational& q0) {
  if (p.is_zero()) return 0;
  Rational acc = 0;
  int lo = p.low() / 2;
  int hi = p.high() / 2;
  for (int k = hi; k >= lo; --k) acc = acc * q0 + p.coeff(2 * k);
  if (lo == 0) return acc;
  if (q0 == 0) {
    if (lo < 0) throw EvaluationError("negative power of q evaluated at q = 0");
    return 0;
  }
  Rational base = 1;
  for (int i = 0; i < (lo < 0 ? -lo : lo); ++i) base *= q0;
  return lo < 0 ? Rational(acc / base) : Rational(acc * base);
}

}  // namespace

Rational QRational::evaluate_at(const Rational& q0) const {
  if (is_in_q()) {
    Rational d = evaluate_even(den_, q0);
    if (d == 0) {
      throw EvaluationError("pole: denominator " + den_.to_string() + " vanishes at q = " + rational_to_string(q0));
    }
    return evaluate_even(num_, q0) / d;
  }
  Rational s0;
  if (q0 < 0 || !rational_sqrt(q0, s0)) {
    throw EvaluationError("value " + to_string() + " has half-integer q-powers and q = " + rational_to_string(q0) +
                          " is not a rational square");
  }
  return evaluate_s(s0);
}

int QRational::sign_at(const Rational& q0) const { return sgn(evaluate_at(q0)); }

std::string QRational::to_string() const {
  std::string n = num_.to_string();
  if (den_ == LaurentPoly(1)) return n;
  std::string d = den_.to_string();
  bool n_compound = !num_.is_monomial();
  return (n_compound ? "(" + n + ")" : n) + "/(" + d + ")";
}

// ---------------------------------------------------------------------------

bool rational_sqrt(const Rational& x, Rational& root) {
  if (x < 0) return false;
  mpz_class n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  auto valid = [](const std::string& s) {
    std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  std::string n = t.substr(0, slash);
  std::string d = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid(n) || !valid(d) || d[0] == '-' || d[0] == '+') throw std::invalid_argument("malformed rational '" + text + "'");
  if (n[0] == '+') n = n.substr(1);
  mpz_class dn(d);
  if (dn == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r = Rational(mpz_class(n), dn);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

}  // namespace qhodge
