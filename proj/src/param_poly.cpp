#include "qhodge/param_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qhodge {

ComplexQ ComplexQ::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(q)[i]");
  if (im_.is_zero()) return ComplexQ(re_.inverse());
  QRational norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

ComplexQ& ComplexQ::operator+=(const ComplexQ& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexQ& ComplexQ::operator-=(const ComplexQ& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexQ& ComplexQ::operator*=(const ComplexQ& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  QRational re = re_ * o.re_ - im_ * o.im_;
  QRational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string ComplexQ::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im = im_.is_one() ? "i" : "(" + im_.to_string() + ")*i";
  if (re_.is_zero()) return im;
  return re_.to_string() + " + " + im;
}

std::string sym_name(Sym s) {
  static const char* names[] = {"alpha", "beta", "gamma", "m", "mc"};
  return names[static_cast<int>(s)];
}

// ---------------------------------------------------------------------------

namespace {

void add_term(ParamPoly::Terms& t, const ParamPoly::Exponents& e, const ComplexQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace

ParamPoly::ParamPoly(const ComplexQ& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

ParamPoly::ParamPoly(const QRational& c) : ParamPoly(ComplexQ(c)) {}
ParamPoly::ParamPoly(int c) : ParamPoly(ComplexQ(c)) {}

ParamPoly ParamPoly::symbol(Sym s, int power) {
  ParamPoly p;
  Exponents e{};
  e[static_cast<std::size_t>(s)] = power;
  p.terms_.emplace(e, ComplexQ(1));
  return p;
}

bool ParamPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Exponents{};
}

ComplexQ ParamPoly::constant() const {
  if (!is_constant()) throw std::logic_error("parameter expression is not constant: " + to_string());
  return terms_.empty() ? ComplexQ() : terms_.begin()->second;
}

int ParamPoly::max_power(Sym s) const {
  if (terms_.empty()) return 0;
  int r = terms_.begin()->first[static_cast<std::size_t>(s)];
  for (const auto& [e, c] : terms_) r = std::max(r, e[static_cast<std::size_t>(s)]);
  return r;
}

int ParamPoly::min_power(Sym s) const {
  if (terms_.empty()) return 0;
  int r = terms_.begin()->first[static_cast<std::size_t>(s)];
  for (const auto& [e, c] : terms_) r = std::min(r, e[static_cast<std::size_t>(s)]);
  return r;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      ParamPoly::Exponents e;
      for (int s = 0; s < kSymCount; ++s) e[static_cast<std::size_t>(s)] = ea[static_cast<std::size_t>(s)] + eb[static_cast<std::size_t>(s)];
      add_term(r.terms_, e, ca * cb);
    }
  return r;
}

ParamPoly ParamPoly::divided_by(const ParamPoly& monomial) const {
  if (!monomial.is_monomial()) throw std::domain_error("division by a multi-term parameter expression: " + monomial.to_string());
  const auto& [em, cm] = *monomial.terms_.begin();
  ParamPoly inv;
  Exponents e;
  for (int s = 0; s < kSymCount; ++s) e[static_cast<std::size_t>(s)] = -em[static_cast<std::size_t>(s)];
  inv.terms_.emplace(e, cm.inverse());
  return *this * inv;
}

ParamPoly ParamPoly::pow(int e) const {
  if (e < 0) return ParamPoly(1).divided_by(*this).pow(-e);
  ParamPoly r(1);
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

ParamPoly ParamPoly::conj() const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
  return r;
}

ParamPoly ParamPoly::substitute(Sym s, const ParamPoly& value) const {
  const auto idx = static_cast<std::size_t>(s);
  ParamPoly r;
  std::map<int, ParamPoly> powers;
  for (const auto& [e, c] : terms_) {
    int k = e[idx];
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
    ParamPoly rest;
    Exponents e2 = e;
    e2[idx] = 0;
    rest.terms_.emplace(e2, c);
    r += rest * it->second;
  }
  return r;
}

ParamPoly ParamPoly::substitute_square(Sym s, const ParamPoly& square) const {
  const auto idx = static_cast<std::size_t>(s);
  ParamPoly r;
  for (const auto& [e, c] : terms_) {
    int k = e[idx];
    if (k % 2 != 0) throw std::domain_error("odd power of " + sym_name(s) + " left after squaring substitution");
    ParamPoly rest;
    Exponents e2 = e;
    e2[idx] = 0;
    rest.terms_.emplace(e2, c);
    r += rest * square.pow(k / 2);
  }
  return r;
}

ParamPoly ParamPoly::evaluate_q(const Rational& q0) const {
  ParamPoly r;
  for (const auto& [e, c] : terms_)
    add_term(r.terms_, e, ComplexQ(QRational(c.re().evaluate_at(q0)), QRational(c.im().evaluate_at(q0))));
  return r;
}

ComplexRational ParamPoly::value_at(const Rational& q0) const {
  ComplexQ c = constant();
  return {c.re().evaluate_at(q0), c.im().evaluate_at(q0)};
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string symbols;
    for (int s = 0; s < kSymCount; ++s) {
      int k = e[static_cast<std::size_t>(s)];
      if (k == 0) continue;
      if (!symbols.empty()) symbols += "*";
      symbols += sym_name(static_cast<Sym>(s));
      if (k != 1) symbols += "^" + std::to_string(k);
    }
    std::string cs = c.to_string();
    bool simple = c.is_real() && c.re().den() == LaurentPoly(1) && c.re().num().is_monomial();
    if (symbols.empty()) {
      out << (simple ? cs : "(" + cs + ")");
    } else if (c == ComplexQ(1)) {
      out << symbols;
    } else {
      out << (simple ? cs : "(" + cs + ")") << "*" << symbols;
    }
  }
  return out.str();
}

}  // namespace qhodge
