#include "qhodge/json_io.hpp"

#include <cmath>

#include "qhodge/calculus.hpp"
#include "qhodge/enveloping.hpp"
#include "qhodge/hodge.hpp"
#include "qhodge/matrix.hpp"
#include "qhodge/param_poly.hpp"
#include "qhodge/quantum_group.hpp"

namespace qhodge {

namespace {

Json poly_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  if (p.is_zero()) return out;
  for (int e = p.low(); e <= p.high(); ++e) {
    Rational c = p.coeff(e);
    if (c == 0) continue;
    Json power = (e % 2 == 0) ? Json(e / 2) : Json(e / 2.0);
    out.push_back(Json::array({power, rational_to_string(c)}));
  }
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& entry : j) {
    const Json& power = entry.at(0);
    int s_power = 0;
    if (power.is_number_integer()) {
      s_power = 2 * power.get<int>();
    } else {
      double twice = 2.0 * power.get<double>();
      if (twice != std::round(twice)) throw std::invalid_argument("q-power must be an integer or half-integer");
      s_power = static_cast<int>(std::lround(twice));
    }
    p += LaurentPoly(parse_rational(entry.at(1).get<std::string>()), s_power);
  }
  return p;
}

}  // namespace

Json to_json(const QRational& x) { return {{"num", poly_to_json(x.num())}, {"den", poly_to_json(x.den())}}; }

QRational qrational_from_json(const Json& j) {
  return QRational::normalize(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Json to_json(const Monomial& m) {
  return {{"branch", m.branch == Branch::a ? "a" : "astar"}, {"k", m.k}, {"l", m.l}, {"m", m.m}};
}

Monomial monomial_from_json(const Json& j) {
  std::string b = j.at("branch").get<std::string>();
  if (b != "a" && b != "astar") throw std::invalid_argument("monomial branch must be \"a\" or \"astar\"");
  return Monomial::make(b == "a" ? Branch::a : Branch::a_star, j.at("k").get<int>(), j.at("l").get<int>(), j.at("m").get<int>());
}

Json to_json(const AlgebraElement& x) {
  Json terms = Json::array();
  for (const auto& [mono, c] : x.terms()) terms.push_back({{"coeff", to_json(c)}, {"mono", to_json(mono)}});
  return {{"terms", terms}};
}

AlgebraElement algebra_element_from_json(const Json& j) {
  AlgebraElement x;
  for (const auto& t : j.at("terms")) x.add_term(monomial_from_json(t.at("mono")), qrational_from_json(t.at("coeff")));
  return x;
}

Json to_json(const UEAMonomial& m) { return {{"i", m.i}, {"j", m.j}, {"l", m.l}}; }

UEAMonomial uea_monomial_from_json(const Json& j) {
  UEAMonomial m{j.at("i").get<int>(), j.at("j").get<int>(), j.at("l").get<int>()};
  if (m.i < 0 || m.j < 0) throw std::invalid_argument("negative E/F exponent");
  return m;
}

Json to_json(const UEAElement& x) {
  Json terms = Json::array();
  for (const auto& [mono, c] : x.terms()) terms.push_back({{"coeff", to_json(c)}, {"mono", to_json(mono)}});
  return {{"terms", terms}};
}

UEAElement uea_element_from_json(const Json& j) {
  UEAElement x;
  for (const auto& t : j.at("terms")) x.add_term(uea_monomial_from_json(t.at("mono")), qrational_from_json(t.at("coeff")));
  return x;
}

Json to_json(const KForm& f) {
  Json coeffs = Json::object();
  for (int i = 0; i < f.dim(); ++i)
    if (!f.coeff(i).is_zero()) coeffs[basis_name(f.degree(), i)] = to_json(f.coeff(i));
  return {{"degree", f.degree()}, {"coeffs", coeffs}};
}

KForm kform_from_json(const Json& j) {
  KForm f(j.at("degree").get<int>());
  if (f.dim() == 0) throw std::invalid_argument("form degree out of range");
  for (const auto& [name, value] : j.at("coeffs").items()) {
    auto [k, i] = basis_lookup(name);
    if (k != f.degree()) throw std::invalid_argument("basis form '" + name + "' does not have degree " + std::to_string(f.degree()));
    f.coeff(i) = algebra_element_from_json(value);
  }
  return f;
}

Json to_json(const Matrix<QRational>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix<QRational> qmatrix_from_json(const Json& j) {
  Matrix<QRational> m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const Json& e = j.at("entries");
  if (e.size() != m.rows()) throw std::invalid_argument("matrix row count mismatch");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (e[r].size() != m.cols()) throw std::invalid_argument("matrix column count mismatch");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = qrational_from_json(e[r][c]);
  }
  return m;
}

Json to_json(const ComplexQ& z) { return {{"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

ComplexQ complexq_from_json(const Json& j) { return {qrational_from_json(j.at("re")), qrational_from_json(j.at("im"))}; }

Json to_json(const ParamPoly& p) {
  Json terms = Json::array();
  for (const auto& [exps, c] : p.terms()) {
    Json e = Json::object();
    for (int s = 0; s < kSymCount; ++s)
      if (exps[static_cast<std::size_t>(s)] != 0) e[sym_name(static_cast<Sym>(s))] = exps[static_cast<std::size_t>(s)];
    terms.push_back({{"powers", e}, {"coeff", to_json(c)}});
  }
  return {{"terms", terms}, {"text", p.to_string()}};
}

ParamPoly param_poly_from_json(const Json& j) {
  ParamPoly p;
  for (const auto& t : j.at("terms")) {
    ParamPoly term(complexq_from_json(t.at("coeff")));
    for (const auto& [name, power] : t.at("powers").items()) {
      int s = 0;
      while (s < kSymCount && sym_name(static_cast<Sym>(s)) != name) ++s;
      if (s == kSymCount) throw std::invalid_argument("unknown parameter symbol '" + name + "'");
      term = term * ParamPoly::symbol(static_cast<Sym>(s), power.get<int>());
    }
    p += term;
  }
  return p;
}

Json to_json(const Matrix<ParamPoly>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json to_json(const ParamForm& f) {
  Json coeffs = Json::object();
  for (int i = 0; i < f.dim(); ++i) {
    if (f.coeff(i).empty()) continue;
    Json terms = Json::array();
    for (const auto& [m, c] : f.coeff(i)) terms.push_back({{"mono", to_json(m)}, {"coeff", to_json(c)}});
    coeffs[basis_name(f.degree(), i)] = terms;
  }
  return {{"degree", f.degree()}, {"coeffs", coeffs}, {"text", f.to_string()}};
}

}  // namespace qhodge
