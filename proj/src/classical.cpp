#include "qhodge/classical.hpp"

#include "qhodge/calculus.hpp"
#include "qhodge/hodge.hpp"

namespace qhodge {

namespace {

const Rational kOne(1);

Matrix<ParamPoly> at_one(const Matrix<ParamPoly>& m) {
  return m.transform([](const ParamPoly& x) { return x.evaluate_q(kOne); });
}

bool flip_limit(std::string& d) {
  auto s = sigma_matrix().transform([](const QRational& x) { return x.evaluate_at(kOne); });
  auto f = sigma_matrix(Braiding::flip).transform([](const QRational& x) { return x.evaluate_at(kOne); });
  d = "sigma(q=1) is the flip";
  return s == f;
}

bool factorials(std::string& d) {
  bool ok = true;
  for (Braiding b : {Braiding::sigma, Braiding::sigma_inverse, Braiding::flip})
    ok = ok && lambda(2, b).evaluate_at(kOne) == 2 && lambda(3, b).evaluate_at(kOne) == 6;
  auto A3 = antisymmetrizer(3, Braiding::flip);
  ok = ok && A3 * A3 == QRational(6) * A3 && rank(A3) == 1;
  d = "lambda_k(q=1) = k! for k = 2, 3";
  return ok;
}

bool symmetric_line(std::string& d) {
  ParamPoly al = ParamPoly::symbol(Sym::alpha);
  Contraction g = Contraction::symmetric(al, ParamPoly::symbol(Sym::gamma));
  bool collapse = g.beta.evaluate_q(kOne) == al;
  HodgeOperator on({al, al, ParamPoly(1)}, ParamPoly::symbol(Sym::m), Braiding::flip);
  HodgeOperator off({ParamPoly(1), ParamPoly(2), ParamPoly(1)}, ParamPoly::symbol(Sym::m), Braiding::flip);
  d = "beta = q^6 alpha becomes beta = alpha; flip pipeline symmetric exactly there";
  return collapse && is_symmetric(on) && !is_symmetric(off);
}

bool table_limit(std::string& d) {
  Contraction g = Contraction::symbolic();
  HodgeOperator Tq(g), Tf(g, ParamPoly::symbol(Sym::m), Braiding::flip);
  for (int k = 0; k <= 3; ++k)
    if (at_one(Tq.matrix(k)) != Tf.matrix(k)) return d = "degree " + std::to_string(k) + " differs", false;
  d = "every T coefficient at q=1 equals the flip computation";
  return true;
}

bool square_signs(std::string& d) {
  ParamPoly al = ParamPoly::symbol(Sym::alpha), ga = ParamPoly::symbol(Sym::gamma);
  for (int gs : {1, -1}) {
    Contraction g{al, al, ParamPoly(gs) * ga};
    HodgeOperator T(g, ParamPoly::symbol(Sym::m), Braiding::flip);
    ParamPoly m2 = normalized_m_squared(g, gs, Braiding::flip).evaluate_q(kOne);
    ParamPoly sg(-gs);
    for (int k = 0; k <= 3; ++k) {
      int sign = (k * (3 - k)) % 2 == 0 ? 1 : -1;
      auto S = normalized_square(T, k, m2);
      for (std::size_t i = 0; i < S.rows(); ++i)
        for (std::size_t j = 0; j < S.cols(); ++j)
          if (S(i, j) != (i == j ? ParamPoly(sign) * sg : ParamPoly())) return d = "T^2 on degree " + std::to_string(k), false;
    }
  }
  d = "T^2 = sgn(g)(-1)^{k(3-k)} on every degree, sgn(g) = -sgn(gamma)";
  return true;
}

bool reality(std::string& d) {
  HodgeOperator real({ParamPoly(2), ParamPoly(2), ParamPoly(-3)}, ParamPoly::symbol(Sym::m), Braiding::flip);
  ParamPoly z(ComplexQ(QRational(1), QRational(1)));
  HodgeOperator complex({z, z, ParamPoly(1)}, ParamPoly::symbol(Sym::m), Braiding::flip);
  bool all_degrees = true;
  for (int k = 0; k <= 3; ++k) all_degrees = all_degrees && commutes_with_star(real, k);
  d = "real couplings give T(w*) = T(w)*, a complex coupling does not";
  return is_real(real) && all_degrees && !is_real(complex);
}

bool structure_constants(std::string& d) {
  const auto& mc = maurer_cartan();
  // At q=1: dw_- = 2 w_-∧w_z, dw_+ = -2 w_+∧w_z, dw_z = -w_-∧w_+.
  std::array<std::array<Rational, 3>, 3> want{{{0, 2, 0}, {0, 0, -2}, {-1, 0, 0}}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (mc.coeffs[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].evaluate_at(kOne) !=
          want[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
        return d = "Maurer-Cartan at q=1 differs", false;
  d = "Maurer-Cartan coefficients at q=1 are the su(2) structure constants in this basis";
  return true;
}

bool defining_flip(std::string& d) {
  HodgeOperator T(Contraction::symbolic(), ParamPoly::symbol(Sym::m), Braiding::flip);
  for (int k = 0; k <= 3; ++k)
    for (int i = 0; i < form_dim(k); ++i)
      for (int j = 0; j < form_dim(k); ++j)
        if (!defining_equation_residual(T, KForm::basis(k, i), KForm::basis(k, j)).is_zero()) return d = "residual", false;
  d = "flip pipeline satisfies the defining equation on invariant pairs";
  return true;
}

}  // namespace

SuiteReport classical_suite() {
  SuiteReport r{"classical", {}};
  r.checks.push_back(run_check("flip", flip_limit));
  r.checks.push_back(run_check("factorial spectra", factorials));
  r.checks.push_back(run_check("symmetric line", symmetric_line));
  r.checks.push_back(run_check("T table at q=1", table_limit));
  r.checks.push_back(run_check("T^2 signs", square_signs));
  r.checks.push_back(run_check("reality", reality));
  r.checks.push_back(run_check("structure constants", structure_constants));
  r.checks.push_back(run_check("defining equation", defining_flip));
  return r;
}

}  // namespace qhodge
