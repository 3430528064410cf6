#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qhodge/hodge.hpp"

using namespace qhodge;

namespace {

const ParamPoly al = ParamPoly::symbol(Sym::alpha);
const ParamPoly be = ParamPoly::symbol(Sym::beta);
const ParamPoly ga = ParamPoly::symbol(Sym::gamma);
const ParamPoly m = ParamPoly::symbol(Sym::m);

ParamPoly qp(int k) { return ParamPoly(QRational::q(k)); }
ParamPoly lam2() { return ParamPoly(QRational(1) + QRational::q(2)); }
ParamPoly lam3() { return ParamPoly(QRational(1) + QRational(2) * QRational::q(2) + QRational(2) * QRational::q(4) + QRational::q(6)); }
ParamPoly over(const ParamPoly& x, const ParamPoly& d) { return x * ParamPoly(d.constant().re().inverse()); }

// Column of T(e_b) must be `value` on `target` and zero elsewhere.
void check_column(const HodgeOperator& T, int k, int b, int target, const ParamPoly& value) {
  const auto& M = T.matrix(k);
  for (std::size_t r = 0; r < M.rows(); ++r) {
    INFO("degree " << k << " basis " << b << " row " << r << ": " << M(r, static_cast<std::size_t>(b)).to_string());
    CHECK(M(r, static_cast<std::size_t>(b)) == (static_cast<int>(r) == target ? value : ParamPoly()));
  }
}

void check_table(const HodgeOperator& T, const ParamPoly& a, const ParamPoly& b, const ParamPoly& g) {
  check_column(T, 0, 0, 0, m);
  check_column(T, 1, kMinus, 1, -qp(-2) * m * b);
  check_column(T, 1, kPlus, 2, m * a);
  check_column(T, 1, kZ, 0, m * g);
  check_column(T, 2, 0, kZ, over(ParamPoly(-2) * m * a * b, lam2()));
  check_column(T, 2, 1, kMinus, over(ParamPoly(2) * qp(-4) * m * b * g, lam2()));
  check_column(T, 2, 2, kPlus, over(ParamPoly(-2) * qp(6) * m * a * g, lam2()));
  check_column(T, 3, 0, 0, over(ParamPoly(-6) * qp(4) * m * a * b * g, lam3()));
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  int n = 0;
  while (n == 0) n = num(rng);
  return Rational(n, den(rng));
}

}  // namespace

TEST_CASE("extended contraction") {
  Contraction g = Contraction::symbolic();
  auto G1 = extend_contraction(g, 1);
  CHECK(G1(kMinus, kPlus) == al);
  CHECK(G1(kPlus, kMinus) == be);
  CHECK(G1(kZ, kZ) == ga);
  CHECK(G1(kMinus, kMinus).is_zero());
  CHECK(G1(kMinus, kZ).is_zero());
  for (int k = 2; k <= 3; ++k) {
    auto G = extend_contraction(g, k);
    for (int i = 0; i < form_dim(k); ++i)
      for (int j = 0; j < form_dim(k); ++j)
        if (basis_charge(k, i) + basis_charge(k, j) != 0) CHECK(G(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero());
  }
  auto G3 = extend_contraction(g, 3);
  CHECK(G3(0, 0).max_power(Sym::alpha) == 1);
  CHECK(G3(0, 0).max_power(Sym::beta) == 1);
  CHECK(G3(0, 0).max_power(Sym::gamma) == 1);
  CHECK(G3(0, 0).is_monomial());
}

TEST_CASE("scalar product values") {
  Contraction g = Contraction::symbolic();
  CHECK(scalar_product(g, KForm::function(QRational(1)), KForm::function(QRational(1))) == ParamPoly(1));
  CHECK(scalar_product(g, KForm::basis(1, kZ), KForm::basis(1, kZ)) == -ga);
  AlgebraElement c = AlgebraElement::gen(Gen::c);
  CHECK(scalar_product(g, KForm::function(c), KForm::function(c)) ==
        ParamPoly((QRational(1) - QRational::q(2)) / (QRational(1) - QRational::q(4))));
  CHECK(scalar_product(g, KForm::basis(1, kMinus), KForm::basis(1, kMinus)) == -be);
  CHECK(scalar_product(g, KForm::basis(1, kPlus), KForm::basis(1, kPlus)) == -al);
  CHECK_THROWS(scalar_product(g, KForm::basis(1, kZ), KForm::basis(2, 0)));
}

TEST_CASE("closed-form table for generic couplings") {
  HodgeOperator T(Contraction::symbolic());
  check_table(T, al, be, ga);
  for (int k = 0; k <= 3; ++k) {
    auto M = T.matrix(k).transform([](const ParamPoly& x) {
      return x.substitute(Sym::alpha, ParamPoly(2)).substitute(Sym::beta, ParamPoly(3)).substitute(Sym::gamma, ParamPoly(5)).substitute(Sym::m, ParamPoly(7)).value_at(Rational(1, 2)).re;
    });
    CHECK(rank(M) == static_cast<std::size_t>(form_dim(k)));
  }
}

TEST_CASE("closed-form table on the symmetric line") {
  Contraction g = Contraction::symmetric(al, ga);
  HodgeOperator T(g);
  check_table(T, al, qp(6) * al, ga);
  CHECK(is_symmetric(T));
  CHECK(is_real(T));
  for (int k = 0; k <= 3; ++k) CHECK(commutes_with_star(T, k));
}

TEST_CASE("symmetry is exactly the line beta = q^6 alpha") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    ParamPoly a(random_rational(rng)), c(random_rational(rng));
    bool on_line = trial % 2 == 0;
    ParamPoly b = on_line ? qp(6) * a : ParamPoly(random_rational(rng));
    bool predicate = (b - qp(6) * a).is_zero();
    CHECK(predicate == on_line);
    for (Braiding br : {Braiding::sigma, Braiding::sigma_inverse}) {
      HodgeOperator T({a, b, c}, m, br);
      CHECK(is_symmetric(T) == predicate);
      if (predicate) {
        CHECK(is_real(T));
        for (int k = 0; k <= 3; ++k) CHECK(commutes_with_star(T, k));
      }
    }
  }
  HodgeOperator generic(Contraction::symbolic());
  CHECK_FALSE(is_symmetric(generic));
}

TEST_CASE("defining equation on invariant and singly invariant samples") {
  HodgeOperator T(Contraction::symbolic());
  for (int k = 0; k <= 3; ++k)
    for (int i = 0; i < form_dim(k); ++i)
      for (int j = 0; j < form_dim(k); ++j) {
        INFO("degree " << k << " pair " << i << "," << j);
        CHECK(defining_equation_residual(T, KForm::basis(k, i), KForm::basis(k, j)).is_zero());
      }
  auto monos = monomials_up_to(2);
  int checked = 0;
  for (int k = 0; k <= 3; ++k)
    for (int i = 0; i < form_dim(k); ++i)
      for (int j = 0; j < form_dim(k); ++j)
        for (const auto& x : monos) {
          KForm inv = KForm::basis(k, i);
          KForm with = KForm::basis(k, j, AlgebraElement(x));
          INFO("degree " << k << " pair " << i << "," << j << " coefficient " << x.to_string());
          CHECK(defining_equation_residual(T, inv, with).is_zero());
          CHECK(defining_equation_residual(T, with, inv).is_zero());
          checked += 2;
        }
  CHECK(checked > 500);
}

TEST_CASE("left linearity") {
  HodgeOperator T(Contraction::symbolic());
  AlgebraElement c = AlgebraElement::gen(Gen::c);
  ParamForm lhs = T.apply(KForm::basis(1, kZ, c));
  ParamForm rhs = c * T.apply(KForm::basis(1, kZ));
  CHECK(lhs == rhs);
  CHECK(lhs.coeff(0).at(Monomial::of(Gen::c)) == m * ga);
}

TEST_CASE("determinant and signature") {
  for (int gsign : {1, -1}) {
    Contraction g = Contraction::symmetric(ParamPoly(1), ParamPoly(gsign));
    HodgeOperator T(g);
    DetSgn d = det_sgn(T, Rational(1, 2));
    CHECK(d.sgn == -gsign);
    CHECK(d.det.max_power(Sym::m) == 2);
    CHECK(d.det.min_power(Sym::m) == 2);
  }
}

TEST_CASE("volume normalisation") {
  for (int gsign : {1, -1}) {
    Contraction g = Contraction::symmetric(al, ParamPoly(gsign) * ga);
    ParamPoly m2 = normalized_m_squared(g, gsign);
    HodgeOperator T(g);
    ParamPoly sg(-gsign);
    auto S0 = normalized_square(T, 0, m2);
    CHECK(S0(0, 0) == sg);
    auto S1 = normalized_square(T, 1, m2);
    ParamPoly expected = sg * ParamPoly(QRational(2) * (lam3().constant().re()) / (QRational(6) * QRational::q(4) * lam2().constant().re()));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(S1(i, j) == (i == j ? expected : ParamPoly()));
    CHECK(expected.evaluate_q(1) == sg);
  }
  Contraction num = Contraction::symmetric(ParamPoly(2), ParamPoly(-3));
  Normalization n = normalize_volume(num, Rational(1, 2));
  CHECK(n.sgn == 1);
  CHECK(n.m_squared_at_q0 > 0);
  CHECK(n.m_approx * n.m_approx == doctest::Approx(n.m_squared_at_q0.get_d()));
  CHECK_THROWS(normalize_volume({ParamPoly(1), ParamPoly(-1), ParamPoly(1)}, Rational(1, 2)));
}

TEST_CASE("sigma inverse family") {
  Contraction g = Contraction::symmetric(al, ga);
  CommutatorReport r = commutator_check(g);
  CHECK(r.found);
  CHECK(r.degree == 1);
  HodgeOperator T(g), Tp(g, m, Braiding::sigma_inverse);
  std::vector<ParamPoly> wz{ParamPoly(), ParamPoly(), ParamPoly(1)};
  CHECK(T.apply_invariant(2, Tp.apply_invariant(1, wz)) != Tp.apply_invariant(2, T.apply_invariant(1, wz)));
  auto s = square_spectrum(T), sp = square_spectrum(Tp);
  REQUIRE(s.size() == sp.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    REQUIRE(s[k].size() == sp[k].size());
    for (std::size_t i = 0; i < s[k].size(); ++i) CHECK(s[k][i].second == sp[k][i].second);
  }
  CHECK(is_symmetric(Tp));
  CHECK_FALSE(is_symmetric(HodgeOperator(Contraction::symbolic(), m, Braiding::sigma_inverse)));
}
