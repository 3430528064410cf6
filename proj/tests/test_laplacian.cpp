#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qhodge/laplacian.hpp"

using namespace qhodge;

namespace {

const AlgebraElement A = AlgebraElement::gen(Gen::a);
const AlgebraElement AS = AlgebraElement::gen(Gen::a_star);
const AlgebraElement C = AlgebraElement::gen(Gen::c);
const AlgebraElement CS = AlgebraElement::gen(Gen::c_star);
const QRational al = QRational(Rational(3, 2));
const QRational ga = QRational(Rational(-5, 7));

Matrix<Rational> diag(std::vector<Rational> d) {
  Matrix<Rational> m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace

TEST_CASE("box on generators") {
  CHECK(box(al, ga, QRational(1)).is_zero());
  CHECK(box(al, ga, C) == (al + ga) * C);
  CHECK(box(al, ga, AS) == (QRational::q(6) * al + QRational::q(4) * ga) * AS);
  BoxParts c = box_parts(C);
  CHECK(c.alpha_part == C);
  CHECK(c.gamma_part == C);
}

TEST_CASE("box is linear") {
  AlgebraElement x = A * CS + QRational::q(2) * C * CS, y = AS * AS + C;
  CHECK(box(al, ga, x + y) == box(al, ga, x) + box(al, ga, y));
  CHECK(box(al, ga, QRational::q(3) * x) == QRational::q(3) * box(al, ga, x));
}

TEST_CASE("filtered matrices") {
  FilteredMatrix d1 = box_matrix(al, ga, 1);
  REQUIRE(d1.basis.size() == 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j) CHECK(d1.matrix(i, j).is_zero());
  for (std::size_t j = 0; j < 5; ++j) {
    AlgebraElement x(d1.basis[j]);
    CHECK(box(al, ga, x) == d1.matrix(j, j) * x);
  }
  for (int D = 1; D <= 3; ++D) {
    FilteredMatrix full = box_matrix(al, ga, D);
    CHECK(full.degree == D);
    CHECK(charge_block_diagonal(full));
  }
  FilteredMatrix c0 = box_matrix(al, ga, 2, 0);
  for (const auto& m : c0.basis) CHECK(m.charge() == 0);
  CHECK(std::find(c0.basis.begin(), c0.basis.end(), Monomial::make(Branch::a, 0, 1, 1)) != c0.basis.end());
  auto sym = box_matrix_symbolic(1);
  for (std::size_t i = 0; i < sym.rows(); ++i)
    for (std::size_t j = 0; j < sym.cols(); ++j)
      if (i != j) CHECK(sym(i, j).is_zero());
  CHECK_THROWS(box_matrix(al, ga, 0));
}

TEST_CASE("characteristic polynomial and Sturm counting") {
  Matrix<Rational> m = diag({2, -1, 2, 0});
  poly::Dense chi = characteristic_polynomial(m);
  // x (x + 1) (x - 2)^2 = x^4 - 3x^3 + 0x^2 + 4x
  CHECK(chi == poly::Dense{0, 4, 0, -3, 1});
  CHECK(sturm_count(poly::Dense{-2, 0, 1}, -2, 2) == 2);
  CHECK(sturm_count(poly::Dense{-2, 0, 1}, 0, 2) == 1);
  Spectrum s = spectrum_numeric(m);
  CHECK(s.exact);
  CHECK(s.negative == 1);
  CHECK(s.zero == 1);
  CHECK(s.positive == 2);
  REQUIRE(s.eigenvalues.size() == 3);
  CHECK(s.eigenvalues[2].multiplicity == 2);
  CHECK(s.eigenvalues[2].value == doctest::Approx(2));
  Matrix<Rational> rot(2, 2);
  rot(0, 1) = -1;
  rot(1, 0) = 1;
  CHECK(spectrum_numeric(rot).nonreal == 2);
}

TEST_CASE("exact and floating paths agree") {
  FilteredMatrix fm = box_matrix(QRational(1), QRational(2), 2, 0);
  Matrix<Rational> M = evaluate_matrix(fm.matrix, Rational(1, 3));
  REQUIRE(M.rows() <= kExactSpectrumLimit);
  Spectrum exact = spectrum_numeric(M);
  FilteredMatrix big = box_matrix(QRational(1), QRational(2), 2);
  Spectrum fl = spectrum_numeric(evaluate_matrix(big.matrix, Rational(1, 3)));
  CHECK_FALSE(fl.exact);
  CHECK(fl.max_residual < kSpectrumTolerance);
  for (const auto& e : exact.eigenvalues) {
    bool found = false;
    for (const auto& f : fl.eigenvalues) found = found || std::abs(f.value - e.value) < 1e-8;
    CHECK(found);
  }
}

TEST_CASE("positivity for alpha gamma > 0") {
  Rational q0(1, 2);
  Spectrum d1 = spectrum_numeric(evaluate_matrix(box_matrix(QRational(1), QRational(1), 1).matrix, q0));
  CHECK(d1.negative == 0);
  CHECK(d1.nonreal == 0);
  bool has_c_eigenvalue = false;
  for (const auto& e : d1.eigenvalues) has_c_eigenvalue = has_c_eigenvalue || e.value == doctest::Approx(2);
  CHECK(has_c_eigenvalue);
  double previous = -1;
  for (int D = 1; D <= 3; ++D) {
    Spectrum s = spectrum_numeric(evaluate_matrix(box_matrix(QRational(1), QRational(1), D).matrix, q0));
    CHECK(s.negative == 0);
    CHECK(s.eigenvalues.back().value >= previous);
    previous = s.eigenvalues.back().value;
  }
}

TEST_CASE("indefinite for alpha gamma < 0 on the full filtration") {
  Spectrum s = spectrum_numeric(evaluate_matrix(box_matrix(QRational(1), QRational(-1), 3).matrix, Rational(1, 2)));
  CHECK(s.negative > 0);
  CHECK(s.positive > 0);
}

TEST_CASE("gamma drops out on the sphere") {
  for (const auto& m : monomials_up_to(4))
    if (m.charge() == 0) CHECK(box_parts(AlgebraElement(m)).gamma_part.is_zero());
}

TEST_CASE("box is symmetric for the Haar product") {
  std::vector<AlgebraElement> samples{QRational(1), C * CS, A * CS, AS * C, C, AS, A * A * CS * CS};
  for (const auto& x : samples)
    for (const auto& y : samples) CHECK(symmetry_residual(al, ga, x, y).is_zero());
}
