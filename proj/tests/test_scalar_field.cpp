#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qhodge/scalar_field.hpp"

using namespace qhodge;

namespace {

QRational qpoly(std::initializer_list<std::pair<int, int>> terms) {
  LaurentPoly p;
  for (auto [k, c] : terms) p += LaurentPoly::q_power(k, c);
  return QRational(p);
}

QRational random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), power(-3, 3), count(1, 3);
  auto poly = [&] {
    LaurentPoly p;
    int n = count(rng);
    for (int i = 0; i < n; ++i) p += LaurentPoly(Rational(coeff(rng)), power(rng));
    return p;
  };
  LaurentPoly d;
  while (d.is_zero()) d = poly();
  return QRational::normalize(poly(), d);
}

}  // namespace

TEST_CASE("normalize cancels common factors") {
  auto x = QRational::normalize(LaurentPoly::q_power(0) - LaurentPoly::q_power(4), LaurentPoly::q_power(0) - LaurentPoly::q_power(2));
  CHECK(x == qpoly({{0, 1}, {2, 1}}));
  CHECK(QRational::normalize(LaurentPoly(), LaurentPoly(7)).is_zero());
  auto y = QRational::normalize(LaurentPoly::q_power(-1) - LaurentPoly::q_power(1), LaurentPoly(1));
  CHECK(y.num() == LaurentPoly::q_power(-1) - LaurentPoly::q_power(1));
  CHECK(y.den() == LaurentPoly(1));
  CHECK_THROWS(QRational::normalize(LaurentPoly(1), LaurentPoly()));
}

TEST_CASE("canonical denominator is monic with lowest power zero") {
  auto x = QRational::normalize(LaurentPoly(1), LaurentPoly::q_power(-2, 3) + LaurentPoly::q_power(1, 6));
  CHECK(x.den().low() == 0);
  CHECK(x.den().leading() == 1);
  CHECK(QRational::normalize(x.num(), x.den()) == x);
}

TEST_CASE("evaluation") {
  CHECK(qpoly({{0, 1}, {2, 1}}).evaluate_at(1) == 2);
  auto r = QRational::normalize(LaurentPoly(1) - LaurentPoly::q_power(2), LaurentPoly(1) - LaurentPoly::q_power(4));
  CHECK(r.evaluate_at(1) == Rational(1, 2));
  CHECK(qpoly({{0, 1}, {2, 2}, {4, 2}, {6, 1}}).evaluate_at(1) == 6);
  CHECK(QRational::sqrt_q(1).evaluate_at(Rational(1, 4)) == Rational(1, 2));
  CHECK_THROWS_AS(QRational::sqrt_q(1).evaluate_at(Rational(1, 2)), EvaluationError);
  auto pole = QRational(1) / (QRational(1) - QRational::q(1));
  CHECK_THROWS_AS(pole.evaluate_at(1), EvaluationError);
}

TEST_CASE("sign_at") {
  CHECK(sign_at(-QRational::q(4), Rational(1, 2)) == -1);
  CHECK(sign_at(QRational(), Rational(1, 2)) == 0);
  CHECK(sign_at(QRational(1) - QRational::q(2), Rational(1, 2)) == 1);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    QRational x = random_element(rng), y = random_element(rng), z = random_element(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inverse() == QRational(1));
    CHECK(QRational::normalize(x.num(), x.den()) == x);
    Rational q0(1, 4);
    try {
      CHECK((x * y).evaluate_at(q0) == x.evaluate_at(q0) * y.evaluate_at(q0));
    } catch (const EvaluationError&) {
    }
  }
}

TEST_CASE("printing") {
  CHECK(qpoly({{0, 1}, {2, -1}}).to_string() == "1 - q^2");
  CHECK(QRational::sqrt_q(1).to_string() == "q^(1/2)");
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("unreduced rationals are canonicalised on entry") {
  CHECK(QRational(Rational(-4, 4)) == QRational(-1));
  CHECK(QRational(Rational(6, 4)) * QRational(2) == QRational(3));
}
