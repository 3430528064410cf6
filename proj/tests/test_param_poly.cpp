#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qhodge/json_io.hpp"
#include "qhodge/param_poly.hpp"

using namespace qhodge;

namespace {
const ParamPoly al = ParamPoly::symbol(Sym::alpha);
const ParamPoly be = ParamPoly::symbol(Sym::beta);
const ParamPoly m = ParamPoly::symbol(Sym::m);
const ComplexQ I = ComplexQ::i();
}  // namespace

TEST_CASE("complex coefficients") {
  CHECK(I * I == ComplexQ(-1));
  ComplexQ z(QRational::q(1), QRational(2));
  CHECK(z * z.inverse() == ComplexQ(1));
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()).is_real());
}

TEST_CASE("ring axioms on parameter polynomials") {
  ParamPoly x = al * be + ParamPoly(QRational::q(2)) * m;
  ParamPoly y = al - ParamPoly(ComplexQ::i()) * be;
  ParamPoly z = m.pow(-1) + ParamPoly(3);
  CHECK((x * y) * z == x * (y * z));
  CHECK(x * (y + z) == x * y + x * z);
  CHECK(x - x == ParamPoly());
  CHECK(m * m.pow(-1) == ParamPoly(1));
  CHECK((x * y).conj() == x.conj() * y.conj());
}

TEST_CASE("division and substitution") {
  ParamPoly x = al * al * m + be * m;
  CHECK(x.divided_by(m) == al * al + be);
  CHECK_THROWS(x.divided_by(al + be));
  CHECK(x.substitute(Sym::beta, ParamPoly(QRational::q(6)) * al) == al * al * m + ParamPoly(QRational::q(6)) * al * m);
  ParamPoly sq = m * m * al;
  CHECK(sq.substitute_square(Sym::m, ParamPoly(5)) == ParamPoly(5) * al);
  CHECK_THROWS(x.substitute_square(Sym::m, ParamPoly(5)));
  CHECK(x.max_power(Sym::alpha) == 2);
  CHECK(x.min_power(Sym::alpha) == 0);
}

TEST_CASE("evaluation at numeric q") {
  ParamPoly x(QRational(1) + QRational::q(2));
  auto v = x.value_at(Rational(1, 2));
  CHECK(v.re == Rational(5, 4));
  CHECK(v.im == 0);
  ParamPoly y(ComplexQ(QRational::q(-1), QRational(1)));
  CHECK(y.value_at(Rational(1, 3)).re == 3);
  CHECK(y.value_at(Rational(1, 3)).im == 1);
  CHECK_THROWS(al.value_at(Rational(1, 2)));
  CHECK(al.to_string().find("alpha") != std::string::npos);
}

TEST_CASE("parameter polynomial JSON round trip") {
  ParamPoly x = al * be.pow(-2) + ParamPoly(ComplexQ(QRational::q(1), QRational(3))) * m;
  CHECK(param_poly_from_json(to_json(x)) == x);
  CHECK(to_json(al)["terms"][0]["powers"]["alpha"] == 1);
}
