#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qhodge/sphere.hpp"

using namespace qhodge;

namespace {

const AlgebraElement A = AlgebraElement::gen(Gen::a);
const AlgebraElement AS = AlgebraElement::gen(Gen::a_star);
const AlgebraElement C = AlgebraElement::gen(Gen::c);
const AlgebraElement CS = AlgebraElement::gen(Gen::c_star);
const ParamPoly al = ParamPoly::symbol(Sym::alpha);
const ParamPoly ga = ParamPoly::symbol(Sym::gamma);
const ParamPoly mc = ParamPoly::symbol(Sym::mc);

std::vector<AlgebraElement> sector(int n, int max_degree) {
  std::vector<AlgebraElement> out;
  for (const auto& m : monomials_up_to(max_degree))
    if (m.charge() == n) out.emplace_back(m);
  return out;
}

}  // namespace

TEST_CASE("membership and sphere forms") {
  CHECK(sphere_membership(C * CS));
  CHECK_FALSE(sphere_membership(A));
  CHECK(sphere_membership(QRational(1)));
  SphereForm s = sphere_form_check(KForm::basis(1, kMinus, C * C));
  CHECK(s.degree == 1);
  CHECK(s.v_minus == C * C);
  CHECK_THROWS_AS(sphere_form_check(KForm::basis(1, kMinus)), SphereChargeError);
  CHECK_THROWS_AS(sphere_form_check(KForm::basis(1, kZ, C * CS)), SphereChargeError);
  CHECK_THROWS_AS(sphere_form_check(KForm::basis(2, 1, C * CS)), SphereChargeError);
  try {
    sphere_form_check(KForm::function(A));
  } catch (const SphereChargeError& e) {
    CHECK(e.monomial == Monomial::of(Gen::a));
  }
  CHECK(sphere_form_check(s.embed()) == s);
}

TEST_CASE("sphere Hodge against the printed table") {
  Contraction g = Contraction::symmetric(al, ga);
  SphereHodge H(g);
  PrintedSphereTable p = printed_sphere_table(g);
  CHECK(H.t0() == p.t0);
  CHECK(H.t_minus() == p.t_minus);
  CHECK(H.t_plus() == p.t_plus);
  SphereForm vm = SphereForm::one_form(C * C, {});
  SphereForm vp = SphereForm::one_form({}, CS * CS);
  CHECK(H.apply(vm) == p.t_minus * ParamForm::from(vm.embed()));
  CHECK(H.apply(vp) == p.t_plus * ParamForm::from(vp.embed()));
  CHECK(H.apply(SphereForm::function(QRational(1))) == ParamPoly(ComplexQ::i()) * mc * ParamForm::from(KForm::basis(2, 0)));
}

TEST_CASE("restricted defining equation") {
  SphereHodge H(Contraction::symbolic());
  std::vector<SphereForm> samples;
  for (const auto& x : sector(0, 2)) {
    samples.push_back(SphereForm::function(x));
    samples.push_back(SphereForm::two_form(x));
  }
  for (const auto& v : sector(-2, 2)) samples.push_back(SphereForm::one_form(v, {}));
  for (const auto& v : sector(2, 2)) samples.push_back(SphereForm::one_form({}, v));
  samples.push_back(SphereForm::one_form(QRational(1) * C * C + A * C, AS * AS));
  int checked = 0;
  for (const auto& f : samples)
    for (const auto& h : samples) {
      if (f.degree != h.degree) continue;
      bool one_invariant = f.embed() == KForm::basis(f.degree, 0) || h.embed() == KForm::basis(h.degree, 0) ||
                           f.degree == 1 || h.degree == 1;
      if (!one_invariant) continue;
      CHECK(sphere_defining_residual(H, f, h).is_zero());
      ++checked;
    }
  CHECK(checked > 20);
}

TEST_CASE("two-form coefficient adjudication") {
  SphereHodge H(Contraction::symbolic());
  TwoFormAdjudication a = adjudicate_two_form(H);
  ParamPoly expected = ParamPoly(ComplexQ(QRational(), QRational(-2) / (QRational(1) + QRational::q(2)))) *
                       ParamPoly::symbol(Sym::alpha) * ParamPoly::symbol(Sym::beta) * mc;
  CHECK(a.derived == expected);
  CHECK_FALSE(a.printed_residual.is_zero());
  CHECK_FALSE(a.alternative_residual.is_zero());
  CHECK(a.verdict == TwoFormVerdict::neither);
}

TEST_CASE("square of the sphere Hodge operator") {
  Contraction g = Contraction::symmetric(al, ga);
  SphereHodge H(g);
  auto sq = H.square_scalars();
  SphereForm vm = SphereForm::one_form(C * C, {});
  SphereForm vp = SphereForm::one_form({}, CS * CS);
  // Ť² on each summand is left multiplication by a scalar.
  auto twice = [&](const SphereForm& f) {
    ParamForm once = H.apply(f);
    ParamForm r(f.degree);
    for (int i = 0; i < once.dim(); ++i)
      for (const auto& [m, c] : once.coeff(i)) {
        KForm piece = KForm::basis(once.degree(), i, AlgebraElement(m));
        r += c * H.apply(sphere_form_check(piece));
      }
    return r;
  };
  CHECK(twice(vm) == sq[1] * ParamForm::from(vm.embed()));
  CHECK(twice(vp) == sq[2] * ParamForm::from(vp.embed()));
  CHECK(twice(SphereForm::function(C * CS)) == sq[0] * ParamForm::from(KForm::function(C * CS)));
  CHECK(twice(SphereForm::two_form(QRational(1))) == sq[3] * ParamForm::from(KForm::basis(2, 0)));

  ParamPoly m2 = sphere_mc_squared(g);
  CHECK(m2 == ParamPoly(lambda(2) / QRational(2)) * al * ParamPoly(QRational::q(6)) * al);
  Rational q0(1, 2);
  auto at = [&](const ParamPoly& x) {
    return x.substitute_square(Sym::mc, m2).substitute(Sym::alpha, ParamPoly(1)).substitute(Sym::gamma, ParamPoly(1)).value_at(q0);
  };
  ComplexRational em = at(sq[1]), ep = at(sq[2]);
  CHECK(em.im == 0);
  CHECK(ep.im == 0);
  CHECK(em.re != ep.re);
}

TEST_CASE("restricted scalar product") {
  Contraction g = Contraction::symbolic();
  SphereForm one = SphereForm::function(QRational(1));
  CHECK(restricted_scalar_product(g, one, one) == ParamPoly(1));
  SphereForm s = SphereForm::one_form(C * C, {});
  CHECK(restricted_scalar_product(g, s, s) == -ParamPoly::symbol(Sym::beta) * ParamPoly(haar(CS * CS * C * C)));
  SphereForm t = SphereForm::one_form({}, CS * CS);
  CHECK(restricted_scalar_product(g, s, t).is_zero());
  CHECK_THROWS(restricted_scalar_product(g, s, one));

  // Positivity on samples: α, γ < 0 gives a positive norm on every summand.
  Contraction neg = Contraction::symmetric(ParamPoly(-1), ParamPoly(-1));
  Contraction pos = Contraction::symmetric(ParamPoly(1), ParamPoly(1));
  for (const auto& v : sector(-2, 2)) {
    SphereForm f = SphereForm::one_form(v, {});
    CHECK(restricted_scalar_product(neg, f, f).value_at(Rational(1, 2)).re > 0);
    CHECK(restricted_scalar_product(pos, f, f).value_at(Rational(1, 2)).re < 0);
  }
  SphereForm e = SphereForm::two_form(QRational(1));
  CHECK(restricted_scalar_product(neg, e, e).value_at(Rational(1, 2)).re > 0);
}

TEST_CASE("closure under d and wedge") {
  for (const auto& x : sector(0, 3)) {
    KForm dx = differential(KForm::function(x));
    CHECK_NOTHROW(sphere_form_check(dx));
  }
  for (const auto& v : sector(-2, 3)) CHECK_NOTHROW(sphere_form_check(differential(KForm::basis(1, kMinus, v))));
  for (const auto& v : sector(2, 3)) CHECK_NOTHROW(sphere_form_check(differential(KForm::basis(1, kPlus, v))));
  for (const auto& v : sector(-2, 2))
    for (const auto& w : sector(2, 2)) {
      KForm f = KForm::basis(1, kMinus, v), h = KForm::basis(1, kPlus, w);
      CHECK_NOTHROW(sphere_form_check(wedge(f, h)));
      CHECK_NOTHROW(sphere_form_check(wedge(h, f)));
    }
}
