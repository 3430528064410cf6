#include "qhodge/sphere.hpp"

namespace qhodge {

bool in_charge_sector(const AlgebraElement& x, int n) {
  for (const auto& [mono, c] : x.terms())
    if (mono.charge() != n) return false;
  return true;
}

bool sphere_membership(const AlgebraElement& x) { return in_charge_sector(x, 0); }

namespace {

void require_sector(const AlgebraElement& x, int n, const std::string& where) {
  for (const auto& [mono, c] : x.terms())
    if (mono.charge() != n)
      throw SphereChargeError(where + ": monomial " + mono.to_string() + " has charge " + std::to_string(mono.charge()) +
                                  ", expected " + std::to_string(n),
                              mono);
}

ParamPoly i_times(const ParamPoly& x) { return ParamPoly(ComplexQ::i()) * x; }

}  // namespace

SphereForm SphereForm::function(AlgebraElement f0) {
  require_sector(f0, 0, "function");
  return {0, std::move(f0), {}, {}};
}

SphereForm SphereForm::one_form(AlgebraElement vm, AlgebraElement vp) {
  require_sector(vm, -2, "coefficient of wm");
  require_sector(vp, 2, "coefficient of wp");
  return {1, {}, std::move(vm), std::move(vp)};
}

SphereForm SphereForm::two_form(AlgebraElement f2) {
  require_sector(f2, 0, "coefficient of wm^wp");
  return {2, std::move(f2), {}, {}};
}

KForm SphereForm::embed() const {
  switch (degree) {
    case 0: return KForm::function(f);
    case 1: return KForm::basis(1, kMinus, v_minus) + KForm::basis(1, kPlus, v_plus);
    case 2: return KForm::basis(2, 0, f);
  }
  throw std::invalid_argument("sphere forms have degree 0, 1 or 2");
}

SphereForm sphere_form_check(const KForm& f) {
  auto reject = [](const AlgebraElement& x, const std::string& where) {
    if (!x.is_zero()) throw SphereChargeError(where + " must vanish on the sphere", x.terms().begin()->first);
  };
  switch (f.degree()) {
    case 0: return SphereForm::function(f.coeff(0));
    case 1:
      reject(f.coeff(kZ), "coefficient of wz");
      return SphereForm::one_form(f.coeff(kMinus), f.coeff(kPlus));
    case 2:
      reject(f.coeff(1), "coefficient of wm^wz");
      reject(f.coeff(2), "coefficient of wp^wz");
      return SphereForm::two_form(f.coeff(0));
  }
  throw std::invalid_argument("no sphere forms of degree " + std::to_string(f.degree()));
}

ParamPoly restricted_scalar_product(const Contraction& g, const SphereForm& f, const SphereForm& h) {
  if (f.degree != h.degree) throw std::invalid_argument("scalar product of sphere forms of different degree");
  return scalar_product(g, f.embed(), h.embed());
}

ParamPoly sphere_integral(const ParamForm& top, const ParamPoly& mc) {
  if (top.degree() != 2) throw std::invalid_argument("sphere integral of a form that is not of degree 2");
  if (!top.coeff(1).empty() || !top.coeff(2).empty()) throw std::invalid_argument("sphere integral of a form with a wz component");
  ParamPoly acc;
  for (const auto& [mono, c] : top.coeff(0)) {
    QRational hv = haar(mono);
    if (!hv.is_zero()) acc += ParamPoly(hv) * c;
  }
  return acc.divided_by(i_times(mc));
}

namespace {

// t with ∫ φ* ∧ t·target = ⟨φ, φ⟩ for an invariant φ.
ParamPoly solve_coefficient(const Contraction& g, const ParamPoly& mc, const KForm& phi, const KForm& target) {
  ParamPoly lhs = sphere_integral(ParamForm::from(wedge(star(phi), target)), mc);
  ParamPoly rhs = scalar_product(g, phi, phi);
  if (!lhs.is_monomial()) throw std::domain_error("sphere Hodge system is singular");
  return rhs.divided_by(lhs);
}

}  // namespace

SphereHodge::SphereHodge(Contraction g, ParamPoly mc) : g_(std::move(g)), mc_(std::move(mc)) {
  t0_ = solve_coefficient(g_, mc_, KForm::function(QRational(1)), KForm::basis(2, 0));
  tm_ = solve_coefficient(g_, mc_, KForm::basis(1, kMinus), KForm::basis(1, kMinus));
  tp_ = solve_coefficient(g_, mc_, KForm::basis(1, kPlus), KForm::basis(1, kPlus));
  t2_ = solve_coefficient(g_, mc_, KForm::basis(2, 0), KForm::function(QRational(1)));
}

ParamForm SphereHodge::apply(const SphereForm& f) const {
  switch (f.degree) {
    case 0: return t0_ * ParamForm::from(KForm::basis(2, 0, f.f));
    case 1: return tm_ * ParamForm::from(KForm::basis(1, kMinus, f.v_minus)) + tp_ * ParamForm::from(KForm::basis(1, kPlus, f.v_plus));
    case 2: return t2_ * ParamForm::from(KForm::function(f.f));
  }
  throw std::invalid_argument("sphere forms have degree 0, 1 or 2");
}

std::array<ParamPoly, 4> SphereHodge::square_scalars() const { return {t0_ * t2_, tm_ * tm_, tp_ * tp_, t2_ * t0_}; }

ParamPoly sphere_defining_residual(const SphereHodge& H, const SphereForm& f, const ParamForm& T_of_h, const SphereForm& h) {
  ParamForm top = wedge(star(f.embed()), T_of_h);
  return sphere_integral(top, H.volume_scale()) - restricted_scalar_product(H.contraction(), f, h);
}

ParamPoly sphere_defining_residual(const SphereHodge& H, const SphereForm& f, const SphereForm& h) {
  return sphere_defining_residual(H, f, H.apply(h), h);
}

PrintedSphereTable printed_sphere_table(const Contraction& g, const ParamPoly& mc) {
  ParamPoly inv_l2(lambda(2).inverse());
  PrintedSphereTable t;
  t.t0 = i_times(mc);
  t.t_minus = -i_times(ParamPoly(QRational::q(-2)) * mc * g.beta);
  t.t_plus = i_times(mc * g.alpha);
  t.t2 = ParamPoly(2) * mc * mc * inv_l2;
  t.t2_alternative = ParamPoly(2) * mc * inv_l2;
  return t;
}

ParamPoly sphere_mc_squared(const Contraction& g) { return ParamPoly(lambda(2) / QRational(2)) * g.alpha * g.beta; }

std::string verdict_name(TwoFormVerdict v) {
  switch (v) {
    case TwoFormVerdict::printed: return "printed";
    case TwoFormVerdict::alternative: return "alternative";
    case TwoFormVerdict::neither: return "neither";
  }
  return "?";
}

TwoFormAdjudication adjudicate_two_form(const SphereHodge& H) {
  PrintedSphereTable p = printed_sphere_table(H.contraction(), H.volume_scale());
  TwoFormAdjudication a;
  a.derived = H.t2();
  a.printed = p.t2;
  a.alternative = p.t2_alternative;
  SphereForm e = SphereForm::two_form(QRational(1));
  a.printed_residual = sphere_defining_residual(H, e, p.t2 * ParamForm::from(KForm::function(QRational(1))), e);
  a.alternative_residual = sphere_defining_residual(H, e, p.t2_alternative * ParamForm::from(KForm::function(QRational(1))), e);
  if (a.printed_residual.is_zero())
    a.verdict = TwoFormVerdict::printed;
  else if (a.alternative_residual.is_zero())
    a.verdict = TwoFormVerdict::alternative;
  return a;
}

}  // namespace qhodge
