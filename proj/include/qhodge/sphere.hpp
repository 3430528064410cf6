#pragma once

#include <stdexcept>
#include <string>

#include "qhodge/hodge.hpp"

namespace qhodge {

/// A coefficient outside its required charge sector.
class SphereChargeError : public std::invalid_argument {
 public:
  SphereChargeError(const std::string& what, Monomial offending)
      : std::invalid_argument(what), monomial(std::move(offending)) {}
  Monomial monomial;
};

/// x ∈ L₀ = A(S²_q).
bool sphere_membership(const AlgebraElement& x);
/// x ∈ L_n.
bool in_charge_sector(const AlgebraElement& x, int n);

/// Form on the sphere in the frame-bundle presentation: f ∈ L₀ in degree 0,
/// v₋ω₋ + v₊ω₊ with v₋ ∈ L₋₂, v₊ ∈ L₊₂ in degree 1, f ω₋∧ω₊ with f ∈ L₀ in degree 2.
struct SphereForm {
  int degree = 0;
  AlgebraElement f;
  AlgebraElement v_minus;
  AlgebraElement v_plus;

  static SphereForm function(AlgebraElement f0);
  static SphereForm one_form(AlgebraElement vm, AlgebraElement vp);
  static SphereForm two_form(AlgebraElement f2);
  KForm embed() const;
  friend bool operator==(const SphereForm& a, const SphereForm& b) = default;
};

/// Decomposes a form on SU_q(2) into sphere components; throws
/// SphereChargeError naming the first coefficient that violates the sectors
/// (including any ω_z-component).
SphereForm sphere_form_check(const KForm& f);

/// ⟨φ, ψ⟩ of the embedded forms.
ParamPoly restricted_scalar_product(const Contraction& g, const SphereForm& f, const SphereForm& h);

/// Induced Hodge operator Ť with μ̌ = Ť(1) = i m̌ ω₋∧ω₊, solved from
/// ∫_μ̌ φ* ∧ Ť(ψ) = ⟨φ, ψ⟩ with ∫_μ̌ y μ̌ = h(y).
class SphereHodge {
 public:
  explicit SphereHodge(Contraction g, ParamPoly mc = ParamPoly::symbol(Sym::mc));

  const Contraction& contraction() const { return g_; }
  const ParamPoly& volume_scale() const { return mc_; }

  /// Ť on the four summands: 1 ↦ t₀ ω₋∧ω₊, vω₋ ↦ t₋ vω₋, vω₊ ↦ t₊ vω₊, ω₋∧ω₊ ↦ t₂.
  const ParamPoly& t0() const { return t0_; }
  const ParamPoly& t_minus() const { return tm_; }
  const ParamPoly& t_plus() const { return tp_; }
  const ParamPoly& t2() const { return t2_; }

  ParamForm apply(const SphereForm& f) const;
  /// Ť² as a scalar on each summand (0: functions, 1: ω₋ part, 2: ω₊ part, 3: 2-forms).
  std::array<ParamPoly, 4> square_scalars() const;

 private:
  Contraction g_;
  ParamPoly mc_;
  ParamPoly t0_, tm_, tp_, t2_;
};

/// ∫_μ̌ of a 2-form f ω₋∧ω₊: h(f)/(i m̌). Throws on ω_z-components.
ParamPoly sphere_integral(const ParamForm& top, const ParamPoly& mc);

/// ∫_μ̌ φ* ∧ Ť(ψ) - ⟨φ, ψ⟩, with Ť(ψ) supplied.
ParamPoly sphere_defining_residual(const SphereHodge& H, const SphereForm& f, const ParamForm& T_of_h, const SphereForm& h);
ParamPoly sphere_defining_residual(const SphereHodge& H, const SphereForm& f, const SphereForm& h);

/// The printed closed forms: Ť(1) = i m̌ ω₋∧ω₊, Ť(v₋ω₋) = -i q⁻² m̌ β v₋ω₋,
/// Ť(v₊ω₊) = i m̌ α v₊ω₊, Ť(ω₋∧ω₊) = 2 m̌² λ₂⁻¹.
struct PrintedSphereTable {
  ParamPoly t0, t_minus, t_plus, t2;
  ParamPoly t2_alternative;  // 2 m̌ λ₂⁻¹
};
PrintedSphereTable printed_sphere_table(const Contraction& g, const ParamPoly& mc = ParamPoly::symbol(Sym::mc));

/// m̌² = λ₂ α β / 2.
ParamPoly sphere_mc_squared(const Contraction& g);

enum class TwoFormVerdict { printed, alternative, neither };
std::string verdict_name(TwoFormVerdict v);

struct TwoFormAdjudication {
  ParamPoly derived;
  ParamPoly printed;
  ParamPoly alternative;
  ParamPoly printed_residual;
  ParamPoly alternative_residual;
  TwoFormVerdict verdict = TwoFormVerdict::neither;
};
/// Tests both candidates for Ť(ω₋∧ω₊) against the restricted defining equation.
TwoFormAdjudication adjudicate_two_form(const SphereHodge& H);

}  // namespace qhodge
