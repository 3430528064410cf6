#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhodge/calculus.hpp"
#include "qhodge/matrix.hpp"
#include "qhodge/param_poly.hpp"

namespace qhodge {

/// Form whose coefficients live in A ⊗ (parameter ring): coeffs[i] maps a
/// PBW monomial to its parameter-valued coefficient on basis form i.
class ParamForm {
 public:
  using Coeff = std::map<Monomial, ParamPoly>;

  explicit ParamForm(int degree = 0);
  static ParamForm from(const KForm& f);

  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  const Coeff& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  void add_term(int i, const Monomial& mono, const ParamPoly& c);
  bool is_zero() const;
  /// Coefficient of the invariant basis form i (the monomial 1).
  ParamPoly invariant_coeff(int i) const;

  ParamForm& operator+=(const ParamForm& o);
  ParamForm& operator-=(const ParamForm& o);
  friend ParamForm operator+(ParamForm a, const ParamForm& b) { return a += b; }
  friend ParamForm operator-(ParamForm a, const ParamForm& b) { return a -= b; }
  friend ParamForm operator*(const ParamPoly& s, const ParamForm& f);
  friend ParamForm operator*(const AlgebraElement& x, const ParamForm& f);
  friend bool operator==(const ParamForm& a, const ParamForm& b) { return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_; }

  /// Applies a parameter map (e.g. a substitution) to every coefficient.
  template <class F>
  ParamForm map_coeffs(F&& f) const {
    ParamForm r(degree_);
    for (int i = 0; i < dim(); ++i)
      for (const auto& [m, c] : coeff(i)) r.add_term(i, m, f(c));
    return r;
  }

  std::string to_string() const;

 private:
  int degree_;
  std::vector<Coeff> coeffs_;
};

/// Antilinear star: conjugates the parameters and stars the form part.
ParamForm star(const ParamForm& f, Braiding b = Braiding::sigma);
/// φ ∧ ψ with φ an ordinary form.
ParamForm wedge(const KForm& f, const ParamForm& g, Braiding b = Braiding::sigma);

/// Left-invariant, right U(1)-invariant contraction on Γ_inv:
/// g(ω₋,ω₊) = α, g(ω₊,ω₋) = β, g(ω_z,ω_z) = γ, all others 0.
struct Contraction {
  ParamPoly alpha;
  ParamPoly beta;
  ParamPoly gamma;

  static Contraction symbolic();
  /// (α, q⁶α, γ): the symmetric family.
  static Contraction symmetric(ParamPoly alpha, ParamPoly gamma);
  ParamPoly operator()(int a, int b) const;
};

/// Factorwise contraction of the lifted basis wedges: the Gram matrix of
/// g on Ω^k_inv for the chosen braiding.
Matrix<ParamPoly> extend_contraction(const Contraction& g, int k, Braiding b = Braiding::sigma);

/// λ₀ = λ₁ = 1, λ₂, λ₃ of the chosen braiding.
QRational lambda(int k, Braiding b = Braiding::sigma);

/// ⟨φ, ψ⟩ = Σ h(x*x′) λ_k⁻¹ g(ω*, ω′), sesquilinear.
ParamPoly scalar_product(const Contraction& g, const KForm& f, const KForm& h, Braiding b = Braiding::sigma);

/// ∫_μ y θ = h(y)/m for the volume μ = mθ.
ParamPoly integral_top(const ParamForm& top, const ParamPoly& m);
ParamPoly integral_top(const KForm& top, const ParamPoly& m);

/// Hodge operator T solved from ∫_μ ω* ∧ T(ω′) = λ_k⁻¹ g(ω*, ω′) on
/// invariant basis forms, then extended left-linearly.
class HodgeOperator {
 public:
  HodgeOperator(Contraction g, ParamPoly m = ParamPoly::symbol(Sym::m), Braiding b = Braiding::sigma);

  const Contraction& contraction() const { return g_; }
  const ParamPoly& volume_scale() const { return m_; }
  Braiding braiding() const { return braiding_; }

  const Matrix<ParamPoly>& gram(int k) const { return gram_.at(static_cast<std::size_t>(k)); }
  /// W(i, j) = θ-coefficient of e_i* ∧ f_j, with e of degree k and f of degree 3 - k.
  const Matrix<QRational>& pairing_matrix(int k) const { return pairing_.at(static_cast<std::size_t>(k)); }
  /// Column b holds the coordinates of T(e_b) in the degree 3 - k basis.
  const Matrix<ParamPoly>& matrix(int k) const { return T_.at(static_cast<std::size_t>(k)); }
  /// T_{3-k} T_k on Ω^k_inv.
  Matrix<ParamPoly> square(int k) const;

  ParamForm apply(const KForm& f) const;
  /// T on an invariant form given by parameter-valued coordinates.
  std::vector<ParamPoly> apply_invariant(int k, const std::vector<ParamPoly>& coords) const;

 private:
  Contraction g_;
  ParamPoly m_;
  Braiding braiding_;
  std::vector<Matrix<ParamPoly>> gram_;
  std::vector<Matrix<QRational>> pairing_;
  std::vector<Matrix<ParamPoly>> T_;
};

/// Coordinates of star(e) for an invariant form given by coordinates.
std::vector<ParamPoly> star_invariant(int k, const std::vector<ParamPoly>& coords, Braiding b = Braiding::sigma);

/// T² is a scalar on Ω¹_inv.
bool is_symmetric(const HodgeOperator& T);
/// T(ω_a*) = T(ω_a)* on the three basis 1-forms.
bool is_real(const HodgeOperator& T);
/// star∘T = T∘star on every invariant basis form of degree k.
bool commutes_with_star(const HodgeOperator& T, int k);

/// ∫_μ φ* ∧ T(ψ) - ⟨φ, ψ⟩.
ParamPoly defining_equation_residual(const HodgeOperator& T, const KForm& f, const KForm& h);

struct DetSgn {
  ParamPoly det;  // ⟨μ, μ⟩ = m² g∧(θ,θ)/λ₃
  ComplexRational det_over_m2;  // at q0
  int sgn = 0;
};
/// Needs numeric real α, β, γ and a real m.
DetSgn det_sgn(const HodgeOperator& T, const Rational& q0);

/// m² = λ₃ / (6 q⁴ α β |γ|), with the sign of γ supplied (symbolic γ) or read
/// at q0 (numeric γ).
ParamPoly normalized_m_squared(const Contraction& g, int gamma_sign, Braiding b = Braiding::sigma);

struct Normalization {
  ParamPoly m_squared;         // symbolic in q
  Rational m_squared_at_q0;
  std::optional<Rational> m_exact;  // when m² is a rational square
  double m_approx = 0;
  int sgn = 0;  // sgn(g) = -sgn(γ)
};
/// Precondition: numeric real parameters with αβ > 0 at q0.
Normalization normalize_volume(const Contraction& g, const Rational& q0, Braiding b = Braiding::sigma);

/// T² on Ω^k_inv with m² replaced by the normalized value.
Matrix<ParamPoly> normalized_square(const HodgeOperator& T, int k, const ParamPoly& m_squared);

struct CommutatorReport {
  bool found = false;
  std::vector<std::pair<int, int>> witnesses;  // every (degree, basis index) with T T′ ≠ T′ T
  // First witness, scanning 1-forms first.
  int degree = -1;
  int basis_index = -1;
  std::vector<ParamPoly> T_Tprime;  // T(T′(e))
  std::vector<ParamPoly> Tprime_T;  // T′(T(e))
};
/// Searches the invariant basis for a form with T T′ ≠ T′ T.
CommutatorReport commutator_check(const Contraction& g, const ParamPoly& m = ParamPoly::symbol(Sym::m));

/// Multiplicities of the T² eigenvalues on each Ω^k_inv, as (value, count) per degree.
/// Precondition: T² diagonal on each degree (true for the symmetric family).
std::vector<std::vector<std::pair<ParamPoly, int>>> square_spectrum(const HodgeOperator& T);

}  // namespace qhodge
