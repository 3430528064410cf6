#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "qhodge/matrix.hpp"
#include "qhodge/quantum_group.hpp"

namespace qhodge {

// Indices of the left-invariant 1-forms ω₋, ω₊, ω_z.
inline constexpr int kMinus = 0;
inline constexpr int kPlus = 1;
inline constexpr int kZ = 2;

/// Which braiding builds the antisymmetrisers. `flip` is the classical
/// ω_a⊗ω_b ↦ ω_b⊗ω_a and is only meaningful on invariant forms.
enum class Braiding { sigma, sigma_inverse, flip };

std::string braiding_name(Braiding b);

/// dim Ω^k_inv: 1, 3, 3, 1 (and 0 above the top degree).
int form_dim(int k);
/// Basis words: k=2 {(-,+), (-,z), (+,z)}, k=3 {(-,+,z)}.
const std::vector<int>& basis_word(int k, int i);
/// "1", "wm", "wp", "wz", "wm^wp", "wm^wz", "wp^wz", "theta".
std::string basis_name(int k, int i);
/// Index of a basis name, or -1.
std::pair<int, int> basis_lookup(const std::string& name);
/// U(1) charge carried by a basis form, in the convention of functions:
/// ω₋ ↦ +2, ω₊ ↦ -2, ω_z ↦ 0, so L₋₂ω₋ and L₊₂ω₊ are charge zero.
int basis_charge(int k, int i);
/// Weight w with ω x = q^{w n} x ω for x ∈ L_n: ω_± ↦ 1, ω_z ↦ 2, additive.
int basis_weight(int k, int i);

/// Index of a tensor word in Γ_inv^{⊗k} (base 3, first letter most significant).
std::size_t word_index(std::span<const int> word);

/// The braiding and everything derived from it on invariant tensors.
struct ExteriorStructure {
  Braiding braiding;
  Matrix<QRational> sigma;  // 9×9, column = input word
  Matrix<QRational> A2;     // 1 - σ
  Matrix<QRational> A3;     // (1 - σ₂)(1 - σ₁ + σ₁σ₂), 27×27
  QRational lambda2;
  QRational lambda3;
  /// Wedge coordinates of every tensor word: A⁽ᵏ⁾(w) = Σ_b P[w][b] A⁽ᵏ⁾(basis_b).
  std::vector<std::vector<QRational>> P2;  // 9 × 3
  std::vector<std::vector<QRational>> P3;  // 27 × 1
  /// star(e_i) = Σ_j star_matrix[k][i][j] e_j on invariant basis forms.
  std::array<std::vector<std::vector<QRational>>, 4> star_matrix;
};

/// Built once per braiding and cached.
const ExteriorStructure& exterior(Braiding b = Braiding::sigma);

Matrix<QRational> sigma_matrix(Braiding b = Braiding::sigma);
Matrix<QRational> antisymmetrizer(int k, Braiding b = Braiding::sigma);
/// σ₁ = σ⊗1 and σ₂ = 1⊗σ on Γ^{⊗3}.
Matrix<QRational> sigma1(Braiding b = Braiding::sigma);
Matrix<QRational> sigma2(Braiding b = Braiding::sigma);

/// Wedge-basis coordinates of a tensor word of length ≤ 3.
std::vector<QRational> project_word(std::span<const int> word, Braiding b = Braiding::sigma);

/// Element of Ω^k with algebra coefficients on the left of the invariant basis.
class KForm {
 public:
  KForm() : KForm(0) {}
  explicit KForm(int degree);
  static KForm basis(int k, int i, AlgebraElement coeff = AlgebraElement(QRational(1)));
  static KForm function(AlgebraElement x);

  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  const AlgebraElement& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  AlgebraElement& coeff(int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<AlgebraElement>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  KForm operator-() const;
  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  /// Left multiplication x·φ.
  friend KForm operator*(const AlgebraElement& x, const KForm& f);
  friend KForm operator*(const QRational& s, const KForm& f);
  /// Right multiplication φ·x through the bimodule relations.
  friend KForm operator*(const KForm& f, const AlgebraElement& x);
  friend bool operator==(const KForm& a, const KForm& b) { return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  int degree_;
  std::vector<AlgebraElement> coeffs_;
};

/// e_i · x rewritten as x′ · e_i, where e_i is the i-th basis form of degree k.
KForm commute_right(int k, int i, const AlgebraElement& x);

KForm wedge(const KForm& f, const KForm& g, Braiding b = Braiding::sigma);
/// Antilinear graded involution: (xω)* = ω* x*, with ω₋* = -ω₊, ω_z* = -ω_z.
KForm star(const KForm& f, Braiding b = Braiding::sigma);

/// dx = Σ_a (X_a ▷ x) ω_a.
KForm differential0(const AlgebraElement& x);

/// dω_a = Σ_b coeffs[a][b] e²_b, solved from d(dx) = 0 on the generators.
struct MaurerCartan {
  std::array<std::array<QRational, 3>, 3> coeffs;
  std::size_t equations = 0;
  std::size_t rank = 0;
};
/// Throws std::runtime_error if the system is inconsistent or underdetermined.
const MaurerCartan& maurer_cartan();

/// Exterior derivative on forms of any degree (zero on top forms).
KForm differential(const KForm& f, Braiding b = Braiding::sigma);

/// Kernel of A⁽²⁾ compared with the displayed wedge relations.
struct WedgeRelationReport {
  std::size_t kernel_dim = 0;
  Matrix<QRational> kernel;  // 9 × kernel_dim
  bool squares_in_kernel = false;          // ω_a⊗ω_a
  bool first_relation_in_kernel = false;   // ω₋⊗ω₊ + q⁻²ω₊⊗ω₋
  bool upper_z_relation_in_kernel = false; // ω_z⊗ω₋ + q⁴ω₋⊗ω_z
  bool printed_lower_z_in_kernel = false;  // ω_z⊗ω₊ + q⁻⁴ω₋⊗ω_z (as displayed)
  bool corrected_lower_z_in_kernel = false;// ω_z⊗ω₊ + q⁻⁴ω₊⊗ω_z
  bool relations_span_kernel = false;      // squares + three corrected relations
};
WedgeRelationReport wedge_relations(Braiding b = Braiding::sigma);

}  // namespace qhodge
