#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qhodge/scalar_field.hpp"

namespace qhodge {

/// Generators of the coordinate algebra A(SU_q(2)).
enum class Gen : std::uint8_t { a, a_star, c, c_star };

std::string gen_name(Gen g);  // "a", "as", "c", "cs"

enum class Branch : std::uint8_t { a, a_star };

/// PBW basis element a^k c^l c*^m (branch a, k >= 0) or a*^k c^l c*^m
/// (branch a*, k >= 1). Construct through make() so that a*^0 folds into
/// the a branch.
struct Monomial {
  Branch branch = Branch::a;
  int k = 0;
  int l = 0;
  int m = 0;

  static Monomial make(Branch b, int k, int l, int m);
  static Monomial one() { return {}; }
  static Monomial of(Gen g);

  int degree() const { return k + l + m; }
  /// U(1) charge n, where x ∈ L_n iff δ_R(x) = x ⊗ z^{-n}. a, c carry -1.
  int charge() const;
  /// The monomial as a word in the generators (PBW order).
  std::vector<Gen> word() const;
  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;
};

/// Q(q)-linear combination of PBW monomials. No zero coefficients stored.
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, QRational>;

  AlgebraElement() = default;
  AlgebraElement(const QRational& scalar);  // NOLINT(google-explicit-constructor)
  AlgebraElement(const Monomial& mono, QRational coeff = 1);
  static AlgebraElement gen(Gen g) { return AlgebraElement(Monomial::of(g)); }

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }  // safe in range-for over temporaries
  bool is_zero() const { return terms_.empty(); }
  QRational coeff(const Monomial& mono) const;
  void add_term(const Monomial& mono, const QRational& c);
  int max_degree() const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const QRational& s);
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator*(const QRational& s, AlgebraElement x) { return x *= s; }
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) { return x.terms_ == y.terms_; }

  /// Canonical printer: "q^-1 * a*c + cs^2". Reparses through the CLI grammar.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Element of A ⊗ A with both legs in PBW normal form.
class TensorSquare {
 public:
  using Key = std::pair<Monomial, Monomial>;
  using Terms = std::map<Key, QRational>;

  TensorSquare() = default;
  static TensorSquare pure(const AlgebraElement& x, const AlgebraElement& y);

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }  // safe in range-for over temporaries
  void add_term(const Monomial& l, const Monomial& r, const QRational& c);
  bool is_zero() const { return terms_.empty(); }

  TensorSquare& operator+=(const TensorSquare& o);
  friend TensorSquare operator*(const TensorSquare& x, const TensorSquare& y);
  friend bool operator==(const TensorSquare& x, const TensorSquare& y) { return x.terms_ == y.terms_; }
  std::string to_string() const;

 private:
  Terms terms_;
};

// -- Rewriting -------------------------------------------------------------

enum class RewriteStrategy { leftmost, rightmost };

/// Normal form of a word by the SU_q(2) rewriting system, reducing the
/// leftmost (or rightmost) redex first.
AlgebraElement normal_form(std::span<const Gen> word, RewriteStrategy strategy = RewriteStrategy::leftmost);

/// One rewrite of an out-of-order adjacent pair (x, y): returns the
/// replacement as (coefficient, word) terms, or nothing if (x, y) is ordered.
std::vector<std::pair<QRational, std::vector<Gen>>> rewrite_pair(Gen x, Gen y);
bool is_redex(Gen x, Gen y);

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement multiply_monomials(const Monomial& x, const Monomial& y);
AlgebraElement power(const AlgebraElement& x, int e);

// -- Hopf *-structure --------------------------------------------------------

AlgebraElement star(const AlgebraElement& x);
TensorSquare coproduct(const AlgebraElement& x);
const TensorSquare& coproduct(const Monomial& mono);
QRational counit(const AlgebraElement& x);
AlgebraElement antipode(const AlgebraElement& x);

/// Multiplication map A ⊗ A -> A.
AlgebraElement contract(const TensorSquare& t);
/// (ε ⊗ id) and (id ⊗ ε).
AlgebraElement counit_left(const TensorSquare& t);
AlgebraElement counit_right(const TensorSquare& t);

// -- U(1) grading -----------------------------------------------------------

struct U1Charge {
  int n = 0;
  auto operator<=>(const U1Charge&) const = default;
};

/// Homogeneous parts of x, ordered by charge.
std::vector<std::pair<U1Charge, AlgebraElement>> grade_decompose(const AlgebraElement& x);
/// Charge of a homogeneous nonzero element; throws if x is not homogeneous.
int homogeneous_charge(const AlgebraElement& x);

// -- Haar state ---------------------------------------------------------------

/// Haar state derived from two-sided invariance, solved degree block by
/// degree block and cached. Thread-safe; fills are idempotent.
QRational haar(const AlgebraElement& x);
QRational haar(const Monomial& mono);
/// Solved values for every PBW monomial of exactly this degree.
std::map<Monomial, QRational> haar_block(int degree);
/// Closed form of h((c c*)^l) recovered from the solver and regression-locked.
QRational haar_cc_star_closed_form(int l);

/// Optional persistence of solved Haar blocks (content-addressed JSON files).
void set_haar_cache_dir(std::filesystem::path dir);

/// All PBW monomials of total degree <= max_degree, in Monomial order.
std::vector<Monomial> monomials_up_to(int max_degree);
std::vector<Monomial> monomials_of_degree(int degree);

}  // namespace qhodge
