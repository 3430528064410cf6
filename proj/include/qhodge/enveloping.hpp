#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qhodge/quantum_group.hpp"

namespace qhodge {

/// Generators of U_q(su(2)).
enum class UGen : std::uint8_t { E, F, K, Kinv };

std::string ugen_name(UGen g);  // "E", "F", "K", "Kinv"

/// PBW monomial F^i E^j K^l.
struct UEAMonomial {
  int i = 0;
  int j = 0;
  int l = 0;

  static UEAMonomial one() { return {}; }
  static UEAMonomial of(UGen g);
  int degree() const { return i + j; }
  std::string to_string() const;

  auto operator<=>(const UEAMonomial&) const = default;
};

class UEAElement {
 public:
  using Terms = std::map<UEAMonomial, QRational>;

  UEAElement() = default;
  UEAElement(const QRational& scalar);  // NOLINT(google-explicit-constructor)
  UEAElement(const UEAMonomial& mono, QRational coeff = 1);
  static UEAElement gen(UGen g) { return UEAElement(UEAMonomial::of(g)); }

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }  // safe in range-for over temporaries
  bool is_zero() const { return terms_.empty(); }
  QRational coeff(const UEAMonomial& mono) const;
  void add_term(const UEAMonomial& mono, const QRational& c);

  UEAElement operator-() const;
  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  UEAElement& operator*=(const QRational& s);
  friend UEAElement operator+(UEAElement x, const UEAElement& y) { return x += y; }
  friend UEAElement operator-(UEAElement x, const UEAElement& y) { return x -= y; }
  friend UEAElement operator*(const QRational& s, UEAElement x) { return x *= s; }
  friend UEAElement operator*(const UEAElement& x, const UEAElement& y);
  friend bool operator==(const UEAElement& x, const UEAElement& y) { return x.terms_ == y.terms_; }

  std::string to_string() const;

 private:
  Terms terms_;
};

class UEATensor {
 public:
  using Key = std::pair<UEAMonomial, UEAMonomial>;
  using Terms = std::map<Key, QRational>;

  static UEATensor pure(const UEAElement& x, const UEAElement& y);
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }  // safe in range-for over temporaries
  void add_term(const UEAMonomial& l, const UEAMonomial& r, const QRational& c);
  UEATensor& operator+=(const UEATensor& o);
  friend UEATensor operator*(const UEATensor& x, const UEATensor& y);
  friend bool operator==(const UEATensor& x, const UEATensor& y) { return x.terms_ == y.terms_; }
  std::string to_string() const;

 private:
  Terms terms_;
};

enum class UEAStrategy { leftmost, rightmost };

UEAElement uea_normal_form(std::span<const UGen> word, UEAStrategy strategy = UEAStrategy::leftmost);
UEAElement uea_multiply(const UEAElement& x, const UEAElement& y);
UEAElement uea_multiply_monomials(const UEAMonomial& x, const UEAMonomial& y);
UEATensor uea_coproduct(const UEAElement& h);
const UEATensor& uea_coproduct(const UEAMonomial& mono);
QRational uea_counit(const UEAElement& h);
UEAElement uea_antipode(const UEAElement& h);
UEAElement uea_star(const UEAElement& h);

// -- Pairing -------------------------------------------------------------------

/// ⟨h, x⟩ evaluated through the tensor powers of the fundamental
/// representation: generator values ⟨h, u_ij⟩ = ρ(h)_ij. Memoized.
QRational pairing(const UEAElement& h, const AlgebraElement& x);
QRational pairing(const UEAMonomial& h, const Monomial& x);

/// Independent path: peels generators off h using the coproduct of A and
/// the generator table. Used to cross-check pairing().
QRational pairing_by_coproduct(const UEAMonomial& h, const Monomial& x);

/// h ▷ x = x₍₁₎⟨h, x₍₂₎⟩ and x ◁ h = ⟨h, x₍₁₎⟩x₍₂₎.
AlgebraElement act_left(const UEAElement& h, const AlgebraElement& x);
AlgebraElement act_right(const AlgebraElement& x, const UEAElement& h);

struct TangentBasis {
  UEAElement X_minus;
  UEAElement X_plus;
  UEAElement X_z;

  const UEAElement& operator[](int a) const { return a == 0 ? X_minus : a == 1 ? X_plus : X_z; }
};

/// X₋ = q^{-1/2} F K, X₊ = q^{1/2} E K, X_z = (1 - q^{-2})^{-1}(1 - K⁴).
const TangentBasis& tangent_basis();

}  // namespace qhodge
