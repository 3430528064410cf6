#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qhodge/enveloping.hpp"
#include "qhodge/matrix.hpp"
#include "qhodge/param_poly.hpp"

namespace qhodge {

/// □ = α(X₋X₊ + q⁶X₊X₋) + γ X_z X_z, split by coupling.
struct BoxParts {
  AlgebraElement alpha_part;  // (X₋X₊ + q⁶X₊X₋) ▷ x
  AlgebraElement gamma_part;  // X_z X_z ▷ x
};
BoxParts box_parts(const AlgebraElement& x);
AlgebraElement box(const QRational& alpha, const QRational& gamma, const AlgebraElement& x);

/// Matrix of □ on the span of PBW monomials of degree ≤ D, optionally one charge sector.
struct FilteredMatrix {
  std::vector<Monomial> basis;
  Matrix<QRational> matrix;  // column j = □(basis[j])
  int requested_degree = 0;
  int degree = 0;  // after any enlargement needed for closure
  std::optional<int> charge;
};

/// Throws std::runtime_error if the span is not closed after `retries` enlargements.
FilteredMatrix box_matrix(const QRational& alpha, const QRational& gamma, int D, std::optional<int> charge = std::nullopt,
                          int retries = 2);
/// Symbolic couplings: entries are linear in α and γ.
Matrix<ParamPoly> box_matrix_symbolic(int D, std::optional<int> charge = std::nullopt);

/// Entries of □ between different charge sectors (all must vanish).
bool charge_block_diagonal(const FilteredMatrix& M);

struct EigenvalueEntry {
  double value = 0;
  double imag = 0;
  int multiplicity = 1;
  std::optional<std::pair<Rational, Rational>> interval;  // isolating interval on the exact path
};

struct Spectrum {
  std::vector<EigenvalueEntry> eigenvalues;  // ascending by real part
  bool exact = false;        // characteristic polynomial + Sturm
  int negative = 0;          // counts with multiplicity; exact on the Sturm path
  int zero = 0;
  int positive = 0;
  int nonreal = 0;
  double max_residual = 0;   // floating path only
};

inline constexpr std::size_t kExactSpectrumLimit = 12;
inline constexpr double kSpectrumTolerance = 1e-8;

/// Characteristic polynomial det(x - M), index = power.
poly::Dense characteristic_polynomial(const Matrix<Rational>& M);
/// Number of distinct real roots of a squarefree p in (lo, hi].
int sturm_count(const poly::Dense& p, const Rational& lo, const Rational& hi);

Spectrum spectrum_numeric(const Matrix<Rational>& M);
Matrix<Rational> evaluate_matrix(const Matrix<QRational>& M, const Rational& q0);

/// ⟨□x, y⟩ - ⟨x, □y⟩ with ⟨x, y⟩ = h(x* y).
QRational symmetry_residual(const QRational& alpha, const QRational& gamma, const AlgebraElement& x, const AlgebraElement& y);

}  // namespace qhodge
