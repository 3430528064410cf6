#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qhodge/calculus.hpp"
#include "qhodge/enveloping.hpp"
#include "qhodge/quantum_group.hpp"

namespace qhodge::expr {

// expr   := ['-'] term (('+' | '-') term)*
// term   := postfix (op postfix)*      op ∈ * / ^ ∧ wedge ⊗ tensor
// postfix:= primary ('^' NAT | '†')*
// primary:= NUMBER | 'q' ['^' ['-'] INT | '^' '(' ['-'] INT '/' 2 ')'] | SYMBOL | '(' expr ')'
//
// '^' after an operand is a power when an integer follows, a wedge otherwise.
// '/' only divides by scalars. SYMBOL also accepts theta = wm∧wp∧wz.

enum class NodeKind { number, q_power, symbol, sum, product, quotient, wedge, tensor, power, star };

struct Node {
  NodeKind kind = NodeKind::number;
  std::size_t pos = 0;  // byte offset of the token that produced the node
  Rational number;      // number
  int half_power = 0;   // q_power, in units of q^{1/2}
  std::string name;     // symbol
  int exponent = 0;     // power
  std::vector<std::unique_ptr<Node>> children;
  std::vector<bool> negated;  // sum: sign of each child

  /// Structural equality; positions are ignored.
  friend bool operator==(const Node& a, const Node& b);
};
using NodePtr = std::unique_ptr<Node>;

const std::vector<std::string>& symbols();

/// Error with a byte offset into the source; render() draws a caret line.
class ExprError : public std::runtime_error {
 public:
  ExprError(const std::string& what, std::size_t pos) : std::runtime_error(what), pos_(pos) {}
  std::size_t pos() const { return pos_; }
  std::string render(const std::string& source) const;

 private:
  std::size_t pos_;
};

class ParseError : public ExprError {
 public:
  ParseError(std::size_t pos, std::string found, std::vector<std::string> expected);
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::string found_;
  std::vector<std::string> expected_;
};

class TypeError : public ExprError {
 public:
  using ExprError::ExprError;
};

NodePtr parse(const std::string& text);
/// Canonical printer; parse(print(n)) == n.
std::string print(const Node& n);

/// ω_{i₁} ⊗ … ⊗ ω_{i_k} with left coefficients, indexed by word_index.
struct FormTensor {
  int length = 0;
  std::vector<AlgebraElement> coeffs;

  explicit FormTensor(int k = 0);
  static FormTensor of(const KForm& one_form);
  FormTensor& operator+=(const FormTensor& o);
  friend bool operator==(const FormTensor& a, const FormTensor& b) = default;
  std::string to_string() const;
};
FormTensor tensor(const FormTensor& x, const FormTensor& y);
FormTensor operator*(const AlgebraElement& x, const FormTensor& t);
FormTensor operator*(const QRational& s, const FormTensor& t);
/// Applies a left-linear map on invariant words (e.g. σ or A⁽ᵏ⁾).
FormTensor apply_word_matrix(const Matrix<QRational>& m, const FormTensor& t);
/// Image in Ω^k: each word replaced by its wedge-basis coordinates.
KForm to_wedge(const FormTensor& t, Braiding b = Braiding::sigma);

using Value = std::variant<QRational, AlgebraElement, UEAElement, KForm, TensorSquare, UEATensor, FormTensor>;

std::string kind_name(const Value& v);
std::string to_string(const Value& v);

Value evaluate(const Node& n, Braiding b = Braiding::sigma);
Value evaluate(const std::string& text, Braiding b = Braiding::sigma);

/// Coercions used by the commands; throw TypeError at position 0 on mismatch.
QRational as_scalar(const Value& v);
AlgebraElement as_algebra(const Value& v);
UEAElement as_uea(const Value& v);
KForm as_form(const Value& v);

}  // namespace qhodge::expr
