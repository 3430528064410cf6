#include "qhodge/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qhodge::expr {

namespace {

const char* kWedgeGlyph = "∧";   // ∧
const char* kTensorGlyph = "⊗";  // ⊗
const char* kDaggerGlyph = "†";  // †

std::size_t column_of(const std::string& s, std::size_t pos) {
  std::size_t col = 0;
  for (std::size_t i = 0; i < pos && i < s.size(); ++i)
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) ++col;
  return col;
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { number, ident, plus, minus, times, slash, caret, lparen, rparen, wedge, tensor, dagger, end, bad };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t pos = 0;
  Rational value;  // number
};

std::string describe(const Token& t) {
  if (t.kind == Tok::end) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](const char* glyph) { return s.compare(i, std::char_traits<char>::length(glyph), glyph) == 0; };
  while (i < s.size()) {
    unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      // "3/2" with no spaces is one literal; "3 / 2" is a quotient
      if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      t.kind = Tok::number;
      t.text = s.substr(i, j - i);
      try {
        t.value = parse_rational(t.text);
      } catch (const std::exception&) {
        throw ParseError(i, "'" + t.text + "'", {"nonzero denominator"});
      }
      i = j;
    } else if (std::isalpha(ch)) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      t.text = s.substr(i, j - i);
      t.kind = t.text == "wedge" ? Tok::wedge : t.text == "tensor" ? Tok::tensor : Tok::ident;
      i = j;
    } else if (starts(kWedgeGlyph) || starts(kTensorGlyph) || starts(kDaggerGlyph)) {
      t.kind = starts(kWedgeGlyph) ? Tok::wedge : starts(kTensorGlyph) ? Tok::tensor : Tok::dagger;
      t.text = s.substr(i, 3);
      i += 3;
    } else {
      switch (ch) {
        case '+': t.kind = Tok::plus; break;
        case '-': t.kind = Tok::minus; break;
        case '*': t.kind = Tok::times; break;
        case '/': t.kind = Tok::slash; break;
        case '^': t.kind = Tok::caret; break;
        case '(': t.kind = Tok::lparen; break;
        case ')': t.kind = Tok::rparen; break;
        default: t.kind = Tok::bad; break;
      }
      std::size_t len = 1;
      if (t.kind == Tok::bad)
        while (i + len < s.size() && (static_cast<unsigned char>(s[i + len]) & 0xC0) == 0x80) ++len;
      t.text = s.substr(i, len);
      i += len;
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = s.size();
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------------------
// Parser

NodePtr make(NodeKind k, std::size_t pos) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->pos = pos;
  return n;
}

bool is_integer(const Token& t) { return t.kind == Tok::number && t.value.get_den() == 1; }

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  NodePtr run() {
    auto n = expr();
    if (peek().kind != Tok::end)
      fail({"'+'", "'-'", "'*'", "'/'", "'^'", "'∧'", "'⊗'", "'†'", "end of input"});
    return n;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(i_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().pos, describe(peek()), std::move(expected));
  }

  static std::vector<std::string> operand_set() {
    std::vector<std::string> e{"number", "'q'", "'('"};
    for (const auto& s : symbols()) e.push_back(s);
    return e;
  }

  NodePtr expr() {
    std::size_t start = peek().pos;
    bool lead = false;
    if (peek().kind == Tok::minus) {
      next();
      lead = true;
    }
    auto first = term();
    if (!lead && peek().kind != Tok::plus && peek().kind != Tok::minus) return first;
    auto sum = make(NodeKind::sum, start);
    sum->children.push_back(std::move(first));
    sum->negated.push_back(lead);
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool neg = next().kind == Tok::minus;
      sum->children.push_back(term());
      sum->negated.push_back(neg);
    }
    return sum;
  }

  NodePtr term() {
    auto lhs = postfix();
    for (;;) {
      NodeKind k;
      switch (peek().kind) {
        case Tok::times: k = NodeKind::product; break;
        case Tok::slash: k = NodeKind::quotient; break;
        case Tok::caret:
        case Tok::wedge: k = NodeKind::wedge; break;
        case Tok::tensor: k = NodeKind::tensor; break;
        default: return lhs;
      }
      auto n = make(k, next().pos);
      n->children.push_back(std::move(lhs));
      n->children.push_back(postfix());
      lhs = std::move(n);
    }
  }

  NodePtr postfix() {
    auto n = primary();
    for (;;) {
      if (peek().kind == Tok::caret && is_integer(peek(1))) {
        auto p = make(NodeKind::power, next().pos);
        const Token& e = next();
        if (!e.value.get_num().fits_sint_p() || e.value > 64) throw ParseError(e.pos, describe(e), {"exponent at most 64"});
        p->exponent = static_cast<int>(e.value.get_num().get_si());
        p->children.push_back(std::move(n));
        n = std::move(p);
      } else if (peek().kind == Tok::dagger) {
        auto s = make(NodeKind::star, next().pos);
        s->children.push_back(std::move(n));
        n = std::move(s);
      } else {
        return n;
      }
    }
  }

  // q^k, q^-k, q^(k/2), q^(-k/2), q^k/2
  bool q_exponent_follows() const {
    if (peek().kind != Tok::caret) return false;
    const Token& t = peek(1);
    if (t.kind == Tok::number) return true;
    if (t.kind == Tok::minus) return peek(2).kind == Tok::number;
    if (t.kind == Tok::lparen) {
      std::size_t k = peek(2).kind == Tok::minus ? 3 : 2;
      return peek(k).kind == Tok::number && peek(k + 1).kind == Tok::rparen;
    }
    return false;
  }

  int q_exponent() {
    next();  // '^'
    bool paren = false, neg = false;
    if (peek().kind == Tok::lparen) {
      next();
      paren = true;
    }
    if (peek().kind == Tok::minus) {
      next();
      neg = true;
    }
    const Token& e = next();
    Rational twice = e.value * 2;
    if (twice.get_den() != 1 || !twice.get_num().fits_sint_p() || abs(twice) > 1000)
      throw ParseError(e.pos, describe(e), {"integer or half-integer exponent"});
    if (paren) next();  // ')', checked by q_exponent_follows
    int h = static_cast<int>(twice.get_num().get_si());
    return neg ? -h : h;
  }

  NodePtr primary() {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      auto n = make(NodeKind::number, t.pos);
      n->number = t.value;
      next();
      return n;
    }
    if (t.kind == Tok::ident && t.text == "q") {
      auto n = make(NodeKind::q_power, t.pos);
      next();
      n->half_power = q_exponent_follows() ? q_exponent() : 2;
      return n;
    }
    if (t.kind == Tok::ident && std::find(symbols().begin(), symbols().end(), t.text) != symbols().end()) {
      auto n = make(NodeKind::symbol, t.pos);
      n->name = t.text;
      next();
      return n;
    }
    if (t.kind == Tok::lparen) {
      next();
      auto n = expr();
      if (peek().kind != Tok::rparen) fail({"')'", "'+'", "'-'", "'*'", "'/'", "'^'", "'∧'", "'⊗'", "'†'"});
      next();
      return n;
    }
    fail(operand_set());
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

bool is_atom(const Node& n) {
  return n.kind == NodeKind::number || n.kind == NodeKind::q_power || n.kind == NodeKind::symbol ||
         n.kind == NodeKind::power || n.kind == NodeKind::star;
}

std::string paren(const Node& n, bool wrap) { return wrap ? "(" + print(n) + ")" : print(n); }

std::string q_string(int h) {
  if (h == 2) return "q";
  if (h % 2 == 0) return "q^" + std::to_string(h / 2);
  return "q^(" + std::to_string(h) + "/2)";
}

std::string op_string(NodeKind k) {
  switch (k) {
    case NodeKind::product: return " * ";
    case NodeKind::quotient: return " / ";
    case NodeKind::wedge: return std::string(" ") + kWedgeGlyph + " ";
    case NodeKind::tensor: return std::string(" ") + kTensorGlyph + " ";
    default: return " ? ";
  }
}

}  // namespace

bool operator==(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.number != b.number || a.half_power != b.half_power || a.name != b.name ||
      a.exponent != b.exponent || a.negated != b.negated || a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!(*a.children[i] == *b.children[i])) return false;
  return true;
}

const std::vector<std::string>& symbols() {
  static const std::vector<std::string> s{"a", "as", "c", "cs", "E", "F", "K", "Kinv", "wm", "wp", "wz", "theta"};
  return s;
}

std::string ExprError::render(const std::string& source) const {
  std::string out = what();
  out += "\n  " + source + "\n  " + std::string(column_of(source, pos_), ' ') + "^";
  return out;
}

namespace {
std::string parse_message(std::size_t pos, const std::string& found, const std::vector<std::string>& expected) {
  std::ostringstream m;
  m << "syntax error at offset " << pos << ": expected ";
  if (expected.size() > 1) m << "one of ";
  for (std::size_t i = 0; i < expected.size(); ++i) m << (i ? ", " : "") << expected[i];
  m << "; found " << found;
  return m.str();
}
}  // namespace

ParseError::ParseError(std::size_t pos, std::string found, std::vector<std::string> expected)
    : ExprError(parse_message(pos, found, expected), pos), found_(std::move(found)), expected_(std::move(expected)) {}

NodePtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const Node& n) {
  switch (n.kind) {
    case NodeKind::number: return n.number.get_str();  // never negative: '-' is a sum sign
    case NodeKind::q_power: return q_string(n.half_power);
    case NodeKind::symbol: return n.name;
    case NodeKind::sum: {
      std::string s;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        const Node& c = *n.children[i];
        if (i == 0) s += n.negated[i] ? "-" : "";
        else s += n.negated[i] ? " - " : " + ";
        s += paren(c, c.kind == NodeKind::sum);
      }
      return s;
    }
    case NodeKind::product:
    case NodeKind::quotient:
    case NodeKind::wedge:
    case NodeKind::tensor: {
      const Node& l = *n.children[0];
      const Node& r = *n.children[1];
      // left-associative: only a binary right operand needs brackets
      return paren(l, l.kind == NodeKind::sum) + op_string(n.kind) + paren(r, !is_atom(r));
    }
    case NodeKind::power: {
      const Node& b = *n.children[0];
      return paren(b, !is_atom(b) || b.kind == NodeKind::number) + "^" + std::to_string(n.exponent);
    }
    case NodeKind::star: {
      const Node& b = *n.children[0];
      return paren(b, !is_atom(b) || b.kind == NodeKind::number) + kDaggerGlyph;
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// Form tensors

namespace {

std::size_t pow3(int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r *= 3;
  return r;
}

std::vector<int> decode_word(std::size_t index, int length) {
  std::vector<int> w(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(index % 3);
    index /= 3;
  }
  return w;
}

// ω_{word} y = (scaled y) ω_{word}
AlgebraElement move_left(const std::vector<int>& word, const AlgebraElement& y) {
  int w = 0;
  for (int a : word) w += basis_weight(1, a);
  AlgebraElement r;
  for (const auto& [mono, c] : y.terms()) r.add_term(mono, c * QRational::q(w * mono.charge()));
  return r;
}

}  // namespace

FormTensor::FormTensor(int k) : length(k), coeffs(pow3(k)) {}

FormTensor FormTensor::of(const KForm& f) {
  if (f.degree() != 1) throw std::invalid_argument("tensor factors must be 1-forms");
  FormTensor t(1);
  for (int a = 0; a < 3; ++a) t.coeffs[static_cast<std::size_t>(a)] = f.coeff(a);
  return t;
}

FormTensor& FormTensor::operator+=(const FormTensor& o) {
  if (o.length != length) throw std::invalid_argument("form tensors of different length");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

std::string FormTensor::to_string() const {
  static const char* letters[] = {"wm", "wp", "wz"};
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    std::string w;
    for (int a : decode_word(i, length)) w += (w.empty() ? "" : std::string(" ") + kTensorGlyph + " ") + letters[a];
    std::string cs = coeffs[i].to_string(), term;
    if (coeffs[i].terms().size() > 1) term = "(" + cs + ") * " + w;
    else if (cs == "1" || cs == "-1") term = (cs == "1" ? "" : "-") + w;
    else term = cs + " * " + w;
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

FormTensor tensor(const FormTensor& x, const FormTensor& y) {
  FormTensor r(x.length + y.length);
  std::size_t stride = y.coeffs.size();
  for (std::size_t u = 0; u < x.coeffs.size(); ++u) {
    if (x.coeffs[u].is_zero()) continue;
    auto word = decode_word(u, x.length);
    for (std::size_t v = 0; v < y.coeffs.size(); ++v) {
      if (y.coeffs[v].is_zero()) continue;
      r.coeffs[u * stride + v] += x.coeffs[u] * move_left(word, y.coeffs[v]);
    }
  }
  return r;
}

FormTensor operator*(const AlgebraElement& x, const FormTensor& t) {
  FormTensor r = t;
  for (auto& c : r.coeffs) c = x * c;
  return r;
}

FormTensor operator*(const QRational& s, const FormTensor& t) {
  FormTensor r = t;
  for (auto& c : r.coeffs) c *= s;
  return r;
}

FormTensor apply_word_matrix(const Matrix<QRational>& m, const FormTensor& t) {
  if (m.cols() != t.coeffs.size()) throw std::invalid_argument("word matrix does not match the tensor length");
  FormTensor r(t.length);
  for (std::size_t row = 0; row < m.rows(); ++row)
    for (std::size_t col = 0; col < m.cols(); ++col)
      if (!m(row, col).is_zero() && !t.coeffs[col].is_zero()) r.coeffs[row] += m(row, col) * t.coeffs[col];
  return r;
}

KForm to_wedge(const FormTensor& t, Braiding b) {
  if (t.length > 3) throw std::domain_error("there are no forms above degree 3");
  KForm f(t.length);
  for (std::size_t w = 0; w < t.coeffs.size(); ++w) {
    if (t.coeffs[w].is_zero()) continue;
    auto coords = project_word(decode_word(w, t.length), b);
    for (int i = 0; i < f.dim(); ++i)
      if (!coords[static_cast<std::size_t>(i)].is_zero()) f.coeff(i) += coords[static_cast<std::size_t>(i)] * t.coeffs[w];
  }
  return f;
}

// ---------------------------------------------------------------------------
// Values

std::string kind_name(const Value& v) {
  switch (v.index()) {
    case 0: return "scalar";
    case 1: return "algebra element";
    case 2: return "enveloping element";
    case 3: return std::to_string(std::get<KForm>(v).degree()) + "-form";
    case 4: return "tensor in A⊗A";
    case 5: return "tensor in U⊗U";
    default: return std::to_string(std::get<FormTensor>(v).length) + "-fold form tensor";
  }
}

std::string to_string(const Value& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

namespace {

[[noreturn]] void type_fail(std::size_t pos, const std::string& what) { throw TypeError("type error at offset " + std::to_string(pos) + ": " + what, pos); }

std::string pair_desc(const Value& l, const char* op, const Value& r) { return kind_name(l) + " " + op + " " + kind_name(r); }

Value scale(const QRational& s, const Value& v) {
  return std::visit(
      [&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, QRational>) return s * x;
        else if constexpr (std::is_same_v<T, TensorSquare>) {
          TensorSquare r;
          for (const auto& [k, c] : x.terms()) r.add_term(k.first, k.second, s * c);
          return r;
        } else if constexpr (std::is_same_v<T, UEATensor>) {
          UEATensor r;
          for (const auto& [k, c] : x.terms()) r.add_term(k.first, k.second, s * c);
          return r;
        } else return s * x;
      },
      v);
}

// Lifts scalars (and functions, for 0-forms) so both sides share a type.
bool unify(Value& l, Value& r) {
  if (l.index() == r.index()) {
    if (auto* f = std::get_if<KForm>(&l)) return f->degree() == std::get<KForm>(r).degree();
    if (auto* t = std::get_if<FormTensor>(&l)) return t->length == std::get<FormTensor>(r).length;
    return true;
  }
  auto lift = [](Value& from, const Value& to) {
    if (auto* s = std::get_if<QRational>(&from)) {
      if (std::holds_alternative<AlgebraElement>(to)) return from = AlgebraElement(*s), true;
      if (std::holds_alternative<UEAElement>(to)) return from = UEAElement(*s), true;
      if (auto* f = std::get_if<KForm>(&to); f && f->degree() == 0) return from = KForm::function(AlgebraElement(*s)), true;
    }
    if (auto* x = std::get_if<AlgebraElement>(&from))
      if (auto* f = std::get_if<KForm>(&to); f && f->degree() == 0) return from = KForm::function(*x), true;
    return false;
  };
  return lift(l, r) || lift(r, l);
}

Value add(Value l, Value r, bool negate, std::size_t pos) {
  if (!unify(l, r)) type_fail(pos, "cannot add " + kind_name(l) + " and " + kind_name(r));
  if (negate) r = scale(QRational(-1), r);
  return std::visit(
      [&](auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        T y = std::get<T>(r);
        x += y;
        return x;
      },
      l);
}

Value multiply(const Value& l, const Value& r, std::size_t pos) {
  if (auto* s = std::get_if<QRational>(&l)) return scale(*s, r);
  if (auto* s = std::get_if<QRational>(&r)) return scale(*s, l);
  if (auto* x = std::get_if<AlgebraElement>(&l)) {
    if (auto* y = std::get_if<AlgebraElement>(&r)) return *x * *y;
    if (auto* f = std::get_if<KForm>(&r)) return *x * *f;
    if (auto* t = std::get_if<FormTensor>(&r)) return *x * *t;
  }
  if (auto* x = std::get_if<UEAElement>(&l))
    if (auto* y = std::get_if<UEAElement>(&r)) return *x * *y;
  if (auto* x = std::get_if<TensorSquare>(&l))
    if (auto* y = std::get_if<TensorSquare>(&r)) return *x * *y;
  if (auto* x = std::get_if<UEATensor>(&l))
    if (auto* y = std::get_if<UEATensor>(&r)) return *x * *y;
  std::string hint;
  bool lform = std::holds_alternative<KForm>(l) || std::holds_alternative<FormTensor>(l);
  bool rform = std::holds_alternative<KForm>(r) || std::holds_alternative<FormTensor>(r);
  if (lform && std::holds_alternative<AlgebraElement>(r)) hint = " (coefficients go on the left of a form)";
  else if (lform && rform) hint = " (use ∧ or ⊗ between forms)";
  else if (std::holds_alternative<UEAElement>(l) != std::holds_alternative<UEAElement>(r)) hint = " (use the act command for the action)";
  type_fail(pos, "cannot multiply " + pair_desc(l, "*", r) + hint);
}

KForm wedge_operand(const Value& v, const Value& l, const Value& r, std::size_t pos) {
  if (auto* s = std::get_if<QRational>(&v)) return KForm::function(AlgebraElement(*s));
  if (auto* x = std::get_if<AlgebraElement>(&v)) return KForm::function(*x);
  if (auto* f = std::get_if<KForm>(&v)) return *f;
  type_fail(pos, "cannot wedge " + pair_desc(l, "∧", r) + " (∧ takes forms or functions)");
}

Value tensor_values(const Value& l, const Value& r, std::size_t pos) {
  auto form_side = [](const Value& v) -> std::optional<FormTensor> {
    if (auto* f = std::get_if<KForm>(&v); f && f->degree() == 1) return FormTensor::of(*f);
    if (auto* t = std::get_if<FormTensor>(&v)) return *t;
    return std::nullopt;
  };
  auto lf = form_side(l), rf = form_side(r);
  if (lf && rf) return tensor(*lf, *rf);
  auto alg = [](const Value& v) -> std::optional<AlgebraElement> {
    if (auto* s = std::get_if<QRational>(&v)) return AlgebraElement(*s);
    if (auto* x = std::get_if<AlgebraElement>(&v)) return *x;
    return std::nullopt;
  };
  auto uea = [](const Value& v) -> std::optional<UEAElement> {
    if (auto* s = std::get_if<QRational>(&v)) return UEAElement(*s);
    if (auto* x = std::get_if<UEAElement>(&v)) return *x;
    return std::nullopt;
  };
  bool any_uea = std::holds_alternative<UEAElement>(l) || std::holds_alternative<UEAElement>(r);
  if (!any_uea)
    if (auto x = alg(l), y = alg(r); x && y) return TensorSquare::pure(*x, *y);
  if (auto x = uea(l), y = uea(r); x && y) return UEATensor::pure(*x, *y);
  type_fail(pos, "cannot tensor " + pair_desc(l, "⊗", r) + " (⊗ pairs algebra elements, enveloping elements, or 1-forms)");
}

Value star_value(const Value& v, Braiding b, std::size_t pos) {
  if (std::holds_alternative<QRational>(v)) return v;  // q is real and coefficients are rational
  if (auto* x = std::get_if<AlgebraElement>(&v)) return star(*x);
  if (auto* x = std::get_if<UEAElement>(&v)) return uea_star(*x);
  if (auto* f = std::get_if<KForm>(&v)) return star(*f, b);
  if (auto* t = std::get_if<TensorSquare>(&v)) {
    TensorSquare r;
    for (const auto& [k, c] : t->terms()) r += TensorSquare::pure(c * star(AlgebraElement(k.first)), star(AlgebraElement(k.second)));
    return r;
  }
  if (auto* t = std::get_if<UEATensor>(&v)) {
    UEATensor r;
    for (const auto& [k, c] : t->terms()) r += UEATensor::pure(c * uea_star(UEAElement(k.first)), uea_star(UEAElement(k.second)));
    return r;
  }
  type_fail(pos, "star is not defined on a " + kind_name(v));
}

Value power_value(const Value& v, int e, Braiding b, std::size_t pos) {
  if (std::holds_alternative<KForm>(v) || std::holds_alternative<FormTensor>(v)) {
    if (e == 0) return KForm::function(AlgebraElement(1));
    Value r = v;
    for (int i = 1; i < e; ++i)
      r = std::holds_alternative<KForm>(v) ? Value(wedge(std::get<KForm>(r), std::get<KForm>(v), b)) : tensor_values(r, v, pos);
    return r;
  }
  if (e == 0) {
    if (std::holds_alternative<UEAElement>(v)) return UEAElement(QRational(1));
    if (std::holds_alternative<AlgebraElement>(v)) return AlgebraElement(1);
    if (std::holds_alternative<QRational>(v)) return QRational(1);
    type_fail(pos, "zeroth power of a " + kind_name(v));
  }
  Value r = v;
  for (int i = 1; i < e; ++i) r = multiply(r, v, pos);
  return r;
}

Value eval(const Node& n, Braiding b) {
  switch (n.kind) {
    case NodeKind::number: return QRational(n.number);
    case NodeKind::q_power: return QRational::sqrt_q(n.half_power);
    case NodeKind::symbol: {
      const std::string& s = n.name;
      if (s == "a") return AlgebraElement::gen(Gen::a);
      if (s == "as") return AlgebraElement::gen(Gen::a_star);
      if (s == "c") return AlgebraElement::gen(Gen::c);
      if (s == "cs") return AlgebraElement::gen(Gen::c_star);
      if (s == "E") return UEAElement::gen(UGen::E);
      if (s == "F") return UEAElement::gen(UGen::F);
      if (s == "K") return UEAElement::gen(UGen::K);
      if (s == "Kinv") return UEAElement::gen(UGen::Kinv);
      if (s == "wm") return KForm::basis(1, kMinus);
      if (s == "wp") return KForm::basis(1, kPlus);
      if (s == "wz") return KForm::basis(1, kZ);
      return KForm::basis(3, 0);
    }
    case NodeKind::sum: {
      Value acc = eval(*n.children[0], b);
      if (n.negated[0]) acc = scale(QRational(-1), acc);
      for (std::size_t i = 1; i < n.children.size(); ++i) acc = add(acc, eval(*n.children[i], b), n.negated[i], n.children[i]->pos);
      return acc;
    }
    case NodeKind::product: return multiply(eval(*n.children[0], b), eval(*n.children[1], b), n.pos);
    case NodeKind::quotient: {
      Value l = eval(*n.children[0], b), r = eval(*n.children[1], b);
      auto* s = std::get_if<QRational>(&r);
      if (!s) type_fail(n.pos, "cannot divide by a " + kind_name(r) + " (only by scalars)");
      if (s->is_zero()) throw ExprError("division by zero at offset " + std::to_string(n.pos), n.pos);
      return scale(s->inverse(), l);
    }
    case NodeKind::wedge: {
      Value l = eval(*n.children[0], b), r = eval(*n.children[1], b);
      KForm f = wedge_operand(l, l, r, n.pos), g = wedge_operand(r, l, r, n.pos);
      return wedge(f, g, b);
    }
    case NodeKind::tensor: return tensor_values(eval(*n.children[0], b), eval(*n.children[1], b), n.pos);
    case NodeKind::power: return power_value(eval(*n.children[0], b), n.exponent, b, n.pos);
    case NodeKind::star: return star_value(eval(*n.children[0], b), b, n.pos);
  }
  throw std::logic_error("unknown node kind");
}

}  // namespace

Value evaluate(const Node& n, Braiding b) { return eval(n, b); }
Value evaluate(const std::string& text, Braiding b) { return eval(*parse(text), b); }

QRational as_scalar(const Value& v) {
  if (auto* s = std::get_if<QRational>(&v)) return *s;
  if (auto* x = std::get_if<AlgebraElement>(&v); x && (x->is_zero() || (x->terms().size() == 1 && x->terms().begin()->first == Monomial::one())))
    return x->is_zero() ? QRational() : x->terms().begin()->second;
  throw TypeError("expected a scalar, got a " + kind_name(v), 0);
}

AlgebraElement as_algebra(const Value& v) {
  if (auto* s = std::get_if<QRational>(&v)) return AlgebraElement(*s);
  if (auto* x = std::get_if<AlgebraElement>(&v)) return *x;
  if (auto* f = std::get_if<KForm>(&v); f && f->degree() == 0) return f->coeff(0);
  throw TypeError("expected an algebra element, got a " + kind_name(v), 0);
}

UEAElement as_uea(const Value& v) {
  if (auto* s = std::get_if<QRational>(&v)) return UEAElement(*s);
  if (auto* x = std::get_if<UEAElement>(&v)) return *x;
  throw TypeError("expected an enveloping element, got a " + kind_name(v), 0);
}

KForm as_form(const Value& v) {
  if (auto* f = std::get_if<KForm>(&v)) return *f;
  if (auto* t = std::get_if<FormTensor>(&v); t && t->length == 1) return to_wedge(*t);
  if (std::holds_alternative<QRational>(v) || std::holds_alternative<AlgebraElement>(v)) return KForm::function(as_algebra(v));
  throw TypeError("expected a form, got a " + kind_name(v), 0);
}

}  // namespace qhodge::expr
