#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qhodge/expr.hpp"

using namespace qhodge;
using namespace qhodge::expr;

namespace {

const AlgebraElement A = AlgebraElement::gen(Gen::a);
const AlgebraElement AS = AlgebraElement::gen(Gen::a_star);
const AlgebraElement C = AlgebraElement::gen(Gen::c);
const AlgebraElement CS = AlgebraElement::gen(Gen::c_star);

AlgebraElement alg(const std::string& s) { return std::get<AlgebraElement>(evaluate(s)); }
KForm form(const std::string& s) { return std::get<KForm>(evaluate(s)); }

// Random well-formed source text over a small grammar slice.
std::string random_source(std::mt19937& rng, int depth) {
  static const std::vector<std::string> leaves{"a", "as", "c", "cs", "q", "q^-2", "q^(3/2)", "2", "3/4", "wm", "wz", "E", "K"};
  static const std::vector<std::string> ops{" + ", " - ", " * ", " ^ ", " ∧ ", " ⊗ ", " wedge ", " tensor ", " / "};
  std::uniform_int_distribution<int> pick(0, 9);
  if (depth == 0 || pick(rng) < 3) {
    std::string s = leaves[static_cast<std::size_t>(pick(rng)) % leaves.size()];
    if (pick(rng) == 0) s += "†";
    if (pick(rng) == 1) s += "^2";
    return s;
  }
  std::string l = random_source(rng, depth - 1), r = random_source(rng, depth - 1);
  std::string s = l + ops[static_cast<std::size_t>(pick(rng)) % ops.size()] + r;
  if (pick(rng) < 4) s = "(" + s + ")";
  if (pick(rng) == 0) s = "-" + s;
  return s;
}

}  // namespace

TEST_CASE("generators and relations evaluate") {
  CHECK(alg("as*a + cs*c") == AlgebraElement(1));
  CHECK(alg("c*a") == QRational::q(-1) * A * C);
  CHECK(alg("c*a").to_string() == "q^-1 * a*c");
  CHECK(alg("a†") == AS);
  CHECK(alg("(a*c)†") == QRational::q(1) * AS * CS);
  CHECK(alg("a^3") == A * A * A);
  CHECK(alg("3/2 * q^(1/2) * c") == QRational(Rational(3, 2)) * QRational::sqrt_q(1) * C);
  CHECK(alg("-c + 2*c") == C);
  CHECK(alg("c / (1 + q^2)") == (QRational(1) + QRational::q(2)).inverse() * C);
}

TEST_CASE("forms") {
  CHECK(form("wm ∧ wm").is_zero());
  CHECK(form("wm wedge wm").is_zero());
  CHECK(form("wm ^ wm").is_zero());
  CHECK(form("q^-2 * a * wz") == KForm::basis(1, kZ, QRational::q(-2) * A));
  CHECK(form("wm ∧ wp ∧ wz") == KForm::basis(3, 0));
  CHECK(form("theta") == KForm::basis(3, 0));
  CHECK(form("wp ∧ wm") == KForm::basis(2, 0, -QRational::q(2)));
  CHECK(form("wm†") == -KForm::basis(1, kPlus));
  CHECK(form("a ∧ wz") == KForm::basis(1, kZ, A));
  CHECK(form("theta ∧ wz").dim() == 0);
  // left-associative: (wz ⊗ a) is rejected before * applies
  CHECK_THROWS_AS(evaluate("wz ⊗ a * wz"), TypeError);
  // a^2 is a power, a ^ wz a wedge
  CHECK(form("a^2 ^ wz") == KForm::basis(1, kZ, A * A));
}

TEST_CASE("tensors") {
  auto t = std::get<FormTensor>(evaluate("wm ⊗ wp"));
  CHECK(t.length == 2);
  CHECK(t.coeffs[word_index(std::vector<int>{kMinus, kPlus})] == AlgebraElement(1));
  // ω_z a = q^{-2} a ω_z moves the middle coefficient left
  auto u = std::get<FormTensor>(evaluate("wz ⊗ (a * wz)"));
  CHECK(u.coeffs[word_index(std::vector<int>{kZ, kZ})] == QRational::q(-2) * A);
  CHECK(std::get<TensorSquare>(evaluate("a tensor c")) == TensorSquare::pure(A, C));
  CHECK(std::get<UEATensor>(evaluate("E ⊗ K")) == UEATensor::pure(UEAElement::gen(UGen::E), UEAElement::gen(UGen::K)));
  auto w = std::get<FormTensor>(evaluate("wm ⊗ wp ⊗ wz"));
  CHECK(to_wedge(w) == KForm::basis(3, 0));
}

TEST_CASE("enveloping elements") {
  auto h = std::get<UEAElement>(evaluate("E*F - F*E"));
  QRational inv = (QRational::q(1) - QRational::q(-1)).inverse();
  CHECK(h == inv * (UEAElement(UEAMonomial{0, 0, 2}) - UEAElement(UEAMonomial{0, 0, -2})));
  CHECK(std::get<UEAElement>(evaluate("E†")) == UEAElement::gen(UGen::F));
  CHECK(std::get<UEAElement>(evaluate("K * Kinv")) == UEAElement(QRational(1)));
}

TEST_CASE("syntax errors carry position and expected set") {
  try {
    parse("a + * c");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.pos() == 4);
    CHECK(e.found() == "'*'");
    CHECK(std::find(e.expected().begin(), e.expected().end(), "number") != e.expected().end());
    CHECK(e.render("a + * c").find("\n      ^") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("(a + c"), ParseError);
  CHECK_THROWS_AS(parse("a c"), ParseError);
  CHECK_THROWS_AS(parse("x"), ParseError);
  CHECK_THROWS_AS(parse("1/0"), ParseError);
  CHECK_THROWS_AS(parse("a $"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("type errors") {
  CHECK_THROWS_AS(evaluate("wm ∧ E"), TypeError);
  CHECK_THROWS_AS(evaluate("wm * a"), TypeError);
  CHECK_THROWS_AS(evaluate("wm * wp"), TypeError);
  CHECK_THROWS_AS(evaluate("E * a"), TypeError);
  CHECK_THROWS_AS(evaluate("wm + wm ∧ wp"), TypeError);
  CHECK_THROWS_AS(evaluate("a / c"), TypeError);
  CHECK_THROWS_AS(evaluate("a ⊗ wm"), TypeError);
  CHECK_THROWS_AS(evaluate("a / (q - q)"), ExprError);
  try {
    evaluate("wm ∧ E");
  } catch (const TypeError& e) {
    CHECK(e.pos() == 3);
  }
}

TEST_CASE("canonical printer round trips") {
  std::mt19937 rng(99);
  int printed = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::string src = random_source(rng, 4);
    NodePtr n;
    try {
      n = parse(src);
    } catch (const ParseError&) {
      continue;  // e.g. "q ^ 2" read as an exponent leaves a dangling operand
    }
    std::string p = print(*n);
    INFO(src << "  ->  " << p);
    auto again = parse(p);
    REQUIRE(*again == *n);
    CHECK(print(*again) == p);
    ++printed;
  }
  CHECK(printed > 300);
}

TEST_CASE("value printers reparse to the same value") {
  std::vector<std::string> samples{"c*a", "as*a + cs*c - 2 + c", "(a + c)^3", "q^(1/2) * c / (1 + q^2)", "wm ∧ wp + c * wp ∧ wz",
                                   "a * wz + c^2 * wm", "3 * theta", "E*F*K + Kinv^2", "a ⊗ c + c ⊗ a", "E ⊗ F",
                                   "a * wm ⊗ (c * wz)", "2 * c", "-as*c"};
  for (const auto& s : samples) {
    Value v = evaluate(s);
    std::string p = to_string(v);
    INFO(s << "  ->  " << p);
    CHECK(evaluate(p) == v);
    CHECK(to_string(evaluate(p)) == p);
  }
}

TEST_CASE("random forms and tensors reparse from their printed text") {
  std::mt19937 rng(7);
  const std::vector<std::string> gens{"a", "as", "c", "cs"};
  const std::vector<std::string> ws{"wm", "wp", "wz"};
  std::uniform_int_distribution<int> g(0, 3), w(0, 2), p(-3, 3), n(1, 3);
  auto coeff = [&] {
    std::string s = "q^" + std::to_string(p(rng));
    for (int i = 0, len = n(rng); i < len; ++i) s += " * " + gens[static_cast<std::size_t>(g(rng))];
    return "(" + s + " - " + std::to_string(n(rng)) + " * " + gens[static_cast<std::size_t>(g(rng))] + ")";
  };
  for (int trial = 0; trial < 40; ++trial) {
    std::string f = coeff() + " * " + ws[static_cast<std::size_t>(w(rng))] + " - q * " + gens[static_cast<std::size_t>(g(rng))] + " * " +
                    ws[static_cast<std::size_t>(w(rng))];
    std::string h = "(" + f + ") ∧ " + ws[static_cast<std::size_t>(w(rng))];
    std::string t = "(" + f + ") ⊗ (" + coeff() + " * " + ws[static_cast<std::size_t>(w(rng))] + ")";
    for (const auto& s : {f, h, t}) {
      Value v = evaluate(s);
      if (to_string(v) == "0") continue;  // zero prints untyped
      INFO(s << "  ->  " << to_string(v));
      CHECK(evaluate(to_string(v)) == v);
    }
  }
}
