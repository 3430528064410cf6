#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qhodge/calculus.hpp"
#include "qhodge/enveloping.hpp"
#include "qhodge/json_io.hpp"

using namespace qhodge;

namespace {

const AlgebraElement A = AlgebraElement::gen(Gen::a);
const AlgebraElement AS = AlgebraElement::gen(Gen::a_star);
const AlgebraElement C = AlgebraElement::gen(Gen::c);
const AlgebraElement CS = AlgebraElement::gen(Gen::c_star);

QRational lambda2_expected() { return QRational(1) + QRational::q(2); }
QRational lambda3_expected() { return QRational(1) + QRational(2) * QRational::q(2) + QRational(2) * QRational::q(4) + QRational::q(6); }

KForm w(int a) { return KForm::basis(1, a); }

Matrix<Rational> at_q1(const Matrix<QRational>& m) {
  return m.transform([](const QRational& x) { return x.evaluate_at(1); });
}

Monomial random_monomial(std::mt19937& rng, int max_degree) {
  static const auto all = monomials_up_to(3);
  std::vector<Monomial> pool;
  for (const auto& m : all)
    if (m.degree() <= max_degree) pool.push_back(m);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

KForm random_form(std::mt19937& rng, int k) {
  KForm f(k);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int i = 0; i < f.dim(); ++i)
    if (coin(rng)) f.coeff(i) = AlgebraElement(random_monomial(rng, 2), QRational::q(coin(rng) - 1));
  return f;
}

}  // namespace

TEST_CASE("braiding table") {
  auto s = sigma_matrix();
  auto at = [&](std::vector<int> out, std::vector<int> in) { return s(word_index(out), word_index(in)); };
  for (int a = 0; a < 3; ++a) CHECK(at({a, a}, {a, a}) == QRational(1));
  CHECK(at({kMinus, kPlus}, {kMinus, kPlus}) == QRational(1) - QRational::q(2));
  CHECK(at({kPlus, kMinus}, {kMinus, kPlus}) == QRational::q(-2));
  CHECK(at({kMinus, kPlus}, {kPlus, kMinus}) == QRational::q(4));
  CHECK(at({kPlus, kMinus}, {kPlus, kMinus}).is_zero());
  CHECK(at({kZ, kMinus}, {kMinus, kZ}) == QRational::q(-4));
  CHECK(at({kMinus, kZ}, {kZ, kMinus}) == QRational::q(6));
  CHECK(at({kPlus, kZ}, {kZ, kPlus}) == QRational::q(-4));
  CHECK(at({kZ, kPlus}, {kPlus, kZ}) == QRational::q(6));
  auto s1 = sigma1(), s2 = sigma2();
  CHECK(s1 * s2 * s1 == s2 * s1 * s2);
  CHECK(at_q1(s) == at_q1(sigma_matrix(Braiding::flip)));
  CHECK(s * sigma_matrix(Braiding::sigma_inverse) == Matrix<QRational>::identity(9));
  CHECK(!(s * s == Matrix<QRational>::identity(9)));
  auto t1 = sigma1(Braiding::sigma_inverse), t2 = sigma2(Braiding::sigma_inverse);
  CHECK(t1 * t2 * t1 == t2 * t1 * t2);
}

TEST_CASE("antisymmetriser spectra") {
  for (Braiding b : {Braiding::sigma, Braiding::sigma_inverse}) {
    auto A2 = antisymmetrizer(2, b), A3 = antisymmetrizer(3, b);
    CHECK(rank(A2) == 3);
    CHECK(rank(A3) == 1);
    const auto& ex = exterior(b);
    CHECK(A2 * A2 == ex.lambda2 * A2);
    CHECK(A3 * A3 == ex.lambda3 * A3);
    CHECK(nullspace(A3).cols() == 26);
  }
  CHECK(exterior().lambda2 == lambda2_expected());
  CHECK(exterior().lambda3 == lambda3_expected());
  CHECK(exterior(Braiding::sigma_inverse).lambda2 == lambda2_expected() * QRational::q(-2));
  CHECK(exterior(Braiding::sigma_inverse).lambda3 == lambda3_expected() * QRational::q(-6));
  CHECK(exterior().lambda2.evaluate_at(1) == 2);
  CHECK(exterior().lambda3.evaluate_at(1) == 6);
  CHECK(exterior(Braiding::flip).lambda2 == QRational(2));
  CHECK(exterior(Braiding::flip).lambda3 == QRational(6));
  auto A2 = antisymmetrizer(2);
  CHECK(A2(word_index(std::vector<int>{kZ, kZ}), word_index(std::vector<int>{kZ, kZ})).is_zero());
}

TEST_CASE("wedge relations from the kernel") {
  for (Braiding b : {Braiding::sigma, Braiding::sigma_inverse}) {
    auto rep = wedge_relations(b);
    CHECK(rep.kernel_dim == 6);
    CHECK(rep.squares_in_kernel);
    CHECK(rep.first_relation_in_kernel);
    CHECK(rep.upper_z_relation_in_kernel);
    CHECK_FALSE(rep.printed_lower_z_in_kernel);
    CHECK(rep.corrected_lower_z_in_kernel);
    CHECK(rep.relations_span_kernel);
  }
  // the wedge data agree for both braidings
  CHECK(exterior(Braiding::sigma).P2 == exterior(Braiding::sigma_inverse).P2);
  CHECK(exterior(Braiding::sigma).P3 == exterior(Braiding::sigma_inverse).P3);
}

TEST_CASE("wedge products") {
  CHECK(wedge(w(kPlus), w(kMinus)) == KForm::basis(2, 0, -QRational::q(2)));
  for (int a = 0; a < 3; ++a) CHECK(wedge(w(a), w(a)).is_zero());
  KForm theta = KForm::basis(3, 0);
  CHECK(wedge(w(kZ), wedge(w(kMinus), w(kPlus))) == theta);
  CHECK(wedge(wedge(w(kMinus), w(kPlus)), w(kZ)) == theta);
  CHECK(wedge(w(kMinus), KForm::basis(2, 2)) == theta);
  CHECK(wedge(theta, w(kZ)).dim() == 0);
  std::mt19937 rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    auto f = random_form(rng, 1), g = random_form(rng, 1), h = random_form(rng, 1);
    CHECK(wedge(wedge(f, g), h) == wedge(f, wedge(g, h)));
    AlgebraElement x(random_monomial(rng, 2));
    CHECK(wedge(f * x, g) == wedge(f, x * g));
    CHECK(wedge(f, g) * x == wedge(f, g * x));
  }
}

TEST_CASE("bimodule relations") {
  CHECK(commute_right(1, kZ, A) == KForm::basis(1, kZ, QRational::q(-2) * A));
  CHECK(commute_right(1, kPlus, CS) == KForm::basis(1, kPlus, QRational::q(1) * CS));
  for (const Monomial& m : monomials_up_to(2)) {
    AlgebraElement x(m);
    int n = m.charge();
    // x θ = q^{-4n} θ x
    CHECK(QRational::q(-4 * n) * commute_right(3, 0, x) == KForm::basis(3, 0, x));
  }
}

TEST_CASE("differential and the invariant forms") {
  CHECK(differential0(AlgebraElement(1)).is_zero());
  KForm da = differential0(A);
  CHECK(da == KForm::basis(1, kZ, A) + KForm::basis(1, kPlus, -QRational::q(1) * CS));
  auto d = [](const AlgebraElement& x) { return differential0(x); };
  CHECK(AS * d(A) + CS * d(C) == w(kZ));
  CHECK(CS * d(AS) - QRational::q(1) * (AS * d(CS)) == w(kMinus));
  CHECK(A * d(C) - QRational::q(1) * (C * d(A)) == w(kPlus));
}

TEST_CASE("Leibniz rule") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    AlgebraElement x(random_monomial(rng, 3)), y(random_monomial(rng, 3));
    REQUIRE(differential0(x * y) == differential0(x) * y + x * differential0(y));
  }
}

TEST_CASE("Maurer-Cartan and d squared") {
  const auto& mc = maurer_cartan();
  CHECK(mc.rank == 9);
  for (const Monomial& m : monomials_up_to(2)) {
    AlgebraElement x(m);
    REQUIRE(differential(differential0(x)).is_zero());
  }
  // d is well defined on Γ^∧2: the Leibniz expression on any word factors through the relations
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      KForm lhs = wedge(differential(w(x)), w(y)) - wedge(w(x), differential(w(y)));
      auto coords = project_word(std::vector<int>{x, y});
      KForm rhs(3);
      for (int b = 0; b < 3; ++b) rhs += coords[static_cast<std::size_t>(b)] * differential(KForm::basis(2, b));
      CHECK(lhs == rhs);
    }
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_form(rng, 1);
    CHECK(differential(differential(f)).is_zero());
  }
  KForm cwm = KForm::basis(1, kMinus, C);
  CHECK(differential(cwm) == wedge(differential0(C), w(kMinus)) + C * differential(w(kMinus)));
  CHECK(differential(KForm::basis(3, 0, C)).dim() == 0);
}

TEST_CASE("graded Leibniz on 1-forms") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_form(rng, 1), g = random_form(rng, 1);
    CHECK(differential(wedge(f, g)) == wedge(differential(f), g) - wedge(f, differential(g)));
  }
}

TEST_CASE("star on forms") {
  CHECK(star(w(kMinus)) == -w(kPlus));
  CHECK(star(w(kZ)) == -w(kZ));
  CHECK(star(KForm::basis(3, 0)) == KForm::basis(3, 0));
  std::mt19937 rng(41);
  for (int k = 0; k <= 3; ++k)
    for (int trial = 0; trial < 8; ++trial) {
      auto f = random_form(rng, k);
      CHECK(star(star(f)) == f);
    }
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_form(rng, 1), g = random_form(rng, 1);
    CHECK(star(wedge(f, g)) == -wedge(star(g), star(f)));
  }
  // *-calculus: d(x*) = (dx)*
  for (const Monomial& m : monomials_up_to(2)) {
    AlgebraElement x(m);
    CHECK(differential0(star(x)) == star(differential0(x)));
  }
}

TEST_CASE("form grading makes d charge-preserving") {
  for (const Monomial& m : monomials_up_to(3)) {
    KForm dx = differential0(AlgebraElement(m));
    for (int a = 0; a < 3; ++a) {
      if (dx.coeff(a).is_zero()) continue;
      CHECK(homogeneous_charge(dx.coeff(a)) + basis_charge(1, a) == m.charge());
    }
  }
}

TEST_CASE("form and matrix JSON round trip") {
  std::mt19937 rng(53);
  for (int k = 0; k <= 3; ++k) {
    auto f = random_form(rng, k);
    CHECK(kform_from_json(to_json(f)) == f);
  }
  auto j = to_json(KForm::basis(2, 1, C));
  CHECK(j["coeffs"].contains("wm^wz"));
  CHECK_THROWS(kform_from_json(nlohmann::json::parse(R"({"degree": 1, "coeffs": {"wm^wp": []}})")));
  auto s = sigma_matrix();
  CHECK(qmatrix_from_json(to_json(s)) == s);
}
