#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qhodge/enveloping.hpp"
#include "qhodge/json_io.hpp"

using namespace qhodge;

namespace {

const UEAElement E = UEAElement::gen(UGen::E);
const UEAElement F = UEAElement::gen(UGen::F);
const UEAElement K = UEAElement::gen(UGen::K);
const UEAElement Kinv = UEAElement::gen(UGen::Kinv);

const AlgebraElement A = AlgebraElement::gen(Gen::a);
const AlgebraElement AS = AlgebraElement::gen(Gen::a_star);
const AlgebraElement C = AlgebraElement::gen(Gen::c);
const AlgebraElement CS = AlgebraElement::gen(Gen::c_star);

std::vector<UGen> random_uword(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), g(0, 3);
  std::vector<UGen> w(static_cast<std::size_t>(len(rng)));
  for (auto& x : w) x = static_cast<UGen>(g(rng));
  return w;
}

Monomial random_monomial(std::mt19937& rng, int max_degree) {
  auto all = monomials_up_to(max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

UEAMonomial random_umonomial(std::mt19937& rng) {
  std::uniform_int_distribution<int> small(0, 2), kk(-3, 3);
  return {small(rng), small(rng), kk(rng)};
}

}  // namespace

TEST_CASE("U_q(su(2)) relations") {
  QRational inv = (QRational::q(1) - QRational::q(-1)).inverse();
  UEAElement K2 = UEAElement(UEAMonomial{0, 0, 2}), Km2 = UEAElement(UEAMonomial{0, 0, -2});
  CHECK(E * F == F * E + inv * (K2 - Km2));
  CHECK(K * E == QRational::q(1) * E * K);
  CHECK(K * Kinv == UEAElement(QRational(1)));
  CHECK(uea_normal_form(std::vector<UGen>{UGen::E, UGen::F}) == E * F);
}

TEST_CASE("UEA rewriting is confluent and matches the fast product") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    auto w = random_uword(rng, 7);
    auto l = uea_normal_form(w, UEAStrategy::leftmost);
    REQUIRE(l == uea_normal_form(w, UEAStrategy::rightmost));
    UEAElement prod(QRational(1));
    for (UGen g : w) prod = prod * UEAElement::gen(g);
    REQUIRE(prod == l);
  }
}

TEST_CASE("UEA Hopf structure") {
  CHECK(uea_coproduct(K) == UEATensor::pure(K, K));
  UEATensor dE = UEATensor::pure(E, K);
  dE += UEATensor::pure(Kinv, E);
  CHECK(uea_coproduct(E) == dE);
  UEATensor dF = UEATensor::pure(F, K);
  dF += UEATensor::pure(Kinv, F);
  CHECK(uea_coproduct(F) == dF);
  std::mt19937 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = uea_normal_form(random_uword(rng, 4)), y = uea_normal_form(random_uword(rng, 3));
    CHECK(uea_coproduct(x * y) == uea_coproduct(x) * uea_coproduct(y));
    CHECK(uea_star(uea_star(x)) == x);
    CHECK(uea_star(x * y) == uea_star(y) * uea_star(x));
    // antipode law
    UEAElement s;
    for (const auto& [key, c] : uea_coproduct(x).terms()) s += c * uea_antipode(UEAElement(key.first)) * UEAElement(key.second);
    CHECK(s == UEAElement(uea_counit(x)));
  }
}

TEST_CASE("star on U_q(su(2))") {
  CHECK(uea_star(E) == F);
  CHECK(uea_star(K) == K);
  // K self-adjoint and K F = q^{-1} F K: (q^{1/2} E K)* = q^{1/2} K F = q^{-1/2} F K
  CHECK(uea_star(QRational::sqrt_q(1) * E * K) == QRational::sqrt_q(-1) * F * K);
  CHECK(uea_star(tangent_basis().X_plus) == tangent_basis().X_minus);
}

TEST_CASE("pairing generator table") {
  CHECK(pairing(K, A) == QRational::sqrt_q(-1));
  CHECK(pairing(Kinv, A) == QRational::sqrt_q(1));
  CHECK(pairing(K, AS) == QRational::sqrt_q(1));
  CHECK(pairing(E, C) == QRational(1));
  CHECK(pairing(F, CS) == -QRational::q(-1));
  CHECK(pairing(K, A * A) == QRational::q(-1));
  CHECK(pairing(E, A).is_zero());
  CHECK(pairing(F, C).is_zero());
  CHECK(pairing(E, CS).is_zero());
  CHECK(pairing(K, C).is_zero());
  CHECK(pairing(UEAElement(QRational(1)), A * AS) == counit(A * AS));
  CHECK(pairing(E, AlgebraElement(1)).is_zero());
}

TEST_CASE("two pairing routes agree") {
  for (const Monomial& x : monomials_up_to(4))
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j)
        for (int l = -2; l <= 2; ++l) {
          UEAMonomial h{i, j, l};
          REQUIRE(pairing(h, x) == pairing_by_coproduct(h, x));
        }
}

TEST_CASE("pairing respects products on both sides") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    Monomial x = random_monomial(rng, 3), y = random_monomial(rng, 3);
    UEAMonomial h = random_umonomial(rng), g = random_umonomial(rng);
    QRational lhs = pairing(UEAElement(h), multiply_monomials(x, y));
    QRational rhs;
    for (const auto& [key, c] : uea_coproduct(h).terms()) rhs += c * pairing(key.first, x) * pairing(key.second, y);
    REQUIRE(lhs == rhs);
    QRational lhs2 = pairing(UEAElement(g) * UEAElement(h), AlgebraElement(x));
    QRational rhs2;
    for (const auto& [key, c] : coproduct(x).terms()) rhs2 += c * pairing(g, key.first) * pairing(h, key.second);
    REQUIRE(lhs2 == rhs2);
  }
}

TEST_CASE("pairing is *-compatible") {
  // ⟨h*, x⟩ = conj ⟨h, S(x)*⟩ with real coefficients
  std::mt19937 rng(8);
  std::vector<UEAElement> hs{E, F, K, Kinv, E * F, F * K, E * E * Kinv};
  for (const auto& h : hs)
    for (const Monomial& x : monomials_up_to(3)) {
      AlgebraElement xe(x);
      CHECK(pairing(uea_star(h), xe) == pairing(h, star(antipode(xe))));
    }
}

TEST_CASE("actions") {
  const auto& X = tangent_basis();
  CHECK(act_left(E, C) == AS);
  CHECK(act_left(X.X_z, A) == A);
  CHECK(act_left(E, AlgebraElement(1)).is_zero());
  CHECK(act_left(K, AlgebraElement(1)) == AlgebraElement(1));
  CHECK(act_right(AlgebraElement(1), F).is_zero());
  CHECK(act_right(A, K) == QRational::sqrt_q(-1) * A);
  CHECK(act_right(C, E) == A);
  std::mt19937 rng(6);
  std::vector<UEAElement> hs{E, F, K, X.X_minus, X.X_plus, X.X_z, E * F};
  for (int trial = 0; trial < 40; ++trial) {
    AlgebraElement x(random_monomial(rng, 3)), y(random_monomial(rng, 2));
    const auto& h = hs[static_cast<std::size_t>(trial) % hs.size()];
    const auto& g = hs[static_cast<std::size_t>(trial * 3 + 1) % hs.size()];
    CHECK(act_right(act_left(h, x), g) == act_left(h, act_right(x, g)));
    CHECK(act_left(g, act_left(h, x)) == act_left(g * h, x));
    AlgebraElement twisted;
    for (const auto& [key, c] : uea_coproduct(h).terms())
      twisted += c * act_left(UEAElement(key.first), x) * act_left(UEAElement(key.second), y);
    CHECK(act_left(h, x * y) == twisted);
  }
}

TEST_CASE("tangent vectors shift charge") {
  const auto& X = tangent_basis();
  for (const Monomial& m : monomials_up_to(3)) {
    AlgebraElement x(m);
    int n = m.charge();
    auto check = [&](const UEAElement& h, int shift) {
      auto y = act_left(h, x);
      if (!y.is_zero()) CHECK(homogeneous_charge(y) == n + shift);
    };
    check(X.X_plus, 2);
    check(X.X_minus, -2);
    check(X.X_z, 0);
    // X_z acts diagonally by (1 - q^{2n})/(1 - q^{-2})
    QRational expected = (QRational(1) - QRational::q(2 * n)) / (QRational(1) - QRational::q(-2));
    CHECK(act_left(X.X_z, x) == expected * x);
  }
}

TEST_CASE("UEA JSON round trip") {
  auto x = tangent_basis().X_z + QRational::sqrt_q(3) * E * F;
  CHECK(uea_element_from_json(to_json(x)) == x);
  CHECK(UEAElement(UEAMonomial{0, 0, -2}).to_string() == "Kinv^2");
}
