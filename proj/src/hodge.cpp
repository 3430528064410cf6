#include "qhodge/hodge.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qhodge {

// ---- ParamForm ----

ParamForm::ParamForm(int degree) : degree_(degree), coeffs_(static_cast<std::size_t>(form_dim(degree))) {}

ParamForm ParamForm::from(const KForm& f) {
  ParamForm r(f.degree());
  for (int i = 0; i < f.dim(); ++i)
    for (const auto& [m, c] : f.coeff(i).terms()) r.add_term(i, m, ParamPoly(c));
  return r;
}

void ParamForm::add_term(int i, const Monomial& mono, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto& slot = coeffs_.at(static_cast<std::size_t>(i));
  auto [it, inserted] = slot.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) slot.erase(it);
  }
}

bool ParamForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.empty()) return false;
  return true;
}

ParamPoly ParamForm::invariant_coeff(int i) const {
  const auto& slot = coeff(i);
  auto it = slot.find(Monomial::one());
  return it == slot.end() ? ParamPoly() : it->second;
}

ParamForm& ParamForm::operator+=(const ParamForm& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("adding forms of different degree");
  for (int i = 0; i < o.dim(); ++i)
    for (const auto& [m, c] : o.coeff(i)) add_term(i, m, c);
  return *this;
}

ParamForm& ParamForm::operator-=(const ParamForm& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("subtracting forms of different degree");
  for (int i = 0; i < o.dim(); ++i)
    for (const auto& [m, c] : o.coeff(i)) add_term(i, m, -c);
  return *this;
}

ParamForm operator*(const ParamPoly& s, const ParamForm& f) {
  return f.map_coeffs([&](const ParamPoly& c) { return s * c; });
}

ParamForm operator*(const AlgebraElement& x, const ParamForm& f) {
  ParamForm r(f.degree());
  for (int i = 0; i < f.dim(); ++i)
    for (const auto& [m, c] : f.coeff(i))
      for (const auto& [xm, xc] : x.terms()) {
        AlgebraElement prod = multiply_monomials(xm, m);
        for (const auto& [pm, pc] : prod.terms()) r.add_term(i, pm, ParamPoly(xc * pc) * c);
      }
  return r;
}

std::string ParamForm::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < dim(); ++i)
    for (const auto& [m, c] : coeff(i)) {
      if (!first) out << " + ";
      first = false;
      out << "(" << c.to_string() << ")";
      if (m != Monomial::one()) out << "*" << m.to_string();
      if (degree_ > 0) out << "*" << basis_name(degree_, i);
    }
  return first ? "0" : out.str();
}

ParamForm star(const ParamForm& f, Braiding b) {
  ParamForm r(f.degree());
  for (int i = 0; i < f.dim(); ++i)
    for (const auto& [m, c] : f.coeff(i)) {
      KForm s = star(KForm::basis(f.degree(), i, AlgebraElement(m)), b);
      r += c.conj() * ParamForm::from(s);
    }
  return r;
}

ParamForm wedge(const KForm& f, const ParamForm& g, Braiding b) {
  ParamForm r(f.degree() + g.degree());
  if (r.dim() == 0) return r;
  for (int j = 0; j < g.dim(); ++j)
    for (const auto& [m, c] : g.coeff(j)) r += c * ParamForm::from(wedge(f, KForm::basis(g.degree(), j, AlgebraElement(m)), b));
  return r;
}

// ---- contraction and its extension ----

Contraction Contraction::symbolic() {
  return {ParamPoly::symbol(Sym::alpha), ParamPoly::symbol(Sym::beta), ParamPoly::symbol(Sym::gamma)};
}

Contraction Contraction::symmetric(ParamPoly alpha, ParamPoly gamma) {
  ParamPoly beta = ParamPoly(QRational::q(6)) * alpha;
  return {std::move(alpha), std::move(beta), std::move(gamma)};
}

ParamPoly Contraction::operator()(int a, int b) const {
  if (a == kMinus && b == kPlus) return alpha;
  if (a == kPlus && b == kMinus) return beta;
  if (a == kZ && b == kZ) return gamma;
  return {};
}

namespace {

// Tensor lift A⁽ᵏ⁾(u) of the k-th degree basis form i, as word-index → coefficient.
std::vector<std::pair<std::vector<int>, QRational>> lift(int k, int i, Braiding b) {
  std::vector<std::pair<std::vector<int>, QRational>> out;
  if (k == 0) {
    out.push_back({{}, QRational(1)});
    return out;
  }
  if (k == 1) {
    out.push_back({{i}, QRational(1)});
    return out;
  }
  Matrix<QRational> A = antisymmetrizer(k, b);
  std::size_t col = word_index(basis_word(k, i));
  std::size_t n = A.rows();
  for (std::size_t w = 0; w < n; ++w) {
    if (A(w, col).is_zero()) continue;
    std::vector<int> word(static_cast<std::size_t>(k));
    std::size_t rest = w;
    for (int t = k - 1; t >= 0; --t) {
      word[static_cast<std::size_t>(t)] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    out.push_back({std::move(word), A(w, col)});
  }
  return out;
}

}  // namespace

Matrix<ParamPoly> extend_contraction(const Contraction& g, int k, Braiding b) {
  int n = form_dim(k);
  if (n == 0) throw std::invalid_argument("no invariant forms in degree " + std::to_string(k));
  std::vector<std::vector<std::pair<std::vector<int>, QRational>>> lifts;
  for (int i = 0; i < n; ++i) lifts.push_back(lift(k, i, b));
  Matrix<ParamPoly> G(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ParamPoly acc;
      for (const auto& [w1, c1] : lifts[static_cast<std::size_t>(i)])
        for (const auto& [w2, c2] : lifts[static_cast<std::size_t>(j)]) {
          ParamPoly prod(c1 * c2);
          for (std::size_t t = 0; t < w1.size() && !prod.is_zero(); ++t) prod = prod * g(w1[t], w2[t]);
          acc += prod;
        }
      G(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = acc;
    }
  return G;
}

QRational lambda(int k, Braiding b) {
  if (k == 2) return exterior(b).lambda2;
  if (k == 3) return exterior(b).lambda3;
  return QRational(1);
}

ParamPoly scalar_product(const Contraction& g, const KForm& f, const KForm& h, Braiding b) {
  if (f.degree() != h.degree()) throw std::invalid_argument("scalar product of forms of different degree");
  int k = f.degree();
  if (form_dim(k) == 0) return {};
  Matrix<ParamPoly> gram = extend_contraction(g, k, b);
  const auto& S = exterior(b).star_matrix[static_cast<std::size_t>(k)];
  ParamPoly inv_lambda(lambda(k, b).inverse());
  ParamPoly acc;
  for (int i = 0; i < f.dim(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    AlgebraElement xs = star(f.coeff(i));
    for (int j = 0; j < h.dim(); ++j) {
      if (h.coeff(j).is_zero()) continue;
      QRational hv = haar(xs * h.coeff(j));
      if (hv.is_zero()) continue;
      ParamPoly gij;
      for (int l = 0; l < f.dim(); ++l) {
        const QRational& s = S[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
        if (!s.is_zero()) gij += ParamPoly(s) * gram(static_cast<std::size_t>(l), static_cast<std::size_t>(j));
      }
      acc += ParamPoly(hv) * gij;
    }
  }
  return acc * inv_lambda;
}

ParamPoly integral_top(const ParamForm& top, const ParamPoly& m) {
  if (top.degree() != 3) throw std::invalid_argument("integral of a form that is not top degree");
  ParamPoly acc;
  for (const auto& [mono, c] : top.coeff(0)) {
    QRational hv = haar(mono);
    if (!hv.is_zero()) acc += ParamPoly(hv) * c;
  }
  return acc.divided_by(m);
}

ParamPoly integral_top(const KForm& top, const ParamPoly& m) { return integral_top(ParamForm::from(top), m); }

// ---- the operator ----

HodgeOperator::HodgeOperator(Contraction g, ParamPoly m, Braiding b) : g_(std::move(g)), m_(std::move(m)), braiding_(b) {
  const auto& ext = exterior(b);
  for (int k = 0; k <= 3; ++k) {
    std::size_t n = static_cast<std::size_t>(form_dim(k));
    std::size_t nd = static_cast<std::size_t>(form_dim(3 - k));
    gram_.push_back(extend_contraction(g_, k, b));

    Matrix<QRational> W(n, nd);
    for (std::size_t i = 0; i < n; ++i) {
      KForm ei_star = star(KForm::basis(k, static_cast<int>(i)), b);
      for (std::size_t j = 0; j < nd; ++j) W(i, j) = wedge(ei_star, KForm::basis(3 - k, static_cast<int>(j)), b).coeff(0).coeff(Monomial::one());
    }
    pairing_.push_back(W);
    Matrix<QRational> Winv = inverse(W);

    const auto& S = ext.star_matrix[static_cast<std::size_t>(k)];
    Matrix<ParamPoly> G(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t l = 0; l < n; ++l)
          if (!S[i][l].is_zero()) G(i, c) += ParamPoly(S[i][l]) * gram_.back()(l, c);

    ParamPoly scale = m_ * ParamPoly(lambda(k, b).inverse());
    Matrix<ParamPoly> T(nd, n);
    for (std::size_t r = 0; r < nd; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        ParamPoly acc;
        for (std::size_t l = 0; l < n; ++l)
          if (!Winv(r, l).is_zero()) acc += ParamPoly(Winv(r, l)) * G(l, c);
        T(r, c) = scale * acc;
      }
    T_.push_back(std::move(T));
  }
}

Matrix<ParamPoly> HodgeOperator::square(int k) const { return matrix(3 - k) * matrix(k); }

ParamForm HodgeOperator::apply(const KForm& f) const {
  int k = f.degree();
  ParamForm r(3 - k);
  if (form_dim(k) == 0) return r;
  const auto& T = matrix(k);
  for (int b = 0; b < f.dim(); ++b)
    for (const auto& [mono, c] : f.coeff(b).terms())
      for (int j = 0; j < r.dim(); ++j) {
        const ParamPoly& t = T(static_cast<std::size_t>(j), static_cast<std::size_t>(b));
        if (!t.is_zero()) r.add_term(j, mono, ParamPoly(c) * t);
      }
  return r;
}

std::vector<ParamPoly> HodgeOperator::apply_invariant(int k, const std::vector<ParamPoly>& coords) const {
  const auto& T = matrix(k);
  std::vector<ParamPoly> out(T.rows());
  for (std::size_t r = 0; r < T.rows(); ++r)
    for (std::size_t c = 0; c < T.cols(); ++c) out[r] += T(r, c) * coords.at(c);
  return out;
}

std::vector<ParamPoly> star_invariant(int k, const std::vector<ParamPoly>& coords, Braiding b) {
  const auto& S = exterior(b).star_matrix[static_cast<std::size_t>(k)];
  std::vector<ParamPoly> out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    ParamPoly c = coords[i].conj();
    for (std::size_t j = 0; j < coords.size(); ++j)
      if (!S[i][j].is_zero()) out[j] += ParamPoly(S[i][j]) * c;
  }
  return out;
}

namespace {

std::vector<ParamPoly> unit(int k, int b) {
  std::vector<ParamPoly> v(static_cast<std::size_t>(form_dim(k)));
  v[static_cast<std::size_t>(b)] = ParamPoly(1);
  return v;
}

}  // namespace

bool is_symmetric(const HodgeOperator& T) {
  Matrix<ParamPoly> sq = T.square(1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j && !sq(i, j).is_zero()) return false;
      if (i == j && !(sq(i, i) == sq(0, 0))) return false;
    }
  return true;
}

bool commutes_with_star(const HodgeOperator& T, int k) {
  for (int b = 0; b < form_dim(k); ++b) {
    auto lhs = T.apply_invariant(k, star_invariant(k, unit(k, b), T.braiding()));
    auto rhs = star_invariant(3 - k, T.apply_invariant(k, unit(k, b)), T.braiding());
    if (lhs != rhs) return false;
  }
  return true;
}

bool is_real(const HodgeOperator& T) { return commutes_with_star(T, 1); }

ParamPoly defining_equation_residual(const HodgeOperator& T, const KForm& f, const KForm& h) {
  ParamForm top = wedge(star(f, T.braiding()), T.apply(h), T.braiding());
  return integral_top(top, T.volume_scale()) - scalar_product(T.contraction(), f, h, T.braiding());
}

DetSgn det_sgn(const HodgeOperator& T, const Rational& q0) {
  DetSgn r;
  ParamPoly m = T.volume_scale();
  ParamPoly theta_norm = scalar_product(T.contraction(), KForm::basis(3, 0), KForm::basis(3, 0), T.braiding());
  r.det = m.conj() * m * theta_norm;
  if (!theta_norm.is_constant()) throw std::invalid_argument("det_sgn needs numeric contraction parameters");
  r.det_over_m2 = theta_norm.value_at(q0);
  if (r.det_over_m2.im != 0) throw std::domain_error("non-real determinant");
  r.sgn = sgn(r.det_over_m2.re);
  if (r.sgn == 0) throw std::domain_error("degenerate contraction");
  return r;
}

ParamPoly normalized_m_squared(const Contraction& g, int gamma_sign, Braiding b) {
  ParamPoly denom = ParamPoly(QRational(6) * QRational::q(4)) * g.alpha * g.beta * g.gamma * ParamPoly(gamma_sign);
  ParamPoly num(lambda(3, b));
  if (denom.is_monomial()) return num * ParamPoly(1).divided_by(denom);
  if (!denom.is_constant()) throw std::invalid_argument("normalisation needs a single-term αβγ");
  return ParamPoly(num.constant().re() / denom.constant().re());
}

Normalization normalize_volume(const Contraction& g, const Rational& q0, Braiding b) {
  if (!g.alpha.is_constant() || !g.beta.is_constant() || !g.gamma.is_constant())
    throw std::invalid_argument("normalize_volume needs numeric parameters");
  ComplexRational a = g.alpha.value_at(q0), be = g.beta.value_at(q0), ga = g.gamma.value_at(q0);
  if (a.im != 0 || be.im != 0 || ga.im != 0) throw std::invalid_argument("parameters must be real");
  if (a.re * be.re <= 0) throw std::domain_error("alpha*beta <= 0: no real volume scale");
  if (ga.re == 0) throw std::domain_error("degenerate contraction");
  Normalization n;
  int gs = sgn(ga.re);
  n.sgn = -gs;
  n.m_squared = normalized_m_squared(g, gs, b);
  n.m_squared_at_q0 = n.m_squared.value_at(q0).re;
  Rational root;
  if (rational_sqrt(n.m_squared_at_q0, root)) n.m_exact = root;
  n.m_approx = std::sqrt(n.m_squared_at_q0.get_d());
  return n;
}

Matrix<ParamPoly> normalized_square(const HodgeOperator& T, int k, const ParamPoly& m_squared) {
  return T.square(k).transform([&](const ParamPoly& x) { return x.substitute_square(Sym::m, m_squared); });
}

CommutatorReport commutator_check(const Contraction& g, const ParamPoly& m) {
  HodgeOperator T(g, m, Braiding::sigma);
  HodgeOperator Tp(g, m, Braiding::sigma_inverse);
  CommutatorReport r;
  for (int k : {1, 2, 0, 3})
    for (int b = 0; b < form_dim(k); ++b) {
      auto e = unit(k, b);
      auto ttp = T.apply_invariant(3 - k, Tp.apply_invariant(k, e));
      auto tpt = Tp.apply_invariant(3 - k, T.apply_invariant(k, e));
      if (ttp == tpt) continue;
      r.witnesses.emplace_back(k, b);
      if (!r.found) {
        r.found = true;
        r.degree = k;
        r.basis_index = b;
        r.T_Tprime = std::move(ttp);
        r.Tprime_T = std::move(tpt);
      }
    }
  return r;
}

std::vector<std::vector<std::pair<ParamPoly, int>>> square_spectrum(const HodgeOperator& T) {
  std::vector<std::vector<std::pair<ParamPoly, int>>> out;
  for (int k = 0; k <= 3; ++k) {
    Matrix<ParamPoly> sq = T.square(k);
    std::vector<std::pair<ParamPoly, int>> block;
    for (std::size_t i = 0; i < sq.rows(); ++i) {
      for (std::size_t j = 0; j < sq.cols(); ++j)
        if (i != j && !sq(i, j).is_zero()) throw std::domain_error("T^2 is not diagonal");
      bool merged = false;
      for (auto& [v, count] : block)
        if (v == sq(i, i)) {
          ++count;
          merged = true;
        }
      if (!merged) block.emplace_back(sq(i, i), 1);
    }
    out.push_back(std::move(block));
  }
  return out;
}

}  // namespace qhodge
