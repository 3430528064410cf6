#include "qhodge/calculus.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "qhodge/enveloping.hpp"

namespace qhodge {

std::string braiding_name(Braiding b) {
  switch (b) {
    case Braiding::sigma: return "sigma";
    case Braiding::sigma_inverse: return "sigma_inverse";
    case Braiding::flip: return "flip";
  }
  return "?";
}

int form_dim(int k) {
  static const int dims[] = {1, 3, 3, 1};
  return k >= 0 && k <= 3 ? dims[k] : 0;
}

const std::vector<int>& basis_word(int k, int i) {
  static const std::vector<std::vector<std::vector<int>>> words = {
      {{}},
      {{kMinus}, {kPlus}, {kZ}},
      {{kMinus, kPlus}, {kMinus, kZ}, {kPlus, kZ}},
      {{kMinus, kPlus, kZ}},
  };
  return words.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(i));
}

std::string basis_name(int k, int i) {
  if (k == 0) return "1";
  if (k == 3) return "theta";
  static const char* letters[] = {"wm", "wp", "wz"};
  std::string s;
  for (int a : basis_word(k, i)) s += (s.empty() ? "" : "^") + std::string(letters[a]);
  return s;
}

std::pair<int, int> basis_lookup(const std::string& name) {
  for (int k = 0; k <= 3; ++k)
    for (int i = 0; i < form_dim(k); ++i)
      if (basis_name(k, i) == name) return {k, i};
  return {-1, -1};
}

int basis_charge(int k, int i) {
  int n = 0;
  for (int a : basis_word(k, i)) n += a == kMinus ? 2 : a == kPlus ? -2 : 0;
  return n;
}

int basis_weight(int k, int i) {
  int w = 0;
  for (int a : basis_word(k, i)) w += a == kZ ? 2 : 1;
  return w;
}

std::size_t word_index(std::span<const int> word) {
  std::size_t r = 0;
  for (int a : word) r = r * 3 + static_cast<std::size_t>(a);
  return r;
}

// ---------------------------------------------------------------------------
// Braiding and antisymmetrisers

namespace {

Matrix<QRational> build_sigma() {
  Matrix<QRational> s(9, 9);
  auto set = [&](std::vector<int> in, std::vector<int> out, QRational c) {
    s(word_index(out), word_index(in)) += c;
  };
  const QRational one_minus_q2 = QRational(1) - QRational::q(2);
  for (int a = 0; a < 3; ++a) set({a, a}, {a, a}, 1);
  set({kMinus, kPlus}, {kMinus, kPlus}, one_minus_q2);
  set({kMinus, kPlus}, {kPlus, kMinus}, QRational::q(-2));
  set({kPlus, kMinus}, {kMinus, kPlus}, QRational::q(4));
  set({kMinus, kZ}, {kMinus, kZ}, one_minus_q2);
  set({kMinus, kZ}, {kZ, kMinus}, QRational::q(-4));
  set({kZ, kMinus}, {kMinus, kZ}, QRational::q(6));
  set({kZ, kPlus}, {kZ, kPlus}, one_minus_q2);
  set({kZ, kPlus}, {kPlus, kZ}, QRational::q(-4));
  set({kPlus, kZ}, {kZ, kPlus}, QRational::q(6));
  return s;
}

Matrix<QRational> build_flip() {
  Matrix<QRational> s(9, 9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) s(word_index(std::vector<int>{b, a}), word_index(std::vector<int>{a, b})) = 1;
  return s;
}

// λ with A² = λA, asserted on the whole matrix.
QRational eigenvalue_on_range(const Matrix<QRational>& A) {
  Matrix<QRational> sq = A * A;
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c) {
      if (A(r, c).is_zero()) continue;
      QRational lambda = sq(r, c) / A(r, c);
      if (!(sq == lambda * A)) throw std::logic_error("antisymmetriser is not a multiple of a projector");
      return lambda;
    }
  throw std::logic_error("zero antisymmetriser");
}

std::vector<std::vector<QRational>> projection_table(const Matrix<QRational>& A, int k) {
  const std::size_t n = A.rows();
  const int dim = form_dim(k);
  Matrix<QRational> B(n, static_cast<std::size_t>(dim));
  for (int b = 0; b < dim; ++b) {
    auto col = word_index(basis_word(k, b));
    for (std::size_t r = 0; r < n; ++r) B(r, static_cast<std::size_t>(b)) = A(r, col);
  }
  std::vector<std::vector<QRational>> table(n);
  for (std::size_t w = 0; w < n; ++w) {
    Matrix<QRational> rhs(n, 1);
    for (std::size_t r = 0; r < n; ++r) rhs(r, 0) = A(r, w);
    auto x = solve(B, rhs);
    if (!x) throw std::logic_error("word image outside the span of the wedge basis");
    for (int b = 0; b < dim; ++b) table[w].push_back((*x)(static_cast<std::size_t>(b), 0));
  }
  return table;
}

ExteriorStructure build_structure(Braiding b) {
  ExteriorStructure s;
  s.braiding = b;
  switch (b) {
    case Braiding::sigma: s.sigma = build_sigma(); break;
    case Braiding::sigma_inverse: s.sigma = inverse(build_sigma()); break;
    case Braiding::flip: s.sigma = build_flip(); break;
  }
  auto I3 = Matrix<QRational>::identity(3);
  auto I9 = Matrix<QRational>::identity(9);
  auto I27 = Matrix<QRational>::identity(27);
  s.A2 = I9 - s.sigma;
  auto s1 = kron(s.sigma, I3), s2 = kron(I3, s.sigma);
  s.A3 = (I27 - s2) * (I27 - s1 + s1 * s2);
  s.lambda2 = eigenvalue_on_range(s.A2);
  s.lambda3 = eigenvalue_on_range(s.A3);
  s.P2 = projection_table(s.A2, 2);
  s.P3 = projection_table(s.A3, 3);

  // star of a basis word: (-1)^{k(k-1)/2} times the reversed word of starred
  // letters; ω₋* = -ω₊, ω₊* = -ω₋, ω_z* = -ω_z.
  auto star_letter = [](int a) { return a == kMinus ? kPlus : a == kPlus ? kMinus : kZ; };
  s.star_matrix[0] = {{QRational(1)}};
  for (int k = 1; k <= 3; ++k) {
    int sign = ((k * (k - 1) / 2) % 2 == 0 ? 1 : -1) * (k % 2 == 0 ? 1 : -1);
    for (int i = 0; i < form_dim(k); ++i) {
      const auto& w = basis_word(k, i);
      std::vector<int> rev(w.rbegin(), w.rend());
      for (int& a : rev) a = star_letter(a);
      std::vector<QRational> row;
      if (k == 1) {
        row.assign(3, QRational());
        row[static_cast<std::size_t>(rev[0])] = sign;
      } else {
        const auto& P = k == 2 ? s.P2 : s.P3;
        for (const auto& c : P[word_index(rev)]) row.push_back(QRational(sign) * c);
      }
      s.star_matrix[static_cast<std::size_t>(k)].push_back(std::move(row));
    }
  }
  return s;
}

}  // namespace

const ExteriorStructure& exterior(Braiding b) {
  static std::mutex mutex;
  static std::map<Braiding, ExteriorStructure> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(b);
  if (it == cache.end()) it = cache.emplace(b, build_structure(b)).first;
  return it->second;
}

Matrix<QRational> sigma_matrix(Braiding b) { return exterior(b).sigma; }

Matrix<QRational> antisymmetrizer(int k, Braiding b) {
  if (k == 2) return exterior(b).A2;
  if (k == 3) return exterior(b).A3;
  throw std::invalid_argument("antisymmetriser degree must be 2 or 3");
}

Matrix<QRational> sigma1(Braiding b) { return kron(exterior(b).sigma, Matrix<QRational>::identity(3)); }
Matrix<QRational> sigma2(Braiding b) { return kron(Matrix<QRational>::identity(3), exterior(b).sigma); }

std::vector<QRational> project_word(std::span<const int> word, Braiding b) {
  switch (word.size()) {
    case 0: return {QRational(1)};
    case 1: {
      std::vector<QRational> v(3);
      v[static_cast<std::size_t>(word[0])] = 1;
      return v;
    }
    case 2: return exterior(b).P2[word_index(word)];
    case 3: return exterior(b).P3[word_index(word)];
    default: return {};
  }
}

// ---------------------------------------------------------------------------
// KForm

KForm::KForm(int degree) : degree_(degree), coeffs_(static_cast<std::size_t>(form_dim(degree))) {
  if (degree < 0) throw std::invalid_argument("negative form degree");
}

KForm KForm::basis(int k, int i, AlgebraElement coeff) {
  KForm f(k);
  f.coeff(i) = std::move(coeff);
  return f;
}

KForm KForm::function(AlgebraElement x) { return basis(0, 0, std::move(x)); }

bool KForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

KForm KForm::operator-() const {
  KForm r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

KForm& KForm::operator+=(const KForm& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("adding forms of different degree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

KForm& KForm::operator-=(const KForm& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("subtracting forms of different degree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

KForm operator*(const AlgebraElement& x, const KForm& f) {
  KForm r(f.degree());
  for (int i = 0; i < f.dim(); ++i) r.coeff(i) = x * f.coeff(i);
  return r;
}

KForm operator*(const QRational& s, const KForm& f) {
  KForm r(f.degree());
  for (int i = 0; i < f.dim(); ++i) r.coeff(i) = s * f.coeff(i);
  return r;
}

KForm operator*(const KForm& f, const AlgebraElement& x) {
  KForm r(f.degree());
  for (int i = 0; i < f.dim(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    r.coeff(i) = f.coeff(i) * commute_right(f.degree(), i, x).coeff(i);
  }
  return r;
}

std::string KForm::to_string() const {
  std::string out;
  for (int i = 0; i < dim(); ++i) {
    const auto& c = coeff(i);
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    std::string term;
    if (degree_ == 0) term = c.terms().size() > 1 ? "(" + cs + ")" : cs;
    else if (c.terms().size() > 1) term = "(" + cs + ") * " + basis_name(degree_, i);
    else if (cs == "1" || cs == "-1") term = (cs == "1" ? "" : "-") + basis_name(degree_, i);
    else term = cs + " * " + basis_name(degree_, i);
    // single terms may carry their own sign
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

KForm commute_right(int k, int i, const AlgebraElement& x) {
  const int w = basis_weight(k, i);
  AlgebraElement moved;
  for (const auto& [mono, c] : x.terms()) moved.add_term(mono, c * QRational::q(w * mono.charge()));
  return KForm::basis(k, i, std::move(moved));
}

KForm wedge(const KForm& f, const KForm& g, Braiding b) {
  const int k = f.degree(), l = g.degree();
  KForm r(k + l);
  if (r.dim() == 0) return r;
  for (int i = 0; i < f.dim(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    for (int j = 0; j < g.dim(); ++j) {
      if (g.coeff(j).is_zero()) continue;
      std::vector<int> word = basis_word(k, i);
      const auto& wj = basis_word(l, j);
      word.insert(word.end(), wj.begin(), wj.end());
      auto coords = project_word(word, b);
      AlgebraElement x = f.coeff(i) * commute_right(k, i, g.coeff(j)).coeff(i);
      if (x.is_zero()) continue;
      for (int t = 0; t < r.dim(); ++t)
        if (!coords[static_cast<std::size_t>(t)].is_zero()) r.coeff(t) += coords[static_cast<std::size_t>(t)] * x;
    }
  }
  return r;
}

KForm star(const KForm& f, Braiding b) {
  const int k = f.degree();
  const auto& S = exterior(b).star_matrix.at(static_cast<std::size_t>(k));
  KForm r(k);
  for (int i = 0; i < f.dim(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    AlgebraElement xs = qhodge::star(f.coeff(i));
    for (int j = 0; j < f.dim(); ++j) {
      const QRational& s = S[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (s.is_zero()) continue;
      r.coeff(j) += s * commute_right(k, j, xs).coeff(j);
    }
  }
  return r;
}

KForm differential0(const AlgebraElement& x) {
  const auto& X = tangent_basis();
  KForm r(1);
  for (int a = 0; a < 3; ++a) r.coeff(a) = act_left(X[a], x);
  return r;
}

// ---------------------------------------------------------------------------
// Maurer–Cartan

namespace {

MaurerCartan solve_maurer_cartan() {
  // Unknown (a, b) ↦ column 3a + b. Rows: (generator, b, monomial).
  std::vector<std::vector<QRational>> rows;
  std::vector<QRational> rhs;
  for (Gen g : {Gen::a, Gen::a_star, Gen::c, Gen::c_star}) {
    KForm dx = differential0(AlgebraElement::gen(g));
    KForm known(2);
    for (int a = 0; a < 3; ++a) known += wedge(differential0(dx.coeff(a)), KForm::basis(1, a));
    for (int b = 0; b < 3; ++b) {
      std::map<Monomial, std::vector<QRational>> eqs;
      auto row_for = [&](const Monomial& m) -> std::vector<QRational>& {
        auto it = eqs.find(m);
        if (it == eqs.end()) it = eqs.emplace(m, std::vector<QRational>(10)).first;
        return it->second;
      };
      for (const auto& [m, c] : known.coeff(b).terms()) row_for(m)[9] -= c;
      for (int a = 0; a < 3; ++a)
        for (const auto& [m, c] : dx.coeff(a).terms()) row_for(m)[static_cast<std::size_t>(3 * a + b)] += c;
      for (auto& [m, row] : eqs) {
        rhs.push_back(row[9]);
        row.pop_back();
        rows.push_back(std::move(row));
      }
    }
  }
  Matrix<QRational> M(rows.size(), 9), R(rows.size(), 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < 9; ++c) M(r, c) = rows[r][c];
    R(r, 0) = rhs[r];
  }
  MaurerCartan mc;
  mc.equations = rows.size();
  mc.rank = rank(M);
  auto x = solve(M, R);
  if (!x) throw std::runtime_error("Maurer-Cartan system is inconsistent");
  if (mc.rank != 9) throw std::runtime_error("Maurer-Cartan system is underdetermined (rank " + std::to_string(mc.rank) + ")");
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      mc.coeffs[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (*x)(static_cast<std::size_t>(3 * a + b), 0);
  return mc;
}

KForm d_basis1(int a) {
  const auto& mc = maurer_cartan();
  KForm r(2);
  for (int b = 0; b < 3; ++b) r.coeff(b) = AlgebraElement(mc.coeffs[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
  return r;
}

}  // namespace

const MaurerCartan& maurer_cartan() {
  static const MaurerCartan mc = solve_maurer_cartan();
  return mc;
}

KForm differential(const KForm& f, Braiding b) {
  const int k = f.degree();
  if (k == 0) return differential0(f.coeff(0));
  KForm r(k + 1);
  if (r.dim() == 0) return r;
  for (int i = 0; i < f.dim(); ++i) {
    const auto& y = f.coeff(i);
    if (y.is_zero()) continue;
    r += wedge(differential0(y), KForm::basis(k, i), b);
    KForm d_e(k + 1);
    if (k == 1) {
      d_e = d_basis1(i);
    } else {  // k == 2: d(ω_x∧ω_y) = dω_x∧ω_y - ω_x∧dω_y
      const auto& w = basis_word(2, i);
      d_e = wedge(d_basis1(w[0]), KForm::basis(1, w[1]), b) - wedge(KForm::basis(1, w[0]), d_basis1(w[1]), b);
    }
    r += y * d_e;
  }
  return r;
}

// ---------------------------------------------------------------------------

WedgeRelationReport wedge_relations(Braiding b) {
  const auto& A2 = exterior(b).A2;
  WedgeRelationReport rep;
  rep.kernel = nullspace(A2);
  rep.kernel_dim = rep.kernel.cols();
  auto vec = [](std::vector<std::pair<std::vector<int>, QRational>> terms) {
    Matrix<QRational> v(9, 1);
    for (auto& [w, c] : terms) v(word_index(w), 0) += c;
    return v;
  };
  auto in_kernel = [&](const Matrix<QRational>& v) { return (A2 * v).is_zero_matrix(); };
  rep.squares_in_kernel = true;
  std::vector<Matrix<QRational>> span;
  for (int a = 0; a < 3; ++a) {
    auto v = vec({{{a, a}, QRational(1)}});
    rep.squares_in_kernel = rep.squares_in_kernel && in_kernel(v);
    span.push_back(v);
  }
  auto first = vec({{{kMinus, kPlus}, QRational(1)}, {{kPlus, kMinus}, QRational::q(-2)}});
  auto upper = vec({{{kZ, kMinus}, QRational(1)}, {{kMinus, kZ}, QRational::q(4)}});
  auto printed_lower = vec({{{kZ, kPlus}, QRational(1)}, {{kMinus, kZ}, QRational::q(-4)}});
  auto corrected_lower = vec({{{kZ, kPlus}, QRational(1)}, {{kPlus, kZ}, QRational::q(-4)}});
  rep.first_relation_in_kernel = in_kernel(first);
  rep.upper_z_relation_in_kernel = in_kernel(upper);
  rep.printed_lower_z_in_kernel = in_kernel(printed_lower);
  rep.corrected_lower_z_in_kernel = in_kernel(corrected_lower);
  span.push_back(first);
  span.push_back(upper);
  span.push_back(corrected_lower);
  Matrix<QRational> S(9, span.size());
  for (std::size_t j = 0; j < span.size(); ++j)
    for (std::size_t r = 0; r < 9; ++r) S(r, j) = span[j](r, 0);
  bool all_in = true;
  for (const auto& v : span) all_in = all_in && in_kernel(v);
  rep.relations_span_kernel = all_in && rank(S) == rep.kernel_dim;
  return rep;
}

}  // namespace qhodge
