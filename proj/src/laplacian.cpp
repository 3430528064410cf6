#include "qhodge/laplacian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace qhodge {

namespace {

const UEAElement& alpha_operator() {
  static const UEAElement op = [] {
    const auto& X = tangent_basis();
    return uea_multiply(X.X_minus, X.X_plus) + QRational::q(6) * uea_multiply(X.X_plus, X.X_minus);
  }();
  return op;
}

const UEAElement& gamma_operator() {
  static const UEAElement op = uea_multiply(tangent_basis().X_z, tangent_basis().X_z);
  return op;
}

std::vector<Monomial> filtered_basis(int D, std::optional<int> charge) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_up_to(D))
    if (!charge || m.charge() == *charge) out.push_back(m);
  return out;
}

}  // namespace

BoxParts box_parts(const AlgebraElement& x) { return {act_left(alpha_operator(), x), act_left(gamma_operator(), x)}; }

AlgebraElement box(const QRational& alpha, const QRational& gamma, const AlgebraElement& x) {
  BoxParts p = box_parts(x);
  return alpha * p.alpha_part + gamma * p.gamma_part;
}

FilteredMatrix box_matrix(const QRational& alpha, const QRational& gamma, int D, std::optional<int> charge, int retries) {
  if (D < 1) throw std::invalid_argument("filtration degree must be at least 1");
  for (int d = D; d <= D + retries; ++d) {
    FilteredMatrix fm;
    fm.basis = filtered_basis(d, charge);
    fm.requested_degree = D;
    fm.degree = d;
    fm.charge = charge;
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < fm.basis.size(); ++i) index[fm.basis[i]] = i;
    fm.matrix = Matrix<QRational>(fm.basis.size(), fm.basis.size());
    bool closed = true;
    for (std::size_t j = 0; j < fm.basis.size() && closed; ++j) {
      AlgebraElement image = box(alpha, gamma, AlgebraElement(fm.basis[j]));
      for (const auto& [m, c] : image.terms()) {
        auto it = index.find(m);
        if (it == index.end()) {
          closed = false;
          break;
        }
        fm.matrix(it->second, j) = c;
      }
    }
    if (closed) return fm;
  }
  throw std::runtime_error("Laplacian does not preserve the filtered span");
}

Matrix<ParamPoly> box_matrix_symbolic(int D, std::optional<int> charge) {
  auto basis = filtered_basis(D, charge);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  Matrix<ParamPoly> M(basis.size(), basis.size());
  ParamPoly al = ParamPoly::symbol(Sym::alpha), ga = ParamPoly::symbol(Sym::gamma);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    BoxParts p = box_parts(AlgebraElement(basis[j]));
    for (const auto& [part, coupling] : {std::pair{&p.alpha_part, &al}, std::pair{&p.gamma_part, &ga}})
      for (const auto& [m, c] : part->terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw std::runtime_error("Laplacian does not preserve the filtered span");
        M(it->second, j) += ParamPoly(c) * *coupling;
      }
  }
  return M;
}

bool charge_block_diagonal(const FilteredMatrix& M) {
  for (std::size_t i = 0; i < M.basis.size(); ++i)
    for (std::size_t j = 0; j < M.basis.size(); ++j)
      if (M.basis[i].charge() != M.basis[j].charge() && !M.matrix(i, j).is_zero()) return false;
  return true;
}

Matrix<Rational> evaluate_matrix(const Matrix<QRational>& M, const Rational& q0) {
  return M.transform([&](const QRational& x) { return x.evaluate_at(q0); });
}

// ---- exact path ----

poly::Dense characteristic_polynomial(const Matrix<Rational>& A) {
  // Faddeev–LeVerrier.
  std::size_t n = A.rows();
  poly::Dense c(n + 1);
  c[n] = 1;
  Matrix<Rational> Mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Rational> next = A * Mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    Mk = std::move(next);
    Matrix<Rational> AM = A * Mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  poly::trim(c);
  return c;
}

namespace {

std::vector<poly::Dense> sturm_chain(const poly::Dense& p) {
  std::vector<poly::Dense> chain{p, poly::derivative(p)};
  while (chain.back().size() > 1) {
    poly::Dense q, r;
    poly::divmod(chain[chain.size() - 2], chain.back(), q, r);
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes(const std::vector<poly::Dense>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(poly::evaluate(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational cauchy_bound(const poly::Dense& p) {
  Rational lead = abs(p.back());
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs(p[i]) / lead));
  return m + 1;
}

// Yun's squarefree factorisation: factors[k] has multiplicity k + 1.
std::vector<poly::Dense> squarefree_factors(const poly::Dense& p) {
  std::vector<poly::Dense> out;
  poly::Dense a = p, b = poly::derivative(p), g = poly::gcd(a, b), q, r;
  poly::Dense c, d;
  poly::divmod(a, g, c, r);
  poly::Dense bg;
  poly::divmod(b, g, bg, r);
  poly::Dense dc = poly::derivative(c);
  d = bg;
  for (std::size_t i = 0; i < std::max(d.size(), dc.size()); ++i) {
    Rational x = i < d.size() ? d[i] : Rational(0);
    Rational y = i < dc.size() ? dc[i] : Rational(0);
    if (i < d.size()) d[i] = x - y;
    else d.push_back(-y);
  }
  poly::trim(d);
  while (c.size() > 1) {
    poly::Dense f = poly::gcd(c, d);
    out.push_back(f);
    poly::Dense c2, d2;
    poly::divmod(c, f, c2, r);
    poly::divmod(d, f, d2, r);
    c = c2;
    dc = poly::derivative(c);
    d = d2;
    for (std::size_t i = 0; i < std::max(d.size(), dc.size()); ++i) {
      Rational x = i < d.size() ? d[i] : Rational(0);
      Rational y = i < dc.size() ? dc[i] : Rational(0);
      if (i < d.size()) d[i] = x - y;
      else d.push_back(-y);
    }
    poly::trim(d);
  }
  return out;
}

void exact_spectrum(const Matrix<Rational>& M, Spectrum& s) {
  s.exact = true;
  poly::Dense chi = characteristic_polynomial(M);
  auto factors = squarefree_factors(chi);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const poly::Dense& f = factors[k];
    int mult = static_cast<int>(k) + 1;
    int deg = static_cast<int>(f.size()) - 1;
    if (deg <= 0) continue;
    auto chain = sturm_chain(f);
    Rational bound = cauchy_bound(f);
    int real_roots = sign_changes(chain, -bound) - sign_changes(chain, bound);
    s.nonreal += (deg - real_roots) * mult;
    bool zero_root = poly::evaluate(f, 0) == 0;
    int neg = sign_changes(chain, -bound) - sign_changes(chain, 0);  // roots in (-bound, 0]
    if (zero_root) {
      --neg;
      s.zero += mult;
    }
    s.negative += neg * mult;
    s.positive += (real_roots - neg - (zero_root ? 1 : 0)) * mult;
    // Isolate each root by bisection on Sturm counts.
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
      auto [lo, hi] = stack.back();
      stack.pop_back();
      int count = sign_changes(chain, lo) - sign_changes(chain, hi);
      if (count == 0) continue;
      if (count == 1) {
        while (Rational(hi - lo) > Rational(1, 1000000) * Rational(1, 1000000)) {
          Rational mid = (lo + hi) / 2;
          if (sign_changes(chain, lo) - sign_changes(chain, mid) == 1) hi = mid;
          else lo = mid;
        }
        EigenvalueEntry e;
        e.value = (zero_root && lo <= 0 && hi >= 0) ? 0.0 : Rational((lo + hi) / 2).get_d();
        e.multiplicity = mult;
        e.interval = std::pair{lo, hi};
        s.eigenvalues.push_back(e);
        continue;
      }
      Rational mid = (lo + hi) / 2;
      stack.push_back({lo, mid});
      stack.push_back({mid, hi});
    }
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
}

void floating_spectrum(const Matrix<Rational>& M, Spectrum& s) {
  std::size_t n = M.rows();
  Eigen::MatrixXd A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = M(i, j).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(A);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration did not converge");
  auto vals = solver.eigenvalues();
  auto vecs = solver.eigenvectors();
  double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  for (Eigen::Index k = 0; k < vals.size(); ++k) {
    auto v = vecs.col(k);
    double res = (A.cast<std::complex<double>>() * v - vals(k) * v).norm() / std::max(v.norm(), 1e-300);
    s.max_residual = std::max(s.max_residual, res / scale);
    EigenvalueEntry e;
    e.value = vals(k).real();
    e.imag = vals(k).imag();
    s.eigenvalues.push_back(e);
    double tol = kSpectrumTolerance * scale;
    if (std::abs(e.imag) > tol) ++s.nonreal;
    else if (e.value < -tol) ++s.negative;
    else if (e.value > tol) ++s.positive;
    else ++s.zero;
  }
  if (s.max_residual > kSpectrumTolerance) throw std::runtime_error("eigenpair residual above tolerance");
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(),
            [](const auto& a, const auto& b) { return a.value != b.value ? a.value < b.value : a.imag < b.imag; });
  // clusters within tolerance count as one eigenvalue with multiplicity
  double tol = kSpectrumTolerance * scale;
  std::vector<EigenvalueEntry> merged;
  for (const auto& e : s.eigenvalues) {
    if (!merged.empty() && std::abs(merged.back().value - e.value) <= tol && std::abs(merged.back().imag - e.imag) <= tol)
      ++merged.back().multiplicity;
    else
      merged.push_back(e);
  }
  s.eigenvalues = std::move(merged);
}

}  // namespace

int sturm_count(const poly::Dense& p, const Rational& lo, const Rational& hi) {
  auto chain = sturm_chain(p);
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

Spectrum spectrum_numeric(const Matrix<Rational>& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("spectrum of a non-square matrix");
  Spectrum s;
  if (M.rows() == 0) return s;
  if (M.rows() <= kExactSpectrumLimit) exact_spectrum(M, s);
  else floating_spectrum(M, s);
  return s;
}

QRational symmetry_residual(const QRational& alpha, const QRational& gamma, const AlgebraElement& x, const AlgebraElement& y) {
  return haar(star(box(alpha, gamma, x)) * y) - haar(star(x) * box(alpha, gamma, y));
}

}  // namespace qhodge
