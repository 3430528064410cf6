#include "qhodge/enveloping.hpp"

#include <bit>
#include <mutex>
#include <optional>
#include <sstream>

namespace qhodge {

std::string ugen_name(UGen g) {
  switch (g) {
    case UGen::E: return "E";
    case UGen::F: return "F";
    case UGen::K: return "K";
    case UGen::Kinv: return "Kinv";
  }
  return "?";
}

UEAMonomial UEAMonomial::of(UGen g) {
  switch (g) {
    case UGen::E: return {0, 1, 0};
    case UGen::F: return {1, 0, 0};
    case UGen::K: return {0, 0, 1};
    case UGen::Kinv: return {0, 0, -1};
  }
  return {};
}

std::string UEAMonomial::to_string() const {
  std::vector<std::string> parts;
  auto factor = [&](const std::string& name, int e) {
    if (e == 0) return;
    parts.push_back(e == 1 ? name : name + "^" + std::to_string(e));
  };
  factor("F", i);
  factor("E", j);
  if (l > 0) factor("K", l);
  if (l < 0) factor("Kinv", -l);
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (std::size_t t = 1; t < parts.size(); ++t) s += "*" + parts[t];
  return s;
}

// ---------------------------------------------------------------------------

UEAElement::UEAElement(const QRational& scalar) {
  if (!scalar.is_zero()) terms_.emplace(UEAMonomial::one(), scalar);
}

UEAElement::UEAElement(const UEAMonomial& mono, QRational coeff) {
  if (!coeff.is_zero()) terms_.emplace(mono, std::move(coeff));
}

QRational UEAElement::coeff(const UEAMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? QRational() : it->second;
}

void UEAElement::add_term(const UEAMonomial& mono, const QRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UEAElement UEAElement::operator-() const {
  UEAElement r = *this;
  for (auto& [mono, c] : r.terms_) c = -c;
  return r;
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

UEAElement& UEAElement::operator*=(const QRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= s;
  return *this;
}

UEAElement operator*(const UEAElement& x, const UEAElement& y) { return uea_multiply(x, y); }

std::string UEAElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    QRational mag = c;
    bool negative = c.den() == LaurentPoly(1) && c.num().is_monomial() && c.num().leading() < 0;
    if (negative) mag = -c;
    if (first) out << (negative ? "-" : "");
    else out << (negative ? " - " : " + ");
    first = false;
    bool unit = mono == UEAMonomial::one();
    if (mag.is_one()) {
      out << (unit ? "1" : mono.to_string());
      continue;
    }
    bool simple = mag.den() == LaurentPoly(1) && mag.num().is_monomial();
    out << (simple ? mag.to_string() : "(" + mag.to_string() + ")");
    if (!unit) out << " * " << mono.to_string();
  }
  return out.str();
}

UEATensor UEATensor::pure(const UEAElement& x, const UEAElement& y) {
  UEATensor t;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) t.add_term(mx, my, cx * cy);
  return t;
}

void UEATensor::add_term(const UEAMonomial& l, const UEAMonomial& r, const QRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{l, r}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string UEATensor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ") * " << key.first.to_string() << " ⊗ " << key.second.to_string();
  }
  return out.str();
}

UEATensor& UEATensor::operator+=(const UEATensor& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

UEATensor operator*(const UEATensor& x, const UEATensor& y) {
  UEATensor r;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      QRational c = cx * cy;
      UEAElement left = uea_multiply_monomials(kx.first, ky.first);
      UEAElement right = uea_multiply_monomials(kx.second, ky.second);
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) r.add_term(ml, mr, c * cl * cr);
    }
  return r;
}

// ---------------------------------------------------------------------------
// Normal ordering F^i E^j K^l

namespace {

const QRational& inv_q_minus_qinv() {
  static const QRational v = (QRational::q(1) - QRational::q(-1)).inverse();
  return v;
}

bool uea_redex(UGen x, UGen y) {
  switch (x) {
    case UGen::F: return false;
    case UGen::E: return y == UGen::F;
    case UGen::K: return y != UGen::K;
    case UGen::Kinv: return y != UGen::Kinv;
  }
  return false;
}

std::vector<std::pair<QRational, std::vector<UGen>>> uea_rewrite(UGen x, UGen y) {
  using G = UGen;
  if ((x == G::K && y == G::Kinv) || (x == G::Kinv && y == G::K)) return {{QRational(1), {}}};
  if (x == G::K && y == G::E) return {{QRational::q(1), {G::E, G::K}}};
  if (x == G::Kinv && y == G::E) return {{QRational::q(-1), {G::E, G::Kinv}}};
  if (x == G::K && y == G::F) return {{QRational::q(-1), {G::F, G::K}}};
  if (x == G::Kinv && y == G::F) return {{QRational::q(1), {G::F, G::Kinv}}};
  if (x == G::E && y == G::F)
    return {{QRational(1), {G::F, G::E}}, {inv_q_minus_qinv(), {G::K, G::K}}, {-inv_q_minus_qinv(), {G::Kinv, G::Kinv}}};
  return {};
}

UEAMonomial monomial_of_normal_word(const std::vector<UGen>& w) {
  UEAMonomial m;
  for (UGen g : w) {
    switch (g) {
      case UGen::F: ++m.i; break;
      case UGen::E: ++m.j; break;
      case UGen::K: ++m.l; break;
      case UGen::Kinv: --m.l; break;
    }
  }
  return m;
}

void right_multiply_gen(const UEAMonomial& mono, const QRational& c, UGen g, UEAElement& out) {
  const int i = mono.i, j = mono.j, l = mono.l;
  switch (g) {
    case UGen::K: out.add_term({i, j, l + 1}, c); return;
    case UGen::Kinv: out.add_term({i, j, l - 1}, c); return;
    case UGen::E: out.add_term({i, j + 1, l}, c * QRational::q(l)); return;
    case UGen::F: {
      // K^l F = q^{-l} F K^l, then E^j F = F E^j + Σ_t E^t [E,F] E^{j-1-t}
      QRational f = c * QRational::q(-l);
      out.add_term({i + 1, j, l}, f);
      if (j == 0) return;
      QRational plus, minus;
      for (int t = 0; t < j; ++t) {
        plus += QRational::q(2 * (j - 1 - t));
        minus += QRational::q(-2 * (j - 1 - t));
      }
      out.add_term({i, j - 1, l + 2}, f * plus * inv_q_minus_qinv());
      out.add_term({i, j - 1, l - 2}, -f * minus * inv_q_minus_qinv());
      return;
    }
  }
}

std::vector<UGen> uea_word(const UEAMonomial& m) {
  std::vector<UGen> w;
  w.insert(w.end(), static_cast<std::size_t>(m.i), UGen::F);
  w.insert(w.end(), static_cast<std::size_t>(m.j), UGen::E);
  w.insert(w.end(), static_cast<std::size_t>(m.l > 0 ? m.l : -m.l), m.l > 0 ? UGen::K : UGen::Kinv);
  return w;
}

}  // namespace

UEAElement uea_normal_form(std::span<const UGen> word, UEAStrategy strategy) {
  std::map<std::vector<UGen>, QRational> pending;
  pending.emplace(std::vector<UGen>(word.begin(), word.end()), QRational(1));
  UEAElement result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const auto& w = node.key();
    const QRational& c = node.mapped();
    std::optional<std::size_t> pos;
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
      if (uea_redex(w[t], w[t + 1])) {
        pos = t;
        if (strategy == UEAStrategy::leftmost) break;
      }
    }
    if (!pos) {
      result.add_term(monomial_of_normal_word(w), c);
      continue;
    }
    for (auto& [rc, repl] : uea_rewrite(w[*pos], w[*pos + 1])) {
      std::vector<UGen> nw(w.begin(), w.begin() + static_cast<long>(*pos));
      nw.insert(nw.end(), repl.begin(), repl.end());
      nw.insert(nw.end(), w.begin() + static_cast<long>(*pos) + 2, w.end());
      QRational nc = c * rc;
      auto [it, inserted] = pending.emplace(std::move(nw), nc);
      if (!inserted) {
        it->second += nc;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return result;
}

UEAElement uea_multiply_monomials(const UEAMonomial& x, const UEAMonomial& y) {
  static std::mutex mutex;
  static std::map<std::pair<UEAMonomial, UEAMonomial>, UEAElement> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({x, y});
    if (it != cache.end()) return it->second;
  }
  UEAElement acc(x);
  for (UGen g : uea_word(y)) {
    UEAElement next;
    for (const auto& [mono, c] : acc.terms()) right_multiply_gen(mono, c, g, next);
    acc = std::move(next);
  }
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(x, y), acc);
  return acc;
}

UEAElement uea_multiply(const UEAElement& x, const UEAElement& y) {
  UEAElement r;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      QRational c = cx * cy;
      UEAElement prod = uea_multiply_monomials(mx, my);
      for (const auto& [mono, cm] : prod.terms()) r.add_term(mono, c * cm);
    }
  return r;
}

// ---------------------------------------------------------------------------
// Hopf *-structure

namespace {

UEATensor uea_coproduct_gen(UGen g) {
  const UEAMonomial K = UEAMonomial::of(UGen::K), Ki = UEAMonomial::of(UGen::Kinv);
  UEATensor t;
  switch (g) {
    case UGen::E:
    case UGen::F: {
      UEAMonomial X = UEAMonomial::of(g);
      t.add_term(X, K, 1);
      t.add_term(Ki, X, 1);
      break;
    }
    case UGen::K: t.add_term(K, K, 1); break;
    case UGen::Kinv: t.add_term(Ki, Ki, 1); break;
  }
  return t;
}

}  // namespace

const UEATensor& uea_coproduct(const UEAMonomial& mono) {
  static std::mutex mutex;
  static std::map<UEAMonomial, UEATensor> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(mono);
    if (it != cache.end()) return it->second;
  }
  UEATensor acc;
  acc.add_term(UEAMonomial::one(), UEAMonomial::one(), 1);
  for (UGen g : uea_word(mono)) acc = acc * uea_coproduct_gen(g);
  std::lock_guard lock(mutex);
  return cache.emplace(mono, std::move(acc)).first->second;
}

UEATensor uea_coproduct(const UEAElement& h) {
  UEATensor r;
  for (const auto& [mono, c] : h.terms())
    for (const auto& [key, ck] : uea_coproduct(mono).terms()) r.add_term(key.first, key.second, c * ck);
  return r;
}

QRational uea_counit(const UEAElement& h) {
  QRational r;
  for (const auto& [mono, c] : h.terms())
    if (mono.i == 0 && mono.j == 0) r += c;
  return r;
}

UEAElement uea_antipode(const UEAElement& h) {
  auto gen_image = [](UGen g) -> UEAElement {
    switch (g) {
      case UGen::E: return -QRational::q(1) * UEAElement::gen(UGen::E);
      case UGen::F: return -QRational::q(-1) * UEAElement::gen(UGen::F);
      case UGen::K: return UEAElement::gen(UGen::Kinv);
      case UGen::Kinv: return UEAElement::gen(UGen::K);
    }
    return {};
  };
  UEAElement r;
  for (const auto& [mono, c] : h.terms()) {
    auto w = uea_word(mono);
    UEAElement acc(QRational(1));
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = uea_multiply(acc, gen_image(*it));
    r += c * acc;
  }
  return r;
}

UEAElement uea_star(const UEAElement& h) {
  auto gen_image = [](UGen g) {
    switch (g) {
      case UGen::E: return UGen::F;
      case UGen::F: return UGen::E;
      default: return g;
    }
  };
  UEAElement r;
  for (const auto& [mono, c] : h.terms()) {
    auto w = uea_word(mono);
    std::vector<UGen> starred;
    for (auto it = w.rbegin(); it != w.rend(); ++it) starred.push_back(gen_image(*it));
    r += c * uea_normal_form(starred);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Pairing

namespace {

// Generator x as a matrix coefficient: x = factor * u_{row,col}.
struct MatrixEntry {
  int row;
  int col;
  QRational factor;
};

MatrixEntry matrix_entry(Gen g) {
  switch (g) {
    case Gen::a: return {0, 0, QRational(1)};
    case Gen::c: return {1, 0, QRational(1)};
    case Gen::a_star: return {1, 1, QRational(1)};
    case Gen::c_star: return {0, 1, -QRational::q(-1)};  // u_12 = -q c*
  }
  return {0, 0, QRational()};
}

// Basis tensors of (C²)^{⊗n} as bitmasks; bit t set means e_1 in slot t.
using Vec = std::map<std::uint32_t, QRational>;

void vec_add(Vec& v, std::uint32_t key, const QRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

// ρ(K) = diag(q^{-1/2}, q^{1/2}); ρ(E) e_0 = e_1; ρ(F) e_1 = e_0.
// Iterated coproduct: X ↦ Σ_t K⁻¹ ⊗ ... ⊗ X_t ⊗ K ⊗ ... ⊗ K.
Vec apply_raising(const Vec& v, int n, bool raise) {
  Vec out;
  for (const auto& [bits, c] : v) {
    for (int t = 0; t < n; ++t) {
      bool set = (bits >> t) & 1u;
      if (set == raise) continue;
      int before = 0, after = 0;  // Σ (±1) of K-eigen-exponents in s units
      for (int u = 0; u < t; ++u) before += ((bits >> u) & 1u) ? -1 : 1;  // K⁻¹
      for (int u = t + 1; u < n; ++u) after += ((bits >> u) & 1u) ? 1 : -1;  // K
      vec_add(out, bits ^ (1u << t), c * QRational::sqrt_q(before + after));
    }
  }
  return out;
}

QRational pairing_rep(const UEAMonomial& h, const Monomial& x) {
  auto word = x.word();
  const int n = static_cast<int>(word.size());
  if (n > 30) throw std::length_error("pairing: monomial degree too large");
  std::uint32_t row = 0, col = 0;
  QRational factor(1);
  for (int t = 0; t < n; ++t) {
    MatrixEntry e = matrix_entry(word[static_cast<std::size_t>(t)]);
    if (e.row) row |= 1u << t;
    if (e.col) col |= 1u << t;
    factor *= e.factor;
  }
  int ones_row = std::popcount(row), ones_col = std::popcount(col);
  if (ones_row != ones_col + h.j - h.i) return {};
  if (h.j > n || h.i > n) return {};
  Vec v;
  int weight = 2 * ones_col - n;  // K acts as s^{weight}
  v.emplace(col, QRational::sqrt_q(weight * h.l));
  for (int t = 0; t < h.j && !v.empty(); ++t) v = apply_raising(v, n, true);
  for (int t = 0; t < h.i && !v.empty(); ++t) v = apply_raising(v, n, false);
  auto it = v.find(row);
  return it == v.end() ? QRational() : factor * it->second;
}

struct PairingCache {
  std::mutex mutex;
  std::map<std::pair<UEAMonomial, Monomial>, QRational> table;
};

}  // namespace

QRational pairing(const UEAMonomial& h, const Monomial& x) {
  static PairingCache cache;
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.table.find({h, x});
    if (it != cache.table.end()) return it->second;
  }
  QRational v = pairing_rep(h, x);
  std::lock_guard lock(cache.mutex);
  cache.table.emplace(std::make_pair(h, x), v);
  return v;
}

QRational pairing(const UEAElement& h, const AlgebraElement& x) {
  QRational r;
  for (const auto& [hm, hc] : h.terms())
    for (const auto& [xm, xc] : x.terms()) {
      QRational v = pairing(hm, xm);
      if (!v.is_zero()) r += hc * xc * v;
    }
  return r;
}

namespace {

// ⟨K^l, ·⟩ is a character: a ↦ q^{-l/2}, a* ↦ q^{l/2}, c, c* ↦ 0.
QRational k_character(int l, const Monomial& x) {
  if (x.l != 0 || x.m != 0) return {};
  int sign = x.branch == Branch::a ? -1 : 1;
  return QRational::sqrt_q(sign * l * x.k);
}

// ⟨E, x⟩ or ⟨F, x⟩ from Δ(X) = X⊗K + K⁻¹⊗X, iterated along the word.
QRational raising_on_word(UGen g, const Monomial& x) {
  auto word = x.word();
  QRational r;
  for (std::size_t t = 0; t < word.size(); ++t) {
    QRational mid;
    if (g == UGen::E && word[t] == Gen::c) mid = 1;
    if (g == UGen::F && word[t] == Gen::c_star) mid = -QRational::q(-1);
    if (mid.is_zero()) continue;
    QRational prefix(1), suffix(1);
    for (std::size_t u = 0; u < word.size(); ++u) {
      if (u == t) continue;
      QRational kv = k_character(u < t ? -1 : 1, Monomial::of(word[u]));
      if (u < t) prefix *= kv;
      else suffix *= kv;
    }
    r += prefix * mid * suffix;
  }
  return r;
}

}  // namespace

QRational pairing_by_coproduct(const UEAMonomial& h, const Monomial& x) {
  static std::mutex mutex;
  static std::map<std::pair<UEAMonomial, Monomial>, QRational> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find({h, x});
    if (it != memo.end()) return it->second;
  }
  QRational v;
  if (h.i == 0 && h.j == 0) {
    v = k_character(h.l, x);
  } else {
    UGen head = h.i > 0 ? UGen::F : UGen::E;
    UEAMonomial rest = h;
    if (h.i > 0) --rest.i;
    else --rest.j;
    for (const auto& [key, c] : coproduct(x).terms()) {
      QRational left = raising_on_word(head, key.first);
      if (left.is_zero()) continue;
      QRational right = pairing_by_coproduct(rest, key.second);
      if (!right.is_zero()) v += c * left * right;
    }
  }
  std::lock_guard lock(mutex);
  memo.emplace(std::make_pair(h, x), v);
  return v;
}

AlgebraElement act_left(const UEAElement& h, const AlgebraElement& x) {
  AlgebraElement r;
  for (const auto& [xm, xc] : x.terms())
    for (const auto& [key, c] : coproduct(xm).terms()) {
      QRational p;
      for (const auto& [hm, hc] : h.terms()) {
        QRational v = pairing(hm, key.second);
        if (!v.is_zero()) p += hc * v;
      }
      if (!p.is_zero()) r.add_term(key.first, xc * c * p);
    }
  return r;
}

AlgebraElement act_right(const AlgebraElement& x, const UEAElement& h) {
  AlgebraElement r;
  for (const auto& [xm, xc] : x.terms())
    for (const auto& [key, c] : coproduct(xm).terms()) {
      QRational p;
      for (const auto& [hm, hc] : h.terms()) {
        QRational v = pairing(hm, key.first);
        if (!v.is_zero()) p += hc * v;
      }
      if (!p.is_zero()) r.add_term(key.second, xc * c * p);
    }
  return r;
}

const TangentBasis& tangent_basis() {
  static const TangentBasis basis = [] {
    TangentBasis b;
    b.X_minus = UEAElement(UEAMonomial{1, 0, 1}, QRational::sqrt_q(-1));
    b.X_plus = UEAElement(UEAMonomial{0, 1, 1}, QRational::sqrt_q(1));
    QRational scale = (QRational(1) - QRational::q(-2)).inverse();
    b.X_z = scale * (UEAElement(QRational(1)) - UEAElement(UEAMonomial{0, 0, 4}));
    return b;
  }();
  return basis;
}

}  // namespace qhodge
