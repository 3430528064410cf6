#include "qhodge/quantum_group.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>

#include "qhodge/json_io.hpp"

namespace qhodge {

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::a: return "a";
    case Gen::a_star: return "as";
    case Gen::c: return "c";
    case Gen::c_star: return "cs";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::make(Branch b, int k, int l, int m) {
  if (k < 0 || l < 0 || m < 0) throw std::invalid_argument("negative exponent in PBW monomial");
  if (k == 0) b = Branch::a;
  return Monomial{b, k, l, m};
}

Monomial Monomial::of(Gen g) {
  switch (g) {
    case Gen::a: return make(Branch::a, 1, 0, 0);
    case Gen::a_star: return make(Branch::a_star, 1, 0, 0);
    case Gen::c: return make(Branch::a, 0, 1, 0);
    case Gen::c_star: return make(Branch::a, 0, 0, 1);
  }
  return {};
}

int Monomial::charge() const {
  int ak = branch == Branch::a ? -k : k;
  return ak - l + m;
}

std::vector<Gen> Monomial::word() const {
  std::vector<Gen> w;
  w.insert(w.end(), static_cast<std::size_t>(k), branch == Branch::a ? Gen::a : Gen::a_star);
  w.insert(w.end(), static_cast<std::size_t>(l), Gen::c);
  w.insert(w.end(), static_cast<std::size_t>(m), Gen::c_star);
  return w;
}

std::string Monomial::to_string() const {
  std::vector<std::string> parts;
  auto factor = [&](const std::string& name, int e) {
    if (e == 0) return;
    parts.push_back(e == 1 ? name : name + "^" + std::to_string(e));
  };
  factor(branch == Branch::a ? "a" : "as", k);
  factor("c", l);
  factor("cs", m);
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
  return s;
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(const QRational& scalar) {
  if (!scalar.is_zero()) terms_.emplace(Monomial::one(), scalar);
}

AlgebraElement::AlgebraElement(const Monomial& mono, QRational coeff) {
  if (!coeff.is_zero()) terms_.emplace(mono, std::move(coeff));
}

QRational AlgebraElement::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? QRational() : it->second;
}

void AlgebraElement::add_term(const Monomial& mono, const QRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int AlgebraElement::max_degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
  return d;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [mono, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const QRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= s;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return multiply(x, y); }

namespace {

// Coefficient printed in front of a monomial; parenthesized when compound.
std::string coeff_prefix(const QRational& c, bool& negative) {
  negative = false;
  QRational mag = c;
  if (c.den() == LaurentPoly(1) && c.num().is_monomial() && c.num().leading() < 0) {
    negative = true;
    mag = -c;
  }
  if (mag.is_one()) return "";
  std::string s = mag.to_string();
  bool compound = !(mag.den() == LaurentPoly(1) && mag.num().is_monomial());
  return compound ? "(" + s + ")" : s;
}

}  // namespace

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    bool negative = false;
    std::string pre = coeff_prefix(c, negative);
    if (first) out << (negative ? "-" : "");
    else out << (negative ? " - " : " + ");
    first = false;
    bool unit = mono == Monomial::one();
    if (pre.empty()) out << (unit ? "1" : mono.to_string());
    else out << pre << (unit ? "" : " * " + mono.to_string());
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// TensorSquare

TensorSquare TensorSquare::pure(const AlgebraElement& x, const AlgebraElement& y) {
  TensorSquare t;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) t.add_term(mx, my, cx * cy);
  return t;
}

void TensorSquare::add_term(const Monomial& l, const Monomial& r, const QRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{l, r}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorSquare& TensorSquare::operator+=(const TensorSquare& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

TensorSquare operator*(const TensorSquare& x, const TensorSquare& y) {
  TensorSquare r;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      QRational c = cx * cy;
      AlgebraElement left = multiply_monomials(kx.first, ky.first);
      AlgebraElement right = multiply_monomials(kx.second, ky.second);
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) r.add_term(ml, mr, c * cl * cr);
    }
  return r;
}

std::string TensorSquare::to_string() const {
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

// ---------------------------------------------------------------------------
// Rewriting system

bool is_redex(Gen x, Gen y) {
  switch (x) {
    case Gen::a: return y == Gen::a_star;
    case Gen::a_star: return y == Gen::a;
    case Gen::c: return y == Gen::a || y == Gen::a_star;
    case Gen::c_star: return y != Gen::c_star;
  }
  return false;
}

std::vector<std::pair<QRational, std::vector<Gen>>> rewrite_pair(Gen x, Gen y) {
  using G = Gen;
  if (x == G::c && y == G::a) return {{QRational::q(-1), {G::a, G::c}}};
  if (x == G::c_star && y == G::a) return {{QRational::q(-1), {G::a, G::c_star}}};
  if (x == G::c_star && y == G::c) return {{QRational(1), {G::c, G::c_star}}};
  if (x == G::c && y == G::a_star) return {{QRational::q(1), {G::a_star, G::c}}};
  if (x == G::c_star && y == G::a_star) return {{QRational::q(1), {G::a_star, G::c_star}}};
  if (x == G::a_star && y == G::a) return {{QRational(1), {}}, {QRational(-1), {G::c, G::c_star}}};
  if (x == G::a && y == G::a_star) return {{QRational(1), {}}, {-QRational::q(2), {G::c, G::c_star}}};
  return {};
}

namespace {

Monomial monomial_of_normal_word(const std::vector<Gen>& w) {
  Branch b = Branch::a;
  int k = 0, l = 0, m = 0;
  for (Gen g : w) {
    switch (g) {
      case Gen::a: ++k; break;
      case Gen::a_star: b = Branch::a_star; ++k; break;
      case Gen::c: ++l; break;
      case Gen::c_star: ++m; break;
    }
  }
  return Monomial::make(b, k, l, m);
}

}  // namespace

AlgebraElement normal_form(std::span<const Gen> word, RewriteStrategy strategy) {
  std::map<std::vector<Gen>, QRational> pending;
  pending.emplace(std::vector<Gen>(word.begin(), word.end()), QRational(1));
  AlgebraElement result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::vector<Gen>& w = node.key();
    const QRational& c = node.mapped();
    std::optional<std::size_t> pos;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (is_redex(w[i], w[i + 1])) {
        pos = i;
        if (strategy == RewriteStrategy::leftmost) break;
      }
    }
    if (!pos) {
      result.add_term(monomial_of_normal_word(w), c);
      continue;
    }
    for (auto& [rc, repl] : rewrite_pair(w[*pos], w[*pos + 1])) {
      std::vector<Gen> nw(w.begin(), w.begin() + static_cast<long>(*pos));
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

namespace {

// Right multiplication of c * mono by one generator, in closed form.
void right_multiply_gen(const Monomial& mono, const QRational& c, Gen g, AlgebraElement& out) {
  const int k = mono.k, l = mono.l, m = mono.m;
  switch (g) {
    case Gen::c:
      out.add_term(Monomial::make(mono.branch, k, l + 1, m), c);
      return;
    case Gen::c_star:
      out.add_term(Monomial::make(mono.branch, k, l, m + 1), c);
      return;
    case Gen::a: {
      // c^l c*^m a = q^{-(l+m)} a c^l c*^m
      QRational f = c * QRational::q(-(l + m));
      if (mono.branch == Branch::a) {
        out.add_term(Monomial::make(Branch::a, k + 1, l, m), f);
      } else {  // a*^k a = a*^{k-1} (1 - c c*)
        out.add_term(Monomial::make(Branch::a_star, k - 1, l, m), f);
        out.add_term(Monomial::make(Branch::a_star, k - 1, l + 1, m + 1), -f);
      }
      return;
    }
    case Gen::a_star: {
      QRational f = c * QRational::q(l + m);
      if (mono.branch == Branch::a_star || k == 0) {
        out.add_term(Monomial::make(Branch::a_star, k + 1, l, m), f);
      } else {  // a^k a* = a^{k-1} (1 - q^2 c c*)
        out.add_term(Monomial::make(Branch::a, k - 1, l, m), f);
        out.add_term(Monomial::make(Branch::a, k - 1, l + 1, m + 1), -f * QRational::q(2));
      }
      return;
    }
  }
}

struct ProductCache {
  std::mutex mutex;
  std::map<std::pair<Monomial, Monomial>, AlgebraElement> table;
};

ProductCache& product_cache() {
  static ProductCache cache;
  return cache;
}

}  // namespace

AlgebraElement multiply_monomials(const Monomial& x, const Monomial& y) {
  if (y == Monomial::one()) return AlgebraElement(x);
  if (x == Monomial::one()) return AlgebraElement(y);
  auto& cache = product_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.table.find({x, y});
    if (it != cache.table.end()) return it->second;
  }
  AlgebraElement acc(x);
  for (Gen g : y.word()) {
    AlgebraElement next;
    for (const auto& [mono, c] : acc.terms()) right_multiply_gen(mono, c, g, next);
    acc = std::move(next);
  }
  std::lock_guard lock(cache.mutex);
  cache.table.emplace(std::make_pair(x, y), acc);
  return acc;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement r;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      QRational c = cx * cy;
      AlgebraElement prod = multiply_monomials(mx, my);
      for (const auto& [mono, cm] : prod.terms()) r.add_term(mono, c * cm);
    }
  return r;
}

AlgebraElement power(const AlgebraElement& x, int e) {
  if (e < 0) throw std::invalid_argument("negative power of an algebra element");
  AlgebraElement r(QRational(1));
  for (int i = 0; i < e; ++i) r = multiply(r, x);
  return r;
}

// ---------------------------------------------------------------------------
// Hopf *-structure

namespace {

Gen star_gen(Gen g) {
  switch (g) {
    case Gen::a: return Gen::a_star;
    case Gen::a_star: return Gen::a;
    case Gen::c: return Gen::c_star;
    case Gen::c_star: return Gen::c;
  }
  return g;
}

TensorSquare coproduct_gen(Gen g) {
  const Monomial a = Monomial::of(Gen::a), as = Monomial::of(Gen::a_star);
  const Monomial c = Monomial::of(Gen::c), cs = Monomial::of(Gen::c_star);
  TensorSquare t;
  switch (g) {
    case Gen::a:
      t.add_term(a, a, 1);
      t.add_term(cs, c, -QRational::q(1));
      break;
    case Gen::c:
      t.add_term(c, a, 1);
      t.add_term(as, c, 1);
      break;
    case Gen::a_star:
      t.add_term(as, as, 1);
      t.add_term(c, cs, -QRational::q(1));
      break;
    case Gen::c_star:
      t.add_term(cs, as, 1);
      t.add_term(a, cs, 1);
      break;
  }
  return t;
}

AlgebraElement antipode_gen(Gen g) {
  switch (g) {
    case Gen::a: return AlgebraElement::gen(Gen::a_star);
    case Gen::a_star: return AlgebraElement::gen(Gen::a);
    case Gen::c: return -QRational::q(1) * AlgebraElement::gen(Gen::c);
    case Gen::c_star: return -QRational::q(-1) * AlgebraElement::gen(Gen::c_star);
  }
  return {};
}

struct CoproductCache {
  std::mutex mutex;
  std::map<Monomial, TensorSquare> table;
};

}  // namespace

AlgebraElement star(const AlgebraElement& x) {
  AlgebraElement r;
  for (const auto& [mono, c] : x.terms()) {
    auto w = mono.word();
    AlgebraElement acc(QRational(1));
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = multiply(acc, AlgebraElement::gen(star_gen(*it)));
    r += c * acc;  // coefficients are real: q is real
  }
  return r;
}

const TensorSquare& coproduct(const Monomial& mono) {
  static CoproductCache cache;
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.table.find(mono);
    if (it != cache.table.end()) return it->second;
  }
  TensorSquare acc;
  acc.add_term(Monomial::one(), Monomial::one(), 1);
  for (Gen g : mono.word()) acc = acc * coproduct_gen(g);
  std::lock_guard lock(cache.mutex);
  // std::map references stay valid after later insertions.
  return cache.table.emplace(mono, std::move(acc)).first->second;
}

TensorSquare coproduct(const AlgebraElement& x) {
  TensorSquare r;
  for (const auto& [mono, c] : x.terms())
    for (const auto& [key, ck] : coproduct(mono).terms()) r.add_term(key.first, key.second, c * ck);
  return r;
}

QRational counit(const AlgebraElement& x) {
  QRational r;
  for (const auto& [mono, c] : x.terms())
    if (mono.l == 0 && mono.m == 0) r += c;
  return r;
}

AlgebraElement antipode(const AlgebraElement& x) {
  AlgebraElement r;
  for (const auto& [mono, c] : x.terms()) {
    auto w = mono.word();
    AlgebraElement acc(QRational(1));
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = multiply(acc, antipode_gen(*it));
    r += c * acc;
  }
  return r;
}

AlgebraElement contract(const TensorSquare& t) {
  AlgebraElement r;
  for (const auto& [key, c] : t.terms()) r += c * multiply_monomials(key.first, key.second);
  return r;
}

AlgebraElement counit_left(const TensorSquare& t) {
  AlgebraElement r;
  for (const auto& [key, c] : t.terms())
    if (key.first.l == 0 && key.first.m == 0) r.add_term(key.second, c);
  return r;
}

AlgebraElement counit_right(const TensorSquare& t) {
  AlgebraElement r;
  for (const auto& [key, c] : t.terms())
    if (key.second.l == 0 && key.second.m == 0) r.add_term(key.first, c);
  return r;
}

// ---------------------------------------------------------------------------
// Grading

std::vector<std::pair<U1Charge, AlgebraElement>> grade_decompose(const AlgebraElement& x) {
  std::map<int, AlgebraElement> parts;
  for (const auto& [mono, c] : x.terms()) parts[mono.charge()].add_term(mono, c);
  std::vector<std::pair<U1Charge, AlgebraElement>> out;
  for (auto& [n, part] : parts) out.emplace_back(U1Charge{n}, std::move(part));
  return out;
}

int homogeneous_charge(const AlgebraElement& x) {
  auto parts = grade_decompose(x);
  if (parts.size() != 1) throw std::invalid_argument("element is not U(1)-homogeneous: " + x.to_string());
  return parts.front().first.n;
}

// ---------------------------------------------------------------------------
// Monomial enumeration

std::vector<Monomial> monomials_of_degree(int degree) {
  std::vector<Monomial> out;
  for (int k = 0; k <= degree; ++k)
    for (int l = 0; l <= degree - k; ++l) {
      out.push_back(Monomial::make(Branch::a, k, l, degree - k - l));
      if (k > 0) out.push_back(Monomial::make(Branch::a_star, k, l, degree - k - l));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> monomials_up_to(int max_degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto block = monomials_of_degree(d);
    out.insert(out.end(), block.begin(), block.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Haar state

namespace {

// Incremental sparse Gaussian elimination over Q(q). Rows are kept fully
// reduced against all earlier pivots.
class SparseSystem {
 public:
  using Row = std::map<int, QRational>;  // unknown index -> coefficient

  explicit SparseSystem(int unknowns) : unknowns_(unknowns) {}

  // Adds sum(row) = rhs. Returns false if the equation contradicts the system.
  bool add(Row row, QRational rhs) {
    // Stored pivot rows contain no other pivot variable, so one
    // substitution pass suffices.
    std::vector<int> hits;
    for (const auto& [v, c] : row)
      if (pivots_.count(v)) hits.push_back(v);
    for (int var : hits) {
      const Pivot& p = pivots_.at(var);
      QRational f = row.at(var);
      for (const auto& [v, c] : p.row) {
        auto [jt, inserted] = row.emplace(v, -f * c);
        if (!inserted) {
          jt->second -= f * c;
          if (jt->second.is_zero()) row.erase(jt);
        }
      }
      rhs -= f * p.rhs;
    }
    if (row.empty()) return rhs.is_zero();
    int pivot = row.begin()->first;
    QRational inv = row.begin()->second.inverse();
    for (auto& [v, c] : row) c *= inv;
    rhs *= inv;
    // Eliminate the new pivot from existing rows to keep them reduced.
    for (auto& [pv, prow] : pivots_) {
      auto it = prow.row.find(pivot);
      if (it == prow.row.end()) continue;
      QRational f = it->second;
      for (const auto& [v, c] : row) {
        auto [jt, inserted] = prow.row.emplace(v, -f * c);
        if (!inserted) {
          jt->second -= f * c;
          if (jt->second.is_zero()) prow.row.erase(jt);
        }
      }
      prow.rhs -= f * rhs;
    }
    pivots_.emplace(pivot, Pivot{std::move(row), std::move(rhs)});
    return true;
  }

  bool complete() const { return static_cast<int>(pivots_.size()) == unknowns_; }

  QRational value(int var) const {
    const auto& p = pivots_.at(var);
    return p.rhs;
  }

 private:
  struct Pivot {
    Row row;
    QRational rhs;
  };
  int unknowns_;
  std::map<int, Pivot> pivots_;
};

struct HaarCache {
  std::recursive_mutex mutex;
  std::map<int, std::map<Monomial, QRational>> blocks;
  std::optional<std::filesystem::path> dir;
};

HaarCache& haar_cache() {
  static HaarCache cache;
  return cache;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::filesystem::path haar_file(const std::filesystem::path& dir, int degree) {
  std::string key = "qhodge-haar-v1-degree-" + std::to_string(degree);
  std::ostringstream name;
  name << "haar-" << std::hex << fnv1a(key) << ".json";
  return dir / name.str();
}

std::optional<std::map<Monomial, QRational>> load_block(const std::filesystem::path& dir, int degree) {
  std::ifstream in(haar_file(dir, degree));
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.at("degree").get<int>() != degree) return std::nullopt;
    std::map<Monomial, QRational> block;
    for (const auto& entry : j.at("values")) block.emplace(monomial_from_json(entry.at("mono")), qrational_from_json(entry.at("value")));
    return block;
  } catch (const std::exception&) {
    return std::nullopt;  // a corrupt cache file is ignored and recomputed
  }
}

void store_block(const std::filesystem::path& dir, int degree, const std::map<Monomial, QRational>& block) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  Json j;
  j["degree"] = degree;
  j["values"] = Json::array();
  for (const auto& [mono, v] : block) j["values"].push_back({{"mono", to_json(mono)}, {"value", to_json(v)}});
  std::ofstream out(haar_file(dir, degree));
  if (out) out << j.dump() << '\n';
}

// Solves the invariance equations for the unknowns h(M), deg M = degree,
// given all lower blocks.
std::map<Monomial, QRational> solve_haar_block(int degree, const std::map<int, std::map<Monomial, QRational>>& lower) {
  std::map<Monomial, QRational> block;
  if (degree == 0) {
    block.emplace(Monomial::one(), QRational(1));
    return block;
  }
  auto unknowns = monomials_of_degree(degree);
  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < unknowns.size(); ++i) index.emplace(unknowns[i], static_cast<int>(i));
  SparseSystem system(static_cast<int>(unknowns.size()));

  auto known = [&](const Monomial& m) -> QRational {
    return lower.at(m.degree()).at(m);
  };

  for (const Monomial& x : unknowns) {
    const TensorSquare& dx = coproduct(x);
    // Right invariance: (id ⊗ h) Δx = h(x) 1, one equation per left monomial.
    // Left invariance: (h ⊗ id) Δx = h(x) 1, one equation per right monomial.
    for (int side = 0; side < 2; ++side) {
      std::map<Monomial, std::pair<SparseSystem::Row, QRational>> equations;
      for (const auto& [key, c] : dx.terms()) {
        const Monomial& outer = side == 0 ? key.first : key.second;
        const Monomial& inner = side == 0 ? key.second : key.first;
        auto& [row, rhs] = equations[outer];
        if (inner.degree() == degree) {
          auto [it, inserted] = row.emplace(index.at(inner), c);
          if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) row.erase(it);
          }
        } else {
          rhs -= c * known(inner);
        }
      }
      auto& [row1, rhs1] = equations[Monomial::one()];
      int xi = index.at(x);
      auto [it, inserted] = row1.emplace(xi, QRational(-1));
      if (!inserted) {
        it->second -= QRational(1);
        if (it->second.is_zero()) row1.erase(it);
      }
      for (auto& [outer, eq] : equations) {
        if (!system.add(std::move(eq.first), std::move(eq.second))) {
          throw std::runtime_error("Haar invariance system is inconsistent at degree " + std::to_string(degree));
        }
      }
    }
  }
  if (!system.complete()) {
    throw std::runtime_error("Haar invariance system is underdetermined at degree " + std::to_string(degree));
  }
  for (const Monomial& m : unknowns) {
    QRational v = system.value(index.at(m));
    if (!v.is_zero()) block.emplace(m, v);
  }
  return block;
}

const std::map<Monomial, QRational>& ensure_block(int degree) {
  auto& cache = haar_cache();
  std::lock_guard lock(cache.mutex);
  for (int d = 0; d <= degree; ++d) {
    if (cache.blocks.count(d)) continue;
    std::optional<std::map<Monomial, QRational>> block;
    if (cache.dir) block = load_block(*cache.dir, d);
    if (!block) {
      block = solve_haar_block(d, cache.blocks);
      if (cache.dir) store_block(*cache.dir, d, *block);
    }
    // Lower blocks are looked up by monomial; store zeros implicitly.
    std::map<Monomial, QRational> full;
    for (const auto& m : monomials_of_degree(d)) {
      auto it = block->find(m);
      full.emplace(m, it == block->end() ? QRational() : it->second);
    }
    cache.blocks.emplace(d, std::move(full));
  }
  return cache.blocks.at(degree);
}

}  // namespace

std::map<Monomial, QRational> haar_block(int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  return ensure_block(degree);
}

QRational haar(const Monomial& mono) { return ensure_block(mono.degree()).at(mono); }

QRational haar(const AlgebraElement& x) {
  QRational r;
  for (const auto& [mono, c] : x.terms()) {
    QRational h = haar(mono);
    if (!h.is_zero()) r += c * h;
  }
  return r;
}

QRational haar_cc_star_closed_form(int l) {
  return (QRational(1) - QRational::q(2)) / (QRational(1) - QRational::q(2 * l + 2));
}

void set_haar_cache_dir(std::filesystem::path dir) {
  auto& cache = haar_cache();
  std::lock_guard lock(cache.mutex);
  cache.dir = std::move(dir);
}

}  // namespace qhodge
