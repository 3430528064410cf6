// Command-line front end for the SU_q(2) calculus engine.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qhodge/calculus.hpp"
#include "qhodge/enveloping.hpp"
#include "qhodge/expr.hpp"
#include "qhodge/hodge.hpp"
#include "qhodge/json_io.hpp"
#include "qhodge/laplacian.hpp"
#include "qhodge/quantum_group.hpp"
#include "qhodge/sphere.hpp"
#include "qhodge/verify.hpp"

using namespace qhodge;
using Json = nlohmann::json;

namespace {

// Exit codes: 0 success, 1 a verification failed, 2 bad input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  bool json = false;
  std::ostringstream text;
  Json doc = Json::object();

  void emit() const {
    if (json) std::cout << doc.dump(2) << "\n";
    else std::cout << text.str();
  }
};

expr::Value eval_arg(const std::string& source, Braiding b = Braiding::sigma) {
  try {
    return expr::evaluate(source, b);
  } catch (const expr::ExprError& e) {
    throw InputError(e.render(source));
  }
}

QRational scalar_flag(const std::string& flag, const std::string& source) {
  expr::Value v = eval_arg(source);
  try {
    return expr::as_scalar(v);
  } catch (const expr::TypeError&) {
    throw InputError("--" + flag + " must be a scalar in q, got a " + expr::kind_name(v));
  }
}

Rational q_flag(const std::string& source) {
  Rational q0;
  try {
    q0 = parse_rational(source);
  } catch (const std::exception&) {
    throw InputError("--q takes an exact rational such as 1/2, got '" + source + "'");
  }
  if (q0 <= 0) throw InputError("--q must be positive");
  return q0;
}

template <class F>
auto typed(const std::string& source, F&& coerce) {
  expr::Value v = eval_arg(source);
  try {
    return coerce(v);
  } catch (const expr::TypeError& e) {
    throw InputError(std::string(e.what()) + " in '" + source + "'");
  }
}

Json value_json(const expr::Value& v) {
  Json j{{"kind", expr::kind_name(v)}, {"text", expr::to_string(v)}};
  if (auto* s = std::get_if<QRational>(&v)) j["value"] = to_json(*s);
  if (auto* x = std::get_if<AlgebraElement>(&v)) j["value"] = to_json(*x);
  if (auto* x = std::get_if<UEAElement>(&v)) j["value"] = to_json(*x);
  if (auto* f = std::get_if<KForm>(&v)) j["value"] = to_json(*f);
  return j;
}

std::string form_image(const Matrix<ParamPoly>& T, std::size_t col, int target_degree) {
  std::string s;
  for (std::size_t r = 0; r < T.rows(); ++r) {
    const ParamPoly& c = T(r, col);
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string name = basis_name(target_degree, static_cast<int>(r));
    s += (c == ParamPoly(1)) ? name : "(" + c.to_string() + ")" + (target_degree == 0 ? "" : " " + name);
  }
  return s.empty() ? "0" : s;
}

// Eigenvalues of a diagonal matrix with multiplicities, nullopt if not diagonal.
std::optional<std::vector<std::pair<ParamPoly, int>>> diagonal_values(const Matrix<ParamPoly>& M) {
  std::vector<std::pair<ParamPoly, int>> out;
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) {
      if (r != c && !M(r, c).is_zero()) return std::nullopt;
      if (r != c) continue;
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == M(r, r); });
      if (it == out.end()) out.emplace_back(M(r, r), 1);
      else ++it->second;
    }
  return out;
}

std::string values_text(const std::optional<std::vector<std::pair<ParamPoly, int>>>& v) {
  if (!v) return "not diagonal";
  std::string s;
  for (const auto& [x, n] : *v) s += (s.empty() ? "" : ", ") + x.to_string() + " (x" + std::to_string(n) + ")";
  return s;
}

Json values_json(const std::optional<std::vector<std::pair<ParamPoly, int>>>& v) {
  if (!v) return nullptr;
  Json a = Json::array();
  for (const auto& [x, n] : *v) a.push_back({{"value", to_json(x)}, {"multiplicity", n}});
  return a;
}

std::string double_text(double x) {
  std::ostringstream o;
  o.precision(12);
  o << x;
  return o.str();
}

// ---------------------------------------------------------------------------
// Commands

void cmd_normal_form(Output& out, const std::string& source) {
  expr::Value v = eval_arg(source);
  out.text << expr::to_string(v) << "\n";
  out.doc = {{"input", source}, {"result", value_json(v)}};
}

void cmd_act(Output& out, const std::string& vector, const std::string& side, const std::string& source) {
  const auto& X = tangent_basis();
  UEAElement h = vector == "Xm" ? X.X_minus : vector == "Xp" ? X.X_plus : vector == "Xz" ? X.X_z : typed(vector, expr::as_uea);
  AlgebraElement x = typed(source, expr::as_algebra);
  AlgebraElement y = side == "left" ? act_left(h, x) : act_right(x, h);
  out.text << y.to_string() << "\n";
  out.doc = {{"vector", h.to_string()}, {"side", side}, {"input", source}, {"result", to_json(y)}, {"text", y.to_string()}};
}

void cmd_d(Output& out, const std::string& source, Braiding b) {
  KForm f = typed(source, expr::as_form);
  KForm df = f.degree() == 0 ? differential0(f.coeff(0)) : differential(f, b);
  out.text << df.to_string() << "\n";
  out.doc = {{"input", source}, {"braiding", braiding_name(b)}, {"result", to_json(df)}, {"text", df.to_string()}};
}

void cmd_wedge(Output& out, const std::string& lhs, const std::string& rhs, Braiding b) {
  KForm f = typed(lhs, expr::as_form), g = typed(rhs, expr::as_form);
  KForm w = wedge(f, g, b);
  std::string t = w.dim() == 0 ? "0" : w.to_string();
  out.text << t << "\n";
  out.doc = {{"braiding", braiding_name(b)}, {"text", t}};
  if (w.dim() > 0) out.doc["result"] = to_json(w);
}

expr::FormTensor form_tensor(const std::string& source, int length) {
  expr::Value v = eval_arg(source);
  expr::FormTensor t;
  if (auto* x = std::get_if<expr::FormTensor>(&v)) t = *x;
  else if (auto* f = std::get_if<KForm>(&v); f && f->degree() == 1) t = expr::FormTensor::of(*f);
  else throw InputError("expected a tensor of 1-forms such as 'wm ⊗ wp', got a " + expr::kind_name(v));
  if (t.length != length)
    throw InputError("expected a " + std::to_string(length) + "-fold tensor, got " + std::to_string(t.length) + " factors");
  return t;
}

void cmd_sigma(Output& out, const std::string& source, bool inverse) {
  Braiding b = inverse ? Braiding::sigma_inverse : Braiding::sigma;
  auto t = form_tensor(source, 2);
  auto r = expr::apply_word_matrix(sigma_matrix(b), t);
  out.text << r.to_string() << "\n";
  out.doc = {{"input", source}, {"braiding", braiding_name(b)}, {"text", r.to_string()}};
}

void cmd_antisym(Output& out, const std::string& source, int k, Braiding b) {
  auto t = form_tensor(source, k);
  auto r = expr::apply_word_matrix(antisymmetrizer(k, b), t);
  KForm w = expr::to_wedge(t, b);
  out.text << "A(" << k << ") = " << r.to_string() << "\n"
           << "wedge  = " << w.to_string() << "\n"
           << "lambda = " << lambda(k, b).to_string() << "\n";
  out.doc = {{"input", source}, {"k", k}, {"braiding", braiding_name(b)}, {"antisymmetrized", r.to_string()},
             {"wedge", to_json(w)}, {"wedge_text", w.to_string()}, {"lambda", to_json(lambda(k, b))}};
}

void cmd_haar(Output& out, const std::string& source, const std::optional<std::string>& q) {
  AlgebraElement x = typed(source, expr::as_algebra);
  QRational h = haar(x);
  out.text << h.to_string() << "\n";
  out.doc = {{"input", source}, {"haar", to_json(h)}, {"text", h.to_string()}};
  if (q) {
    Rational v = h.evaluate_at(q_flag(*q));
    out.text << "at q = " << *q << ": " << v.get_str() << "\n";
    out.doc["at_q"] = v.get_str();
  }
}

void cmd_grade(Output& out, const std::string& source) {
  AlgebraElement x = typed(source, expr::as_algebra);
  Json parts = Json::array();
  for (const auto& [ch, y] : grade_decompose(x)) {
    out.text << "charge " << ch.n << ": " << y.to_string() << "\n";
    parts.push_back({{"charge", ch.n}, {"element", to_json(y)}, {"text", y.to_string()}});
  }
  if (parts.empty()) out.text << "0\n";
  out.doc = {{"input", source}, {"parts", parts}};
}

struct HodgeFlags {
  std::optional<std::string> alpha, beta, gamma, q;
  bool sigma_inverse = false;
};

// Omitted parameters stay symbolic.
Contraction contraction_from(const HodgeFlags& f, bool default_symmetric_beta) {
  auto param = [](const std::optional<std::string>& s, const char* name, Sym sym) {
    return s ? ParamPoly(scalar_flag(name, *s)) : ParamPoly::symbol(sym);
  };
  Contraction g;
  g.alpha = param(f.alpha, "alpha", Sym::alpha);
  g.gamma = param(f.gamma, "gamma", Sym::gamma);
  g.beta = (!f.beta && default_symmetric_beta) ? ParamPoly(QRational::q(6)) * g.alpha : param(f.beta, "beta", Sym::beta);
  return g;
}

bool numeric(const Contraction& g) { return g.alpha.is_constant() && g.beta.is_constant() && g.gamma.is_constant(); }

void cmd_hodge(Output& out, const HodgeFlags& f) {
  Braiding b = f.sigma_inverse ? Braiding::sigma_inverse : Braiding::sigma;
  Braiding other = f.sigma_inverse ? Braiding::sigma : Braiding::sigma_inverse;
  Contraction g = contraction_from(f, false);
  std::optional<Rational> q0;
  if (f.q) q0 = q_flag(*f.q);
  HodgeOperator T(g, ParamPoly::symbol(Sym::m), b);
  auto at_q = [&](const ParamPoly& p) { return q0 ? p.evaluate_q(*q0) : p; };

  auto& t = out.text;
  t << "contraction: alpha = " << g.alpha.to_string() << ", beta = " << g.beta.to_string() << ", gamma = " << g.gamma.to_string()
    << "; braiding " << braiding_name(b) << (q0 ? "; q = " + q0->get_str() : "") << "\n";
  Json tables = Json::object();
  for (int k = 0; k <= 3; ++k) {
    Matrix<ParamPoly> M = T.matrix(k).transform(at_q);
    Json images = Json::object();
    for (int i = 0; i < form_dim(k); ++i) {
      std::string img = form_image(M, static_cast<std::size_t>(i), 3 - k);
      t << "  T(" << basis_name(k, i) << ") = " << img << "\n";
      images[basis_name(k, i)] = img;
    }
    tables[std::to_string(k)] = {{"matrix", to_json(M)}, {"images", images}};
  }
  bool sym = is_symmetric(T), real = is_real(T);
  t << "symmetric: " << (sym ? "true" : "false") << "\nreal: " << (real ? "true" : "false") << "\n";
  out.doc = {{"parameters", {{"alpha", to_json(g.alpha)}, {"beta", to_json(g.beta)}, {"gamma", to_json(g.gamma)}}},
             {"braiding", braiding_name(b)}, {"T", tables}, {"symmetric", sym}, {"real", real}};
  if (q0) out.doc["q"] = q0->get_str();

  // det, sgn and the normalized volume need numbers; q defaults to 1/2 there.
  Rational qn = q0.value_or(Rational(1, 2));
  if (numeric(g)) {
    try {
      DetSgn ds = det_sgn(T, qn);
      t << "det: " << ds.det.to_string() << "  (det/m^2 at q = " << qn.get_str() << ": " << ds.det_over_m2.re.get_str()
        << "), sgn(g) = " << ds.sgn << "\n";
      out.doc["det"] = {{"symbolic", to_json(ds.det)}, {"over_m2_at_q", ds.det_over_m2.re.get_str()}, {"q", qn.get_str()}, {"sgn", ds.sgn}};
    } catch (const std::exception& e) {
      t << "det: unavailable (" << e.what() << ")\n";
      out.doc["det"] = {{"error", e.what()}};
    }
    try {
      Normalization n = normalize_volume(g, qn, b);
      t << "m^2 = " << n.m_squared.to_string() << " = " << n.m_squared_at_q0.get_str() << " at q = " << qn.get_str()
        << ", m = " << (n.m_exact ? n.m_exact->get_str() : "~" + double_text(n.m_approx)) << ", sgn(g) = " << n.sgn << "\n";
      out.doc["normalization"] = {{"m_squared", to_json(n.m_squared)}, {"m_squared_at_q", n.m_squared_at_q0.get_str()},
                                  {"m_approx", n.m_approx}, {"sgn", n.sgn}};
      if (n.m_exact) out.doc["normalization"]["m_exact"] = n.m_exact->get_str();
      Json sq = Json::object();
      for (int k = 0; k <= 3; ++k) {
        auto vals = diagonal_values(normalized_square(T, k, n.m_squared).transform(at_q));
        t << "  T^2 on degree " << k << ": " << values_text(vals) << "\n";
        sq[std::to_string(k)] = values_json(vals);
      }
      out.doc["T2_eigenvalues"] = sq;
    } catch (const std::exception& e) {
      t << "normalization: unavailable (" << e.what() << ")\n";
      out.doc["normalization"] = {{"error", e.what()}};
    }
  } else {
    Json sq = Json::object();
    for (int k = 0; k <= 3; ++k) {
      auto vals = diagonal_values(T.square(k).transform(at_q));
      t << "  T^2 on degree " << k << ": " << values_text(vals) << "\n";
      sq[std::to_string(k)] = values_json(vals);
    }
    out.doc["T2_eigenvalues"] = sq;
  }

  // comparison with the operator built from the other braiding
  HodgeOperator Tp(g, ParamPoly::symbol(Sym::m), other);
  bool sym_other = is_symmetric(Tp);
  Json cmp{{"braiding", braiding_name(other)}, {"symmetric", sym_other}};
  t << braiding_name(other) << ": symmetric " << (sym_other ? "true" : "false");
  if (b == Braiding::sigma) {
    CommutatorReport cr = commutator_check(g);
    cmp["commutator_nonzero"] = cr.found;
    if (cr.found) {
      cmp["witness"] = basis_name(cr.degree, cr.basis_index);
      cmp["witness_count"] = cr.witnesses.size();
    }
    t << "; [T, T'] " << (cr.found ? "!= 0 on " + basis_name(cr.degree, cr.basis_index) : "= 0 on every basis form");
  }
  bool same = true;
  for (int k = 0; k <= 3; ++k) {
    auto a = diagonal_values(T.square(k)), c = diagonal_values(Tp.square(k));
    std::vector<int> ma, mc;
    if (a) for (const auto& p : *a) ma.push_back(p.second);
    if (c) for (const auto& p : *c) mc.push_back(p.second);
    same = same && a.has_value() == c.has_value() && ma == mc;
  }
  cmp["same_T2_multiplicities"] = same;
  t << "; T^2 multiplicities match: " << (same ? "true" : "false") << "\n";
  out.doc["comparison"] = cmp;
}

void cmd_sphere_hodge(Output& out, const HodgeFlags& f) {
  Contraction g = contraction_from(f, true);
  std::optional<Rational> q0;
  if (f.q) q0 = q_flag(*f.q);
  auto at_q = [&](const ParamPoly& p) { return q0 ? p.evaluate_q(*q0) : p; };
  SphereHodge H(g);
  ParamPoly mc2 = sphere_mc_squared(g);
  auto sq = H.square_scalars();
  auto& t = out.text;
  t << "contraction: alpha = " << g.alpha.to_string() << ", beta = " << g.beta.to_string() << ", gamma = " << g.gamma.to_string()
    << (q0 ? "; q = " + q0->get_str() : "") << "\n";
  t << "  T(1)      = (" << at_q(H.t0()).to_string() << ") wm^wp\n"
    << "  T(v wm)   = (" << at_q(H.t_minus()).to_string() << ") v wm   for v in L_-2\n"
    << "  T(v wp)   = (" << at_q(H.t_plus()).to_string() << ") v wp   for v in L_+2\n"
    << "  T(wm^wp)  = " << at_q(H.t2()).to_string() << "\n";
  t << "mc^2 = " << at_q(mc2).to_string() << "\n";
  Json sqj = Json::array();
  const char* parts[] = {"functions", "wm part", "wp part", "2-forms"};
  for (int i = 0; i < 4; ++i) {
    ParamPoly v = at_q(sq[static_cast<std::size_t>(i)].substitute_square(Sym::mc, mc2));
    t << "  T^2 on " << parts[i] << ": " << v.to_string() << "\n";
    sqj.push_back({{"summand", parts[i]}, {"value", to_json(v)}});
  }
  auto adj = adjudicate_two_form(H);
  t << "T(wm^wp): derived " << at_q(adj.derived).to_string() << "; printed candidate " << at_q(adj.printed).to_string()
    << "; alternative " << at_q(adj.alternative).to_string() << "; verdict: " << verdict_name(adj.verdict) << "\n";
  out.doc = {{"parameters", {{"alpha", to_json(g.alpha)}, {"beta", to_json(g.beta)}, {"gamma", to_json(g.gamma)}}},
             {"t0", to_json(at_q(H.t0()))},
             {"t_minus", to_json(at_q(H.t_minus()))},
             {"t_plus", to_json(at_q(H.t_plus()))},
             {"t2", to_json(at_q(H.t2()))},
             {"mc_squared", to_json(at_q(mc2))},
             {"T2", sqj},
             {"two_form", {{"derived", to_json(at_q(adj.derived))}, {"printed", to_json(at_q(adj.printed))},
                           {"alternative", to_json(at_q(adj.alternative))}, {"verdict", verdict_name(adj.verdict)}}}};
  if (q0) out.doc["q"] = q0->get_str();
}

void cmd_laplacian(Output& out, const std::optional<std::string>& q, const std::string& alpha_s, const std::string& gamma_s,
                   int degree, const std::optional<int>& charge) {
  if (degree < 1) throw InputError("--degree must be at least 1");
  QRational alpha = scalar_flag("alpha", alpha_s), gamma = scalar_flag("gamma", gamma_s);
  FilteredMatrix M = box_matrix(alpha, gamma, degree, charge);
  Json basis = Json::array();
  for (const auto& m : M.basis) basis.push_back(m.to_string());
  auto& t = out.text;
  t << "basis (" << M.basis.size() << "):";
  for (const auto& m : M.basis) t << " " << m.to_string();
  t << "\n";
  if (M.degree != M.requested_degree) t << "span enlarged to degree " << M.degree << " for closure\n";
  out.doc = {{"alpha", to_json(alpha)}, {"gamma", to_json(gamma)}, {"degree", M.requested_degree}, {"effective_degree", M.degree},
             {"charge", charge ? Json(*charge) : Json(nullptr)}, {"basis", basis}, {"charge_block_diagonal", charge_block_diagonal(M)}};
  if (!q) {
    Json rows = Json::array();
    t << "matrix (column j = box of basis j):\n";
    for (std::size_t r = 0; r < M.matrix.rows(); ++r) {
      Json row = Json::array();
      t << " ";
      for (std::size_t c = 0; c < M.matrix.cols(); ++c) {
        row.push_back(M.matrix(r, c).to_string());
        t << " [" << M.matrix(r, c).to_string() << "]";
      }
      t << "\n";
      rows.push_back(row);
    }
    out.doc["matrix"] = rows;
    t << "(pass --q for the spectrum)\n";
    return;
  }
  Rational q0 = q_flag(*q);
  Matrix<Rational> N = evaluate_matrix(M.matrix, q0);
  Json rows = Json::array();
  t << "matrix at q = " << q0.get_str() << " (column j = box of basis j):\n";
  for (std::size_t r = 0; r < N.rows(); ++r) {
    Json row = Json::array();
    t << " ";
    for (std::size_t c = 0; c < N.cols(); ++c) {
      row.push_back(N(r, c).get_str());
      t << " " << N(r, c).get_str();
    }
    t << "\n";
    rows.push_back(row);
  }
  Spectrum s = spectrum_numeric(N);
  Json eig = Json::array();
  t << "eigenvalues (" << (s.exact ? "exact isolation" : "floating point") << "):\n";
  for (const auto& e : s.eigenvalues) {
    Json ej{{"value", e.value}, {"imag", e.imag}, {"multiplicity", e.multiplicity}};
    t << "  " << double_text(e.value);
    if (e.imag != 0) t << (e.imag > 0 ? " + " : " - ") << double_text(std::abs(e.imag)) << "i";
    if (e.multiplicity > 1) t << "  (x" << e.multiplicity << ")";
    if (e.interval) {
      ej["interval"] = {e.interval->first.get_str(), e.interval->second.get_str()};
      t << "  in (" << e.interval->first.get_str() << ", " << e.interval->second.get_str() << "]";
    }
    t << "\n";
    eig.push_back(ej);
  }
  t << "negative " << s.negative << ", zero " << s.zero << ", positive " << s.positive;
  if (s.nonreal) t << ", nonreal " << s.nonreal;
  if (!s.exact) t << ", max residual " << double_text(s.max_residual);
  t << "\n";
  out.doc["q"] = q0.get_str();
  out.doc["matrix"] = rows;
  out.doc["eigenvalues"] = eig;
  out.doc["exact"] = s.exact;
  out.doc["counts"] = {{"negative", s.negative}, {"zero", s.zero}, {"positive", s.positive}, {"nonreal", s.nonreal}};
  if (!s.exact) out.doc["max_residual"] = s.max_residual;
}

int cmd_verify(Output& out, const std::string& suite, bool serial) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else names.push_back(suite);
  auto reports = run_suites(names, !serial);
  bool ok = true;
  int total = 0, passed = 0;
  Json arr = Json::array();
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      out.text << (c.passed ? "[PASS] " : "[FAIL] ") << r.suite << "/" << c.name;
      if (!c.detail.empty()) out.text << ": " << c.detail;
      out.text << "\n";
      ++total;
      passed += c.passed ? 1 : 0;
    }
    ok = ok && r.passed();
    arr.push_back(r);
  }
  out.text << passed << "/" << total << " checks passed\n";
  out.doc = {{"suites", arr}, {"passed", ok}};
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic engine for the 3d calculus on SU_q(2)"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  if (const char* dir = std::getenv("QHODGE_CACHE_DIR"); dir && *dir) set_haar_cache_dir(dir);

  std::string source, source2;
  bool sigma_inverse = false;
  Output out;
  std::function<int()> action;

  auto* nf = app.add_subcommand("normal-form", "Evaluate an expression to its normal form");
  nf->add_option("expr", source)->required();
  nf->callback([&] { action = [&] { return cmd_normal_form(out, source), 0; }; });

  std::string vec = "Xz", side = "left";
  auto* act = app.add_subcommand("act", "Left or right action of a vector on an algebra element");
  act->add_option("expr", source)->required();
  act->add_option("--vector", vec, "Xm, Xp, Xz or an enveloping-algebra expression");
  act->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  act->callback([&] { action = [&] { return cmd_act(out, vec, side, source), 0; }; });

  auto* d = app.add_subcommand("d", "Exterior derivative");
  d->add_option("expr", source)->required();
  d->add_flag("--sigma-inverse", sigma_inverse);
  d->callback([&] {
    action = [&] { return cmd_d(out, source, sigma_inverse ? Braiding::sigma_inverse : Braiding::sigma), 0; };
  });

  auto* w = app.add_subcommand("wedge", "Wedge product of two forms");
  w->add_option("lhs", source)->required();
  w->add_option("rhs", source2)->required();
  w->add_flag("--sigma-inverse", sigma_inverse);
  w->callback([&] {
    action = [&] { return cmd_wedge(out, source, source2, sigma_inverse ? Braiding::sigma_inverse : Braiding::sigma), 0; };
  });

  bool inverse = false;
  auto* sg = app.add_subcommand("sigma", "Apply the braiding to a tensor of two 1-forms");
  sg->add_option("expr", source)->required();
  sg->add_flag("--inverse", inverse);
  sg->callback([&] { action = [&] { return cmd_sigma(out, source, inverse), 0; }; });

  int k = 2;
  auto* an = app.add_subcommand("antisym", "Apply the antisymmetriser to a tensor of 1-forms");
  an->add_option("expr", source)->required();
  an->add_option("--k", k)->check(CLI::IsMember({2, 3}));
  an->add_flag("--sigma-inverse", sigma_inverse);
  an->callback([&] {
    action = [&] { return cmd_antisym(out, source, k, sigma_inverse ? Braiding::sigma_inverse : Braiding::sigma), 0; };
  });

  HodgeFlags hf;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--alpha", hf.alpha, "g(wm, wp); omitted means symbolic");
    sub->add_option("--beta", hf.beta, "g(wp, wm)");
    sub->add_option("--gamma", hf.gamma, "g(wz, wz)");
    sub->add_option("--q", hf.q, "exact rational value of q");
  };
  auto* ho = app.add_subcommand("hodge", "Hodge operator of a contraction");
  add_params(ho);
  ho->add_flag("--sigma-inverse", hf.sigma_inverse, "build T from the inverse braiding");
  ho->callback([&] { action = [&] { return cmd_hodge(out, hf), 0; }; });

  auto* sh = app.add_subcommand("sphere-hodge", "Induced Hodge operator on the Podles sphere (beta defaults to q^6 alpha)");
  add_params(sh);
  sh->callback([&] { action = [&] { return cmd_sphere_hodge(out, hf), 0; }; });

  std::optional<std::string> lq;
  std::string la = "1", lg = "1";
  int degree = 1;
  std::optional<int> charge;
  auto* lp = app.add_subcommand("laplacian", "Matrix and spectrum of the scalar Laplacian on a filtered subspace");
  lp->add_option("--q", lq, "exact rational value of q");
  lp->add_option("--alpha", la);
  lp->add_option("--gamma", lg);
  lp->add_option("--degree", degree, "PBW degree bound D");
  lp->add_option("--charge", charge, "restrict to one U(1) charge sector");
  lp->callback([&] { action = [&] { return cmd_laplacian(out, lq, la, lg, degree, charge), 0; }; });

  std::string suite = "all";
  bool serial = false;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  auto* ve = app.add_subcommand("verify", "Run verification suites; exit 0 iff every check passes");
  ve->add_option("--suite", suite)->check(CLI::IsMember(suites));
  ve->add_flag("--serial", serial, "run suites one after another");
  ve->callback([&] { action = [&] { return cmd_verify(out, suite, serial); }; });

  std::optional<std::string> hq;
  auto* hs = app.add_subcommand("haar", "Haar state of an algebra element");
  hs->add_option("expr", source)->required();
  hs->add_option("--q", hq);
  hs->callback([&] { action = [&] { return cmd_haar(out, source, hq), 0; }; });

  auto* gr = app.add_subcommand("grade", "Decompose into U(1) charge sectors");
  gr->add_option("expr", source)->required();
  gr->callback([&] { action = [&] { return cmd_grade(out, source), 0; }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  out.json = format == "json";
  try {
    int code = action();
    out.emit();
    return code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
