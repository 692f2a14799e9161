#include "operforge/json_io.hpp"

namespace operforge::io {

namespace {

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where, std::string("missing member \"") + key + "\"");
  return *it;
}

int int_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  auto v = j.get<long long>();
  if (v < -(ScalarSeries::kExact / 2) || v > ScalarSeries::kExact / 2) throw ParseError(where, "integer out of range");
  return int(v);
}

const Json& array(const Json& j, const std::string& where, std::size_t size = std::size_t(-1)) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  if (size != std::size_t(-1) && j.size() != size)
    throw ParseError(where, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
  return j;
}

struct Window {
  int lo = 0, prec = 0;
  bool exact = false;
};

Window window_from_json(const Json& j, const std::string& where) {
  Window w;
  const Json& win = array(member(j, "window", where), where + ".window", 2);
  w.lo = int_from_json(win[0], where + ".window[0]");
  w.prec = int_from_json(win[1], where + ".window[1]");
  if (w.prec < w.lo) throw ParseError(where + ".window", "precision bound below the minimal degree");
  if (auto it = j.find("exact"); it != j.end()) {
    if (!it->is_boolean()) throw ParseError(where + ".exact", "expected a boolean");
    w.exact = it->get<bool>();
  }
  return w;
}

int check_degree(const Json& j, const Window& w, const std::string& where) {
  int d = int_from_json(j, where);
  if (d < w.lo || d >= w.prec) throw ParseError(where, "degree " + std::to_string(d) + " outside the window");
  return d;
}

Json window_json(int lo, int prec, bool exact) {
  Json j = Json::object();
  j["window"] = Json::array({lo, prec});
  if (exact) j["exact"] = true;
  return j;
}

void assign_coeff(ScalarSeries& s, int deg, const Rational& c, int prec) {
  if (c != 0) s += ScalarSeries::monomial(c, deg, prec);
}

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>(), where);
  throw ParseError(where, "expected a rational as \"p/q\" or an integer");
}

Json to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Vec vec_from_json(const Json& j, const std::string& where, int size) {
  array(j, where, size < 0 ? std::size_t(-1) : std::size_t(size));
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (int i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

Json to_json(const ScalarSeries& s) {
  bool exact = s.exact();
  int prec = exact ? (s.is_zero() ? 0 : s.highest() + 1) : s.prec();
  int lo = s.is_zero() ? prec : s.valuation();
  if (exact && s.is_zero()) lo = 0;
  Json j = window_json(lo, prec, exact);
  Json coeffs = Json::array();
  if (!s.is_zero())
    for (int k = s.lowest(); k <= s.highest(); ++k)
      if (s.coeff(k) != 0) coeffs.push_back(Json::array({k, to_json(s.coeff(k))}));
  j["coeffs"] = coeffs;
  return j;
}

ScalarSeries scalar_from_json(const Json& j, const std::string& where, int cap) {
  Window w = window_from_json(j, where);
  int prec = w.exact ? ScalarSeries::kExact : w.prec;
  ScalarSeries s = ScalarSeries::zero(prec);
  const Json& coeffs = array(member(j, "coeffs", where), where + ".coeffs");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::string at = where + ".coeffs[" + std::to_string(i) + "]";
    const Json& pair = array(coeffs[i], at, 2);
    int d = check_degree(pair[0], w, at + "[0]");
    assign_coeff(s, d, rational_from_json(pair[1], at + "[1]"), prec);
  }
  return s.truncated(std::min(prec, cap));
}

Json to_json(const LieSeries& s, const std::string& space) {
  bool exact = true;
  int prec = ScalarSeries::kExact, lo = ScalarSeries::kExact, hi = -ScalarSeries::kExact;
  for (int a = 0; a < s.dim(); ++a) {
    if (!s[a].exact()) {
      exact = false;
      prec = std::min(prec, s[a].prec());
    }
  }
  LieSeries t = exact ? s : s.truncated(prec);
  for (int a = 0; a < t.dim(); ++a)
    if (!t[a].is_zero()) {
      lo = std::min(lo, t[a].lowest());
      hi = std::max(hi, t[a].highest());
    }
  bool zero = lo == ScalarSeries::kExact;
  if (exact) prec = zero ? 0 : hi + 1;
  if (zero) lo = exact ? 0 : prec;
  Json j = Json::object();
  j["space"] = space;
  j.update(window_json(lo, prec, exact));
  Json coeffs = Json::array();
  if (!zero)
    for (int k = lo; k <= hi; ++k) {
      Vec c(t.dim());
      bool nz = false;
      for (int a = 0; a < t.dim(); ++a) {
        c[a] = t[a].is_zero() ? Rational(0) : t[a].coeff(k);
        if (c[a] != 0) nz = true;
      }
      if (nz) coeffs.push_back(Json::array({k, to_json(c)}));
    }
  j["coeffs"] = coeffs;
  return j;
}

LieSeries lie_from_json(const Json& j, const std::string& space, int dim, const std::string& where, int cap) {
  if (auto it = j.find("space"); j.is_object() && it != j.end()) {
    if (!it->is_string() || it->get<std::string>() != space)
      throw ParseError(where + ".space", "expected space \"" + space + "\"");
  }
  Window w = window_from_json(j, where);
  int prec = w.exact ? ScalarSeries::kExact : w.prec;
  LieSeries s(dim);
  for (int a = 0; a < dim; ++a) s[a] = ScalarSeries::zero(prec);
  const Json& coeffs = array(member(j, "coeffs", where), where + ".coeffs");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::string at = where + ".coeffs[" + std::to_string(i) + "]";
    const Json& pair = array(coeffs[i], at, 2);
    int d = check_degree(pair[0], w, at + "[0]");
    Vec c = vec_from_json(pair[1], at + "[1]", dim);
    for (int a = 0; a < dim; ++a) assign_coeff(s[a], d, c[a], prec);
  }
  return s.truncated(std::min(prec, cap));
}

Json to_json(const Algebra& alg, const CanonicalOper& C) {
  Json j = Json::object();
  j["kind"] = "canonical_oper";
  Json v = Json::array();
  for (const auto& b : alg.principal.vcan)
    for (std::size_t i = 0; i < b.basis.size(); ++i)
      v.push_back(Json{{"degree", b.degree}, {"series", to_json(C.v[b.offset + i])}});
  j["v"] = v;
  return j;
}

CanonicalOper canonical_from_json(const Algebra& alg, const Json& j, const std::string& where, int cap) {
  const Json& v = array(member(j, "v", where), where + ".v", std::size_t(alg.principal.vcan_dim));
  CanonicalOper C;
  int idx = 0;
  for (const auto& b : alg.principal.vcan)
    for (std::size_t i = 0; i < b.basis.size(); ++i, ++idx) {
      std::string at = where + ".v[" + std::to_string(idx) + "]";
      int d = int_from_json(member(v[idx], "degree", at), at + ".degree");
      if (d != b.degree) throw ParseError(at + ".degree", "expected degree " + std::to_string(b.degree));
      C.v.push_back(scalar_from_json(member(v[idx], "series", at), at + ".series", cap));
    }
  return C;
}

Json to_json(const RawOper& raw) {
  Json j = Json::object();
  j["kind"] = "raw_oper";
  Json phi = Json::array();
  for (const auto& s : raw.phi) phi.push_back(to_json(s));
  j["phi"] = phi;
  j["q"] = to_json(raw.q, "g");
  return j;
}

RawOper raw_from_json(const Algebra& alg, const Json& j, const std::string& where, int cap) {
  RawOper raw;
  const Json& phi = array(member(j, "phi", where), where + ".phi", std::size_t(alg.rank()));
  for (std::size_t i = 0; i < phi.size(); ++i)
    raw.phi.push_back(scalar_from_json(phi[i], where + ".phi[" + std::to_string(i) + "]", cap));
  raw.q = lie_from_json(member(j, "q", where), "g", alg.dim(), where + ".q", cap);
  for (int k = 0; k < alg.lie.npos(); ++k)
    if (!raw.q[alg.lie.f(k)].is_zero()) throw ParseError(where + ".q", "q must lie in b (nonzero f-component)");
  return raw;
}

Json to_json(const HConnection& chi) {
  LieSeries u(int(chi.u.size()));
  for (std::size_t i = 0; i < chi.u.size(); ++i) u[int(i)] = chi.u[i];
  Json j = Json::object();
  j["kind"] = "h_connection";
  j["u"] = to_json(u, "h");
  return j;
}

HConnection hconn_from_json(const Algebra& alg, const Json& j, const std::string& where, int cap) {
  LieSeries u = lie_from_json(member(j, "u", where), "h", alg.rank(), where + ".u", cap);
  HConnection chi;
  for (int i = 0; i < alg.rank(); ++i) chi.u.push_back(u[i]);
  return chi;
}

Json to_json(const CartanOrbitPoint& p) { return Json{{"kind", "orbit_point"}, {"coords", to_json(p.coords)}}; }

CartanOrbitPoint orbit_point_from_json(const Algebra& alg, const Json& j, const std::string& where) {
  return {vec_from_json(member(j, "coords", where), where + ".coords", alg.principal.vcan_dim)};
}

Json to_json(const GaugeElement& g) {
  Json factors = Json::array();
  for (const auto& f : g.factors) {
    if (f.kind == GaugeFactor::Kind::Torus) {
      Json t = Json::array();
      for (const auto& c : f.torus) t.push_back(to_json(c));
      factors.push_back(Json{{"torus", t}});
    } else {
      factors.push_back(Json{{"exp", to_json(f.unipotent, "n")}});
    }
  }
  return Json{{"kind", "gauge"}, {"factors", factors}};
}

GaugeElement gauge_from_json(const Algebra& alg, const Json& j, const std::string& where, int cap) {
  const Json& fs = array(member(j, "factors", where), where + ".factors");
  GaugeElement g;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::string at = where + ".factors[" + std::to_string(i) + "]";
    if (fs[i].is_object() && fs[i].contains("torus")) {
      const Json& t = array(fs[i]["torus"], at + ".torus", std::size_t(alg.rank()));
      std::vector<ScalarSeries> c;
      for (std::size_t k = 0; k < t.size(); ++k)
        c.push_back(scalar_from_json(t[k], at + ".torus[" + std::to_string(k) + "]", cap));
      g.then(GaugeFactor::from_torus(std::move(c)));
    } else if (fs[i].is_object() && fs[i].contains("exp")) {
      LieSeries u = lie_from_json(fs[i]["exp"], "n", alg.dim(), at + ".exp", cap);
      for (int a = 0; a < alg.dim(); ++a)
        if (!alg.lie.is_e(a) && !u[a].is_zero()) throw ParseError(at + ".exp", "exponent must lie in n");
      for (int a = 0; a < alg.dim(); ++a)
        if (!alg.lie.is_e(a)) u[a] = ScalarSeries();
      g.then(GaugeFactor::from_exp(std::move(u)));
    } else {
      throw ParseError(at, "expected a \"torus\" or \"exp\" factor");
    }
  }
  return g;
}

Json to_json(const AffineWeight& w) { return Json{{"delta", to_json(w.n)}, {"finite", to_json(w.finite)}}; }

Json algebra_info(const Algebra& alg) {
  const auto& rd = alg.root;
  const auto& g = alg.lie;
  const auto& pd = alg.principal;
  Json j = Json::object();
  j["kind"] = "algebra";
  j["type"] = std::string(1, rd.family) + std::to_string(rd.rank);
  j["rank"] = rd.rank;
  j["dim"] = g.dim();
  j["coxeter_number"] = rd.coxeter_number;
  j["weyl_order"] = rd.weyl_order;
  j["exponents"] = rd.exponents;
  j["cartan"] = rd.cartan;
  j["gram"] = to_json(rd.gram);
  j["positive_roots"] = rd.positive_roots;
  Json basis = Json::array();
  for (int a = 0; a < g.dim(); ++a) basis.push_back(Json{{"label", g.label(a)}, {"degree", g.degree(a)}});
  j["basis"] = basis;
  Json p = Json::object();
  p["p_minus1"] = to_json(pd.p_minus1);
  p["rho_check"] = to_json(pd.rho_check);
  p["p1"] = to_json(pd.p1);
  Json fc = Json::array();
  for (const auto& w : pd.fundamental_coweights) fc.push_back(to_json(w));
  p["fundamental_coweights"] = fc;
  Json vc = Json::array();
  for (const auto& b : pd.vcan) {
    Json bb = Json::array();
    for (const auto& x : b.basis) bb.push_back(to_json(x));
    vc.push_back(Json{{"degree", b.degree}, {"basis", bb}});
  }
  p["vcan"] = vc;
  j["principal"] = p;
  return j;
}

std::string kind_of(const Json& j, const std::string& where) {
  const Json& k = member(j, "kind", where);
  if (!k.is_string()) throw ParseError(where + ".kind", "expected a string");
  return k.get<std::string>();
}

}  // namespace operforge::io
