#include "resloc/json_io.hpp"

#include "resloc/error.hpp"

namespace resloc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

size_t form_index(const Json& d, const Arrangement& a) {
  long i = field(d, "form").get<long>();
  if (i < 0 || size_t(i) >= a.forms.size()) bad("denominator form index out of range");
  return size_t(i);
}

// (index, scale) with y = scale * forms[index].
std::pair<size_t, Rational> locate(const AffineForm& y, const Arrangement& a) {
  for (size_t i = 0; i < a.forms.size(); ++i) {
    const auto& x = a.forms[i];
    if (!proportional(x.linear, y.linear)) continue;
    size_t piv = 0;
    while (x.linear[piv] == 0) ++piv;
    Rational c = y.linear[piv] / x.linear[piv];
    if (x.scaled(c) == y) return {i, c};
  }
  bad("denominator form not in the arrangement");
}

Json denominator_json(const std::vector<DenFactor>& den, const Arrangement& a) {
  Json out = Json::array();
  for (const auto& d : den) {
    auto [i, c] = locate(d.form, a);
    Json e{{"form", i}, {"power", d.power}};
    if (c != 1) e["scale"] = to_json(c);
    out.push_back(e);
  }
  return out;
}

std::vector<DenFactor> denominator_from_json(const Json& j, const Arrangement& a) {
  std::vector<DenFactor> out;
  for (const auto& d : j) {
    Rational c = d.contains("scale") ? rational_from_json(d["scale"]) : Rational(1);
    if (c == 0) bad("zero denominator scale");
    int p = d.value("power", 1);
    if (p < 0) bad("negative denominator power");
    out.push_back({a.forms[form_index(d, a)].scaled(c), p});
  }
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return rational_to_json(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(static_cast<long>(j.get<long long>())));
  bad("expected a rational as \"p/q\" or an integer");
}

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a vector");
  Vec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const Mat& m) {
  Json out = Json::array();
  for (const auto& r : m) out.push_back(to_json(r));
  return out;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a matrix");
  Mat m;
  for (const auto& r : j) m.push_back(vec_from_json(r));
  for (const auto& r : m)
    if (r.size() != m[0].size()) bad("ragged matrix");
  return m;
}

Json to_json(const Cyclotomic& c) { return Json{{"order", c.order()}, {"coeffs", to_json(c.coeffs())}}; }

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_string() || j.is_number()) return Cyclotomic(rational_from_json(j));
  long n = field(j, "order").get<long>();
  if (n < 1) bad("cyclotomic order must be positive");
  // Any length is accepted and reduced into the power basis.
  return Cyclotomic(n, reduce_cyclotomic(n, vec_from_json(field(j, "coeffs"))));
}

Json to_json(const Scalar& s) {
  Json out = Json::array();
  for (const auto& [k, c] : s.terms()) {
    Json t = to_json(c);
    t["upow"] = k;
    out.push_back(t);
  }
  return out;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string() || j.is_number()) return Scalar(rational_from_json(j));
  if (!j.is_array()) bad("expected a scalar term list");
  Scalar s;
  for (const auto& t : j) s += Scalar::u_power(t.value("upow", 0), cyclotomic_from_json(t));
  return s;
}

Json to_json(const Lattice& l) { return Json{{"basis", to_json(l.basis())}}; }

Lattice lattice_from_json(const Json& j) { return Lattice(mat_from_json(field(j, "basis"))); }

Json to_json(const AffineForm& y) { return Json{{"linear", to_json(y.linear)}, {"constant", to_json(y.constant)}}; }

AffineForm affine_form_from_json(const Json& j) {
  Rational c = j.contains("constant") ? rational_from_json(j["constant"]) : Rational(0);
  return AffineForm(vec_from_json(field(j, "linear")), c);
}

Json to_json(const Arrangement& a) {
  Json forms = Json::array();
  for (const auto& y : a.forms) forms.push_back(to_json(y));
  return Json{{"forms", forms}, {"central", a.central}};
}

Arrangement arrangement_from_json(const Json& j) {
  Arrangement a;
  for (const auto& y : field(j, "forms")) a.forms.push_back(affine_form_from_json(y));
  if (a.forms.empty()) bad("arrangement without forms");
  bool all_zero = true;
  for (const auto& y : a.forms) {
    if (y.dim() != a.forms[0].dim()) bad("forms of different dimension");
    if (is_zero(y.linear)) bad("form with zero linear part");
    all_zero = all_zero && y.constant == 0;
  }
  a.central = j.value("central", all_zero);
  if (a.central && !all_zero) bad("central arrangement with nonzero constants");
  return a;
}

Json to_json(const TrigRationalFunction& f, const Arrangement& a) {
  Json num = Json::array();
  for (const auto& w : f.numerator) num.push_back(Json{{"weight", to_json(w.weight)}, {"coeff", to_json(w.coeff)}});
  return Json{{"numerator", num}, {"denominator", denominator_json(f.denominator, a)}};
}

TrigRationalFunction trig_function_from_json(const Json& j, const Arrangement& a) {
  TrigRationalFunction f;
  for (const auto& w : field(j, "numerator")) {
    Scalar c = w.contains("coeff") ? scalar_from_json(w["coeff"]) : Scalar(1);
    f.numerator.push_back({vec_from_json(field(w, "weight")), c});
  }
  f.denominator = denominator_from_json(j.value("denominator", Json::array()), a);
  for (const auto& w : f.numerator)
    if (w.weight.size() != a.dim()) bad("numerator weight of wrong dimension");
  return f;
}

Json to_json(const RationalSummand& f, const Arrangement& a) {
  Json num = Json::array();
  for (const auto& [mono, c] : f.numerator.terms) num.push_back(Json{{"exponents", mono}, {"coeff", to_json(c)}});
  return Json{{"numerator", num}, {"denominator", denominator_json(f.denominator, a)}, {"underlined", f.underlined}};
}

RationalSummand rational_summand_from_json(const Json& j, const Arrangement& a) {
  RationalSummand f;
  for (const auto& t : field(j, "numerator")) {
    auto mono = field(t, "exponents").get<Monomial>();
    if (mono.size() != a.dim()) bad("monomial of wrong dimension");
    for (int e : mono)
      if (e < 0) bad("negative exponent in numerator");
    Polynomial p;
    p.terms[mono] = t.contains("coeff") ? scalar_from_json(t["coeff"]) : Scalar(1);
    f.numerator += p;
  }
  f.denominator = denominator_from_json(j.value("denominator", Json::array()), a);
  f.underlined = j.value("underlined", false);
  return f;
}

namespace {

Json atom_json(const Atom& at) {
  Json j;
  switch (at.kind) {
    case Atom::Kind::FormPower:
      j = {{"kind", "form_power"}, {"form", to_json(at.form)}, {"exponent", at.exponent}};
      break;
    case Atom::Kind::ExpFrac:
      j = {{"kind", "exp_frac"}, {"form", to_json(at.form)}, {"exponent", at.exponent}};
      break;
    case Atom::Kind::ExpSum: {
      Json ts = Json::array();
      for (const auto& t : at.terms)
        ts.push_back(Json{{"weight", to_json(t.weight)}, {"constant", to_json(t.constant)}, {"coeff", to_json(t.coeff)}});
      j = {{"kind", "exp_sum"}, {"terms", ts}};
      break;
    }
  }
  if (at.kind != Atom::Kind::FormPower) j["underlined"] = at.underlined;
  return j;
}

Atom atom_from_json(const Json& j) {
  auto kind = field(j, "kind").get<std::string>();
  bool u = j.value("underlined", true);
  if (kind == "form_power") return Atom::form_power(affine_form_from_json(field(j, "form")), j.value("exponent", 1));
  if (kind == "exp_frac") return Atom::exp_frac(affine_form_from_json(field(j, "form")), j.value("exponent", 1), u);
  if (kind == "exp") {
    Rational c = j.contains("constant") ? rational_from_json(j["constant"]) : Rational(0);
    return Atom::exponential(vec_from_json(field(j, "weight")), c, u);
  }
  if (kind == "exp_sum") {
    std::vector<ExpTerm> ts;
    for (const auto& t : field(j, "terms")) {
      ExpTerm e;
      e.weight = vec_from_json(field(t, "weight"));
      e.constant = t.contains("constant") ? rational_from_json(t["constant"]) : Rational(0);
      e.coeff = t.contains("coeff") ? cyclotomic_from_json(t["coeff"]) : Cyclotomic(1);
      ts.push_back(e);
    }
    return Atom::exp_sum(ts, u);
  }
  bad("unknown atom kind '" + kind + "'");
}

}  // namespace

Json to_json(const FunctionExpr& f) {
  Json terms = Json::array();
  for (const auto& p : f.terms) {
    Json atoms = Json::array();
    for (const auto& a : p.atoms) atoms.push_back(atom_json(a));
    terms.push_back(Json{{"coeff", to_json(p.coeff)}, {"atoms", atoms}});
  }
  return Json{{"terms", terms}};
}

FunctionExpr function_expr_from_json(const Json& j) {
  FunctionExpr f;
  for (const auto& t : field(j, "terms")) {
    Product p;
    if (t.contains("coeff")) p.coeff = scalar_from_json(t["coeff"]);
    for (const auto& a : t.value("atoms", Json::array())) p.atoms.push_back(atom_from_json(a));
    f.terms.push_back(p);
  }
  return f;
}

RootSystem root_system_from_json(const Json& j) {
  auto fam = field(j, "family").get<std::string>();
  if (fam.size() != 1) throw Error(ErrorKind::UnsupportedFamily, "family '" + fam + "'");
  long n = field(j, "rank").get<long>();
  if (n < 1) throw Error(ErrorKind::UnsupportedFamily, "rank must be positive");
  return build_root_system(fam[0], size_t(n));
}

Json to_json(const Quasipolynomial& q) {
  Json polys = Json::array();
  for (const auto& p : q.polys) polys.push_back(to_json(p));
  return Json{{"period", q.period}, {"polys", polys}};
}

Quasipolynomial quasipolynomial_from_json(const Json& j) {
  Quasipolynomial q;
  q.period = field(j, "period").get<long>();
  for (const auto& p : field(j, "polys")) q.polys.push_back(vec_from_json(p));
  if (q.period < 1 || q.polys.size() != size_t(q.period)) bad("quasipolynomial period does not match polys");
  return q;
}

}  // namespace resloc
