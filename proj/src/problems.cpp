#include "resloc/problems.hpp"

#include <fstream>

#include "resloc/error.hpp"

namespace resloc {

namespace {

Vec vec_or_zero(const Json& j, const char* key, size_t dim) {
  Vec v = j.contains(key) ? vec_from_json(j[key]) : Vec(dim, Rational(0));
  if (v.size() != dim) throw Error(ErrorKind::InvalidInput, std::string("'") + key + "' has the wrong dimension");
  return v;
}

Lattice lattice_or_standard(const Json& j, const char* key, size_t dim) {
  if (!j.contains(key)) return Lattice::standard(dim);
  Lattice l = lattice_from_json(j[key]);
  if (l.dim() != dim) throw Error(ErrorKind::InvalidInput, std::string("'") + key + "' has the wrong dimension");
  return l;
}

Vec checked(const Vec& v, size_t dim, const char* what) {
  if (v.size() != dim) throw Error(ErrorKind::InvalidInput, std::string(what) + " has the wrong dimension");
  return v;
}

void put_result(Json& out, const Scalar& s) {
  out["result"] = to_json(s);
  out["pretty"] = s.pretty();
}

Json vec_list(const std::vector<Vec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

void check_problem(const Json& j, const std::string& kind) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "problem must be a JSON object");
  if (!j.value("version", Json(1)).is_number_integer() || j.value("version", 1) != 1)
    throw Error(ErrorKind::InvalidInput, "unsupported version");
  if (j.contains("kind") && j["kind"] != kind)
    throw Error(ErrorKind::InvalidInput, "problem is for '" + j["kind"].dump() + "', not '" + kind + "'");
  if (!j.contains("arrangement")) throw Error(ErrorKind::InvalidInput, "missing field 'arrangement'");
}

Json load_problem(const std::string& path, const std::string& kind) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  check_problem(j, kind);
  return j;
}

Json run_ct(const Json& j) {
  check_problem(j, "ct");
  Arrangement a = arrangement_from_json(j.at("arrangement"));
  FunctionExpr f = function_expr_from_json(j.at("function"));
  Json out;
  if (j.contains("tuples")) {
    Vec p = vec_or_zero(j, "point", a.dim());
    out["ict"] = Json::array();
    for (const auto& tj : j["tuples"]) {
      std::vector<AffineForm> tuple;
      for (size_t i : tj.get<std::vector<size_t>>()) {
        if (i >= a.forms.size()) throw Error(ErrorKind::InvalidInput, "tuple index out of range");
        tuple.push_back(a.forms[i]);
      }
      Scalar v = iterated_ct(tuple, p, f);
      out["ict"].push_back(Json{{"tuple", tj}, {"result", to_json(v)}, {"pretty", v.pretty()}});
    }
  }
  std::vector<Tuple> basis;
  if (j.contains("basis")) basis = j["basis"].get<std::vector<Tuple>>();
  put_result(out, ct_arrangement(a, basis, f));
  return out;
}

Json run_trig_sum(const Json& j, const TrigSumOptions& opts) {
  check_problem(j, "trig-sum");
  Arrangement a = arrangement_from_json(j.at("arrangement"));
  size_t n = a.dim();
  Lattice theta = lattice_or_standard(j, "theta", n);
  long k = opts.k ? opts.k : j.value("k", 0L);
  if (k < 0) throw Error(ErrorKind::InvalidInput, "k must be positive");
  Lattice gamma = k ? theta.scaled(Rational(1, k)) : lattice_from_json(j.at("gamma"));
  auto f = trig_function_from_json(j.at("function"), a);
  Vec t = opts.t ? checked(*opts.t, n, "t")
          : j.contains("character") ? checked(vec_from_json(j["character"].at("t")), n, "character")
                                    : Vec(n, Rational(0));
  std::optional<Vec> mu = opts.mu;
  if (!mu && j.contains("mu")) mu = vec_from_json(j["mu"]);
  LocalizedResult r = mu ? trig_sum_localized(a, theta, gamma, f, t, checked(*mu, n, "mu"))
                         : trig_sum_auto(a, theta, gamma, f, t);
  Json out;
  put_result(out, r.total);
  out["mu"] = vec_list(r.shifts);
  out["pieces"] = Json::array();
  for (const auto& p : r.pieces)
    out["pieces"].push_back(Json{{"vertex", to_json(p.vertex)}, {"forms", p.forms}, {"value", to_json(p.value)}});
  if (opts.oracle) {
    Scalar bf = trig_sum_bruteforce(a, theta, gamma, f, t);
    out["oracle"] = to_json(bf);
    out["oracle_pretty"] = bf.pretty();
    out["oracle_match"] = bf == r.total;
  }
  return out;
}

Json run_rat_sum(const Json& j, const RatSumOptions& opts) {
  check_problem(j, "rat-sum");
  Arrangement a = arrangement_from_json(j.at("arrangement"));
  size_t n = a.dim();
  Lattice gamma = lattice_or_standard(j, "gamma", n);
  auto f = rational_summand_from_json(j.at("function"), a);
  Vec t = opts.t ? checked(*opts.t, n, "t") : vec_or_zero(j, "t", n);
  Vec mu = opts.mu ? checked(*opts.mu, n, "mu")
           : j.contains("mu") ? checked(vec_from_json(j["mu"]), n, "mu")
                              : choose_rational_shift(a, gamma, t);
  Scalar v = bernoulli_value(a, gamma, f, t, mu);
  Json out{{"mu", to_json(mu)}, {"t", to_json(t)}};
  put_result(out, v);
  if (opts.numeric_cutoff > 0) {
    auto num = bernoulli_numeric_oracle(a, gamma, f, t, opts.numeric_cutoff);
    out["numeric"] = {num.real(), num.imag()};
    out["numeric_cutoff"] = opts.numeric_cutoff;
    out["numeric_difference"] = std::abs(num - v.to_complex());
  }
  return out;
}

Json run_verlinde(const Json& descriptor, const VerlindeOptions& opts) {
  RootSystem r = root_system_from_json(descriptor);
  Vec lambda = opts.lambda ? checked(*opts.lambda, r.rank, "lambda") : Vec(r.rank, Rational(0));
  Json out{{"family", std::string(1, r.family)}, {"rank", r.rank}, {"g", opts.g}, {"lambda", to_json(lambda)}};
  if (opts.quasipolynomial_k0 > 0) {
    out["k0"] = opts.quasipolynomial_k0;
    out["quasipolynomial"] = to_json(verlinde_quasipolynomial(r, opts.g, lambda, opts.quasipolynomial_k0));
    return out;
  }
  Integer v = verlinde_localized(r, opts.g, opts.k, lambda);
  out["k"] = opts.k;
  out["result"] = v.get_str();
  if (opts.oracle) {
    Integer bf = verlinde_bruteforce(r, opts.g, opts.k, lambda);
    out["oracle"] = bf.get_str();
    out["oracle_match"] = bf == v;
  }
  return out;
}

Json run_vertices(const Json& j) {
  check_problem(j, "vertices");
  Arrangement a = arrangement_from_json(j.at("arrangement"));
  bool toric = j.contains("theta");
  auto vs = toric ? toric_vertices(a, lattice_or_standard(j, "theta", a.dim())) : affine_vertices(a);
  Json out{{"toric", toric}, {"vertices", Json::array()}};
  for (const auto& v : vs) {
    Json forms = Json::array();
    for (const auto& lf : v.forms) forms.push_back(lf.index);
    out["vertices"].push_back(Json{{"point", to_json(v.point)}, {"forms", forms}});
  }
  return out;
}

Json run_nbc(const Json& j) {
  check_problem(j, "nbc");
  Arrangement a = arrangement_from_json(j.at("arrangement"));
  return Json{{"nbc", nbc_bases(a.directions())}};
}

Json run_partial_fractions(const Json& j, const std::optional<Vec>& mu_opt) {
  check_problem(j, "partial-fractions");
  Arrangement a = arrangement_from_json(j.at("arrangement"));
  size_t n = a.dim();
  Json out{{"terms", Json::array()}};
  auto mode = j.value("mode", std::string("rational"));
  if (mode == "rational") {
    for (const auto& t : rational_partial_fractions(a, rational_summand_from_json(j.at("function"), a)))
      out["terms"].push_back(to_json(t, a));
    return out;
  }
  if (mode != "trig") throw Error(ErrorKind::InvalidInput, "mode must be 'rational' or 'trig'");
  Lattice theta = lattice_or_standard(j, "theta", n);
  auto f = trig_function_from_json(j.at("function"), a);
  Vec mu = mu_opt ? checked(*mu_opt, n, "mu") : j.contains("mu") ? vec_from_json(j["mu"]) : choose_shift(f, theta);
  auto pf = trig_partial_fractions(a, theta, f, mu);
  out["arrangement"] = to_json(pf.arrangement);
  for (const auto& t : pf.terms) out["terms"].push_back(to_json(t, pf.arrangement));
  out["mu"] = to_json(mu);
  return out;
}

Json run_delta_check(const Json& j, const std::optional<Vec>& mu_opt) {
  check_problem(j, "delta-check");
  Arrangement a = arrangement_from_json(j.at("arrangement"));
  size_t n = a.dim();
  auto f = trig_function_from_json(j.at("function"), a);
  std::optional<Vec> mu = mu_opt;
  if (!mu && j.contains("mu")) mu = vec_from_json(j["mu"]);
  if (!mu) {
    Vec chosen = choose_shift(f, lattice_or_standard(j, "theta", n));
    return Json{{"mu", to_json(chosen)}, {"contains", true}, {"chosen", true}};
  }
  auto why = delta_violation(f, checked(*mu, n, "mu"));
  Json out{{"mu", to_json(*mu)}, {"contains", !why}, {"chosen", false}};
  if (why) out["reason"] = *why;
  return out;
}

}  // namespace resloc
