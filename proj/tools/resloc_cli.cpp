// resloc: command-line front end over JSON problem files.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "resloc/error.hpp"
#include "resloc/problems.hpp"

using namespace resloc;

namespace {

constexpr int kOk = 0, kMismatch = 1, kInputError = 2;

// "1/2,-3" -> vector; a lone "0" stands for the zero vector.
std::optional<Vec> parse_vec(const std::string& text, size_t dim = 0) {
  if (text.empty() || text == "auto") return std::nullopt;
  Vec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.size() == 1 && v[0] == 0 && dim > 1) v.assign(dim, Rational(0));
  return v;
}

size_t problem_dim(const Json& j) { return arrangement_from_json(j.at("arrangement")).dim(); }

void print_mu(const Json& report) {
  const Json& mu = report.at("mu");
  auto line = [](const Json& v) { return vec_to_string(vec_from_json(v)); };
  if (mu.is_array() && !mu.empty() && mu[0].is_array())
    for (const auto& m : mu) std::cout << "mu: " << line(m) << "\n";
  else
    std::cout << "mu: " << line(mu) << "\n";
}

// First line is the value, optionally with the oracle verdict; the JSON report follows.
int emit(const Json& report, const std::string& value) {
  bool has_oracle = report.contains("oracle_match");
  bool ok = !has_oracle || report["oracle_match"].get<bool>();
  std::cout << value;
  if (has_oracle) {
    std::string bf = report.contains("oracle_pretty") ? report["oracle_pretty"].get<std::string>()
                                                      : report["oracle"].get<std::string>();
    std::cout << (ok ? " (oracle: match)" : " (oracle: MISMATCH, brute force " + bf + ")");
  }
  std::cout << "\n";
  if (report.contains("mu")) print_mu(report);
  std::cout << report.dump() << "\n";
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice sums by residue localization"};
  app.require_subcommand(1);

  std::string file, mu = "auto", t;
  bool oracle = false;
  long k = 0, cutoff = 0, rank = 0, k0 = 0;
  int g = 1;
  std::string family, lambda = "0";

  auto* ct = app.add_subcommand("ct", "Constant terms of a function over an arrangement");
  ct->add_option("file", file, "problem file")->required();

  auto* trig = app.add_subcommand("trig-sum", "Rational trigonometric sum over Gamma/Theta");
  trig->add_option("file", file)->required();
  trig->add_option("--mu", mu, "shift vector, or auto");
  trig->add_flag("--oracle", oracle, "compare against brute force");
  trig->add_option("--k", k, "use Gamma = Theta / k")->check(CLI::PositiveNumber);
  trig->add_option("--t", t, "character representative");

  auto* rat = app.add_subcommand("rat-sum", "Bernoulli-type lattice sum");
  rat->add_option("file", file)->required();
  rat->add_option("--t", t, "evaluation point");
  rat->add_option("--mu", mu, "shift vector, or auto");
  rat->add_option("--numeric-check", cutoff, "truncated-series cutoff")->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verlinde", "Verlinde numbers and quasipolynomials");
  ver->add_option("family", family)->required();
  ver->add_option("rank", rank)->required();
  ver->add_option("--g", g, "genus")->check(CLI::PositiveNumber);
  ver->add_option("--k", k, "level");
  ver->add_option("--lambda", lambda, "dominant weight in Dynkin labels");
  ver->add_option("--quasipolynomial", k0, "interpolate m -> V(m lambda; m k0)")->check(CLI::PositiveNumber);
  ver->add_flag("--oracle", oracle, "compare against the direct sum");

  auto* vert = app.add_subcommand("vertices", "Vertices of an affine or toric arrangement");
  vert->add_option("file", file)->required();
  auto* nbc = app.add_subcommand("nbc", "No-broken-circuit bases");
  nbc->add_option("file", file)->required();
  auto* pf = app.add_subcommand("partial-fractions", "Partial fraction decomposition");
  pf->add_option("file", file)->required();
  pf->add_option("--mu", mu, "shift vector for the trigonometric mode");
  auto* dc = app.add_subcommand("delta-check", "Test a shift against Delta, or choose one");
  dc->add_option("file", file)->required();
  dc->add_option("--mu", mu, "shift vector, or auto");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*ct) {
      Json r = run_ct(load_problem(file, "ct"));
      if (r.contains("ict"))
        for (const auto& e : r["ict"]) std::cout << "ICT" << e["tuple"].dump() << " = " << e["pretty"].get<std::string>() << "\n";
      return emit(r, r["pretty"]);
    }
    if (*trig) {
      Json j = load_problem(file, "trig-sum");
      size_t n = problem_dim(j);
      TrigSumOptions o;
      o.mu = parse_vec(mu, n);
      o.t = parse_vec(t, n);
      o.k = k;
      o.oracle = oracle;
      Json r = run_trig_sum(j, o);
      return emit(r, r["pretty"]);
    }
    if (*rat) {
      Json j = load_problem(file, "rat-sum");
      size_t n = problem_dim(j);
      RatSumOptions o;
      o.mu = parse_vec(mu, n);
      o.t = parse_vec(t, n);
      o.numeric_cutoff = cutoff;
      Json r = run_rat_sum(j, o);
      std::ostringstream value;
      value << r["pretty"].get<std::string>();
      if (r.contains("numeric")) {
        value.precision(12);
        value << "  (numeric cutoff " << cutoff << ": " << r["numeric"][0].get<double>() << ", difference "
              << r["numeric_difference"].get<double>() << ")";
      }
      return emit(r, value.str());
    }
    if (*ver) {
      VerlindeOptions o;
      o.g = g;
      o.k = k;
      o.quasipolynomial_k0 = k0;
      o.oracle = oracle;
      Json desc{{"family", family}, {"rank", rank}};
      // Dimension is only known once the root system is built.
      if (rank > 0) o.lambda = parse_vec(lambda, size_t(rank));
      Json r = run_verlinde(desc, o);
      if (r.contains("quasipolynomial")) {
        std::cout << "period " << r["quasipolynomial"]["period"] << "\n" << r.dump() << "\n";
        return kOk;
      }
      return emit(r, r["result"]);
    }
    if (*vert) {
      Json r = run_vertices(load_problem(file, "vertices"));
      for (const auto& v : r["vertices"]) std::cout << vec_to_string(vec_from_json(v["point"])) << "\n";
      std::cout << r["vertices"].size() << " vertices\n" << r.dump() << "\n";
      return kOk;
    }
    if (*nbc) {
      Json r = run_nbc(load_problem(file, "nbc"));
      for (const auto& b : r["nbc"]) std::cout << b.dump() << "\n";
      std::cout << r["nbc"].size() << " NBC bases\n" << r.dump() << "\n";
      return kOk;
    }
    if (*pf) {
      Json j = load_problem(file, "partial-fractions");
      Json r = run_partial_fractions(j, parse_vec(mu, problem_dim(j)));
      std::cout << r["terms"].size() << " terms\n";
      if (r.contains("mu")) print_mu(r);
      std::cout << r.dump() << "\n";
      return kOk;
    }
    if (*dc) {
      Json j = load_problem(file, "delta-check");
      Json r = run_delta_check(j, parse_vec(mu, problem_dim(j)));
      if (r["chosen"].get<bool>())
        print_mu(r);
      else
        std::cout << (r["contains"].get<bool>() ? std::string("true") : "false: " + r["reason"].get<std::string>()) << "\n";
      std::cout << r.dump() << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::SpecialCharacter) std::cerr << "hint: perturb mu\n";
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed problem: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
