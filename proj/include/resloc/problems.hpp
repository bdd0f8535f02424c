#pragma once

#include <optional>
#include <string>

#include "resloc/json_io.hpp"

namespace resloc {

// Problem-file dispatch shared by the command line and the Python module.
// Every runner validates its input and returns a JSON report; exact values
// appear as Scalar JSON under "result" with the human form under "pretty".

Json load_problem(const std::string& path, const std::string& kind);
void check_problem(const Json& problem, const std::string& kind);

Json run_ct(const Json& problem);

struct TrigSumOptions {
  std::optional<Vec> mu;  // explicit shift; otherwise the file's "mu", otherwise automatic
  std::optional<Vec> t;
  long k = 0;             // Gamma = Theta / k when positive
  bool oracle = false;
};
// With oracle set the report carries "oracle" and "oracle_match".
Json run_trig_sum(const Json& problem, const TrigSumOptions& opts = {});

struct RatSumOptions {
  std::optional<Vec> mu;
  std::optional<Vec> t;
  long numeric_cutoff = 0;
};
Json run_rat_sum(const Json& problem, const RatSumOptions& opts = {});

struct VerlindeOptions {
  int g = 1;
  long k = 0;
  std::optional<Vec> lambda;  // zero when absent
  long quasipolynomial_k0 = 0;
  bool oracle = false;
};
Json run_verlinde(const Json& root_system, const VerlindeOptions& opts);

Json run_vertices(const Json& problem);
Json run_nbc(const Json& problem);
Json run_partial_fractions(const Json& problem, const std::optional<Vec>& mu = {});
// Membership of mu in Delta, or a chosen shift when mu is absent everywhere.
Json run_delta_check(const Json& problem, const std::optional<Vec>& mu = {});

}  // namespace resloc
