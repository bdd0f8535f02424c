#pragma once

#include <json.hpp>

#include "resloc/lie.hpp"
#include "resloc/partial_fractions.hpp"
#include "resloc/sums.hpp"

namespace resloc {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings; plain integers are accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json to_json(const Mat& m);
Mat mat_from_json(const Json& j);

Json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);
// Array of {"upow", "order", "coeffs"}; zero is the empty array.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const Lattice& l);
Lattice lattice_from_json(const Json& j);
Json to_json(const AffineForm& y);
AffineForm affine_form_from_json(const Json& j);
Json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);

// Denominator entries {"form": i, "power": k, "scale": "p/q"} refer to the
// arrangement; the factor uses scale * forms[i]. scale defaults to 1.
Json to_json(const TrigRationalFunction& f, const Arrangement& a);
TrigRationalFunction trig_function_from_json(const Json& j, const Arrangement& a);
Json to_json(const RationalSummand& f, const Arrangement& a);
RationalSummand rational_summand_from_json(const Json& j, const Arrangement& a);

Json to_json(const FunctionExpr& f);
FunctionExpr function_expr_from_json(const Json& j);

RootSystem root_system_from_json(const Json& j);
Json to_json(const Quasipolynomial& q);
Quasipolynomial quasipolynomial_from_json(const Json& j);

}  // namespace resloc
