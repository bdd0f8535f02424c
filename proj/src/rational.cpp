#include "resloc/rational.hpp"

#include <sstream>

#include "resloc/error.hpp"

namespace resloc {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::BoundaryHit: return "BoundaryHit";
    case ErrorKind::DependentTuple: return "DependentTuple";
    case ErrorKind::ExpansionDepthExceeded: return "ExpansionDepthExceeded";
    case ErrorKind::NoVertices: return "NoVertices";
    case ErrorKind::ShiftNotAdmissible: return "ShiftNotAdmissible";
    case ErrorKind::SpecialCharacter: return "SpecialCharacter";
    case ErrorKind::SpecialBasePoint: return "SpecialBasePoint";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::CannotSplit: return "CannotSplit";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::NotInLattice: return "NotInLattice";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Error";
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw Error(ErrorKind::InvalidInput, "empty rational");
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error(ErrorKind::InvalidInput, "bad rational '" + text + "'");
  if (r.get_den() == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_json(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

Rational frac_of(const Rational& r) { return r - floor_of(r); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer lcm_of_denominators(const Vec& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidInput, "dimension mismatch in pairing");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Vec& a, const Rational& c) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ")";
  return os.str();
}

}  // namespace resloc
