#pragma once

#include <optional>
#include <vector>

#include "resloc/lattice.hpp"

namespace resloc {

// x(v) = linear . v + constant
struct AffineForm {
  Vec linear;
  Rational constant;

  AffineForm() = default;
  AffineForm(Vec l, Rational c = 0) : linear(std::move(l)), constant(std::move(c)) {}  // NOLINT
  size_t dim() const { return linear.size(); }
  Rational operator()(const Vec& v) const { return dot(linear, v) + constant; }
  AffineForm scaled(const Rational& c) const { return AffineForm(scale(linear, c), constant * c); }
  AffineForm shifted(const Rational& c) const { return AffineForm(linear, constant + c); }
  bool operator==(const AffineForm& o) const { return linear == o.linear && constant == o.constant; }
  bool operator<(const AffineForm& o) const;
};

struct Arrangement {
  std::vector<AffineForm> forms;
  bool central = true;
  size_t dim() const { return forms.empty() ? 0 : forms[0].dim(); }
  Mat directions() const;
};

using Tuple = std::vector<size_t>;  // indices into an arrangement, in the given order

bool proportional(const Vec& a, const Vec& b);
bool is_independent(const Mat& directions, const Tuple& tuple);

// NBC bases of the central arrangement spanned by the given directions, in the
// index order. Proportional directions count once (first occurrence).
std::vector<Tuple> nbc_bases(const Mat& directions);
bool is_orthogonal_basis(const Mat& directions, const std::vector<Tuple>& basis);
// Greatest broken circuit (as increasing index list) whose elements lie in support.
std::optional<Tuple> greatest_broken_circuit(const Mat& directions, const Tuple& support);
// Order used to compare broken circuits: true when a precedes b.
bool circuit_precedes(const Tuple& a, const Tuple& b);

struct LocalForm {
  size_t index;      // position in the arrangement
  AffineForm local;  // translate of the form vanishing at the vertex
};

struct Vertex {
  Vec point;
  std::vector<LocalForm> forms;
  Mat directions() const;
};

std::vector<Vertex> affine_vertices(const Arrangement& a);
// Vertices of the toric arrangement {x in Z} modulo theta, each reduced into the
// fundamental cell of theta.
std::vector<Vertex> toric_vertices(const Arrangement& a, const Lattice& theta);

}  // namespace resloc
