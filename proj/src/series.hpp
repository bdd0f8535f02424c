#pragma once

// Truncated multivariate power series over a fixed cyclotomic field.
// Internal to the constant-term engine.

#include <vector>

#include "resloc/cyclotomic.hpp"

namespace resloc::detail {

class Field {
 public:
  using Elem = std::vector<Rational>;
  explicit Field(long order);

  long order() const { return order_; }
  size_t dim() const { return dim_; }
  Elem zero() const { return Elem(dim_); }
  Elem one() const;
  Elem from(const Cyclotomic& c) const;
  Elem from(const Rational& r) const;
  Cyclotomic to_cyclotomic(const Elem& e) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inverse(const Elem& a) const;
  bool is_zero(const Rational* a) const;
  // raw[i + j] += a[i] * b[j]
  void mul_acc_raw(const Rational* a, const Rational* b, Rational* raw) const;
  // Reduce a raw product of length 2*dim-1 into out (dim entries), clearing raw.
  void reduce_raw(Rational* raw, Rational* out) const;

 private:
  long order_;
  size_t dim_;
  std::vector<long long> phi_;
};

using Uni = std::vector<Field::Elem>;  // univariate series, index = degree

Uni uni_from_rational(const Field& f, const std::vector<Rational>& c);
Uni uni_mul(const Field& f, const Uni& a, const Uni& b, size_t k);
Uni uni_inverse(const Field& f, const Uni& a, size_t k);
Uni uni_pow(const Field& f, const Uni& a, long e, size_t k);

class Box {
 public:
  explicit Box(std::vector<long> bounds);
  size_t vars() const { return bounds_.size(); }
  size_t size() const { return size_; }
  const std::vector<long>& bounds() const { return bounds_; }
  const long* exps(size_t idx) const { return &exps_[idx * vars()]; }
  size_t index_of(const std::vector<long>& e) const;
  long total_degree() const;

 private:
  std::vector<long> bounds_;
  std::vector<size_t> strides_;
  size_t size_;
  std::vector<long> exps_;
};

// Sum of monomials with rational coefficients; u_shift multiplies by U.
struct LinearMono {
  struct Term {
    std::vector<long> exps;
    Rational coeff;
  };
  std::vector<Term> terms;
  bool u_shift = false;
};

class Series {
 public:
  Series(const Field& f, const Box& b, size_t ulen);
  const Field& field() const { return *field_; }
  const Box& box() const { return *box_; }
  size_t ulen() const { return ulen_; }
  Rational* at(size_t idx, size_t u) { return &data_[(idx * ulen_ + u) * field_->dim()]; }
  const Rational* at(size_t idx, size_t u) const { return &data_[(idx * ulen_ + u) * field_->dim()]; }

  void add_constant(const Field::Elem& c);
  void scale(const Field::Elem& c);
  void add_scaled(const Series& o, const Field::Elem& c);
  Series times_linear(const LinearMono& z, const std::vector<size_t>& offsets) const;
  Series operator*(const Series& o) const;
  // Coefficient (per power of U) of the product at box index idx.
  std::vector<Field::Elem> product_coefficient(const Series& o, size_t idx) const;
  std::vector<Field::Elem> coefficient(size_t idx) const;

 private:
  const Field* field_;
  const Box* box_;
  size_t ulen_;
  std::vector<Rational> data_;
};

// g(z) truncated to the box, by Horner's rule.
Series compose(const Field& f, const Box& b, size_t ulen, const Uni& g, const LinearMono& z);
// Largest k with z^k possibly nonzero inside the box.
size_t max_power(const Box& b, const LinearMono& z);

}  // namespace resloc::detail
