#include "series.hpp"

#include "resloc/error.hpp"

namespace resloc::detail {

Field::Field(long order) : order_(order), dim_(euler_phi(order)), phi_(cyclotomic_polynomial(order)) {}

Field::Elem Field::one() const {
  Elem e(dim_);
  e[0] = 1;
  return e;
}

Field::Elem Field::from(const Cyclotomic& c) const {
  if (order_ % c.order()) throw Error(ErrorKind::InvalidInput, "element outside the working field");
  Cyclotomic l = c.lifted(order_);
  Elem e(l.coeffs());
  e.resize(dim_);
  return e;
}

Field::Elem Field::from(const Rational& r) const {
  Elem e(dim_);
  e[0] = r;
  return e;
}

Cyclotomic Field::to_cyclotomic(const Elem& e) const { return Cyclotomic(order_, e); }

bool Field::is_zero(const Rational* a) const {
  for (size_t i = 0; i < dim_; ++i)
    if (sgn(a[i]) != 0) return false;
  return true;
}

void Field::mul_acc_raw(const Rational* a, const Rational* b, Rational* raw) const {
  for (size_t i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < dim_; ++j)
      if (sgn(b[j]) != 0) raw[i + j] += a[i] * b[j];
  }
}

void Field::reduce_raw(Rational* raw, Rational* out) const {
  size_t d = dim_;
  for (size_t i = 2 * d - 1; i-- > d;) {
    if (sgn(raw[i]) == 0) continue;
    for (size_t j = 0; j < d; ++j)
      if (phi_[j] != 0) raw[i - d + j] -= raw[i] * static_cast<long>(phi_[j]);
    raw[i] = 0;
  }
  for (size_t j = 0; j < d; ++j) {
    out[j] += raw[j];
    raw[j] = 0;
  }
}

Field::Elem Field::mul(const Elem& a, const Elem& b) const {
  Elem out(dim_);
  if (dim_ == 1) {
    out[0] = a[0] * b[0];
    return out;
  }
  std::vector<Rational> raw(2 * dim_ - 1);
  mul_acc_raw(a.data(), b.data(), raw.data());
  reduce_raw(raw.data(), out.data());
  return out;
}

Field::Elem Field::inverse(const Elem& a) const { return from(to_cyclotomic(a).inverse()); }

Uni uni_from_rational(const Field& f, const std::vector<Rational>& c) {
  Uni u;
  for (const auto& x : c) u.push_back(f.from(x));
  return u;
}

Uni uni_mul(const Field& f, const Uni& a, const Uni& b, size_t k) {
  Uni r(k + 1, f.zero());
  for (size_t i = 0; i < a.size() && i <= k; ++i) {
    if (f.is_zero(a[i].data())) continue;
    for (size_t j = 0; j < b.size() && i + j <= k; ++j) {
      if (f.is_zero(b[j].data())) continue;
      Field::Elem p = f.mul(a[i], b[j]);
      for (size_t t = 0; t < f.dim(); ++t) r[i + j][t] += p[t];
    }
  }
  return r;
}

Uni uni_inverse(const Field& f, const Uni& a, size_t k) {
  Uni r(k + 1, f.zero());
  Field::Elem inv0 = f.inverse(a.at(0));
  r[0] = inv0;
  for (size_t n = 1; n <= k; ++n) {
    Field::Elem s = f.zero();
    for (size_t i = 1; i <= n && i < a.size(); ++i) {
      Field::Elem p = f.mul(a[i], r[n - i]);
      for (size_t t = 0; t < f.dim(); ++t) s[t] += p[t];
    }
    Field::Elem q = f.mul(s, inv0);
    for (auto& x : q) x = -x;
    r[n] = q;
  }
  return r;
}

Uni uni_pow(const Field& f, const Uni& a, long e, size_t k) {
  Uni base = e >= 0 ? a : uni_inverse(f, a, k);
  base.resize(std::min(base.size(), k + 1), f.zero());
  Uni r(1, f.one());
  for (long i = 0; i < std::abs(e); ++i) r = uni_mul(f, r, base, k);
  r.resize(k + 1, f.zero());
  return r;
}

Box::Box(std::vector<long> bounds) : bounds_(std::move(bounds)) {
  size_t n = bounds_.size();
  strides_.assign(n, 1);
  size_ = 1;
  for (size_t i = n; i-- > 0;) {
    if (bounds_[i] < 0) throw Error(ErrorKind::InvalidInput, "negative box bound");
    strides_[i] = size_;
    size_ *= static_cast<size_t>(bounds_[i] + 1);
  }
  exps_.assign(size_ * n, 0);
  for (size_t idx = 0; idx < size_; ++idx) {
    size_t rem = idx;
    for (size_t i = 0; i < n; ++i) {
      exps_[idx * n + i] = static_cast<long>(rem / strides_[i]);
      rem %= strides_[i];
    }
  }
}

size_t Box::index_of(const std::vector<long>& e) const {
  size_t idx = 0;
  for (size_t i = 0; i < e.size(); ++i) idx += static_cast<size_t>(e[i]) * strides_[i];
  return idx;
}

long Box::total_degree() const {
  long s = 0;
  for (auto b : bounds_) s += b;
  return s;
}

Series::Series(const Field& f, const Box& b, size_t ulen)
    : field_(&f), box_(&b), ulen_(ulen), data_(b.size() * ulen * f.dim()) {}

void Series::add_constant(const Field::Elem& c) {
  Rational* p = at(0, 0);
  for (size_t t = 0; t < field_->dim(); ++t) p[t] += c[t];
}

void Series::scale(const Field::Elem& c) {
  size_t d = field_->dim();
  if (d == 1) {
    for (auto& x : data_)
      if (sgn(x) != 0) x *= c[0];
    return;
  }
  for (size_t k = 0; k < data_.size(); k += d) {
    if (field_->is_zero(&data_[k])) continue;
    Field::Elem e(data_.begin() + static_cast<long>(k), data_.begin() + static_cast<long>(k + d));
    Field::Elem p = field_->mul(e, c);
    for (size_t t = 0; t < d; ++t) data_[k + t] = p[t];
  }
}

void Series::add_scaled(const Series& o, const Field::Elem& c) {
  Series tmp(o);
  tmp.scale(c);
  for (size_t k = 0; k < data_.size(); ++k)
    if (sgn(tmp.data_[k]) != 0) data_[k] += tmp.data_[k];
}

Series Series::times_linear(const LinearMono& z, const std::vector<size_t>& offsets) const {
  Series out(*field_, *box_, ulen_);
  size_t n = box_->vars(), d = field_->dim();
  size_t ushift = (z.u_shift && ulen_ > 1) ? 1 : 0;
  for (size_t idx = 0; idx < box_->size(); ++idx) {
    const long* e = box_->exps(idx);
    for (size_t u = 0; u + ushift < ulen_; ++u) {
      const Rational* src = at(idx, u);
      if (field_->is_zero(src)) continue;
      for (size_t t = 0; t < z.terms.size(); ++t) {
        const auto& term = z.terms[t];
        bool fits = true;
        for (size_t i = 0; i < n && fits; ++i) fits = e[i] + term.exps[i] <= box_->bounds()[i];
        if (!fits) continue;
        Rational* dst = out.at(idx + offsets[t], u + ushift);
        for (size_t k = 0; k < d; ++k)
          if (sgn(src[k]) != 0) dst[k] += term.coeff * src[k];
      }
    }
  }
  return out;
}

namespace {

struct Entry {
  size_t idx, u;
};

std::vector<Entry> nonzero_entries(const Series& s) {
  std::vector<Entry> out;
  for (size_t idx = 0; idx < s.box().size(); ++idx)
    for (size_t u = 0; u < s.ulen(); ++u)
      if (!s.field().is_zero(s.at(idx, u))) out.push_back({idx, u});
  return out;
}

}  // namespace

Series Series::operator*(const Series& o) const {
  Series out(*field_, *box_, ulen_);
  size_t n = box_->vars(), d = field_->dim();
  const auto& bounds = box_->bounds();
  auto ea = nonzero_entries(*this), eb = nonzero_entries(o);
  std::vector<size_t> offset(box_->size());
  std::vector<Rational> raw;
  if (d > 1) raw.assign(box_->size() * ulen_ * (2 * d - 1), Rational(0));
  for (const auto& a : ea) {
    const long* xa = box_->exps(a.idx);
    for (const auto& b : eb) {
      if (a.u + b.u >= ulen_) continue;
      const long* xb = box_->exps(b.idx);
      bool fits = true;
      for (size_t i = 0; i < n && fits; ++i) fits = xa[i] + xb[i] <= bounds[i];
      if (!fits) continue;
      size_t idx = a.idx + b.idx;  // strides are additive inside the box
      if (d == 1) {
        *out.at(idx, a.u + b.u) += *at(a.idx, a.u) * *o.at(b.idx, b.u);
      } else {
        field_->mul_acc_raw(at(a.idx, a.u), o.at(b.idx, b.u), &raw[(idx * ulen_ + a.u + b.u) * (2 * d - 1)]);
      }
    }
  }
  if (d > 1)
    for (size_t k = 0; k < box_->size() * ulen_; ++k)
      field_->reduce_raw(&raw[k * (2 * d - 1)], &out.data_[k * d]);
  return out;
}

std::vector<Field::Elem> Series::product_coefficient(const Series& o, size_t idx) const {
  size_t n = box_->vars(), d = field_->dim();
  std::vector<Field::Elem> out(ulen_, field_->zero());
  std::vector<Rational> raw(ulen_ * (2 * d - 1));
  const long* target = box_->exps(idx);
  std::vector<long> rest(n);
  for (size_t ia = 0; ia < box_->size(); ++ia) {
    const long* xa = box_->exps(ia);
    bool fits = true;
    for (size_t i = 0; i < n && fits; ++i) {
      rest[i] = target[i] - xa[i];
      fits = rest[i] >= 0;
    }
    if (!fits) continue;
    size_t ib = box_->index_of(rest);
    for (size_t ua = 0; ua < ulen_; ++ua) {
      const Rational* pa = at(ia, ua);
      if (field_->is_zero(pa)) continue;
      for (size_t ub = 0; ua + ub < ulen_; ++ub) {
        const Rational* pb = o.at(ib, ub);
        if (field_->is_zero(pb)) continue;
        if (d == 1) out[ua + ub][0] += pa[0] * pb[0];
        else field_->mul_acc_raw(pa, pb, &raw[(ua + ub) * (2 * d - 1)]);
      }
    }
  }
  if (d > 1)
    for (size_t u = 0; u < ulen_; ++u) field_->reduce_raw(&raw[u * (2 * d - 1)], out[u].data());
  return out;
}

std::vector<Field::Elem> Series::coefficient(size_t idx) const {
  std::vector<Field::Elem> out;
  for (size_t u = 0; u < ulen_; ++u) out.emplace_back(at(idx, u), at(idx, u) + field_->dim());
  return out;
}

size_t max_power(const Box& b, const LinearMono& z) {
  long best = -1;
  for (size_t i = 0; i < b.vars(); ++i) {
    bool all = !z.terms.empty();
    for (const auto& t : z.terms) all = all && t.exps[i] >= 1;
    if (all && (best < 0 || b.bounds()[i] < best)) best = b.bounds()[i];
  }
  return static_cast<size_t>(best >= 0 ? best : b.total_degree());
}

Series compose(const Field& f, const Box& b, size_t ulen, const Uni& g, const LinearMono& z) {
  size_t k = std::min(max_power(b, z), g.empty() ? 0 : g.size() - 1);
  std::vector<size_t> offsets;
  for (const auto& t : z.terms) {
    bool fits = true;
    for (size_t i = 0; i < b.vars(); ++i) fits = fits && t.exps[i] <= b.bounds()[i];
    offsets.push_back(fits ? b.index_of(t.exps) : 0);
  }
  LinearMono zz;
  zz.u_shift = z.u_shift;
  std::vector<size_t> off;
  for (size_t t = 0; t < z.terms.size(); ++t) {
    bool fits = true;
    for (size_t i = 0; i < b.vars(); ++i) fits = fits && z.terms[t].exps[i] <= b.bounds()[i];
    if (fits && sgn(z.terms[t].coeff) != 0) {
      zz.terms.push_back(z.terms[t]);
      off.push_back(offsets[t]);
    }
  }
  Series res(f, b, ulen);
  if (g.empty()) return res;
  res.add_constant(g[k]);
  for (size_t i = k; i-- > 0;) {
    res = res.times_linear(zz, off);
    res.add_constant(g[i]);
  }
  return res;
}

}  // namespace resloc::detail
