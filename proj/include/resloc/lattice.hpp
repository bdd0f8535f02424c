#pragma once

#include <vector>

#include "resloc/linalg.hpp"

namespace resloc {

// Full-rank lattice in Q^n given by basis rows. The same type is used for
// lattices of vectors and of covectors; pairing is the coordinate dot product.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(Mat basis);
  static Lattice standard(size_t n);
  // Lattice spanned by rational generators of full rank.
  static Lattice from_generators(const Mat& gens);

  size_t dim() const { return basis_.size(); }
  const Mat& basis() const { return basis_; }
  Lattice dual() const;
  Lattice scaled(const Rational& c) const;
  Vec coordinates(const Vec& v) const;  // v = coords * basis
  bool contains(const Vec& v) const;
  bool contains(const Lattice& sub) const;
  // Representative of v + L with coordinates in [0, 1).
  Vec reduce(const Vec& v) const;
  Rational covolume() const;

 private:
  Mat basis_;
  Mat inv_;
};

// Coset representatives of sup / sub, each reduced into the fundamental cell of sub.
std::vector<Vec> quotient_representatives(const Lattice& sub, const Lattice& sup);
// Smallest positive integer b with b*x in lambda_dual.
Integer minimal_multiple(const Vec& x, const Lattice& lambda_dual);
// Positive rational b with b*x primitive in lat.
Rational primitive_multiple(const Vec& x, const Lattice& lat);
// Distinct maximal subspaces of dimension <= n-1 spanned by forms, as reduced row bases.
std::vector<Mat> maximal_flats(const Mat& forms, size_t n);
// t in lat + span(S) for some S among forms with dim span(S) <= n-1.
bool is_special(const Vec& t, const Lattice& lat, const Mat& forms);
// Index [lat : span(forms)] for n independent forms in lat.
Rational box_volume(const Mat& forms, const Lattice& lat);
// All t~ in t + lat with t~ - mu in the open box spanned by forms.
std::vector<Vec> box_characters(const Mat& forms, const Lattice& lat, const Vec& t, const Vec& mu);

}  // namespace resloc
