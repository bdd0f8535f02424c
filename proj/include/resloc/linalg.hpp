#pragma once

#include <optional>
#include <vector>

#include "resloc/rational.hpp"

namespace resloc {

using Mat = std::vector<Vec>;  // row-major
using IVec = std::vector<Integer>;
using IMat = std::vector<IVec>;

Mat identity_matrix(size_t n);
Mat transpose(const Mat& m);
Mat matmul(const Mat& a, const Mat& b);
Vec row_times(const Vec& row, const Mat& m);  // row * m
Vec times_col(const Mat& m, const Vec& col);  // m * col

size_t rank_of(const Mat& rows);
// Reduced row echelon form; returns pivot columns.
std::vector<size_t> rref(Mat& m);
Rational determinant(Mat m);
std::optional<Mat> inverse(const Mat& m);
// Unique solution of m x = b, or nullopt if singular / inconsistent.
std::optional<Vec> solve_square(const Mat& m, const Vec& b);
// Basis of {x : m x = 0}.
Mat kernel(const Mat& m);
bool in_row_span(const Mat& rows, const Vec& v);

struct SmithForm {
  IMat u, d, v;  // u * m * v = d
};
SmithForm smith_normal_form(const IMat& m);

// Is y in the Z-span of the given rational generators (rows)?
bool in_lattice_span(const Mat& generators, const Vec& y);

}  // namespace resloc
