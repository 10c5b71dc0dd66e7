#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ausglue/field.hpp"

namespace ausglue {

namespace detail {
struct MatAccess;
}

// Dense matrix over the active field. Column vectors are n x 1 matrices.
class Mat {
 public:
  Mat();
  Mat(std::size_t rows, std::size_t cols);
  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<std::vector<long long>>& rows);
  static Mat from_scalar_rows(const std::vector<std::vector<Scalar>>& rows);
  static Mat column(const std::vector<Scalar>& entries);
  static Mat unit(std::size_t n, std::size_t i);
  static Mat hstack(const std::vector<Mat>& parts, std::size_t rows);
  static Mat vstack(const std::vector<Mat>& parts, std::size_t cols);
  static Mat direct_sum(const std::vector<Mat>& parts);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  const Field& field() const { return f_; }

  Scalar operator()(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  void add_to(std::size_t i, std::size_t j, const Scalar& v);

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat& operator+=(const Mat& o);
  Mat scaled(const Scalar& s) const;
  Mat transpose() const;

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat col(std::size_t j) const { return block(0, j, r_, 1); }
  Mat select_cols(const std::vector<std::size_t>& idx) const;
  Mat select_rows(const std::vector<std::size_t>& idx) const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  std::string str() const;

 private:
  friend struct detail::MatAccess;
  void check(const Mat& o) const;
  Field f_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<std::int64_t> fp_;
  std::vector<Rational> q_;
};

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(const Mat& m);
std::size_t rank(const Mat& m);
// Columns span the kernel; one column per free variable of rref(m).
Mat kernel_basis(const Mat& m);
// Linearly independent columns of m (the pivot columns) spanning its image.
Mat image_basis(const Mat& m);
// Solves a x = b; NoSolution when some column of b leaves the column space.
Mat solve(const Mat& a, const Mat& b);
std::optional<Mat> try_solve(const Mat& a, const Mat& b);
Mat inverse(const Mat& m);
bool is_invertible(const Mat& m);
// For m with independent columns: L with L m = I.
Mat left_inverse(const Mat& m);
// Standard basis vectors of k^n completing the column span of sub, in order.
std::vector<std::size_t> complement_units(const Mat& sub, std::size_t n);
// Intersection of the column spans of a and b (as a basis inside the ambient space).
Mat intersect_spans(const Mat& a, const Mat& b);
bool in_span(const Mat& basis, const Mat& v);
// Indices of columns of `candidates` that extend the span of `sub`, chosen greedily left to right.
std::vector<std::size_t> extending_columns(const Mat& sub, const Mat& candidates);
Mat kron(const Mat& a, const Mat& b);
Scalar trace(const Mat& m);
// sum_i coeffs(i, 0) * mats[i]; every matrix must be rows x cols.
Mat lincomb(const std::vector<Mat>& mats, const Mat& coeffs, std::size_t rows, std::size_t cols);
// Row-major flattening into a column and its inverse.
Mat flatten(const Mat& m);
Mat unflatten(const Mat& v, std::size_t rows, std::size_t cols);

// Polynomials as coefficient lists, lowest degree first.
using Poly = std::vector<Scalar>;
Poly charpoly(const Mat& m);
// Distinct roots lying in the active field, ascending by representation.
std::vector<Scalar> roots_in_field(const Poly& f);
Scalar eval(const Poly& f, const Scalar& x);

}  // namespace ausglue
