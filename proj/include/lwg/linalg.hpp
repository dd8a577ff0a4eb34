#pragma once

#include "lwg/rational.hpp"

#include <optional>

namespace lwg {

/// Dense row-major matrix over the rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  std::vector<Vec> row_list() const;
  Mat transpose() const;
  bool is_zero() const;

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(const Rational& c, const Mat& x);
Vec operator*(const Mat& m, const Vec& v);

/// Reduces m in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Mat& m);
std::size_t rank(const Mat& m);
std::size_t rank(const std::vector<Vec>& rows, std::size_t cols);
/// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Mat& m);
/// Some solution of m x = b, or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& b);
std::optional<Mat> inverse(const Mat& m);
/// exp of a nilpotent matrix; throws if m is not nilpotent.
Mat exp_nilpotent(const Mat& m);
Rational trace(const Mat& m);

}  // namespace lwg
