#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bott/scalar.hpp"

namespace bott {

/// Associated matrix of a Bott tower.
///
/// Strictly upper triangular n x n. Entry (i, j) with i < j is the
/// coefficient of x_i in f_j, so column j determines the twisting line
/// bundle of stage j and f_j = sum_{i<j} entry(i, j) x_i. Indices are
/// 0-based throughout the library.
///
/// Entries are exact rationals so that presentations extracted over Q or
/// Z_(2) share the type; matrices read from input files are integral.
class BottMatrix {
 public:
  BottMatrix() = default;
  explicit BottMatrix(std::size_t n);

  /// Validates squareness and strict upper triangularity.
  static BottMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static BottMatrix from_int_rows(const std::vector<std::vector<long>>& rows);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }

  /// Requires row < col.
  void set(std::size_t row, std::size_t col, Rational value);

  /// Coefficients of f_col (length col).
  std::vector<Rational> column(std::size_t col) const;
  bool column_is_zero(std::size_t col) const;
  std::size_t nonzero_columns() const;
  bool is_zero() const;

  /// Top-left block describing the height-m sub-tower B_m.
  BottMatrix prefix(std::size_t m) const;

  bool entries_in(CoeffRing ring) const;
  bool is_integral() const { return entries_in(CoeffRing::IntegerZ); }

  std::vector<std::vector<Rational>> rows() const;
  std::string to_string() const;

  friend bool operator==(const BottMatrix& a, const BottMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const BottMatrix& a, const BottMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace bott
