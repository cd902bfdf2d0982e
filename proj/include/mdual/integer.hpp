#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mdual {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;

IntVector make_vector(std::initializer_list<long long> values);
IntVector zero_vector(std::size_t n);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Int& s, const IntVector& a);
Int dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& a);

/// Floor division; the divisor must be nonzero.
Int floor_div(const Int& a, const Int& b);
/// Representative of a mod b in [0, |b|).
Int mod_floor(const Int& a, const Int& b);

std::string to_string(const IntVector& v);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose rows are the given vectors (all of length `cols`).
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  std::vector<IntVector> row_vectors() const;
  std::vector<IntVector> col_vectors() const;

  IntMatrix transpose() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  const std::vector<Int>& data() const { return data_; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  /// Lexicographic on (rows, cols, flattened entries); used for canonical sets.
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const Int& s, const IntMatrix& a);

/// Block-diagonal direct sum.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

}  // namespace mdual
