#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gtkit {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix zero(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows,
                             std::size_t cols);

  /// Parses `[[1,2],[0,1]]`. An empty literal `[]` yields a 0x0 matrix.
  static IntMatrix parse(std::string_view text);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<BigInt> row(std::size_t i) const;

  IntMatrix transpose() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Stacks matrices vertically; all must have `cols` columns.
IntMatrix vstack(std::span<const IntMatrix> blocks, std::size_t cols);

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Integer basis of the rational right kernel {x : m x = 0}, one vector per
/// free column, each scaled to be primitive.
std::vector<std::vector<BigInt>> kernel_basis(const IntMatrix& m);

std::string to_string(const std::vector<BigInt>& v);

}  // namespace gtkit
