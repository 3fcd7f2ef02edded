#include "gtkit/int_matrix.hpp"

#include "gtkit/error.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

namespace gtkit {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols) {
  IntMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_.assign(rows * cols, BigInt(0));
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m = zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows,
                               std::size_t cols) {
  IntMatrix m = zero(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

namespace {

class MatrixLexer {
 public:
  explicit MatrixLexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  BigInt integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    std::string tok(s_.substr(start, pos_ - start));
    if (tok[0] == '+') tok.erase(0, 1);
    return BigInt(tok);
  }
  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("matrix literal: " + what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntMatrix IntMatrix::parse(std::string_view text) {
  MatrixLexer lex(text);
  std::vector<std::vector<BigInt>> rows;
  lex.expect('[');
  if (!lex.peek(']')) {
    do {
      lex.expect('[');
      std::vector<BigInt> row;
      if (!lex.peek(']')) {
        do {
          row.push_back(lex.integer());
        } while (lex.peek(',') && (lex.expect(','), true));
      }
      lex.expect(']');
      rows.push_back(std::move(row));
    } while (lex.peek(',') && (lex.expect(','), true));
  }
  lex.expect(']');
  if (!lex.at_end()) lex.fail("trailing characters");
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw ParseError("matrix literal: ragged rows");
  return from_rows(rows, cols);
}

std::vector<BigInt> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t = zero(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ',';
      out << (*this)(i, j);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  IntMatrix c = IntMatrix::zero(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shapes differ");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shapes differ");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& v : c.data_) v = -v;
  return c;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) (*this)(dst, k) += factor * (*this)(src, k);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, dst) += factor * (*this)(k, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

IntMatrix vstack(std::span<const IntMatrix> blocks, std::size_t cols) {
  std::size_t total = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols && b.rows() != 0) throw DimensionMismatch("vstack: column counts differ");
    total += b.rows();
  }
  IntMatrix out = IntMatrix::zero(total, cols);
  std::size_t r = 0;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) out(r, j) = b(i, j);
  return out;
}

namespace {

// Fraction-free row echelon form in place; returns pivot columns.
std::vector<std::size_t> bareiss_echelon(IntMatrix& a, int* sign = nullptr) {
  std::vector<std::size_t> pivots;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      a.swap_rows(p, r);
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  auto pivots = bareiss_echelon(a, &sign);
  if (pivots.size() < a.rows()) return 0;
  return sign * a(a.rows() - 1, a.cols() - 1);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  return bareiss_echelon(a).size();
}

std::vector<std::vector<BigInt>> kernel_basis(const IntMatrix& m) {
  // Reduced row echelon form over Q, kept integral by scaling rows.
  IntMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      BigInt g = boost::multiprecision::gcd(a(i, c), a(r, c));
      BigInt fi = a(r, c) / g;
      BigInt fr = a(i, c) / g;
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = fi * a(i, j) - fr * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<BigInt>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    // x_f = L, x_pivot(k) = -a(k,f) * L / a(k,pivot_k) with L = lcm of pivots.
    BigInt l = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      BigInt d = abs(a(k, pivots[k]));
      l = l / boost::multiprecision::gcd(l, d) * d;
    }
    std::vector<BigInt> v(a.cols(), BigInt(0));
    v[f] = l;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -a(k, f) * l / a(k, pivots[k]);
    BigInt g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
      for (auto& x : v) x /= g;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string to_string(const std::vector<BigInt>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  out << ')';
  return out.str();
}

}  // namespace gtkit
