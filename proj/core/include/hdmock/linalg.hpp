#pragma once

#include <cstddef>
#include <vector>

#include "hdmock/rational.hpp"

namespace hdmock {

using QVector = std::vector<QRational>;

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  QRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const QRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  QVector column(std::size_t c) const;

  /// Stacks `below` under this matrix; column counts must match.
  QMatrix stacked(const QMatrix& below) const;

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVector operator*(const QMatrix& a, const QVector& x);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QRational> data_;
};

/// Rank by fraction-free (Bareiss) elimination after clearing denominators row by row.
std::size_t rank(const QMatrix& m);

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<QVector> nullspace(const QMatrix& m);

/// Solves m x = b when consistent; returns false otherwise.
bool solve(const QMatrix& m, const QVector& b, QVector& x);

}  // namespace hdmock
