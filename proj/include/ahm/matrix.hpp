#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ahm {

/// Raised when a matrix has an entry that is zero within the sign tolerance.
/// An almost Hadamard candidate must have no zero entries.
class ZeroEntryError : public std::runtime_error {
 public:
  ZeroEntryError(std::size_t row, std::size_t col, double value);
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// Dense real n x n matrix, row-major, indices 0..n-1. Entries are always finite.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0);
  SquareMatrix(std::size_t n, std::vector<double> entries);
  SquareMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static SquareMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  // Bounds-checked access.
  double at(std::size_t i, std::size_t j) const;

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<double> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const double> entries() const noexcept { return data_; }

  double max_abs() const noexcept;

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Entrywise +1/-1 matrix.
class SignMatrix {
 public:
  SignMatrix() = default;
  SignMatrix(std::size_t n, std::vector<std::int8_t> signs);

  std::size_t size() const noexcept { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return signs_[i * n_ + j]; }

  SquareMatrix to_matrix() const;

  bool operator==(const SignMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int8_t> signs_;
};

enum class MoveKind { RowSwap, ColSwap, RowNegate, ColNegate };

/// One generator of Hadamard equivalence. `second` is ignored by negations.
struct EquivalenceMove {
  MoveKind kind;
  std::size_t first;
  std::size_t second = 0;
};

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator*(double s, const SquareMatrix& m);

SquareMatrix transpose(const SquareMatrix& m);
SquareMatrix symmetric_part(const SquareMatrix& m);

/// max |a_ij - b_ij|.
double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b);

}  // namespace ahm
