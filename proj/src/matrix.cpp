#include "ahm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ahm {

namespace {

void require_same_size(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("matrix order mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
}

std::string zero_entry_message(std::size_t row, std::size_t col, double value) {
  std::ostringstream os;
  os << "zero entry at (" << row << ", " << col << "): " << value;
  return os.str();
}

}  // namespace

ZeroEntryError::ZeroEntryError(std::size_t row, std::size_t col, double value)
    : std::runtime_error(zero_entry_message(row, col, value)), row_(row), col_(col) {}

SquareMatrix::SquareMatrix(std::size_t n, double fill) : n_(n), data_(n * n, fill) {
  if (!std::isfinite(fill)) throw std::invalid_argument("non-finite matrix entry");
}

SquareMatrix::SquareMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), data_(std::move(entries)) {
  if (data_.size() != n * n) {
    throw std::invalid_argument("expected " + std::to_string(n * n) + " entries, got " +
                                std::to_string(data_.size()));
  }
  for (double v : data_) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite matrix entry");
  }
}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw std::invalid_argument("ragged matrix literal");
    for (double v : r) {
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite matrix entry");
      data_.push_back(v);
    }
  }
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double SquareMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
  return data_[i * n_ + j];
}

double SquareMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

SignMatrix::SignMatrix(std::size_t n, std::vector<std::int8_t> signs)
    : n_(n), signs_(std::move(signs)) {
  if (signs_.size() != n * n) throw std::invalid_argument("sign matrix size mismatch");
  for (auto s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("sign matrix entries must be +1 or -1");
  }
}

SquareMatrix SignMatrix::to_matrix() const {
  std::vector<double> v(signs_.begin(), signs_.end());
  return SquareMatrix(n_, std::move(v));
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_size(a, b);
  const std::size_t n = a.size();
  SquareMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_size(a, b);
  SquareMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) += b(i, j);
  return c;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_size(a, b);
  SquareMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) -= b(i, j);
  return c;
}

SquareMatrix operator*(double s, const SquareMatrix& m) {
  SquareMatrix c = m;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) c(i, j) *= s;
  return c;
}

SquareMatrix transpose(const SquareMatrix& m) {
  SquareMatrix t(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t(j, i) = m(i, j);
  return t;
}

SquareMatrix symmetric_part(const SquareMatrix& m) {
  SquareMatrix s(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) s(i, j) = 0.5 * (m(i, j) + m(j, i));
  return s;
}

double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_size(a, b);
  double d = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) d = std::max(d, std::abs(ea[k] - eb[k]));
  return d;
}

}  // namespace ahm
