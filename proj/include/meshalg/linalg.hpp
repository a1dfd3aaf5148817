#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace meshalg {

template <class Fd>
using Vec = std::vector<scalar_t<Fd>>;

/// Dense row-major matrix over a field descriptor.
template <class Fd>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<scalar_t<Fd>> a;

  Matrix() = default;
  Matrix(const Fd& fd, std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, fd.zero()) {}
  scalar_t<Fd>& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const scalar_t<Fd>& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  Vec<Fd> apply(const Fd& fd, const Vec<Fd>& x) const {
    Vec<Fd> y(rows, fd.zero());
    for (std::size_t j = 0; j < cols; ++j) {
      if (fd.is_zero(x[j])) continue;
      for (std::size_t i = 0; i < rows; ++i) {
        const auto& m = (*this)(i, j);
        if (!fd.is_zero(m)) y[i] += m * x[j];
      }
    }
    return y;
  }
};

/// Incrementally maintained reduced row echelon form of a span.
template <class Fd>
class Echelon {
 public:
  Echelon(const Fd& fd, std::size_t ncols) : fd_(fd), ncols_(ncols) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<int>& pivots() const { return piv_; }
  const std::vector<Vec<Fd>>& rows() const { return rows_; }

  /// Reduce v against the current rows (in place).
  void reduce(Vec<Fd>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto c = v[piv_[r]];
      if (fd_.is_zero(c)) continue;
      const auto& row = rows_[r];
      for (std::size_t j = 0; j < ncols_; ++j)
        if (!fd_.is_zero(row[j])) v[j] -= c * row[j];
    }
  }

  /// Insert v; returns true when it enlarged the span.
  bool insert(Vec<Fd> v) {
    reduce(v);
    int p = -1;
    for (std::size_t j = 0; j < ncols_; ++j)
      if (!fd_.is_zero(v[j])) { p = static_cast<int>(j); break; }
    if (p < 0) return false;
    auto inv = fd_.inv(v[p]);
    for (auto& x : v)
      if (!fd_.is_zero(x)) x *= inv;
    for (auto& row : rows_) {
      auto c = row[p];
      if (fd_.is_zero(c)) continue;
      for (std::size_t j = 0; j < ncols_; ++j)
        if (!fd_.is_zero(v[j])) row[j] -= c * v[j];
    }
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
    piv_.insert(piv_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  bool contains(Vec<Fd> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!fd_.is_zero(x)) return false;
    return true;
  }

  std::vector<int> free_columns() const {
    std::vector<int> out;
    std::size_t r = 0;
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (r < piv_.size() && piv_[r] == static_cast<int>(j)) { ++r; continue; }
      out.push_back(static_cast<int>(j));
    }
    return out;
  }

 private:
  Fd fd_;
  std::size_t ncols_;
  std::vector<Vec<Fd>> rows_;
  std::vector<int> piv_;
};

template <class Fd>
std::size_t rank_of(const Fd& fd, const std::vector<Vec<Fd>>& vecs, std::size_t ncols) {
  Echelon<Fd> e(fd, ncols);
  for (const auto& v : vecs) e.insert(v);
  return e.rank();
}

template <class Fd>
std::size_t rank_of(const Fd& fd, const Matrix<Fd>& m) {
  Echelon<Fd> e(fd, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    e.insert(Vec<Fd>(m.a.begin() + i * m.cols, m.a.begin() + (i + 1) * m.cols));
  return e.rank();
}

/// Basis of {x : M x = 0}.
template <class Fd>
std::vector<Vec<Fd>> kernel_of(const Fd& fd, const Matrix<Fd>& m) {
  Echelon<Fd> e(fd, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    e.insert(Vec<Fd>(m.a.begin() + i * m.cols, m.a.begin() + (i + 1) * m.cols));
  std::vector<Vec<Fd>> out;
  const auto& piv = e.pivots();
  const auto& rows = e.rows();
  for (int f : e.free_columns()) {
    Vec<Fd> x(m.cols, fd.zero());
    x[f] = fd.one();
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!fd.is_zero(rows[r][f])) x[piv[r]] = -rows[r][f];
    out.push_back(std::move(x));
  }
  return out;
}

/// One solution of M x = b, or nullopt when inconsistent.
template <class Fd>
std::optional<Vec<Fd>> solve(const Fd& fd, const Matrix<Fd>& m, const Vec<Fd>& b) {
  Matrix<Fd> aug(fd, m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  Echelon<Fd> e(fd, m.cols + 1);
  for (std::size_t i = 0; i < aug.rows; ++i)
    e.insert(Vec<Fd>(aug.a.begin() + i * aug.cols, aug.a.begin() + (i + 1) * aug.cols));
  Vec<Fd> x(m.cols, fd.zero());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    int p = e.pivots()[r];
    if (p == static_cast<int>(m.cols)) return std::nullopt;
    x[p] = e.rows()[r][m.cols];
  }
  return x;
}

/// Inverse of a square matrix; throws when singular.
template <class Fd>
Matrix<Fd> inverse_of(const Fd& fd, const Matrix<Fd>& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse_of: not square");
  std::size_t n = m.rows;
  Echelon<Fd> e(fd, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec<Fd> row(2 * n, fd.zero());
    for (std::size_t j = 0; j < n; ++j) row[j] = m(i, j);
    row[n + i] = fd.one();
    e.insert(std::move(row));
  }
  if (e.rank() != n || (n > 0 && e.pivots()[n - 1] != static_cast<int>(n - 1)))
    throw std::domain_error("inverse_of: singular matrix");
  Matrix<Fd> inv(fd, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows()[i][n + j];
  return inv;
}

}  // namespace meshalg
