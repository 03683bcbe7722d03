#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace u3alg {

template <class F>
using Matrix = std::vector<std::vector<F>>;

// Row-reduces `m` in place to reduced row echelon form; returns pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const F inv = inverse(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(m[r][j])) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return row_reduce(m).size();
}

// Solves A x = b for square nonsingular A; nullopt when A is singular.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
  Matrix<F> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("solve: matrix not square");
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  std::vector<F> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

}  // namespace u3alg
