#pragma once

#include <vector>

#include "hochred/field.hpp"

namespace hochred {

/// Rank of a dense matrix by Gaussian elimination (the matrix is consumed).
template <class K>
int dense_rank(std::vector<std::vector<K>> a) {
  if (a.empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!is_zero(a[r][c])) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    K inv = inverse(a[rank][c]);
    for (int k = c; k < cols; ++k) a[rank][k] = a[rank][k] * inv;
    for (int r = rank + 1; r < rows; ++r) {
      if (is_zero(a[r][c])) continue;
      K f = a[r][c];
      for (int k = c; k < cols; ++k)
        if (!is_zero(a[rank][k])) a[r][k] = a[r][k] - f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

template <class K>
std::vector<std::vector<K>> mat_mul(const std::vector<std::vector<K>>& a, const std::vector<std::vector<K>>& b,
                                    const K& zero) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
  std::vector<std::vector<K>> out(n, std::vector<K>(m, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!is_zero(b[k][j])) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  return out;
}

template <class K>
std::vector<std::vector<K>> identity_matrix(int n, const K& zero, const K& one) {
  std::vector<std::vector<K>> out(n, std::vector<K>(n, zero));
  for (int i = 0; i < n; ++i) out[i][i] = one;
  return out;
}

}  // namespace hochred
