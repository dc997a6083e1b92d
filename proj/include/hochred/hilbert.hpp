#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hochred/errors.hpp"

namespace hochred {

/// Closed range [lo, hi] of internal degrees.
struct Window {
  int lo = 0;
  int hi = 0;
  int width() const noexcept { return hi - lo + 1; }
  bool operator==(const Window&) const = default;
};

struct HilbertRow {
  std::string label;
  int n = 0;
  std::vector<long> dims;  // dims[k] is the dimension at internal degree lo + k

  long total() const {
    long s = 0;
    for (long d : dims) s += d;
    return s;
  }
  bool is_zero() const { return total() == 0; }
};

/// Graded dimensions of a family of modules indexed by n over one window.
struct HilbertTable {
  Window window;
  std::vector<HilbertRow> rows;

  void add(std::string label, int n, std::vector<long> dims) {
    if (static_cast<int>(dims.size()) != window.width()) throw InvalidArgument("row does not fit the window");
    for (long d : dims)
      if (d < 0) throw InvariantViolation("negative dimension in Hilbert table");
    rows.push_back({std::move(label), n, std::move(dims)});
  }

  const HilbertRow* find(int n) const {
    for (const auto& r : rows)
      if (r.n == n) return &r;
    return nullptr;
  }

  long dim(int n, int degree) const {
    const auto* r = find(n);
    if (!r || degree < window.lo || degree > window.hi) return 0;
    return r->dims[degree - window.lo];
  }

  /// Total dimension per row, in row order.
  std::vector<long> totals() const {
    std::vector<long> out;
    for (const auto& r : rows) out.push_back(r.total());
    return out;
  }
};

struct Discrepancy {
  int n = 0;
  int degree = 0;
  long lhs_dim = 0;
  long rhs_dim = 0;
};

/// First (n, degree) at which the tables differ. Rows are matched by
/// position (callers align the indices); a missing row counts as zero and
/// n is taken from whichever side has the row, lhs first.
inline std::optional<Discrepancy> first_discrepancy(const HilbertTable& lhs, const HilbertTable& rhs) {
  if (!(lhs.window == rhs.window)) throw InvalidArgument("tables compared over different windows");
  const std::size_t rows = std::max(lhs.rows.size(), rhs.rows.size());
  const Window w = lhs.window;
  for (std::size_t k = 0; k < rows; ++k) {
    const HilbertRow* a = k < lhs.rows.size() ? &lhs.rows[k] : nullptr;
    const HilbertRow* b = k < rhs.rows.size() ? &rhs.rows[k] : nullptr;
    const int n = a ? a->n : b->n;
    for (int j = w.lo; j <= w.hi; ++j) {
      long x = a ? a->dims[j - w.lo] : 0, y = b ? b->dims[j - w.lo] : 0;
      if (x != y) return Discrepancy{n, j, x, y};
    }
  }
  return std::nullopt;
}

/// Row n of the table shifted internally: out(j) = in(j - s).
inline std::vector<long> shift_dims(const std::vector<long>& dims, int s) {
  std::vector<long> out(dims.size(), 0);
  for (std::size_t k = 0; k < dims.size(); ++k) {
    long src = static_cast<long>(k) - s;
    if (src >= 0 && src < static_cast<long>(dims.size())) out[k] = dims[src];
  }
  return out;
}

}  // namespace hochred
