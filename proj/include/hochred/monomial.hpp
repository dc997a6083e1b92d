#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hochred/errors.hpp"

namespace hochred {

inline constexpr int kMaxVariables = 16;

/// Exponent vector together with its weighted degree. The degree is kept in
/// sync by MonomialSpace, which owns the weights.
struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exp{};
  std::int32_t degree = 0;

  bool operator==(const Monomial&) const = default;
  bool is_one() const noexcept { return degree == 0 && std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; }); }
};

/// Global monomial orders. Every order first compares the weighted degree;
/// on homogeneous input this reproduces the plain orders of the same name.
enum class MonomialOrder { WeightedGrevlex, Grevlex, Lex };

inline std::string to_string(MonomialOrder o) {
  switch (o) {
    case MonomialOrder::WeightedGrevlex: return "wgrevlex";
    case MonomialOrder::Grevlex: return "grevlex";
    case MonomialOrder::Lex: return "lex";
  }
  return "?";
}

class MonomialSpace {
 public:
  /// With `eliminate` > 0 the leading `eliminate` variables form a block:
  /// after the degree, monomials with more weight in that block are larger.
  MonomialSpace(std::vector<std::string> names, std::vector<int> weights,
                MonomialOrder order = MonomialOrder::WeightedGrevlex, int eliminate = 0)
      : names_(std::move(names)), weights_(std::move(weights)), order_(order), eliminate_(eliminate) {
    if (names_.size() > static_cast<std::size_t>(kMaxVariables))
      throw InvalidArgument("at most " + std::to_string(kMaxVariables) + " variables are supported");
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size()) throw InvalidArgument("one weight per variable required");
    for (int w : weights_)
      if (w <= 0) throw InvalidArgument("variable weights must be positive");
    n_ = static_cast<int>(names_.size());
    if (eliminate_ < 0 || eliminate_ > n_) throw InvalidArgument("elimination block out of range");
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw InvalidArgument("duplicate variable name '" + names_[i] + "'");
  }

  int nvars() const noexcept { return n_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  int weight(int i) const { return weights_[i]; }
  MonomialOrder order() const noexcept { return order_; }
  int eliminate() const noexcept { return eliminate_; }

  int index_of(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
      if (names_[i] == name) return i;
    return -1;
  }

  Monomial one() const { return Monomial{}; }

  Monomial variable(int i, int power = 1) const {
    Monomial m;
    m.exp[i] = static_cast<std::uint16_t>(power);
    m.degree = weights_[i] * power;
    return m;
  }

  Monomial from_exponents(const std::vector<int>& e) const {
    Monomial m;
    for (int i = 0; i < n_; ++i) {
      m.exp[i] = static_cast<std::uint16_t>(e[i]);
      m.degree += weights_[i] * e[i];
    }
    return m;
  }

  Monomial mul(const Monomial& a, const Monomial& b) const {
    Monomial m;
    for (int i = 0; i < n_; ++i) {
      unsigned s = unsigned(a.exp[i]) + b.exp[i];
      if (s > 0xffffu) throw InvalidArgument("exponent overflow");
      m.exp[i] = static_cast<std::uint16_t>(s);
    }
    m.degree = a.degree + b.degree;
    return m;
  }

  /// a divides b.
  bool divides(const Monomial& a, const Monomial& b) const noexcept {
    if (a.degree > b.degree) return false;
    for (int i = 0; i < n_; ++i)
      if (a.exp[i] > b.exp[i]) return false;
    return true;
  }

  /// b / a, assuming a divides b.
  Monomial quotient(const Monomial& b, const Monomial& a) const noexcept {
    Monomial m;
    for (int i = 0; i < n_; ++i) m.exp[i] = static_cast<std::uint16_t>(b.exp[i] - a.exp[i]);
    m.degree = b.degree - a.degree;
    return m;
  }

  Monomial lcm(const Monomial& a, const Monomial& b) const noexcept {
    Monomial m;
    for (int i = 0; i < n_; ++i) {
      m.exp[i] = std::max(a.exp[i], b.exp[i]);
      m.degree += weights_[i] * m.exp[i];
    }
    return m;
  }

  bool coprime(const Monomial& a, const Monomial& b) const noexcept {
    for (int i = 0; i < n_; ++i)
      if (a.exp[i] != 0 && b.exp[i] != 0) return false;
    return true;
  }

  /// Three-way comparison: > 0 when a is larger.
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
    if (eliminate_ > 0) {
      int ba = 0, bb = 0;
      for (int i = 0; i < eliminate_; ++i) {
        ba += weights_[i] * a.exp[i];
        bb += weights_[i] * b.exp[i];
      }
      if (ba != bb) return ba > bb ? 1 : -1;
    }
    switch (order_) {
      case MonomialOrder::Grevlex: {
        int sa = 0, sb = 0;
        for (int i = 0; i < n_; ++i) {
          sa += a.exp[i];
          sb += b.exp[i];
        }
        if (sa != sb) return sa > sb ? 1 : -1;
        [[fallthrough]];
      }
      case MonomialOrder::WeightedGrevlex:
        for (int i = n_ - 1; i >= 0; --i)
          if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
        return 0;
      case MonomialOrder::Lex:
        for (int i = 0; i < n_; ++i)
          if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
        return 0;
    }
    return 0;
  }

  std::string to_string(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (m.exp[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += names_[i];
      if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
    }
    return s.empty() ? "1" : s;
  }

  bool operator==(const MonomialSpace& o) const {
    return names_ == o.names_ && weights_ == o.weights_ && order_ == o.order_ && eliminate_ == o.eliminate_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
  MonomialOrder order_;
  int eliminate_ = 0;
  int n_ = 0;
};

/// Calls `fn(monomial)` for every monomial of weighted degree `degree`.
template <class Fn>
void for_each_monomial_of_degree(const MonomialSpace& space, int degree, Fn&& fn) {
  if (degree < 0) return;
  const int n = space.nvars();
  if (n == 0) {
    if (degree == 0) fn(space.one());
    return;
  }
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n - 1) {
      int w = space.weight(var);
      if (remaining % w != 0) return;
      e[var] = remaining / w;
      fn(space.from_exponents(e));
      e[var] = 0;
      return;
    }
    int w = space.weight(var);
    for (int k = 0; k * w <= remaining; ++k) {
      e[var] = k;
      self(self, var + 1, remaining - k * w);
    }
    e[var] = 0;
  };
  rec(rec, 0, degree);
}

}  // namespace hochred
