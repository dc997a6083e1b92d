#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hochred/field.hpp"
#include "hochred/monomial.hpp"

namespace hochred {

template <class K>
struct Term {
  K c;
  Monomial m;
  int comp = 0;
};

/// Element of a free module over a polynomial ring: terms sorted strictly
/// descending in the module order, no zero coefficients. A polynomial is a
/// vector supported on component 0.
template <class K>
struct Vector {
  std::vector<Term<K>> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  const Term<K>& lead() const { return terms.front(); }
  std::size_t size() const noexcept { return terms.size(); }
};

template <class K>
using Polynomial = Vector<K>;

/// Module order: block (components >= tracked_from form the lower block),
/// then the monomial order, then the component (smaller index is larger).
class TermOrder {
 public:
  explicit TermOrder(const MonomialSpace& space, int tracked_from = INT_MAX)
      : space_(&space), tracked_from_(tracked_from) {}

  const MonomialSpace& space() const noexcept { return *space_; }
  int tracked_from() const noexcept { return tracked_from_; }
  bool tracked(int comp) const noexcept { return comp >= tracked_from_; }

  int compare(const Monomial& am, int ac, const Monomial& bm, int bc) const noexcept {
    bool ta = ac >= tracked_from_, tb = bc >= tracked_from_;
    if (ta != tb) return ta ? -1 : 1;
    int c = space_->compare(am, bm);
    if (c != 0) return c;
    if (ac != bc) return ac < bc ? 1 : -1;
    return 0;
  }

  template <class K>
  int compare(const Term<K>& a, const Term<K>& b) const noexcept {
    return compare(a.m, a.comp, b.m, b.comp);
  }

 private:
  const MonomialSpace* space_;
  int tracked_from_;
};

/// Sorts and combines arbitrary terms into a normalized vector.
template <class K>
Vector<K> normalize(const TermOrder& order, std::vector<Term<K>> terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term<K>& a, const Term<K>& b) { return order.compare(a, b) > 0; });
  Vector<K> out;
  for (auto& t : terms) {
    if (!out.terms.empty() && order.compare(out.terms.back(), t) == 0) {
      out.terms.back().c += t.c;
      if (is_zero(out.terms.back().c)) out.terms.pop_back();
    } else if (!is_zero(t.c)) {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

/// a + c * m * b.
template <class K>
Vector<K> axpy(const TermOrder& order, const Vector<K>& a, const K& c, const Monomial& m, const Vector<K>& b) {
  const auto& space = order.space();
  Vector<K> out;
  out.terms.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.terms.push_back(a.terms[i++]);
      continue;
    }
    Monomial bm = space.mul(m, b.terms[j].m);
    int bc = b.terms[j].comp;
    if (i == a.size()) {
      K v = c * b.terms[j].c;
      out.terms.push_back({std::move(v), bm, bc});
      ++j;
      continue;
    }
    int cmp = order.compare(a.terms[i].m, a.terms[i].comp, bm, bc);
    if (cmp > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      K v = c * b.terms[j].c;
      out.terms.push_back({std::move(v), bm, bc});
      ++j;
    } else {
      K v = c * b.terms[j].c;
      v += a.terms[i].c;
      if (!is_zero(v)) out.terms.push_back({std::move(v), bm, bc});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class K>
Vector<K> add(const TermOrder& order, const Vector<K>& a, const Vector<K>& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  Vector<K> out;
  out.terms.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = order.compare(a.terms[i], b.terms[j]);
    if (cmp > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      out.terms.push_back(b.terms[j++]);
    } else {
      K v = a.terms[i].c + b.terms[j].c;
      if (!is_zero(v)) out.terms.push_back({std::move(v), a.terms[i].m, a.terms[i].comp});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.size(); ++j) out.terms.push_back(b.terms[j]);
  return out;
}

template <class K>
Vector<K> negated(Vector<K> v) {
  for (auto& t : v.terms) t.c = -t.c;
  return v;
}

template <class K>
Vector<K> sub(const TermOrder& order, const Vector<K>& a, const Vector<K>& b) {
  return add(order, a, negated(b));
}

/// c * m * v; the order is preserved by monomial multiplication.
template <class K>
Vector<K> scaled(const MonomialSpace& space, const Vector<K>& v, const K& c, const Monomial& m) {
  Vector<K> out;
  if (is_zero(c)) return out;
  out.terms.reserve(v.size());
  for (const auto& t : v.terms) {
    K x = c * t.c;
    out.terms.push_back({std::move(x), space.mul(m, t.m), t.comp});
  }
  return out;
}

template <class K>
Vector<K> scaled(const Vector<K>& v, const K& c) {
  Vector<K> out;
  if (is_zero(c)) return out;
  out.terms.reserve(v.size());
  for (const auto& t : v.terms) {
    K x = c * t.c;
    out.terms.push_back({std::move(x), t.m, t.comp});
  }
  return out;
}

/// Polynomial (component 0) times vector.
template <class K>
Vector<K> mul_poly(const TermOrder& order, const Polynomial<K>& p, const Vector<K>& v) {
  Vector<K> acc;
  for (const auto& t : p.terms) acc = axpy(order, acc, t.c, t.m, v);
  return acc;
}

/// Moves every term to component comp + offset.
template <class K>
Vector<K> shifted_components(Vector<K> v, int offset) {
  for (auto& t : v.terms) t.comp += offset;
  return v;
}

/// Polynomial p placed in component `comp`.
template <class K>
Vector<K> in_component(Polynomial<K> p, int comp) {
  for (auto& t : p.terms) t.comp = comp;
  return p;
}

/// Entry `comp` of v as a polynomial.
template <class K>
Polynomial<K> component(const Vector<K>& v, int comp) {
  Polynomial<K> p;
  for (const auto& t : v.terms)
    if (t.comp == comp) p.terms.push_back({t.c, t.m, 0});
  return p;
}

template <class K>
bool operator==(const Vector<K>& a, const Vector<K>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a.terms[i].c == b.terms[i].c) || !(a.terms[i].m == b.terms[i].m) || a.terms[i].comp != b.terms[i].comp)
      return false;
  return true;
}

/// Degree of a homogeneous vector given generator degrees (nullopt for 0).
/// Throws NonHomogeneousInput when terms disagree.
template <class K>
std::optional<int> homogeneous_degree(const Vector<K>& v, std::span<const int> generator_degrees) {
  if (v.is_zero()) return std::nullopt;
  auto deg_of = [&](const Term<K>& t) {
    int g = t.comp < static_cast<int>(generator_degrees.size()) ? generator_degrees[t.comp] : 0;
    return t.m.degree + g;
  };
  int d = deg_of(v.lead());
  for (const auto& t : v.terms)
    if (deg_of(t) != d) throw NonHomogeneousInput("vector mixes degrees " + std::to_string(d) + " and " + std::to_string(deg_of(t)));
  return d;
}

}  // namespace hochred
