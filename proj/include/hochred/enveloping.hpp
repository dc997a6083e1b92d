#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hochred/module.hpp"

namespace hochred {

/// E = S ⊗_k S on doubled variables: the first copy of x_i is x_i_1, the
/// second x_i_2, with ideal I(first) + I(second).
template <Field F>
struct EnvelopingData {
  using K = typename F::value_type;

  typename Ring<F>::Ptr base;
  typename Ring<F>::Ptr ring;
  std::vector<Polynomial<K>> diagonal;  // x_i_1 - x_i_2

  int nvars() const { return base->nvars(); }

  /// Image of a polynomial of S (or Q) under the embedding into copy 0 or 1.
  Polynomial<K> embed(const Polynomial<K>& p, int copy) const {
    const int e = base->nvars();
    Polynomial<K> out;
    for (const auto& t : p.terms) {
      std::vector<int> ex(2 * e, 0);
      for (int i = 0; i < e; ++i) ex[i + copy * e] = t.m.exp[i];
      out.terms.push_back({t.c, ring->space().from_exponents(ex), t.comp});
    }
    return normalize(ring->order(), std::move(out.terms));
  }

  Vector<K> embed_vector(const Vector<K>& v, int copy, int comp_offset = 0, int comp_stride = 1) const {
    std::vector<Term<K>> terms;
    const int e = base->nvars();
    for (const auto& t : v.terms) {
      std::vector<int> ex(2 * e, 0);
      for (int i = 0; i < e; ++i) ex[i + copy * e] = t.m.exp[i];
      terms.push_back({t.c, ring->space().from_exponents(ex), comp_offset + t.comp * comp_stride});
    }
    return normalize(ring->order(), std::move(terms));
  }

  /// S as the E-module E / (x_i_1 - x_i_2).
  ModulePresentation<F> diagonal_module() const {
    std::vector<Vector<K>> rel(diagonal.begin(), diagonal.end());
    return ModulePresentation<F>(ring, {0}, std::move(rel));
  }

  /// The swap x_i_1 <-> x_i_2 applied to a vector.
  Vector<K> swap(const Vector<K>& v) const {
    const int e = base->nvars();
    std::vector<Term<K>> terms;
    for (const auto& t : v.terms) {
      std::vector<int> ex(2 * e, 0);
      for (int i = 0; i < e; ++i) {
        ex[i] = t.m.exp[i + e];
        ex[i + e] = t.m.exp[i];
      }
      terms.push_back({t.c, ring->space().from_exponents(ex), t.comp});
    }
    return normalize(ring->order(), std::move(terms));
  }
};

template <Field F>
EnvelopingData<F> enveloping_algebra(typename Ring<F>::Ptr s) {
  using K = typename F::value_type;
  const auto& sp = s->space();
  const int e = sp.nvars();
  if (2 * e > kMaxVariables) throw TooLarge("enveloping algebra needs more than " + std::to_string(kMaxVariables) + " variables");
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int copy = 1; copy <= 2; ++copy)
    for (int i = 0; i < e; ++i) {
      std::string n = sp.names()[i] + "_" + std::to_string(copy);
      while (sp.index_of(n) >= 0) n += "_";
      names.push_back(n);
      weights.push_back(sp.weight(i));
    }
  auto space = std::make_shared<const MonomialSpace>(std::move(names), std::move(weights), sp.order());
  EnvelopingData<F> out;
  out.base = s;
  // placeholder ring to embed with; rebuilt below with the ideal
  out.ring = Ring<F>::create(s->field(), space, {});
  std::vector<Polynomial<K>> ideal;
  for (int copy = 0; copy < 2; ++copy)
    for (const auto& g : s->groebner()) ideal.push_back(out.embed(g, copy));
  out.ring = Ring<F>::create(s->field(), space, std::move(ideal));
  for (int i = 0; i < e; ++i) {
    auto a = out.embed(s->variable(i), 0), b = out.embed(s->variable(i), 1);
    out.diagonal.push_back(sub(out.ring->order(), a, b));
  }
  return out;
}

/// M ⊗_k N as an E-module, S acting on M through the first copy and on N
/// through the second. Generator (i, j) has index i * rank N + j.
template <Field F>
ModulePresentation<F> tensor_over_field(const EnvelopingData<F>& env, const ModulePresentation<F>& m,
                                        const ModulePresentation<F>& n) {
  using K = typename F::value_type;
  const int rm = m.rank(), rn = n.rank();
  std::vector<int> degs;
  for (int i = 0; i < rm; ++i)
    for (int j = 0; j < rn; ++j) degs.push_back(m.generator_degrees()[i] + n.generator_degrees()[j]);
  std::vector<Vector<K>> rel;
  for (const auto& r : m.relations())
    for (int j = 0; j < rn; ++j) rel.push_back(env.embed_vector(r, 0, j, rn));
  for (const auto& r : n.relations())
    for (int i = 0; i < rm; ++i) rel.push_back(env.embed_vector(r, 1, i * rn, 1));
  return ModulePresentation<F>(env.ring, std::move(degs), std::move(rel));
}

/// k-basis of a finite-dimensional module together with the action of each
/// variable as a matrix on that basis: action[v][row][col] is the coefficient
/// of basis[row] in x_v * basis[col].
template <Field F>
struct LinearModule {
  using K = typename F::value_type;
  std::vector<int> degrees;
  std::vector<std::vector<std::vector<K>>> action;
  int dim() const { return static_cast<int>(degrees.size()); }
};

template <Field F>
LinearModule<F> linear_module(const ModulePresentation<F>& m) {
  using K = typename F::value_type;
  const auto& ring = *m.ring();
  auto basis = m.standard_basis();
  const int d = static_cast<int>(basis.size());
  LinearModule<F> out;
  for (const auto& [mono, comp] : basis) out.degrees.push_back(mono.degree + m.generator_degrees()[comp]);
  auto index_of = [&](const Monomial& mono, int comp) {
    for (int k = 0; k < d; ++k)
      if (basis[k].second == comp && basis[k].first == mono) return k;
    throw InvariantViolation("normal form left the standard basis");
  };
  for (int v = 0; v < ring.nvars(); ++v) {
    std::vector<std::vector<K>> mat(d, std::vector<K>(d, ring.zero_scalar()));
    for (int col = 0; col < d; ++col) {
      Vector<K> x;
      x.terms.push_back({ring.one_scalar(), ring.space().mul(ring.space().variable(v), basis[col].first), basis[col].second});
      for (const auto& t : m.normal_form(x).terms) mat[index_of(t.m, t.comp)][col] = t.c;
    }
    out.action.push_back(std::move(mat));
  }
  return out;
}

/// Graded k-dual Hom_k(M, k) of a finite-dimensional S-module, with
/// (s f)(m) = f(s m), presented on the dual basis and pruned.
template <Field F>
ModulePresentation<F> graded_dual(const ModulePresentation<F>& m) {
  using K = typename F::value_type;
  const auto& ring = *m.ring();
  if (!m.is_finite_dimensional()) throw NotFiniteDimensional("graded dual needs a finite-dimensional module");
  auto lin = linear_module(m);
  const int d = lin.dim();
  std::vector<int> degs;
  for (int g : lin.degrees) degs.push_back(-g);
  // x_v * b_i^* = sum_j [x_v b_j]_i b_j^*
  std::vector<Vector<K>> rel;
  const auto ord = ring.order();
  for (int v = 0; v < ring.nvars(); ++v)
    for (int i = 0; i < d; ++i) {
      std::vector<Term<K>> terms;
      terms.push_back({ring.one_scalar(), ring.space().variable(v), i});
      for (int j = 0; j < d; ++j)
        if (!is_zero(lin.action[v][i][j])) terms.push_back({K(-lin.action[v][i][j]), ring.space().one(), j});
      rel.push_back(normalize(ord, std::move(terms)));
    }
  return prune(ModulePresentation<F>(m.ring(), std::move(degs), std::move(rel))).module;
}

/// Hom_k(M, N) as an E-module with (s f s')(m) = s f(s' m): left action
/// (first copy) through N, right action (second copy) through M. Requires
/// dim_k M finite.
template <Field F>
ModulePresentation<F> hom_over_field(const EnvelopingData<F>& env, const ModulePresentation<F>& m,
                                     const ModulePresentation<F>& n) {
  if (!m.is_finite_dimensional())
    throw CoefficientNotFinitelyGenerated("Hom_k(M, N) is not finitely generated when dim_k M is infinite");
  return tensor_over_field(env, n, graded_dual(m));
}

}  // namespace hochred
