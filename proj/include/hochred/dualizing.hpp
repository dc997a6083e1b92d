#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hochred/derived.hpp"
#include "hochred/enveloping.hpp"
#include "hochred/verification.hpp"

namespace hochred {

/// D = Σ^e Hom_Q(G, Ω) for G a finite free resolution of S over the
/// polynomial ring Q on e variables and Ω = Q(-Σ w_i).
template <Field F>
struct DualizingComplexData {
  typename Ring<F>::Ptr sigma;
  Complex<F> representing_complex;  // over Q
  int relative_dimension = 0;
  int omega_twist = 0;
  std::map<int, ModulePresentation<F>> homology;  // over S
  std::optional<int> concentrated_at;

  const ModulePresentation<F>& canonical_module() const {
    if (!concentrated_at) throw NotConcentrated("the dualizing complex has homology in more than one degree");
    return homology.at(*concentrated_at);
  }

  int lo() const { return representing_complex.lo; }
  int hi() const { return representing_complex.hi(); }

  /// Homology table over homological degrees [i_lo, i_hi]; zero outside the complex.
  HilbertTable table(int i_lo, int i_hi, Window w) const {
    HilbertTable t{w, {}};
    for (int i = i_lo; i <= i_hi; ++i) {
      auto it = homology.find(i);
      t.add("D", i, it == homology.end() ? std::vector<long>(w.width(), 0) : it->second.hilbert(w.lo, w.hi));
    }
    return t;
  }
  HilbertTable table(Window w) const { return table(lo(), hi(), w); }
};

template <Field F>
ModulePresentation<F> as_ambient_module(typename Ring<F>::Ptr s) {
  using K = typename F::value_type;
  auto q = s->ambient();
  std::vector<Vector<K>> rel;
  for (const auto& g : s->groebner()) rel.push_back(in_component(g, 0));
  return ModulePresentation<F>(q, {0}, std::move(rel));
}

template <Field F>
DualizingComplexData<F> build_dualizing(typename Ring<F>::Ptr s) {
  auto q = s->ambient();
  const int e = q->nvars();
  int twist = 0;
  for (int i = 0; i < e; ++i) twist += q->space().weight(i);
  auto g = free_resolution(as_ambient_module<F>(s), 0);
  if (!g.complete) throw InvariantViolation("resolution over the polynomial ring did not terminate");
  auto omega = free_module<F>(q, {twist});
  DualizingComplexData<F> out;
  out.sigma = s;
  out.relative_dimension = e;
  out.omega_twist = twist;
  out.representing_complex = shift(hom(g, concentrated(omega)), e);
  out.representing_complex.check();
  std::vector<int> nonzero;
  for (int i = out.lo(); i <= out.hi(); ++i) {
    auto h = out.representing_complex.homology(i);
    if (h.is_zero_module()) continue;
    // a homology class times an element of I must vanish
    for (int j = 0; j < h.rank(); ++j)
      for (const auto& f : s->groebner())
        if (!h.is_zero_element(in_component(f, j)))
          throw InvariantViolation("homology of the dualizing complex is not killed by the ideal");
    out.homology.emplace(i, prune(h.over(s)).module);
    nonzero.push_back(i);
  }
  if (nonzero.size() == 1) out.concentrated_at = nonzero.front();
  return out;
}

/// A ring map B -> A given on the variables of B, checked to be an
/// isomorphism of graded algebras by elimination.
template <Field F>
struct Matching {
  using K = typename F::value_type;
  std::vector<std::pair<std::string, Polynomial<K>>> images;  // B variable -> polynomial over A
};

namespace detail {

template <class K>
Polynomial<K> reembed(const MonomialSpace& target, const Polynomial<K>& p, int offset, const TermOrder& ord) {
  std::vector<Term<K>> terms;
  for (const auto& t : p.terms) {
    std::vector<int> ex(target.nvars(), 0);
    for (int i = 0; i + offset < target.nvars(); ++i) ex[i + offset] = t.m.exp[i];
    terms.push_back({t.c, target.from_exponents(ex), t.comp});
  }
  return normalize(ord, std::move(terms));
}

/// Whether a polynomial on the combined space only involves the variables
/// at positions >= from.
template <class K>
bool only_after(const Polynomial<K>& p, int from) {
  for (const auto& t : p.terms)
    for (int i = 0; i < from; ++i)
      if (t.m.exp[i] != 0) return false;
  return true;
}

}  // namespace detail

/// Verifies that the matching identifies B with A: phi(I_B) ⊂ I_A, the kernel
/// of k[b] -> A is I_B, and every variable of A is hit.
template <Field F>
void check_isomorphism(const Ring<F>& a, const Ring<F>& b, const Matching<F>& matching) {
  using K = typename F::value_type;
  const int na = a.nvars(), nb = b.nvars();
  if (na + nb > kMaxVariables) throw TooLarge("combined presentation has too many variables");
  std::vector<Polynomial<K>> phi(nb);
  std::vector<bool> given(nb, false);
  for (const auto& [name, poly] : matching.images) {
    int j = b.space().index_of(name);
    if (j < 0) throw UndefinedName("matching names an unknown variable '" + name + "'");
    phi[j] = poly;
    given[j] = true;
  }
  for (int j = 0; j < nb; ++j) {
    if (given[j]) continue;
    int i = a.space().index_of(b.space().names()[j]);
    if (i < 0) throw PresentationsNotIsomorphic("no image given for variable '" + b.space().names()[j] + "'");
    phi[j] = a.variable(i);
  }
  for (int j = 0; j < nb; ++j) {
    if (phi[j].is_zero()) {
      throw PresentationsNotIsomorphic("variable '" + b.space().names()[j] + "' maps to zero");
    }
    auto deg = homogeneous_degree(phi[j], std::vector<int>{0});
    if (!deg || *deg != b.space().weight(j))
      throw PresentationsNotIsomorphic("image of '" + b.space().names()[j] + "' does not have its weight");
  }
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int i = 0; i < na; ++i) {
    names.push_back("a" + std::to_string(i));
    weights.push_back(a.space().weight(i));
  }
  for (int j = 0; j < nb; ++j) {
    names.push_back("b" + std::to_string(j));
    weights.push_back(b.space().weight(j));
  }
  auto space = std::make_shared<const MonomialSpace>(names, weights, MonomialOrder::WeightedGrevlex, na);
  auto combined = Ring<F>::create(a.field(), space, {});
  const auto ord = combined->order();
  std::vector<Polynomial<K>> ideal;
  for (const auto& g : a.groebner()) ideal.push_back(detail::reembed(*space, g, 0, ord));
  for (int j = 0; j < nb; ++j)
    ideal.push_back(sub(ord, combined->variable(na + j), detail::reembed(*space, phi[j], 0, ord)));
  combined = combined->with_ideal(ideal);
  for (const auto& g : b.groebner())
    if (!combined->reduce(detail::reembed(*space, g, na, ord)).is_zero())
      throw PresentationsNotIsomorphic("a relation of the second presentation does not hold in the first");
  for (const auto& g : combined->groebner()) {
    if (!detail::only_after(g, na)) continue;
    std::vector<Term<K>> terms;
    for (const auto& t : g.terms) {
      std::vector<int> ex(nb, 0);
      for (int j = 0; j < nb; ++j) ex[j] = t.m.exp[na + j];
      terms.push_back({t.c, b.space().from_exponents(ex), 0});
    }
    if (!b.reduce(normalize(b.order(), std::move(terms))).is_zero())
      throw PresentationsNotIsomorphic("the matching has a kernel larger than the second ideal");
  }
  for (int i = 0; i < na; ++i)
    if (!detail::only_after(combined->reduce(combined->variable(i)), na))
      throw PresentationsNotIsomorphic("the matching is not surjective onto the first presentation");
}

/// Homology tables of the dualizing complexes built from two presentations
/// of the same algebra, compared degree by degree.
template <Field F>
VerificationReport factorization_independence(typename Ring<F>::Ptr a, typename Ring<F>::Ptr b,
                                              const Matching<F>& matching, Window w) {
  check_isomorphism(*a, *b, matching);
  auto da = build_dualizing<F>(a), db = build_dualizing<F>(b);
  const int lo = std::min(da.lo(), db.lo()), hi = std::max(da.hi(), db.hi());
  auto r = make_report("factorization", "", da.table(lo, hi, w), db.table(lo, hi, w));
  r.note = "relative dimensions " + std::to_string(da.relative_dimension) + " and " +
           std::to_string(db.relative_dimension);
  return r;
}

namespace detail {

/// Expected table: `m` at index 0 and zero elsewhere on [n_lo, n_hi].
template <Field F>
HilbertTable unit_table(const ModulePresentation<F>& m, int n_lo, int n_hi, Window w, const std::string& label) {
  HilbertTable t{w, {}};
  for (int n = n_lo; n <= n_hi; ++n)
    t.add(label, n, n == 0 ? m.hilbert(w.lo, w.hi) : std::vector<long>(w.width(), 0));
  return t;
}

}  // namespace detail

/// τ_{≥-m} Hom_S(F_M, ω) with m = dim S: a bounded complex computing
/// RHom_S(M, ω) when ω is a canonical module.
template <Field F>
Complex<F> dual_complex(const ModulePresentation<F>& m, const ModulePresentation<F>& omega, int extra_depth = 0) {
  const int dim = std::max(m.ring()->krull_dimension(), 0);
  auto f = free_resolution(m, dim + 1 + extra_depth);
  auto h = hom(f, concentrated(omega));
  h.check();
  auto x = truncate_below(h, -dim);
  x.check();
  return x;
}

/// Ext^n_S(RHom_S(M, ω), ω) for n in [-dim S, n_max] against M at 0.
template <Field F>
VerificationReport biduality_check(const ModulePresentation<F>& m, const DualizingComplexData<F>& d, int n_max,
                                   Window w, int depth = -1) {
  const auto& omega = d.canonical_module();
  const int dim = std::max(d.sigma->krull_dimension(), 0);
  auto x = dual_complex(m, omega);
  auto expected = detail::unit_table(m, -dim, n_max, w, "Ext");
  return with_stability(depth < 0 ? default_depth(n_max) : depth, [&](int t) {
    return make_report("biduality", "", hyper_ext(x, omega, -dim, n_max, w, t), expected);
  });
}

/// Ext^n_S(ω, ω) against S at 0.
template <Field F>
VerificationReport homothety_check(const DualizingComplexData<F>& d, int n_max, Window w, int depth = -1) {
  const auto& omega = d.canonical_module();
  auto expected = detail::unit_table(ring_module<F>(d.sigma), 0, n_max, w, "Ext");
  return with_stability(depth < 0 ? default_depth(n_max) : depth, [&](int t) {
    return make_report("homothety", "", ext_graded(omega, omega, n_max, w, t), expected);
  });
}

/// For finite-dimensional S, H(D) against the graded dual of S: dim H_j
/// = dim S_{τ - j} with τ = top degree of S + bottom degree of H. τ is
/// reported as the alignment and is 0 when the twist conventions agree.
template <Field F>
VerificationReport finite_dual_check(typename Ring<F>::Ptr s, Window w) {
  auto sm = ring_module<F>(s);
  if (!sm.is_finite_dimensional()) throw NotFiniteDimensional("the algebra is not finite-dimensional");
  auto d = build_dualizing<F>(s);
  const auto& h = d.canonical_module();
  if (*d.concentrated_at != 0) throw NotConcentrated("the dualizing complex is not concentrated at 0");
  int s_top = 0;
  for (const auto& [mono, c] : sm.standard_basis()) s_top = std::max(s_top, mono.degree);
  int h_bottom = 0;
  bool found = false;
  for (const auto& [mono, c] : h.standard_basis()) {
    int deg = mono.degree + h.generator_degrees()[c];
    if (!found || deg < h_bottom) h_bottom = deg;
    found = true;
  }
  const int tau = s_top + h_bottom;
  HilbertTable lhs{w, {}}, rhs{w, {}};
  lhs.add("D", 0, h.hilbert(w.lo, w.hi));
  std::vector<long> dual(w.width(), 0);
  for (int j = w.lo; j <= w.hi; ++j) dual[j - w.lo] = tau - j >= 0 ? sm.dim_in_degree(tau - j) : 0;
  rhs.add("dual", 0, std::move(dual));
  auto r = make_report("finite-dual", "", std::move(lhs), std::move(rhs));
  r.alignment = tau;
  r.note = "twist " + std::to_string(tau);
  return r;
}

/// Ext^n over P ⊗ P of (P, P ⊗ P): consistent with smoothness when it
/// vanishes off n = d = dim P and is a rank-one free P-module at d.
template <Field F>
struct SmoothDiagnostics {
  bool consistent = false;
  int d = 0;
  std::optional<int> generator_degree;
  HilbertTable table;
  std::string note;
};

template <Field F>
SmoothDiagnostics<F> smooth_diagnostics(typename Ring<F>::Ptr p, int n_max, Window w, int depth = -1) {
  auto env = enveloping_algebra<F>(p);
  SmoothDiagnostics<F> out;
  out.d = std::max(p->krull_dimension(), 0);
  out.table = ext_graded(env.diagonal_module(), ring_module<F>(env.ring), n_max, w, depth);
  if (out.d > n_max) {
    out.note = "n_max is below the dimension";
    return out;
  }
  bool ok = true;
  for (const auto& row : out.table.rows)
    if (row.n != out.d && !row.is_zero()) ok = false;
  auto target = out.table.find(out.d);
  if (ok && target && !target->is_zero()) {
    int first = 0;
    while (target->dims[first] == 0) ++first;
    const int g = w.lo + first;
    auto free = ring_module<F>(p).twist(-g).hilbert(w.lo, w.hi);
    if (free == target->dims) out.generator_degree = g;
    else ok = false;
  } else {
    ok = false;
  }
  out.consistent = ok;
  if (!ok && out.note.empty()) out.note = "pattern differs from a smooth algebra";
  return out;
}

/// Betti numbers of S over S ⊗ S beyond the Krull dimension certify that S
/// has infinite projective dimension there, hence is not smooth.
struct NonsmoothVerdict {
  bool not_smooth = false;
  int n = 0;  // witness index, or the n_max checked
  std::vector<int> betti;
};

template <Field F>
NonsmoothVerdict nonsmooth_certificate(typename Ring<F>::Ptr s, int n_max) {
  auto env = enveloping_algebra<F>(s);
  const int dim = std::max(s->krull_dimension(), 0);
  if (n_max <= dim) throw InvalidArgument("n_max must exceed the Krull dimension");
  auto f = free_resolution(env.diagonal_module(), n_max);
  NonsmoothVerdict v;
  for (int i = 0; i <= n_max; ++i) v.betti.push_back(f.rank(i));
  for (int i = dim + 1; i <= n_max; ++i)
    if (f.rank(i) > 0) {
      v.not_smooth = true;
      v.n = i;
      return v;
    }
  v.n = n_max;
  return v;
}

}  // namespace hochred
