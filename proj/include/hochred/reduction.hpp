#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hochred/dualizing.hpp"
#include "hochred/hochschild.hpp"
#include "hochred/verification.hpp"

namespace hochred {

/// RHom_S(M, D) as a bounded complex of S-modules: the truncated dual
/// complex into ω placed so that H(D) sits at its homological degree.
/// `placement_shift` moves D further, for alignment probes.
template <Field F>
Complex<F> inner_complex(const ModulePresentation<F>& m, const DualizingComplexData<F>& d, int placement_shift = 0) {
  const auto& omega = d.canonical_module();
  return shift(dual_complex(m, omega), *d.concentrated_at + placement_shift);
}

namespace detail {

inline int resolved_depth(int n_max, int depth) {
  return depth < 0 ? default_depth(n_max) : depth;
}

inline HilbertTable zero_rows(const std::string& label, int n_lo, int n_hi, Window w) {
  HilbertTable t{w, {}};
  for (int n = n_lo; n <= n_hi; ++n) t.add(label, n, std::vector<long>(w.width(), 0));
  return t;
}

inline void append_rows(HilbertTable& into, const HilbertTable& from) {
  for (const auto& r : from.rows) into.rows.push_back(r);
}

/// The single nonzero homology module of a bounded complex and its degree.
template <Field F>
std::pair<int, ModulePresentation<F>> concentrated_homology(const Complex<F>& c, const std::string& what) {
  std::optional<std::pair<int, ModulePresentation<F>>> found;
  for (int i = c.lo; i <= c.hi(); ++i) {
    auto h = c.homology(i);
    if (h.is_zero_module()) continue;
    if (found) throw NotConcentrated(what + " has homology in more than one degree");
    found.emplace(i, std::move(h));
  }
  if (!found) return {0, ModulePresentation<F>(c.ring, {})};
  return std::move(*found);
}

}  // namespace detail

/// H^n RHom_S(RHom_S(M, D), N) for 0 <= n <= n_max.
template <Field F>
HilbertTable reduce_cohomology(const ModulePresentation<F>& m, const ModulePresentation<F>& n,
                               const DualizingComplexData<F>& d, int n_max, Window w, int depth = -1,
                               int placement_shift = 0) {
  auto x = inner_complex(m, d, placement_shift);
  return hyper_ext(x, n, 0, n_max, w, depth);
}

/// H_n (RHom_S(M, D) ⊗^L_S N) for 0 <= n <= n_max.
template <Field F>
HilbertTable reduce_homology(const ModulePresentation<F>& m, const ModulePresentation<F>& n,
                             const DualizingComplexData<F>& d, int n_max, Window w, int depth = -1) {
  auto x = inner_complex(m, d);
  return hyper_tor(x, n, 0, n_max, w, depth);
}

/// Ext over S ⊗ S of (S, M ⊗ N) against the reduced side.
template <Field F>
VerificationReport verify_reduction(typename Ring<F>::Ptr s, const ModulePresentation<F>& m,
                                    const ModulePresentation<F>& n, int n_max, Window w, int depth = -1) {
  auto d = build_dualizing<F>(s);
  auto env = enveloping_algebra<F>(s);
  auto coefficient = tensor_bimodule(env, m, n);
  auto r = with_stability(detail::resolved_depth(n_max, depth), [&](int t) {
    auto lhs = hochschild_ext(env, coefficient, n_max, w, t);
    auto rhs = reduce_cohomology(m, n, d, n_max, w, t);
    return make_report("reduction", "", std::move(lhs), std::move(rhs));
  });
  r.alignment = *d.concentrated_at;
  return r;
}

/// Ext over S ⊗ S of (S, H(RHom_S(M, D)) ⊗ N), reindexed by the degree of
/// that homology, against Ext_S(M, N).
template <Field F>
VerificationReport reduce_ext(typename Ring<F>::Ptr s, const ModulePresentation<F>& m,
                              const ModulePresentation<F>& n, int n_max, Window w, int depth = -1) {
  auto d = build_dualizing<F>(s);
  auto [deg, inner] = detail::concentrated_homology(inner_complex(m, d), "RHom(M, D)");
  inner = prune(inner.over(s)).module;
  auto env = enveloping_algebra<F>(s);
  auto coefficient = tensor_bimodule(env, inner, n);
  const int sdeg = deg;
  auto r = with_stability(detail::resolved_depth(n_max, depth), [&](int t) {
    // row n is Ext^{n + s}; rows with n + s < 0 vanish
    HilbertTable lhs{w, {}};
    const int top = n_max + sdeg;
    if (top >= 0) {
      auto full = hochschild_ext(env, coefficient, top, w, t + std::max(sdeg, 0));
      for (int k = 0; k <= n_max; ++k) {
        const int idx = k + sdeg;
        lhs.add("HH", k, idx >= 0 ? full.find(idx)->dims : std::vector<long>(w.width(), 0));
      }
    } else {
      lhs = detail::zero_rows("HH", 0, n_max, w);
    }
    auto rhs = ext_graded(m, n, n_max, w, t);
    return make_report("reduction-coefficient", "", std::move(lhs), std::move(rhs));
  });
  r.alignment = sdeg;
  return r;
}

/// Tor over S ⊗ S of (S, Hom_k(M, N)) against H(RHom_S(M, D) ⊗^L N).
template <Field F>
VerificationReport verify_homology_reduction(typename Ring<F>::Ptr s, const ModulePresentation<F>& m,
                                             const ModulePresentation<F>& n, int n_max, Window w,
                                             int depth = -1) {
  auto d = build_dualizing<F>(s);
  auto env = enveloping_algebra<F>(s);
  auto coefficient = hom_bimodule(env, m, n);
  auto r = with_stability(detail::resolved_depth(n_max, depth), [&](int t) {
    auto lhs = hochschild_tor(env, coefficient, n_max, w, t);
    auto rhs = reduce_homology(m, n, d, n_max, w, t);
    return make_report("homology-reduction", "", std::move(lhs), std::move(rhs));
  });
  r.alignment = *d.concentrated_at;
  return r;
}

/// Tor over S ⊗ S of (S, Hom_k(S, S)) against the homology of D.
template <Field F>
VerificationReport dualizing_via_tor(typename Ring<F>::Ptr s, int n_max, Window w, int depth = -1) {
  auto sm = ring_module<F>(s);
  if (!sm.is_finite_dimensional()) throw NotFiniteDimensional("the algebra is not finite-dimensional");
  auto d = build_dualizing<F>(s);
  auto env = enveloping_algebra<F>(s);
  auto coefficient = hom_bimodule(env, sm, sm);
  auto rhs = d.table(0, n_max, w);
  return with_stability(detail::resolved_depth(n_max, depth), [&](int t) {
    return make_report("dualizing-tor", "", hochschild_tor(env, coefficient, n_max, w, t), rhs);
  });
}

/// Ext over S ⊗ S of (S, Hom_k(M, N)) against Ext_S(M, N), then Tor over
/// S ⊗ S of (S, M ⊗ N) against Tor^S(M, N), as one report.
template <Field F>
VerificationReport classical_check(typename Ring<F>::Ptr s, const ModulePresentation<F>& m,
                                   const ModulePresentation<F>& n, int n_max, Window w, int depth = -1) {
  auto env = enveloping_algebra<F>(s);
  auto hom_coef = hom_bimodule(env, m, n);
  auto tensor_coef = tensor_bimodule(env, m, n);
  return with_stability(detail::resolved_depth(n_max, depth), [&](int t) {
    auto lhs = hochschild_ext(env, hom_coef, n_max, w, t);
    detail::append_rows(lhs, detail::relabel(hochschild_tor(env, tensor_coef, n_max, w, t), "HH_tor"));
    auto rhs = ext_graded(m, n, n_max, w, t);
    detail::append_rows(rhs, tor_graded(m, n, n_max, w, t));
    return make_report("classical", "", std::move(lhs), std::move(rhs));
  });
}

/// M read over the polynomial ring of the presentation of S.
template <Field F>
ModulePresentation<F> restrict_to_ambient(const ModulePresentation<F>& m) {
  using K = typename F::value_type;
  const auto& s = *m.ring();
  auto q = s.ambient();
  std::vector<Vector<K>> rel = m.relations();
  for (int i = 0; i < m.rank(); ++i)
    for (const auto& f : s.groebner()) rel.push_back(in_component(f, i));
  return ModulePresentation<F>(q, m.generator_degrees(), std::move(rel));
}

/// Ext over S ⊗ S of (S, M ⊗ N) at n against Ext_S^{n - e}(RHom_Q(M, Ω), N),
/// e the number of variables of Q; with RHom_Q(M, Ω) concentrated in
/// cohomological degree c this is Ext_S^{n - (e - c)}(W, N).
template <Field F>
VerificationReport corollary_shift_check(typename Ring<F>::Ptr s, const ModulePresentation<F>& m,
                                         const ModulePresentation<F>& n, int n_max, Window w, int depth = -1) {
  auto d = build_dualizing<F>(s);
  d.canonical_module();  // D must be concentrated
  auto q = s->ambient();
  const int e = q->nvars();
  auto g = free_resolution(restrict_to_ambient(m), 0);
  auto v = hom(g, concentrated(free_module<F>(q, {d.omega_twist})));
  v.check();
  auto [hdeg, wq] = detail::concentrated_homology(v, "RHom_Q(M, Ω)");
  if (wq.is_zero_module()) throw NotConcentrated("RHom_Q(M, Ω) vanishes");
  auto wmod = prune(wq.over(s)).module;
  const int c = -hdeg;
  const int offset = e - c;
  auto env = enveloping_algebra<F>(s);
  auto coefficient = tensor_bimodule(env, m, n);
  auto r = with_stability(detail::resolved_depth(n_max, depth), [&](int t) {
    auto lhs = hochschild_ext(env, coefficient, n_max, w, t);
    HilbertTable rhs{w, {}};
    const int top = n_max - offset;
    std::optional<HilbertTable> ext;
    if (top >= 0) ext = ext_graded(wmod, n, top, w, t);
    for (int k = 0; k <= n_max; ++k) {
      const int idx = k - offset;
      rhs.add("Ext", k, idx >= 0 && ext ? ext->find(idx)->dims : std::vector<long>(w.width(), 0));
    }
    return make_report("shifted-reduction", "", std::move(lhs), std::move(rhs));
  });
  r.alignment = offset;
  return r;
}

}  // namespace hochred
