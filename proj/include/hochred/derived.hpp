#pragma once

#include <string>
#include <vector>

#include "hochred/complex.hpp"
#include "hochred/hilbert.hpp"
#include "hochred/resolution.hpp"

namespace hochred {

/// Default truncation depth for a computation up to index n_max.
inline int default_depth(int n_max) { return n_max + 4; }

/// Default internal-degree window for a computation up to index n_max.
inline Window default_window(int n_max) { return {-(n_max + 4), n_max + 4}; }

namespace detail {

template <Field F>
HilbertTable cohomology_rows(const Complex<F>& h, const std::string& label, int n_lo, int n_max, Window w) {
  HilbertTable t{w, {}};
  for (int n = n_lo; n <= n_max; ++n) {
    if (!h.certified(-n))
      throw OutsideValidityWindow(label + "^" + std::to_string(n) + " is not certified at this depth");
    t.add(label, n, h.homology_hilbert(-n, w));
  }
  return t;
}

template <Field F>
HilbertTable homology_rows(const Complex<F>& h, const std::string& label, int n_lo, int n_max, Window w) {
  HilbertTable t{w, {}};
  for (int n = n_lo; n <= n_max; ++n) {
    if (!h.certified(n)) throw OutsideValidityWindow(label + "_" + std::to_string(n) + " is not certified at this depth");
    t.add(label, n, h.homology_hilbert(n, w));
  }
  return t;
}

}  // namespace detail

/// Graded Ext^n(M, N) = H_{-n} Hom(F, N), F a truncated minimal resolution of M.
template <Field F>
HilbertTable ext_graded(const ModulePresentation<F>& m, const ModulePresentation<F>& n, int n_max, Window w,
                        int depth = -1) {
  if (depth < 0) depth = default_depth(n_max);
  auto res = free_resolution(m, depth);
  auto h = hom(res, concentrated(n));
  h.check();
  return detail::cohomology_rows(h, "Ext", 0, n_max, w);
}

/// Graded Tor_n(M, N) = H_n(F ⊗ N).
template <Field F>
HilbertTable tor_graded(const ModulePresentation<F>& m, const ModulePresentation<F>& n, int n_max, Window w,
                        int depth = -1) {
  if (depth < 0) depth = default_depth(n_max);
  auto res = free_resolution(m, depth);
  auto h = tensor(res, concentrated(n));
  h.check();
  return detail::homology_rows(h, "Tor", 0, n_max, w);
}

/// H^{n} Hom(P, N) for a semifree resolution P of C built to degree C.hi + depth.
template <Field F>
HilbertTable hyper_ext(const Complex<F>& c, const ModulePresentation<F>& n, int n_lo, int n_max, Window w,
                       int depth = -1) {
  if (depth < 0) depth = default_depth(n_max);
  auto p = semifree_resolution(c, std::max(c.hi(), 0) + depth).complex;
  p.check();
  auto h = hom(p, concentrated(n));
  h.check();
  return detail::cohomology_rows(h, "Ext", n_lo, n_max, w);
}

/// H_n(P ⊗ N) for a semifree resolution P of C.
template <Field F>
HilbertTable hyper_tor(const Complex<F>& c, const ModulePresentation<F>& n, int n_lo, int n_max, Window w,
                       int depth = -1) {
  if (depth < 0) depth = default_depth(n_max);
  auto p = semifree_resolution(c, std::max(c.hi(), 0) + depth).complex;
  p.check();
  auto h = tensor(p, concentrated(n));
  h.check();
  return detail::homology_rows(h, "Tor", n_lo, n_max, w);
}

/// Homology table of a complex over degrees [i_lo, i_hi].
template <Field F>
HilbertTable homology_table(const Complex<F>& c, int i_lo, int i_hi, Window w, const std::string& label = "H") {
  return detail::homology_rows(c, label, i_lo, i_hi, w);
}

}  // namespace hochred
