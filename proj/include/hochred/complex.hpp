#pragma once

#include <algorithm>
#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "hochred/errors.hpp"
#include "hochred/hilbert.hpp"
#include "hochred/module.hpp"

namespace hochred {

/// Bounded complex of graded modules with homological indexing, d: C_i -> C_{i-1}.
///
/// terms[k] sits in degree lo + k; d[k] lists the images of the generators
/// of terms[k] in the free cover of terms[k-1] (d[0] is zero). A complex is
/// free when no term carries relations. Homology is only certified on
/// [valid_lo, valid_hi].
template <Field F>
struct Complex {
  using K = typename F::value_type;
  using Module = ModulePresentation<F>;

  typename Ring<F>::Ptr ring;
  int lo = 0;
  std::vector<Module> terms;
  std::vector<std::vector<Vector<K>>> d;
  int valid_lo = INT_MIN;
  int valid_hi = INT_MAX;
  bool complete = true;

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool in_range(int i) const { return i >= lo && i <= hi(); }

  Module term(int i) const {
    if (!in_range(i)) return Module(ring, {});
    return terms[i - lo];
  }
  int rank(int i) const { return in_range(i) ? terms[i - lo].rank() : 0; }

  /// Images of the generators of C_i in C_{i-1}.
  std::vector<Vector<K>> differential(int i) const {
    if (!in_range(i)) return {};
    if (!in_range(i - 1)) return std::vector<Vector<K>>(terms[i - lo].rank());
    return d[i - lo];
  }

  bool is_free() const {
    for (const auto& t : terms)
      if (!t.relations().empty()) return false;
    return true;
  }

  bool certified(int i) const { return i >= valid_lo && i <= valid_hi; }

  /// d o d = 0 and compatibility of d with the relations, via normal forms.
  void check() const {
    for (int i = lo; i <= hi(); ++i) {
      auto di = differential(i);
      if (static_cast<int>(di.size()) != rank(i))
        throw InvariantViolation("differential at " + std::to_string(i) + " has the wrong number of columns");
      if (!in_range(i - 1)) continue;
      Module target = term(i - 1);
      Module source = term(i);
      for (const auto& rel : source.relations())
        if (!target.is_zero_element(apply_columns(*ring, di, rel)))
          throw InvariantViolation("differential at " + std::to_string(i) + " does not respect relations");
      if (!in_range(i - 2)) continue;
      auto dd = differential(i - 1);
      Module target2 = term(i - 2);
      for (const auto& v : di)
        if (!target2.is_zero_element(apply_columns(*ring, dd, v)))
          throw InvariantViolation("d o d != 0 at degree " + std::to_string(i));
    }
  }

  /// ker(d_i) / im(d_{i+1}) as a pruned presentation.
  Module homology(int i) const {
    if (!certified(i)) throw OutsideValidityWindow("homology at " + std::to_string(i) + " is outside the validity window");
    if (!in_range(i)) return Module(ring, {});
    ModuleMap<F> f{term(i), term(i - 1), differential(i)};
    auto sq = subquotient(f, differential(i + 1));
    return prune(sq.module).module;
  }

  /// Graded dimensions of H_i on a window, from cokernel Hilbert functions:
  /// dim H_i = dim C_i - dim im d_i - dim im d_{i+1}.
  std::vector<long> homology_hilbert(int i, Window w) const {
    if (!certified(i)) throw OutsideValidityWindow("homology at " + std::to_string(i) + " is outside the validity window");
    std::vector<long> out(w.width(), 0);
    if (!in_range(i)) return out;
    auto image_dims = [&](int k) {
      std::vector<long> dims(w.width(), 0);
      if (!in_range(k) || !in_range(k - 1)) return dims;
      Module target = term(k - 1);
      auto full = target.hilbert(w.lo, w.hi);
      auto cok = target.quotient(differential(k)).hilbert(w.lo, w.hi);
      for (int j = 0; j < w.width(); ++j) dims[j] = full[j] - cok[j];
      return dims;
    };
    auto c = term(i).hilbert(w.lo, w.hi);
    auto a = image_dims(i), b = image_dims(i + 1);
    for (int j = 0; j < w.width(); ++j) {
      out[j] = c[j] - a[j] - b[j];
      if (out[j] < 0) throw InvariantViolation("negative homology dimension; the complex is not a complex");
    }
    return out;
  }
};

template <Field F>
Complex<F> concentrated(const ModulePresentation<F>& m, int degree = 0) {
  Complex<F> c;
  c.ring = m.ring();
  c.lo = degree;
  c.terms = {m};
  c.d = {std::vector<Vector<typename F::value_type>>(m.rank())};
  return c;
}

template <Field F>
Complex<F> free_complex(typename Ring<F>::Ptr ring, int lo, const std::vector<std::vector<int>>& degrees,
                        std::vector<std::vector<Vector<typename F::value_type>>> d) {
  Complex<F> c;
  c.ring = ring;
  c.lo = lo;
  for (const auto& g : degrees) c.terms.emplace_back(ring, g);
  c.d = std::move(d);
  c.d.resize(c.terms.size());
  for (std::size_t k = 0; k < c.terms.size(); ++k)
    if (k == 0 || c.d[k].empty()) c.d[k].resize(c.terms[k].rank());
  return c;
}

/// Sigma^s C: (Sigma^s C)_i = C_{i-s}, differential scaled by (-1)^s.
template <Field F>
Complex<F> shift(const Complex<F>& c, int s) {
  Complex<F> out = c;
  out.lo = c.lo + s;
  if (s % 2 != 0)
    for (auto& col : out.d)
      for (auto& v : col) v = negated(std::move(v));
  if (c.valid_lo != INT_MIN) out.valid_lo = c.valid_lo + s;
  if (c.valid_hi != INT_MAX) out.valid_hi = c.valid_hi + s;
  return out;
}

/// Hom(F, C) for F free: Hom_p = prod_i Hom(F_i, C_{i+p}) with
/// (d phi) = d_C o phi - (-1)^p phi o d_F.
template <Field F>
Complex<F> hom(const Complex<F>& f, const Complex<F>& c) {
  using K = typename F::value_type;
  if (!f.is_free()) throw InvalidArgument("hom source must be a free complex");
  const auto& ring = *f.ring;
  const auto ord = ring.order();
  Complex<F> out;
  out.ring = f.ring;
  const int plo = c.lo - f.hi(), phi = c.hi() - f.lo;
  out.lo = plo;
  // A truncated F is the brutal truncation of a resolution; H_p needs F up to c.hi - p + 1.
  if (!f.complete) out.valid_lo = c.hi() + 1 - f.hi();
  out.complete = f.complete && c.complete;
  // offset[p][i] = first generator index of block Hom(F_i, C_{i+p})
  auto offset = [&](int p, int i) {
    int o = 0;
    for (int k = f.lo; k < i; ++k) o += f.rank(k) * c.rank(k + p);
    return o;
  };
  for (int p = plo; p <= phi; ++p) {
    std::vector<int> degs;
    std::vector<Vector<K>> rels;
    for (int i = f.lo; i <= f.hi(); ++i) {
      auto fi = f.term(i);
      auto cj = c.term(i + p);
      const int base = static_cast<int>(degs.size());
      for (int g = 0; g < fi.rank(); ++g) {
        for (int a : cj.generator_degrees()) degs.push_back(a - fi.generator_degrees()[g]);
        for (const auto& r : cj.relations()) rels.push_back(shifted_components(r, base + g * cj.rank()));
      }
    }
    out.terms.emplace_back(f.ring, std::move(degs), std::move(rels));
  }
  out.d.resize(out.terms.size());
  for (int p = plo; p <= phi; ++p) {
    auto& col = out.d[p - plo];
    col.assign(out.terms[p - plo].rank(), Vector<K>{});
    if (p == plo) continue;
    const bool odd = ((p % 2) + 2) % 2 == 1;
    for (int i = f.lo; i <= f.hi(); ++i) {
      const int j = i + p;
      const int rc = c.rank(j);
      if (rc == 0) continue;
      const int rf = f.rank(i);
      auto dc = c.differential(j);
      for (int g = 0; g < rf; ++g)
        for (int a = 0; a < rc; ++a) {
          Vector<K> v;
          if (c.in_range(j - 1)) {
            const int o = offset(p - 1, i), r1 = c.rank(j - 1);
            std::vector<Term<K>> terms;
            for (const auto& t : dc[a].terms) terms.push_back({t.c, t.m, o + g * r1 + t.comp});
            v = add(ord, v, normalize(ord, std::move(terms)));
          }
          if (f.in_range(i + 1)) {
            const int o = offset(p - 1, i + 1);
            auto df = f.differential(i + 1);
            std::vector<Term<K>> terms;
            // phi_{g,a} o d_F sends e_h to (entry g of d e_h) * e_a
            for (int h = 0; h < f.rank(i + 1); ++h)
              for (const auto& t : df[h].terms)
                if (t.comp == g) terms.push_back({odd ? t.c : K(-t.c), t.m, o + h * rc + a});
            v = add(ord, v, normalize(ord, std::move(terms)));
          }
          col[offset(p, i) + g * rc + a] = std::move(v);
        }
    }
  }
  out.check();
  return out;
}

/// F ⊗ C for F free, with d(f ⊗ c) = df ⊗ c + (-1)^{|f|} f ⊗ dc.
template <Field F>
Complex<F> tensor(const Complex<F>& f, const Complex<F>& c) {
  using K = typename F::value_type;
  if (!f.is_free()) throw InvalidArgument("tensor requires a free first factor");
  const auto& ring = *f.ring;
  const auto ord = ring.order();
  Complex<F> out;
  out.ring = f.ring;
  const int plo = f.lo + c.lo, phi = f.hi() + c.hi();
  out.lo = plo;
  if (!f.complete) out.valid_hi = f.hi() - 1 + c.lo;
  out.complete = f.complete && c.complete;
  auto offset = [&](int p, int i) {
    int o = 0;
    for (int k = f.lo; k < i; ++k) o += f.rank(k) * c.rank(p - k);
    return o;
  };
  for (int p = plo; p <= phi; ++p) {
    std::vector<int> degs;
    std::vector<Vector<K>> rels;
    for (int i = f.lo; i <= f.hi(); ++i) {
      auto fi = f.term(i);
      auto cj = c.term(p - i);
      const int base = static_cast<int>(degs.size());
      for (int g = 0; g < fi.rank(); ++g) {
        for (int a : cj.generator_degrees()) degs.push_back(a + fi.generator_degrees()[g]);
        for (const auto& r : cj.relations()) rels.push_back(shifted_components(r, base + g * cj.rank()));
      }
    }
    out.terms.emplace_back(f.ring, std::move(degs), std::move(rels));
  }
  out.d.resize(out.terms.size());
  for (int p = plo; p <= phi; ++p) {
    auto& col = out.d[p - plo];
    col.assign(out.terms[p - plo].rank(), Vector<K>{});
    if (p == plo) continue;
    for (int i = f.lo; i <= f.hi(); ++i) {
      const int j = p - i;
      const int rc = c.rank(j);
      if (rc == 0) continue;
      const bool odd = ((i % 2) + 2) % 2 == 1;
      auto df = f.differential(i);
      auto dc = c.differential(j);
      for (int g = 0; g < f.rank(i); ++g)
        for (int a = 0; a < rc; ++a) {
          std::vector<Term<K>> terms;
          if (f.in_range(i - 1)) {
            const int o = offset(p - 1, i - 1);
            for (const auto& t : df[g].terms) terms.push_back({t.c, t.m, o + t.comp * rc + a});
          }
          if (c.in_range(j - 1)) {
            const int o = offset(p - 1, i), r1 = c.rank(j - 1);
            for (const auto& t : dc[a].terms) terms.push_back({odd ? K(-t.c) : t.c, t.m, o + g * r1 + t.comp});
          }
          col[offset(p, i) + g * rc + a] = normalize(ord, std::move(terms));
        }
    }
  }
  out.check();
  return out;
}

/// Chain map between complexes: images[i - lo] lists the images of the
/// generators of source_i in the free cover of target_i.
template <Field F>
struct ChainMap {
  int lo = 0;
  std::vector<std::vector<Vector<typename F::value_type>>> images;

  std::vector<Vector<typename F::value_type>> at(int i, int rank) const {
    int k = i - lo;
    if (k < 0 || k >= static_cast<int>(images.size())) return std::vector<Vector<typename F::value_type>>(rank);
    return images[k];
  }
};

/// Mapping cone of f: C -> D: Cone_n = D_n ⊕ C_{n-1},
/// d(y, x) = (d y + f x, -d x).
template <Field F>
Complex<F> cone(const Complex<F>& c, const Complex<F>& dcx, const ChainMap<F>& f) {
  using K = typename F::value_type;
  const auto ord = c.ring->order();
  Complex<F> out;
  out.ring = c.ring;
  const int lo = std::min(dcx.lo, c.lo + 1), hi = std::max(dcx.hi(), c.hi() + 1);
  out.lo = lo;
  for (int n = lo; n <= hi; ++n) out.terms.push_back(direct_sum(dcx.term(n), c.term(n - 1)));
  for (int n = lo; n <= hi; ++n) {
    std::vector<Vector<K>> col;
    auto dd = dcx.differential(n);
    for (auto& v : dd) col.push_back(v);
    auto dc = c.differential(n - 1);
    auto fn = f.at(n - 1, c.rank(n - 1));
    const int shift_c = dcx.rank(n - 1);
    for (int g = 0; g < c.rank(n - 1); ++g) {
      Vector<K> v = fn[g];
      v = add(ord, v, shifted_components(negated(dc[g]), shift_c));
      col.push_back(std::move(v));
    }
    if (n == lo) col.assign(out.terms[0].rank(), Vector<K>{});
    out.d.push_back(std::move(col));
  }
  out.check();
  return out;
}

/// Good truncation keeping degrees >= m: terms below m dropped, C_m
/// replaced by the cycles Z_m. The cycles are presented on minimal
/// generators inside C_m, and d_{m+1} is rewritten in those coordinates.
template <Field F>
Complex<F> truncate_below(const Complex<F>& c, int m) {
  using K = typename F::value_type;
  if (m <= c.lo) return c;
  Complex<F> out;
  out.ring = c.ring;
  out.lo = m;
  // Z_m only needs d_m, so the truncation is exact once m is certified.
  if (!c.certified(m)) throw OutsideValidityWindow("truncation degree is outside the validity window");
  out.valid_hi = c.valid_hi;
  out.complete = true;
  if (m > c.hi()) return out;
  auto cm = c.term(m);
  ModuleMap<F> dm{cm, c.term(m - 1), c.differential(m)};
  auto lifts = kernel_lift(dm);
  auto base = make_engine(*c.ring, cm.generator_degrees(), cm.relations());
  auto gens = minimal_generators(std::move(base), std::move(lifts), cm.generator_degrees());
  auto z = image_presentation(cm, gens);
  out.terms.push_back(z);
  out.d.push_back(std::vector<Vector<K>>(z.rank()));
  if (m + 1 <= c.hi()) {
    auto engine = make_engine(*c.ring, cm.generator_degrees(), cm.relations(), z.generator_degrees(), gens);
    engine.complete();
    std::vector<Vector<K>> col;
    for (const auto& v : c.differential(m + 1)) {
      auto coords = engine.lift(v);
      if (!coords) throw InvariantViolation("boundary is not a cycle during truncation");
      col.push_back(z.normal_form(*coords));
    }
    for (int i = m + 1; i <= c.hi(); ++i) {
      out.terms.push_back(c.term(i));
      out.d.push_back(i == m + 1 ? col : c.differential(i));
    }
  }
  out.check();
  return out;
}

}  // namespace hochred
