#pragma once

#include <climits>
#include <utility>
#include <vector>

#include "hochred/complex.hpp"

namespace hochred {

/// Minimal graded free resolution F_0 <- F_1 <- ... <- F_t of M, exact in
/// degrees <= t - 1 with H_0 = M. Stops early (complete) when a syzygy
/// module vanishes, which always happens over a polynomial ring.
template <Field F>
Complex<F> free_resolution(const ModulePresentation<F>& m, int depth) {
  using K = typename F::value_type;
  if (depth < 0) throw InvalidArgument("resolution depth must be non-negative");
  const auto& ring = *m.ring();
  auto p = prune(m).module;
  Complex<F> out;
  out.ring = m.ring();
  out.lo = 0;
  out.terms.push_back(free_module<F>(m.ring(), p.generator_degrees()));
  out.d.push_back(std::vector<Vector<K>>(p.rank()));
  std::vector<Vector<K>> cols = p.relations();
  std::vector<int> prev = p.generator_degrees();
  bool complete = cols.empty();
  // Hilbert's syzygy theorem bounds the length over a polynomial ring.
  const bool finite = ring.is_polynomial_ring();
  for (int k = 1; (k <= depth || finite) && !complete; ++k) {
    std::vector<int> degs;
    for (const auto& c : cols) degs.push_back(*homogeneous_degree(c, prev));
    out.terms.push_back(free_module<F>(m.ring(), degs));
    out.d.push_back(cols);
    if (k == depth && !finite) break;
    auto engine = make_engine(ring, prev, {}, degs, cols);
    engine.complete();
    auto base = make_engine(ring, degs, {});
    cols = minimal_generators(std::move(base), engine.syzygies(), degs);
    prev = std::move(degs);
    complete = cols.empty();
  }
  out.complete = complete;
  if (!complete) out.valid_hi = depth - 1;
  out.valid_lo = 0;
  out.check();
  return out;
}

/// Semifree resolution of a bounded complex by killing the cycles of the
/// mapping cone one homological degree at a time, upward from the bottom of C.
template <Field F>
struct SemifreeResolution {
  Complex<F> complex;
  ChainMap<F> to_source;
};

template <Field F>
SemifreeResolution<F> semifree_resolution(const Complex<F>& c, int top) {
  using K = typename F::value_type;
  const auto& ring = *c.ring;
  const auto ord = ring.order();
  Complex<F> p;
  p.ring = c.ring;
  p.lo = c.lo;
  ChainMap<F> phi;
  phi.lo = c.lo;
  bool complete = false;
  for (int n = c.lo; n <= top; ++n) {
    auto cn = c.term(n);
    auto pprev = p.term(n - 1);
    const int rc = cn.rank(), rp = pprev.rank(), rc1 = c.rank(n - 1);
    auto source = direct_sum(cn, pprev);
    auto target = direct_sum(c.term(n - 1), p.term(n - 2));
    std::vector<Vector<K>> images = c.differential(n);
    auto phil = phi.at(n - 1, rp);
    auto dp = p.differential(n - 1);
    for (int g = 0; g < rp; ++g)
      images.push_back(add(ord, phil[g], shifted_components(negated(dp[g]), rc1)));
    auto lifts = kernel_lift(ModuleMap<F>{source, target, images});
    std::vector<Vector<K>> base = cn.relations();
    for (const auto& v : c.differential(n + 1)) base.push_back(v);
    auto gens = minimal_generators(make_engine(ring, source.generator_degrees(), base), std::move(lifts),
                                   source.generator_degrees());
    std::vector<int> degs;
    std::vector<Vector<K>> dcol, fcol;
    for (const auto& g : gens) {
      degs.push_back(*homogeneous_degree(g, source.generator_degrees()));
      Vector<K> v, u;
      for (const auto& t : g.terms) (t.comp < rc ? v : u).terms.push_back(t);
      fcol.push_back(std::move(v));
      dcol.push_back(negated(shifted_components(std::move(u), -rc)));
    }
    p.terms.push_back(free_module<F>(c.ring, degs));
    p.d.push_back(n == p.lo ? std::vector<Vector<K>>(degs.size()) : std::move(dcol));
    phi.images.push_back(std::move(fcol));
    if (n > c.hi() && degs.empty()) {
      complete = true;
      break;
    }
  }
  while (p.terms.size() > 1 && p.terms.back().rank() == 0) {
    p.terms.pop_back();
    p.d.pop_back();
    phi.images.pop_back();
  }
  p.complete = complete;
  p.valid_lo = c.lo;
  if (!complete) p.valid_hi = top - 1;
  p.check();
  return {std::move(p), std::move(phi)};
}

/// Koszul complex on homogeneous f_1..f_d: K_i has basis e_J, |J| = i, of
/// degree sum deg f_j, and d e_J = sum_k (-1)^k f_{j_k} e_{J - j_k}.
template <Field F>
Complex<F> koszul_complex(typename Ring<F>::Ptr ring, const std::vector<Polynomial<typename F::value_type>>& seq) {
  using K = typename F::value_type;
  if (seq.empty()) throw InvalidArgument("Koszul complex needs a non-empty sequence");
  const int d = static_cast<int>(seq.size());
  if (d > 20) throw TooLarge("Koszul complex on more than 20 elements");
  std::vector<int> deg(d);
  for (int j = 0; j < d; ++j) {
    auto h = homogeneous_degree(seq[j], std::vector<int>{0});
    if (!h) throw InvalidArgument("Koszul sequence contains zero");
    deg[j] = *h;
  }
  const auto ord = ring->order();
  std::vector<std::vector<unsigned>> subsets(d + 1);
  for (unsigned mask = 0; mask < (1u << d); ++mask) subsets[__builtin_popcount(mask)].push_back(mask);
  std::vector<std::vector<int>> degrees(d + 1);
  for (int i = 0; i <= d; ++i)
    for (unsigned mask : subsets[i]) {
      int s = 0;
      for (int j = 0; j < d; ++j)
        if (mask & (1u << j)) s += deg[j];
      degrees[i].push_back(s);
    }
  std::vector<std::vector<Vector<K>>> diffs(d + 1);
  for (int i = 1; i <= d; ++i) {
    auto index_of = [&](unsigned mask) {
      const auto& v = subsets[i - 1];
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] == mask) return static_cast<int>(k);
      return -1;
    };
    for (unsigned mask : subsets[i]) {
      Vector<K> col;
      int pos = 0;
      for (int j = 0; j < d; ++j) {
        if (!(mask & (1u << j))) continue;
        Vector<K> term = in_component(seq[j], index_of(mask & ~(1u << j)));
        col = pos % 2 == 0 ? add(ord, col, term) : sub(ord, col, term);
        ++pos;
      }
      diffs[i].push_back(std::move(col));
    }
  }
  auto out = free_complex<F>(ring, 0, degrees, std::move(diffs));
  out.check();
  return out;
}

}  // namespace hochred
