#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hochred/derived.hpp"
#include "hochred/enveloping.hpp"
#include "hochred/linalg.hpp"

namespace hochred {

enum class Provenance { TensorDecomposable, HomDecomposable, DiagonalS };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::TensorDecomposable: return "tensor";
    case Provenance::HomDecomposable: return "hom";
    case Provenance::DiagonalS: return "diagonal";
  }
  return "?";
}

/// A coefficient module over S ⊗_k S together with how it was built.
template <Field F>
struct BimoduleData {
  ModulePresentation<F> presentation;
  Provenance provenance;
};

template <Field F>
BimoduleData<F> tensor_bimodule(const EnvelopingData<F>& env, const ModulePresentation<F>& m,
                                const ModulePresentation<F>& n) {
  return {tensor_over_field(env, m, n), Provenance::TensorDecomposable};
}

template <Field F>
BimoduleData<F> hom_bimodule(const EnvelopingData<F>& env, const ModulePresentation<F>& m,
                             const ModulePresentation<F>& n) {
  return {hom_over_field(env, m, n), Provenance::HomDecomposable};
}

template <Field F>
BimoduleData<F> diagonal_bimodule(const EnvelopingData<F>& env) {
  return {env.diagonal_module(), Provenance::DiagonalS};
}

namespace detail {

inline HilbertTable relabel(HilbertTable t, const std::string& label) {
  for (auto& r : t.rows) r.label = label;
  return t;
}

}  // namespace detail

/// Ext^n over S ⊗_k S of (S, L).
template <Field F>
HilbertTable hochschild_ext(const EnvelopingData<F>& env, const BimoduleData<F>& coefficient, int n_max, Window w,
                            int depth = -1) {
  return detail::relabel(ext_graded(env.diagonal_module(), coefficient.presentation, n_max, w, depth), "HH");
}

/// Tor_n over S ⊗_k S of (S, L).
template <Field F>
HilbertTable hochschild_tor(const EnvelopingData<F>& env, const BimoduleData<F>& coefficient, int n_max, Window w,
                            int depth = -1) {
  return detail::relabel(tor_graded(env.diagonal_module(), coefficient.presentation, n_max, w, depth), "HH");
}

/// Ext^n over S ⊗_k S of (S, M ⊗_k N).
template <Field F>
HilbertTable hochschild_cohomology(typename Ring<F>::Ptr s, const ModulePresentation<F>& m,
                                   const ModulePresentation<F>& n, int n_max, Window w, int depth = -1) {
  auto env = enveloping_algebra<F>(s);
  return hochschild_ext(env, tensor_bimodule(env, m, n), n_max, w, depth);
}

/// Tor_n over S ⊗_k S of (S, Hom_k(M, N)); needs dim_k M finite.
template <Field F>
HilbertTable hochschild_homology(typename Ring<F>::Ptr s, const ModulePresentation<F>& m,
                                 const ModulePresentation<F>& n, int n_max, Window w, int depth = -1) {
  auto env = enveloping_algebra<F>(s);
  return hochschild_tor(env, hom_bimodule(env, m, n), n_max, w, depth);
}

/// Finite-dimensional S-bimodule as matrices: left[v] and right[v] give the
/// action of x_v from each side on the basis.
template <Field F>
struct LinearBimodule {
  using K = typename F::value_type;
  std::vector<int> degrees;
  std::vector<std::vector<std::vector<K>>> left, right;
  int dim() const { return static_cast<int>(degrees.size()); }
};

namespace detail {

template <class K>
std::vector<std::vector<K>> kron(const std::vector<std::vector<K>>& a, const std::vector<std::vector<K>>& b,
                                 const K& zero) {
  const int ra = static_cast<int>(a.size()), rb = static_cast<int>(b.size());
  std::vector<std::vector<K>> out(ra * rb, std::vector<K>(ra * rb, zero));
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ra; ++j) {
      if (is_zero(a[i][j])) continue;
      for (int k = 0; k < rb; ++k)
        for (int l = 0; l < rb; ++l)
          if (!is_zero(b[k][l])) out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
    }
  return out;
}

}  // namespace detail

/// M ⊗_k N with S acting on the left through M and on the right through N.
template <Field F>
LinearBimodule<F> tensor_linear(const F& field, const LinearModule<F>& m, const LinearModule<F>& n) {
  LinearBimodule<F> out;
  for (int a : m.degrees)
    for (int b : n.degrees) out.degrees.push_back(a + b);
  auto zero = field.zero(), one = field.one();
  auto im = identity_matrix(m.dim(), zero, one), in = identity_matrix(n.dim(), zero, one);
  for (std::size_t v = 0; v < m.action.size(); ++v) {
    out.left.push_back(detail::kron(m.action[v], in, zero));
    out.right.push_back(detail::kron(im, n.action[v], zero));
  }
  return out;
}

/// Hom_k(M, N) with (s f s')(m) = s f(s' m). Basis E_{j,i}: b_i -> c_j at
/// index j * dim M + i, of degree deg c_j - deg b_i.
template <Field F>
LinearBimodule<F> hom_linear(const F& field, const LinearModule<F>& m, const LinearModule<F>& n) {
  using K = typename F::value_type;
  const int dm = m.dim(), dn = n.dim(), d = dm * dn;
  LinearBimodule<F> out;
  for (int j = 0; j < dn; ++j)
    for (int i = 0; i < dm; ++i) out.degrees.push_back(n.degrees[j] - m.degrees[i]);
  for (std::size_t v = 0; v < m.action.size(); ++v) {
    std::vector<std::vector<K>> l(d, std::vector<K>(d, field.zero())), r = l;
    for (int j = 0; j < dn; ++j)
      for (int i = 0; i < dm; ++i) {
        for (int j2 = 0; j2 < dn; ++j2)
          if (!is_zero(n.action[v][j2][j])) l[j2 * dm + i][j * dm + i] = n.action[v][j2][j];
        for (int i2 = 0; i2 < dm; ++i2)
          if (!is_zero(m.action[v][i][i2])) r[j * dm + i2][j * dm + i] = m.action[v][i][i2];
      }
    out.left.push_back(std::move(l));
    out.right.push_back(std::move(r));
  }
  return out;
}

struct BarResult {
  HilbertTable graded;       // on the requested window
  std::vector<long> totals;  // over all internal degrees
};

/// Hochschild cohomology of a finite-dimensional S with coefficients in a
/// finite-dimensional bimodule, from the normalized bar complex
/// Hom_k(S̄^{⊗n}, L) by dense ranks, degree by degree.
template <Field F>
BarResult bar_oracle(const Ring<F>& s, const LinearBimodule<F>& l, int n_max, Window w, long cap = 400000) {
  using K = typename F::value_type;
  using Mat = std::vector<std::vector<K>>;
  const K zero = s.zero_scalar(), one = s.one_scalar();
  ModulePresentation<F> sm(s.shared_from_this(), {0});
  if (!sm.is_finite_dimensional()) throw NotFiniteDimensional("bar oracle needs a finite-dimensional algebra");
  auto basis = sm.standard_basis();
  // S̄: drop the unit
  std::vector<Monomial> bar;
  for (const auto& [m, c] : basis)
    if (!m.is_one()) bar.push_back(m);
  const int b = static_cast<int>(bar.size());
  const int dl = l.dim();
  auto bar_index = [&](const Monomial& m) {
    for (int k = 0; k < b; ++k)
      if (bar[k] == m) return k;
    return -1;
  };
  // products in S̄
  std::vector<std::vector<std::vector<std::pair<int, K>>>> prod(b, std::vector<std::vector<std::pair<int, K>>>(b));
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) {
      auto p = s.reduce(s.monomial(one, s.space().mul(bar[i], bar[j])));
      for (const auto& t : p.terms) prod[i][j].push_back({bar_index(t.m), t.c});
    }
  // action of each basis monomial from both sides
  auto power_action = [&](const std::vector<Mat>& gens, const Monomial& m) {
    Mat acc = identity_matrix(dl, zero, one);
    for (int v = 0; v < s.nvars(); ++v)
      for (int e = 0; e < m.exp[v]; ++e) acc = mat_mul(gens[v], acc, zero);
    return acc;
  };
  std::vector<Mat> left(b), right(b);
  for (int k = 0; k < b; ++k) {
    left[k] = power_action(l.left, bar[k]);
    right[k] = power_action(l.right, bar[k]);
  }

  // tuples of length n, encoded base b, with their degree sums
  auto tuple_count = [&](int n) {
    long c = 1;
    for (int i = 0; i < n; ++i) c *= b;
    return c;
  };
  for (int n = 0; n <= n_max + 1; ++n)
    if (tuple_count(n) * dl > cap) throw TooLarge("bar complex term " + std::to_string(n) + " exceeds the size cap");
  auto digits = [&](long code, int n) {
    std::vector<int> d(n);
    for (int i = n - 1; i >= 0; --i) {
      d[i] = static_cast<int>(code % b);
      code /= b;
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    long c = 0;
    for (int x : d) c = c * b + x;
    return c;
  };
  auto tuple_degree = [&](const std::vector<int>& d) {
    int s = 0;
    for (int x : d) s += bar[x].degree;
    return s;
  };

  // cochain basis of C^n grouped by internal degree
  struct Level {
    std::map<int, std::vector<std::pair<long, int>>> by_degree;  // degree -> (tuple, l)
    std::vector<int> local;                                      // (tuple * dl + l) -> position in its block
  };
  auto level = [&](int n) {
    Level lv;
    const long tc = tuple_count(n);
    lv.local.assign(tc * dl, -1);
    for (long t = 0; t < tc; ++t) {
      int td = tuple_degree(digits(t, n));
      for (int x = 0; x < dl; ++x) {
        auto& blk = lv.by_degree[l.degrees[x] - td];
        lv.local[t * dl + x] = static_cast<int>(blk.size());
        blk.push_back({t, x});
      }
    }
    return lv;
  };

  // rank of delta^n per degree
  std::vector<std::map<int, int>> ranks(n_max + 1);
  std::vector<Level> levels;
  for (int n = 0; n <= n_max + 1; ++n) levels.push_back(level(n));
  for (int n = 0; n <= n_max; ++n) {
    const Level& src = levels[n];
    const Level& dst = levels[n + 1];
    for (const auto& [deg, cols] : src.by_degree) {
      auto it = dst.by_degree.find(deg);
      if (it == dst.by_degree.end()) continue;
      const auto& rows = it->second;
      Mat mat(rows.size(), std::vector<K>(cols.size(), zero));
      auto col_of = [&](const std::vector<int>& a, int x) { return src.local[encode(a) * dl + x]; };
      for (std::size_t r = 0; r < rows.size(); ++r) {
        auto bt = digits(rows[r].first, n + 1);
        const int lp = rows[r].second;
        // b_1 f(b_2 .. b_{n+1})
        std::vector<int> tail(bt.begin() + 1, bt.end());
        for (int x = 0; x < dl; ++x)
          if (!is_zero(left[bt[0]][lp][x])) mat[r][col_of(tail, x)] += left[bt[0]][lp][x];
        // sum_i (-1)^i f(.. b_i b_{i+1} ..)
        for (int i = 1; i <= n; ++i)
          for (const auto& [c, coef] : prod[bt[i - 1]][bt[i]]) {
            std::vector<int> a;
            for (int k = 0; k < i - 1; ++k) a.push_back(bt[k]);
            a.push_back(c);
            for (int k = i + 1; k <= n; ++k) a.push_back(bt[k]);
            int col = col_of(a, lp);
            if (i % 2 == 0) mat[r][col] += coef;
            else mat[r][col] -= coef;
          }
        // (-1)^{n+1} f(b_1 .. b_n) b_{n+1}
        std::vector<int> head(bt.begin(), bt.end() - 1);
        for (int x = 0; x < dl; ++x) {
          const K& c = right[bt[n]][lp][x];
          if (is_zero(c)) continue;
          if ((n + 1) % 2 == 0) mat[r][col_of(head, x)] += c;
          else mat[r][col_of(head, x)] -= c;
        }
      }
      ranks[n][deg] = dense_rank(std::move(mat));
    }
  }

  BarResult out{{w, {}}, {}};
  for (int n = 0; n <= n_max; ++n) {
    std::vector<long> dims(w.width(), 0);
    long total = 0;
    for (const auto& [deg, cols] : levels[n].by_degree) {
      long h = static_cast<long>(cols.size());
      if (auto it = ranks[n].find(deg); it != ranks[n].end()) h -= it->second;
      if (n > 0)
        if (auto it = ranks[n - 1].find(deg); it != ranks[n - 1].end()) h -= it->second;
      total += h;
      if (deg >= w.lo && deg <= w.hi) dims[deg - w.lo] = h;
    }
    out.graded.add("bar", n, std::move(dims));
    out.totals.push_back(total);
  }
  return out;
}

/// bar_oracle with coefficients M ⊗_k N.
template <Field F>
BarResult bar_oracle(typename Ring<F>::Ptr s, const ModulePresentation<F>& m, const ModulePresentation<F>& n,
                     int n_max, Window w, long cap = 400000) {
  auto lin = tensor_linear(s->field(), linear_module(m), linear_module(n));
  return bar_oracle(*s, lin, n_max, w, cap);
}

}  // namespace hochred
