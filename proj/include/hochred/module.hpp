#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hochred/errors.hpp"
#include "hochred/groebner.hpp"
#include "hochred/ring.hpp"

namespace hochred {

/// Homogeneous matrix between graded free modules over a ring; column j is
/// the image of the j-th source generator and has degree source_degrees[j].
template <class K>
struct Matrix {
  std::vector<int> target_degrees;
  std::vector<int> source_degrees;
  std::vector<Vector<K>> columns;

  int rows() const { return static_cast<int>(target_degrees.size()); }
  int cols() const { return static_cast<int>(source_degrees.size()); }
};

namespace detail {

template <class K>
void check_column_degrees(const std::vector<Vector<K>>& columns, const std::vector<int>& source_degrees,
                          const std::vector<int>& target_degrees) {
  if (columns.size() != source_degrees.size()) throw TwistMismatch("column count differs from source rank");
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& t : columns[j].terms)
      if (t.comp < 0 || t.comp >= static_cast<int>(target_degrees.size()))
        throw TwistMismatch("matrix entry outside the target rank");
    std::optional<int> d;
    try {
      d = homogeneous_degree(columns[j], target_degrees);
    } catch (const NonHomogeneousInput&) {
      throw TwistMismatch("column " + std::to_string(j) + " is not homogeneous for the target twists");
    }
    if (d && *d != source_degrees[j])
      throw TwistMismatch("column " + std::to_string(j) + " has degree " + std::to_string(*d) + ", expected " +
                          std::to_string(source_degrees[j]));
  }
}

/// Extended generator (column, e_{offset+j}) for tracked computations.
template <class K>
Vector<K> tracked_generator(const Vector<K>& column, int tracked_comp, const K& one, const Monomial& unit) {
  Vector<K> v = column;
  v.terms.push_back({one, unit, tracked_comp});
  return v;
}

}  // namespace detail

/// Engine for the submodule of Q^r generated by `generators` plus I * Q^r,
/// with tracked generators appended after `tracked` extra components.
template <Field F>
GroebnerEngine<typename F::value_type> make_engine(const Ring<F>& ring, const std::vector<int>& degrees,
                                                   const std::vector<Vector<typename F::value_type>>& untracked,
                                                   const std::vector<int>& tracked_degrees = {},
                                                   const std::vector<Vector<typename F::value_type>>& tracked = {}) {
  using K = typename F::value_type;
  std::vector<int> all = degrees;
  all.insert(all.end(), tracked_degrees.begin(), tracked_degrees.end());
  const int r = static_cast<int>(degrees.size());
  GroebnerEngine<K> engine(ring.space_ptr(), all, tracked_degrees.empty() ? INT_MAX : r);
  for (const auto& g : ring.groebner())
    for (int i = 0; i < r; ++i) engine.add(in_component(g, i));
  for (const auto& v : untracked) engine.add(v);
  const K one = ring.one_scalar();
  for (std::size_t j = 0; j < tracked.size(); ++j)
    engine.add(detail::tracked_generator(tracked[j], r + static_cast<int>(j), one, ring.space().one()));
  return engine;
}

/// Generators of the syzygy module over S of the columns of `m`: all
/// coefficient vectors c with sum_j c_j m_j = 0 in S^rows.
template <Field F>
Matrix<typename F::value_type> syzygies(const Ring<F>& ring, const Matrix<typename F::value_type>& m) {
  detail::check_column_degrees(m.columns, m.source_degrees, m.target_degrees);
  auto engine = make_engine(ring, m.target_degrees, {}, m.source_degrees, m.columns);
  engine.complete();
  Matrix<typename F::value_type> out;
  out.target_degrees = m.source_degrees;
  auto ideal = make_engine(ring, m.source_degrees, {});
  ideal.complete();
  for (auto& s : engine.syzygies()) {
    auto r = ideal.normal_form(s);
    if (r.is_zero()) continue;
    out.source_degrees.push_back(*homogeneous_degree(r, m.source_degrees));
    out.columns.push_back(std::move(r));
  }
  return out;
}

/// A finitely generated graded module over S given as a cokernel: generators
/// e_i of degree generator_degrees[i] modulo the relation columns (and,
/// implicitly, I * S^r).
///
/// The Gröbner basis of the relation module is built on first use; copies
/// share it.
template <Field F>
class ModulePresentation {
 public:
  using K = typename F::value_type;
  using RingPtr = typename Ring<F>::Ptr;

  ModulePresentation(RingPtr ring, std::vector<int> generator_degrees, std::vector<Vector<K>> relations = {})
      : ring_(std::move(ring)),
        degrees_(std::move(generator_degrees)),
        relations_(std::move(relations)),
        state_(std::make_shared<State>()) {
    std::erase_if(relations_, [](const Vector<K>& v) { return v.is_zero(); });
    for (const auto& rel : relations_) {
      for (const auto& t : rel.terms)
        if (t.comp < 0 || t.comp >= rank()) throw TwistMismatch("relation entry outside the generator range");
      try {
        homogeneous_degree(rel, degrees_);
      } catch (const NonHomogeneousInput&) {
        throw NonHomogeneousInput("relation is not homogeneous for the generator twists");
      }
    }
  }

  const RingPtr& ring() const noexcept { return ring_; }
  int rank() const noexcept { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& generator_degrees() const noexcept { return degrees_; }
  const std::vector<Vector<K>>& relations() const noexcept { return relations_; }

  /// Gröbner basis of relations + I * Q^r.
  const GroebnerEngine<K>& gb() const {
    std::call_once(state_->once, [this] {
      auto e = make_engine(*ring_, degrees_, relations_);
      e.complete();
      state_->engine = std::make_unique<GroebnerEngine<K>>(std::move(e));
    });
    return *state_->engine;
  }

  Vector<K> normal_form(const Vector<K>& v) const { return gb().normal_form(v); }
  bool is_zero_element(const Vector<K>& v) const { return normal_form(v).is_zero(); }

  bool is_zero_module() const {
    for (int i = 0; i < rank(); ++i)
      if (!gb().is_lead_divisible(ring_->space().one(), i)) return false;
    return true;
  }

  long dim_in_degree(int d) const {
    long count = 0;
    const auto& g = gb();
    for (int i = 0; i < rank(); ++i)
      for_each_monomial_of_degree(ring_->space(), d - degrees_[i], [&](const Monomial& m) {
        if (!g.is_lead_divisible(m, i)) ++count;
      });
    return count;
  }

  /// dim_k of the graded pieces in degrees lo..hi.
  std::vector<long> hilbert(int lo, int hi) const {
    std::vector<long> out;
    for (int d = lo; d <= hi; ++d) out.push_back(dim_in_degree(d));
    return out;
  }

  /// Finite k-dimension, detected from pure powers among the lead terms.
  bool is_finite_dimensional() const { return top_degree_bound().has_value(); }

  /// Standard monomials (k-basis) sorted by degree, then component, then
  /// descending monomial. Throws NotFiniteDimensional.
  std::vector<std::pair<Monomial, int>> standard_basis() const {
    auto bound = top_degree_bound();
    if (!bound) throw NotFiniteDimensional("module is not finite-dimensional over the field");
    std::vector<std::pair<Monomial, int>> out;
    if (rank() == 0) return out;
    const auto& g = gb();
    int lo = *std::min_element(degrees_.begin(), degrees_.end());
    for (int d = lo; d <= *bound; ++d)
      for (int i = 0; i < rank(); ++i) {
        std::vector<Monomial> ms;
        for_each_monomial_of_degree(ring_->space(), d - degrees_[i], [&](const Monomial& m) {
          if (!g.is_lead_divisible(m, i)) ms.push_back(m);
        });
        std::sort(ms.begin(), ms.end(), [&](auto& a, auto& b) { return ring_->space().compare(a, b) > 0; });
        for (auto& m : ms) out.emplace_back(m, i);
      }
    return out;
  }

  long total_dimension() const { return static_cast<long>(standard_basis().size()); }

  /// Same presentation read over another ring on the same variables, e.g.
  /// a Q-module annihilated by I read as an S-module.
  ModulePresentation over(RingPtr other) const { return ModulePresentation(std::move(other), degrees_, relations_); }

  /// M(a): generator degrees lowered by a.
  ModulePresentation twist(int a) const {
    std::vector<int> d = degrees_;
    for (auto& x : d) x -= a;
    return ModulePresentation(ring_, std::move(d), relations_);
  }

  /// This module with extra relations.
  ModulePresentation quotient(const std::vector<Vector<K>>& extra) const {
    std::vector<Vector<K>> rel = relations_;
    rel.insert(rel.end(), extra.begin(), extra.end());
    return ModulePresentation(ring_, degrees_, std::move(rel));
  }

 private:
  struct State {
    std::once_flag once;
    std::unique_ptr<GroebnerEngine<K>> engine;
  };

  std::optional<int> top_degree_bound() const {
    const auto& g = gb();
    const auto leads = g.lead_terms();
    const int n = ring_->nvars();
    int top = INT_MIN;
    for (int i = 0; i < rank(); ++i) {
      if (g.is_lead_divisible(ring_->space().one(), i)) continue;
      int extent = degrees_[i];
      for (int v = 0; v < n; ++v) {
        int best = -1;
        for (const auto& [m, c] : leads) {
          if (c != i) continue;
          bool pure = true;
          for (int u = 0; u < n; ++u)
            if (u != v && m.exp[u] != 0) pure = false;
          if (pure && m.exp[v] > 0 && (best < 0 || m.exp[v] < best)) best = m.exp[v];
        }
        if (best < 0) return std::nullopt;
        extent += ring_->space().weight(v) * (best - 1);
      }
      top = std::max(top, extent);
    }
    return top == INT_MIN ? std::optional<int>(0) : std::optional<int>(top);
  }

  RingPtr ring_;
  std::vector<int> degrees_;
  std::vector<Vector<K>> relations_;
  std::shared_ptr<State> state_;
};

/// Homogeneous degree-0 map of presented modules, given by the images of the
/// source generators in the target's free cover.
template <Field F>
struct ModuleMap {
  using K = typename F::value_type;
  ModulePresentation<F> source;
  ModulePresentation<F> target;
  std::vector<Vector<K>> images;
};

template <Field F>
ModulePresentation<F> free_module(typename Ring<F>::Ptr ring, std::vector<int> degrees) {
  return ModulePresentation<F>(std::move(ring), std::move(degrees));
}

/// S itself, generated in degree 0.
template <Field F>
ModulePresentation<F> ring_module(typename Ring<F>::Ptr ring) {
  return free_module<F>(std::move(ring), {0});
}

/// The residue field k = S / (x_1..x_e) in degree 0.
template <Field F>
ModulePresentation<F> residue_field(typename Ring<F>::Ptr ring) {
  std::vector<Vector<typename F::value_type>> rel;
  for (int i = 0; i < ring->nvars(); ++i) rel.push_back(ring->variable(i));
  return ModulePresentation<F>(ring, {0}, std::move(rel));
}

template <Field F>
ModulePresentation<F> direct_sum(const ModulePresentation<F>& a, const ModulePresentation<F>& b) {
  std::vector<int> d = a.generator_degrees();
  d.insert(d.end(), b.generator_degrees().begin(), b.generator_degrees().end());
  auto rel = a.relations();
  for (const auto& r : b.relations()) rel.push_back(shifted_components(r, a.rank()));
  return ModulePresentation<F>(a.ring(), std::move(d), std::move(rel));
}

/// sum_k v_k * images[k], with v in the source free cover.
template <Field F>
Vector<typename F::value_type> apply_columns(const Ring<F>& ring, const std::vector<Vector<typename F::value_type>>& images,
                                             const Vector<typename F::value_type>& v) {
  Vector<typename F::value_type> acc;
  const auto ord = ring.order();
  for (const auto& t : v.terms) acc = axpy(ord, acc, t.c, t.m, images[t.comp]);
  return acc;
}

/// Preimage in the source free cover of the submodule given by the target's
/// relations: all x with f(x) = 0 in the target.
template <Field F>
std::vector<Vector<typename F::value_type>> kernel_lift(const ModuleMap<F>& f) {
  const auto& ring = *f.target.ring();
  auto engine = make_engine(ring, f.target.generator_degrees(), f.target.relations(), f.source.generator_degrees(),
                            f.images);
  engine.complete();
  return engine.syzygies();
}

/// Minimal homogeneous subset of `candidates` generating (U + base) / base,
/// where `base` is a completed engine describing the base submodule.
template <class K>
std::vector<Vector<K>> minimal_generators(GroebnerEngine<K> base, std::vector<Vector<K>> candidates,
                                          const std::vector<int>& degrees) {
  std::vector<std::pair<int, Vector<K>>> keyed;
  for (auto& c : candidates)
    if (!c.is_zero()) keyed.emplace_back(*homogeneous_degree(c, degrees), std::move(c));
  std::stable_sort(keyed.begin(), keyed.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<Vector<K>> kept;
  base.complete();
  for (auto& [d, v] : keyed) {
    auto r = base.normal_form(v);
    if (r.is_zero()) continue;
    kept.push_back(std::move(r));
    base.add(kept.back());
    base.complete();
  }
  return kept;
}

/// Result of eliminating redundant generators: the smaller presentation and,
/// for each old generator, its expression in the new generators.
template <Field F>
struct PrunedModule {
  ModulePresentation<F> module;
  std::vector<Vector<typename F::value_type>> substitution;
  std::vector<int> kept;  // old index of each new generator
};

/// Removes generators made redundant by relations with a unit entry and
/// reduces the relations to a minimal set modulo I.
template <Field F>
PrunedModule<F> prune(const ModulePresentation<F>& m) {
  using K = typename F::value_type;
  const auto& ring = *m.ring();
  const auto ord = ring.order();
  const int r = m.rank();
  std::vector<Vector<K>> rel = m.relations();
  std::vector<bool> alive(r, true);
  // old generator i expressed in old generators still alive
  std::vector<Vector<K>> expressed(r);
  for (int i = 0; i < r; ++i) expressed[i] = in_component(ring.one(), i);

  for (;;) {
    int rel_idx = -1, comp = -1;
    K unit = ring.one_scalar();
    for (std::size_t k = 0; k < rel.size() && rel_idx < 0; ++k)
      for (const auto& t : rel[k].terms)
        if (t.m.is_one()) {
          rel_idx = static_cast<int>(k);
          comp = t.comp;
          unit = t.c;
          break;
        }
    if (rel_idx < 0) break;
    Vector<K> rho = rel[rel_idx];
    rel.erase(rel.begin() + rel_idx);
    // e_comp = e_comp - rho / unit
    K inv = inverse(unit);
    Vector<K> expr = sub(ord, in_component(ring.one(), comp), scaled(rho, inv));
    auto substitute = [&](const Vector<K>& v) {
      Polynomial<K> entry = component(v, comp);
      if (entry.is_zero()) return v;
      Vector<K> rest;
      for (const auto& t : v.terms)
        if (t.comp != comp) rest.terms.push_back(t);
      return add(ord, rest, mul_poly(ord, entry, expr));
    };
    for (auto& v : rel) v = substitute(v);
    for (auto& v : expressed) v = substitute(v);
    alive[comp] = false;
    std::erase_if(rel, [](const Vector<K>& v) { return v.is_zero(); });
  }

  std::vector<int> renumber(r, -1), kept, degrees;
  for (int i = 0; i < r; ++i)
    if (alive[i]) {
      renumber[i] = static_cast<int>(kept.size());
      kept.push_back(i);
      degrees.push_back(m.generator_degrees()[i]);
    }
  auto remap = [&](const Vector<K>& v) {
    std::vector<Term<K>> terms;
    for (const auto& t : v.terms) terms.push_back({t.c, t.m, renumber[t.comp]});
    return normalize(ord, std::move(terms));
  };
  for (auto& v : rel) v = remap(v);
  for (auto& v : expressed) v = remap(v);

  auto ideal = make_engine(ring, degrees, {});
  auto minimal = minimal_generators(std::move(ideal), std::move(rel), degrees);
  return {ModulePresentation<F>(m.ring(), std::move(degrees), std::move(minimal)), std::move(expressed), std::move(kept)};

}


/// Presentation of the submodule (generated by `gens`) of the module `ambient`:
/// the kernel of the free cover on `gens` onto it.
template <Field F>
ModulePresentation<F> image_presentation(const ModulePresentation<F>& ambient,
                                         const std::vector<Vector<typename F::value_type>>& gens) {
  std::vector<int> degrees;
  for (const auto& g : gens) degrees.push_back(*homogeneous_degree(g, ambient.generator_degrees()));
  ModulePresentation<F> cover(ambient.ring(), degrees);
  auto rel = kernel_lift(ModuleMap<F>{cover, ambient, gens});
  auto ideal = make_engine(*ambient.ring(), degrees, {});
  return ModulePresentation<F>(ambient.ring(), degrees, minimal_generators(std::move(ideal), std::move(rel), degrees));
}

/// Subquotient ker(f) / im(g) for maps W --g--> X --f--> Y, presented on a
/// minimal set of kernel generators (elements of X's free cover).
template <Field F>
struct Subquotient {
  ModulePresentation<F> module;
  std::vector<Vector<typename F::value_type>> generators;
};

template <Field F>
Subquotient<F> subquotient(const ModuleMap<F>& f, const std::vector<Vector<typename F::value_type>>& boundary) {
  const auto& x = f.source;
  auto lifts = kernel_lift(f);
  auto base = make_engine(*x.ring(), x.generator_degrees(), [&] {
    auto v = x.relations();
    v.insert(v.end(), boundary.begin(), boundary.end());
    return v;
  }());
  auto gens = minimal_generators(std::move(base), std::move(lifts), x.generator_degrees());
  auto quotient = x.quotient(boundary);
  return {image_presentation(quotient, gens), gens};
}

}  // namespace hochred
