#pragma once

#include <algorithm>
#include <climits>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hochred/monomial.hpp"
#include "hochred/vector.hpp"

namespace hochred {

/// Buchberger completion for homogeneous submodules of a free module over a
/// polynomial ring.
///
/// Components `>= tracked_from` form a lower block of the module order. A
/// generator (g, e_i) with g in the upper block and e_i in the lower block
/// records how g was obtained, so after completion
///  - the basis elements whose lead lies in the lower block generate the
///    syzygies of the tracked generators (modulo untracked ones), and
///  - reducing a vector of the upper block to zero yields its coordinates in
///    terms of the tracked generators.
///
/// Pairs are processed by increasing degree with the Gebauer–Möller
/// criteria; the product criterion is only used for ideals.
template <class K>
class GroebnerEngine {
 public:
  GroebnerEngine(std::shared_ptr<const MonomialSpace> space, std::vector<int> component_degrees,
                 int tracked_from = INT_MAX, bool ideal_mode = false)
      : space_(std::move(space)),
        degrees_(std::move(component_degrees)),
        tracked_from_(std::min<int>(tracked_from, static_cast<int>(degrees_.size()))),
        ideal_mode_(ideal_mode && degrees_.size() == 1),
        by_comp_(degrees_.size()) {}

  const MonomialSpace& space() const noexcept { return *space_; }
  std::shared_ptr<const MonomialSpace> space_ptr() const noexcept { return space_; }
  TermOrder order() const noexcept { return TermOrder(*space_, tracked_from_); }
  int rank() const noexcept { return static_cast<int>(degrees_.size()); }
  int tracked_from() const noexcept { return tracked_from_; }
  const std::vector<int>& component_degrees() const noexcept { return degrees_; }

  /// Queues a homogeneous generator. Completion is deferred to complete().
  void add(Vector<K> v) {
    if (v.is_zero()) return;
    homogeneous_degree(v, degrees_);
    pending_.push_back(std::move(v));
    completed_ = false;
  }

  void complete() {
    if (completed_) return;
    const TermOrder ord = order();
    for (;;) {
      int best_gen = -1, best_pair = -1;
      int best_deg = INT_MAX;
      for (std::size_t i = 0; i < pending_.size(); ++i) {
        int d = degree_of(pending_[i]);
        if (d < best_deg) {
          best_deg = d;
          best_gen = static_cast<int>(i);
        }
      }
      for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].degree < best_deg) {
          best_deg = pairs_[i].degree;
          best_pair = static_cast<int>(i);
          best_gen = -1;
        }
      }
      Vector<K> h;
      if (best_gen >= 0) {
        h = std::move(pending_[best_gen]);
        pending_.erase(pending_.begin() + best_gen);
      } else if (best_pair >= 0) {
        Pair p = pairs_[best_pair];
        pairs_.erase(pairs_.begin() + best_pair);
        h = s_vector(ord, p);
      } else {
        break;
      }
      h = reduce(ord, std::move(h), false, false);
      if (!h.is_zero()) insert(ord, std::move(h));
    }
    completed_ = true;
  }

  bool completed() const noexcept { return completed_; }

  /// Fully reduced remainder of v.
  Vector<K> normal_form(const Vector<K>& v) const {
    require_completed();
    return reduce(order(), v, true, false);
  }

  bool contains(const Vector<K>& v) const { return normal_form(v).is_zero(); }

  /// Coordinates c with v = sum_i c_i g_i modulo the untracked generators,
  /// where g_i are the tracked generators in insertion order; nullopt when v
  /// is not in the submodule.
  std::optional<Vector<K>> lift(const Vector<K>& v) const {
    require_completed();
    Vector<K> r = reduce(order(), v, false, true);
    if (!r.is_zero() && !order().tracked(r.lead().comp)) return std::nullopt;
    return shifted_components(negated(std::move(r)), -tracked_from_);
  }

  /// The reduced basis: minimal, monic, tail-reduced, ascending by lead.
  std::vector<Vector<K>> reduced_basis() const {
    require_completed();
    const TermOrder ord = order();
    std::vector<Vector<K>> out;
    for (const auto& e : basis_) {
      if (!e.active) continue;
      Vector<K> tail;
      tail.terms.assign(e.v.terms.begin() + 1, e.v.terms.end());
      Vector<K> v;
      v.terms.push_back(e.v.lead());
      Vector<K> r = reduce_with(ord, std::move(tail), true, false, true);
      v.terms.insert(v.terms.end(), r.terms.begin(), r.terms.end());
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(),
              [&](const Vector<K>& a, const Vector<K>& b) { return ord.compare(a.lead(), b.lead()) < 0; });
    return out;
  }

  /// Generators of the syzygies of the tracked generators, as vectors on the
  /// tracked components renumbered from 0.
  std::vector<Vector<K>> syzygies() const {
    std::vector<Vector<K>> out;
    for (auto& v : reduced_basis())
      if (order().tracked(v.lead().comp)) out.push_back(shifted_components(std::move(v), -tracked_from_));
    return out;
  }

  /// Lead terms (monomial, component) of the minimal basis in the upper block.
  std::vector<std::pair<Monomial, int>> lead_terms() const {
    require_completed();
    std::vector<std::pair<Monomial, int>> out;
    for (const auto& e : basis_)
      if (e.active && e.comp < tracked_from_) out.emplace_back(e.lm, e.comp);
    return out;
  }

  /// Whether m * e_comp is a lead monomial of the submodule.
  bool is_lead_divisible(const Monomial& m, int comp) const { return find_divisor(m, comp, false) >= 0; }

 private:
  struct Element {
    Vector<K> v;
    Monomial lm;
    int comp;
    bool active;
  };
  struct Pair {
    int i, j;
    Monomial lcm;
    int comp;
    int degree;
  };

  void require_completed() const {
    if (!completed_) throw InvalidArgument("Groebner engine queried before completion");
  }

  int degree_of(const Vector<K>& v) const { return v.lead().m.degree + degrees_[v.lead().comp]; }

  int find_divisor(const Monomial& m, int comp, bool active_only) const {
    for (int idx : by_comp_[comp]) {
      const auto& e = basis_[idx];
      if (active_only && !e.active) continue;
      if (space_->divides(e.lm, m)) return idx;
    }
    return -1;
  }

  Vector<K> s_vector(const TermOrder& ord, const Pair& p) const {
    const auto& a = basis_[p.i];
    const auto& b = basis_[p.j];
    Vector<K> va = scaled(*space_, a.v, a.v.lead().c, space_->quotient(p.lcm, a.lm));
    K minus_one = -b.v.lead().c;
    return axpy(ord, va, minus_one, space_->quotient(p.lcm, b.lm), b.v);
  }

  Vector<K> reduce(const TermOrder& ord, Vector<K> v, bool full, bool stop_at_tracked) const {
    return reduce_with(ord, std::move(v), full, stop_at_tracked, false);
  }

  // Reduces v from the front. With `full` every term is reduced, otherwise
  // only leading terms. With `stop_at_tracked` reduction ends at the first
  // lower-block term.
  Vector<K> reduce_with(const TermOrder& ord, Vector<K> v, bool full, bool stop_at_tracked, bool active_only) const {
    std::size_t pos = 0;
    while (pos < v.terms.size()) {
      const Term<K>& t = v.terms[pos];
      if (stop_at_tracked && ord.tracked(t.comp)) break;
      int idx = find_divisor(t.m, t.comp, active_only);
      if (idx < 0) {
        if (!full && !stop_at_tracked) break;
        if (stop_at_tracked) return v;
        ++pos;
        continue;
      }
      const auto& g = basis_[idx];
      K c = -t.c;
      Monomial q = space_->quotient(t.m, g.lm);
      Vector<K> out;
      out.terms.reserve(v.terms.size() + g.v.terms.size());
      out.terms.insert(out.terms.end(), std::make_move_iterator(v.terms.begin()),
                       std::make_move_iterator(v.terms.begin() + pos));
      merge_tail(ord, v, pos + 1, c, q, g.v, out);
      v = std::move(out);
    }
    return v;
  }

  // out += v[from..] + c * q * g[1..]
  void merge_tail(const TermOrder& ord, Vector<K>& v, std::size_t from, const K& c, const Monomial& q,
                  const Vector<K>& g, Vector<K>& out) const {
    std::size_t i = from, j = 1;
    const std::size_t n = v.terms.size(), m = g.terms.size();
    while (i < n || j < m) {
      if (j == m) {
        out.terms.push_back(std::move(v.terms[i++]));
        continue;
      }
      Monomial gm = space_->mul(q, g.terms[j].m);
      int gc = g.terms[j].comp;
      int cmp = i == n ? -1 : ord.compare(v.terms[i].m, v.terms[i].comp, gm, gc);
      if (cmp > 0) {
        out.terms.push_back(std::move(v.terms[i++]));
      } else if (cmp < 0) {
        K x = c * g.terms[j].c;
        out.terms.push_back({std::move(x), gm, gc});
        ++j;
      } else {
        K x = c * g.terms[j].c;
        x += v.terms[i].c;
        if (!is_zero(x)) out.terms.push_back({std::move(x), gm, gc});
        ++i;
        ++j;
      }
    }
  }

  void insert(const TermOrder&, Vector<K> h) {
    K inv = inverse(h.lead().c);
    if (!is_one(h.lead().c)) h = scaled(h, inv);
    const Monomial lm = h.lead().m;
    const int comp = h.lead().comp;
    const int t = static_cast<int>(basis_.size());

    std::vector<Pair> candidates;
    for (int idx : by_comp_[comp]) {
      if (!basis_[idx].active) continue;
      Monomial l = space_->lcm(basis_[idx].lm, lm);
      candidates.push_back({idx, t, l, comp, l.degree + degrees_[comp]});
    }
    std::vector<Pair> kept;
    while (!candidates.empty()) {
      Pair p = candidates.back();
      candidates.pop_back();
      bool keep = ideal_mode_ && space_->coprime(basis_[p.i].lm, lm);
      if (!keep) {
        keep = true;
        for (const auto& q : candidates)
          if (space_->divides(q.lcm, p.lcm)) {
            keep = false;
            break;
          }
        if (keep)
          for (const auto& q : kept)
            if (space_->divides(q.lcm, p.lcm)) {
              keep = false;
              break;
            }
      }
      if (keep) kept.push_back(p);
    }
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.comp != comp || !space_->divides(lm, p.lcm)) return false;
      return !(space_->lcm(basis_[p.i].lm, lm) == p.lcm) && !(space_->lcm(basis_[p.j].lm, lm) == p.lcm);
    });
    for (auto& p : kept) {
      if (ideal_mode_ && space_->coprime(basis_[p.i].lm, lm)) continue;
      pairs_.push_back(p);
    }
    for (int idx : by_comp_[comp])
      if (basis_[idx].active && space_->divides(lm, basis_[idx].lm)) basis_[idx].active = false;
    basis_.push_back({std::move(h), lm, comp, true});
    by_comp_[comp].push_back(t);
  }

  std::shared_ptr<const MonomialSpace> space_;
  std::vector<int> degrees_;
  int tracked_from_;
  bool ideal_mode_;
  std::vector<std::vector<int>> by_comp_;
  std::vector<Element> basis_;
  std::vector<Pair> pairs_;
  std::vector<Vector<K>> pending_;
  bool completed_ = true;
};

}  // namespace hochred
