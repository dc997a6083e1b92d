#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hochred/field.hpp"
#include "hochred/groebner.hpp"
#include "hochred/monomial.hpp"
#include "hochred/vector.hpp"

namespace hochred {

/// Reduced Gröbner basis of a homogeneous ideal, ascending by lead term.
template <class K>
std::vector<Polynomial<K>> groebner_basis(std::shared_ptr<const MonomialSpace> space,
                                          const std::vector<Polynomial<K>>& generators) {
  GroebnerEngine<K> engine(std::move(space), {0}, INT_MAX, true);
  for (const auto& g : generators) engine.add(g);
  engine.complete();
  return engine.reduced_basis();
}

/// Remainder of f against a Gröbner basis.
template <class K>
Polynomial<K> normal_form(std::shared_ptr<const MonomialSpace> space, const Polynomial<K>& f,
                          const std::vector<Polynomial<K>>& gb) {
  GroebnerEngine<K> engine(std::move(space), {0}, INT_MAX, true);
  for (const auto& g : gb) engine.add(g);
  engine.complete();
  return engine.normal_form(f);
}

/// A graded algebra S = Q/I of finite type over a field, Q = k[x_1..x_e]
/// with positive weights. The reduced Gröbner basis of I is computed once at
/// construction and never changes.
template <Field F>
class Ring : public std::enable_shared_from_this<Ring<F>> {
 public:
  using field_type = F;
  using K = typename F::value_type;
  using Ptr = std::shared_ptr<const Ring>;

  static Ptr create(F field, std::vector<std::string> names, std::vector<int> weights = {},
                    MonomialOrder order = MonomialOrder::WeightedGrevlex,
                    std::vector<Polynomial<K>> ideal = {}) {
    auto space = std::make_shared<const MonomialSpace>(std::move(names), std::move(weights), order);
    return create(std::move(field), std::move(space), std::move(ideal));
  }

  static Ptr create(F field, std::shared_ptr<const MonomialSpace> space, std::vector<Polynomial<K>> ideal) {
    std::erase_if(ideal, [](const Polynomial<K>& p) { return p.is_zero(); });
    for (const auto& g : ideal) {
      try {
        homogeneous_degree(g, std::vector<int>{0});
      } catch (const NonHomogeneousInput&) {
        throw NonHomogeneousInput("ideal generator is not homogeneous for the given weights");
      }
    }
    auto r = std::shared_ptr<Ring>(new Ring(field, space));
    r->ideal_ = std::move(ideal);
    auto engine = std::make_shared<GroebnerEngine<K>>(space, std::vector<int>{0}, INT_MAX, true);
    for (const auto& g : r->ideal_) engine->add(g);
    engine->complete();
    r->gb_ = engine->reduced_basis();
    r->engine_ = std::move(engine);
    if (r->gb_.empty()) {
      r->ambient_ = nullptr;
    } else {
      auto a = std::shared_ptr<Ring>(new Ring(field, space));
      r->ambient_ = a;
    }
    return r;
  }

  const F& field() const noexcept { return field_; }
  const MonomialSpace& space() const noexcept { return *space_; }
  std::shared_ptr<const MonomialSpace> space_ptr() const noexcept { return space_; }
  int nvars() const noexcept { return space_->nvars(); }
  TermOrder order() const noexcept { return TermOrder(*space_); }

  const std::vector<Polynomial<K>>& ideal_generators() const noexcept { return ideal_; }
  const std::vector<Polynomial<K>>& groebner() const noexcept { return gb_; }
  bool is_polynomial_ring() const noexcept { return gb_.empty(); }

  /// The polynomial ring Q this algebra is a quotient of.
  Ptr ambient() const { return ambient_ ? ambient_ : this->shared_from_this(); }

  /// Same variables and order, different ideal.
  Ptr with_ideal(std::vector<Polynomial<K>> ideal) const { return create(field_, space_, std::move(ideal)); }

  bool same_as(const Ring& o) const {
    if (this == &o) return true;
    if (!(*space_ == *o.space_) || !(field_ == o.field_) || gb_.size() != o.gb_.size()) return false;
    for (std::size_t i = 0; i < gb_.size(); ++i)
      if (!(gb_[i] == o.gb_[i])) return false;
    return true;
  }

  K zero_scalar() const { return field_.zero(); }
  K one_scalar() const { return field_.one(); }

  Polynomial<K> constant(const K& c) const {
    Polynomial<K> p;
    if (!is_zero(c)) p.terms.push_back({c, space_->one(), 0});
    return p;
  }
  Polynomial<K> one() const { return constant(field_.one()); }
  Polynomial<K> variable(int i) const {
    Polynomial<K> p;
    p.terms.push_back({field_.one(), space_->variable(i), 0});
    return p;
  }
  Polynomial<K> monomial(const K& c, const Monomial& m) const {
    Polynomial<K> p;
    if (!is_zero(c)) p.terms.push_back({c, m, 0});
    return p;
  }

  Polynomial<K> add(const Polynomial<K>& a, const Polynomial<K>& b) const { return hochred::add(order(), a, b); }
  Polynomial<K> sub(const Polynomial<K>& a, const Polynomial<K>& b) const { return hochred::sub(order(), a, b); }
  Polynomial<K> mul(const Polynomial<K>& a, const Polynomial<K>& b) const { return mul_poly(order(), a, b); }
  Polynomial<K> pow(const Polynomial<K>& a, int e) const {
    Polynomial<K> r = one();
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  /// Remainder modulo I.
  Polynomial<K> reduce(const Polynomial<K>& f) const {
    if (gb_.empty()) return f;
    return engine_->normal_form(f);
  }

  bool in_ideal(const Polynomial<K>& f) const { return reduce(f).is_zero(); }

  /// Krull dimension of S, from the lead-term ideal: the largest set of
  /// variables no lead monomial is supported on. -1 for the zero ring.
  int krull_dimension() const {
    const int n = nvars();
    for (const auto& g : gb_)
      if (g.lead().m.is_one()) return -1;
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      int size = __builtin_popcount(mask);
      if (size <= best) continue;
      bool independent = true;
      for (const auto& g : gb_) {
        bool inside = true;
        for (int i = 0; i < n; ++i)
          if (g.lead().m.exp[i] != 0 && !(mask & (1u << i))) inside = false;
        if (inside) {
          independent = false;
          break;
        }
      }
      if (independent) best = size;
    }
    return best;
  }

  std::string to_string(const Polynomial<K>& p) const {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms) {
      std::string c = field_.to_string(t.c);
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c = c.substr(1);
      if (first) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      first = false;
      bool unit_coeff = c == "1";
      if (t.m.is_one()) {
        s += c;
      } else {
        if (!unit_coeff) s += c + "*";
        s += space_->to_string(t.m);
      }
    }
    return s;
  }

 private:
  Ring(F field, std::shared_ptr<const MonomialSpace> space) : field_(std::move(field)), space_(std::move(space)) {}

  F field_;
  std::shared_ptr<const MonomialSpace> space_;
  std::vector<Polynomial<K>> ideal_;
  std::vector<Polynomial<K>> gb_;
  Ptr ambient_;
  std::shared_ptr<const GroebnerEngine<K>> engine_;
};

}  // namespace hochred
