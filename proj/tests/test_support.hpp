#pragma once

#include <string>
#include <vector>

#include "hochred/derived.hpp"
#include "hochred/parser.hpp"

namespace hochred::testing {

template <Field F = RationalField>
typename Ring<F>::Ptr ring(std::vector<std::string> names, std::vector<std::string> ideal = {},
                           std::vector<int> weights = {}, F field = F{},
                           MonomialOrder order = MonomialOrder::WeightedGrevlex) {
  auto q = Ring<F>::create(field, names, weights, order);
  std::vector<Polynomial<typename F::value_type>> gens;
  for (auto& s : ideal) gens.push_back(parse_polynomial(*q, s));
  return q->with_ideal(gens);
}

inline auto gf101() { return PrimeField(101); }

template <Field F>
Polynomial<typename F::value_type> poly(const typename Ring<F>::Ptr& r, const std::string& s) {
  return parse_polynomial(*r, s);
}

/// Totals of a table, one per row.
inline std::vector<long> totals(const HilbertTable& t) { return t.totals(); }

template <Field F>
std::vector<int> ranks(const Complex<F>& c) {
  std::vector<int> out;
  for (int i = c.lo; i <= c.hi(); ++i) out.push_back(c.rank(i));
  return out;
}

}  // namespace hochred::testing
