#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hochred/hochschild.hpp"
#include "test_support.hpp"

using namespace hochred;
using namespace hochred::testing;

namespace {

using GF = PrimeField;
using K = GF::value_type;

// a random form of degree `deg`, possibly zero
Polynomial<K> random_form(const Ring<GF>& r, std::mt19937& rng, int deg, int terms) {
  std::uniform_int_distribution<int> c(0, 100), v(0, r.nvars() - 1);
  Polynomial<K> f;
  for (int t = 0; t < terms; ++t) {
    Polynomial<K> m = r.constant(r.field().from_int(c(rng)));
    for (int j = 0; j < deg; ++j) m = r.mul(m, r.variable(v(rng)));
    f = r.add(f, m);
  }
  return f;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long out = 1;
  for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// k[x, y] modulo x^a, y^b and one mixed monomial
Ring<GF>::Ptr random_artinian(std::mt19937& rng) {
  std::uniform_int_distribution<int> pw(2, 3), mix(1, 2);
  std::vector<std::string> gens = {"x^" + std::to_string(pw(rng)), "y^" + std::to_string(pw(rng))};
  if (rng() % 2) gens.push_back("x^" + std::to_string(mix(rng)) + "*y^" + std::to_string(mix(rng)));
  return ring<GF>({"x", "y"}, gens, {}, gf101());
}

}  // namespace

TEST(Property, NormalFormIsIdempotentAndKillsTheIdeal) {
  std::mt19937 rng(7);
  auto s = ring<GF>({"x", "y", "z"}, {"x^2 - y*z", "x*y - z^2", "y^3"}, {}, gf101());
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_form(*s, rng, 1 + static_cast<int>(rng() % 4), 6);
    auto nf = s->reduce(f);
    EXPECT_EQ(s->reduce(nf), nf);
    EXPECT_TRUE(s->in_ideal(s->sub(f, nf)));
    for (const auto& g : s->ideal_generators()) EXPECT_TRUE(s->in_ideal(s->mul(random_form(*s, rng, 2, 3), g)));
  }
}

TEST(Property, GroebnerBasisIgnoresGeneratorOrder) {
  std::mt19937 rng(11);
  std::vector<std::string> gens = {"x^2 - y*z", "x*y - z^2", "x*z - y^2", "z^3"};
  auto base = ring<GF>({"x", "y", "z"}, gens, {}, gf101());
  for (int trial = 0; trial < 6; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    auto other = ring<GF>({"x", "y", "z"}, gens, {}, gf101());
    ASSERT_EQ(other->groebner().size(), base->groebner().size());
    for (std::size_t i = 0; i < base->groebner().size(); ++i) EXPECT_EQ(other->groebner()[i], base->groebner()[i]);
    auto sm = ring_module<GF>(other), bm = ring_module<GF>(base);
    EXPECT_EQ(sm.hilbert(0, 8), bm.hilbert(0, 8));
  }
}

TEST(Property, ResolutionsAreExactComplexes) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    auto s = random_artinian(rng);
    auto q = s->ambient();
    // Q modulo the ideal of S and a random homogeneous form
    auto f = random_form(*q, rng, 1 + static_cast<int>(rng() % 2), 3);
    std::vector<Vector<K>> rel;
    auto gens = s->groebner();
    gens.push_back(f);
    for (const auto& g : gens) rel.push_back(in_component(g, 0));
    ModulePresentation<GF> m(q, {0}, rel);
    auto res = free_resolution(m, 3);
    res.check();
    for (int i = res.lo + 1; i <= res.hi() - 1; ++i) EXPECT_TRUE(res.homology(i).is_zero_module()) << trial << " " << i;
    EXPECT_EQ(res.homology(0).hilbert(0, 8), ring_module<GF>(q->with_ideal(gens)).hilbert(0, 8));
  }
}

TEST(Property, PolynomialHilbertFunctionsAreBinomials) {
  for (int nv = 1; nv <= 4; ++nv) {
    std::vector<std::string> names;
    for (int i = 0; i < nv; ++i) names.push_back("x" + std::to_string(i));
    auto p = ring<GF>(names, {}, {}, gf101());
    auto h = ring_module<GF>(p).hilbert(0, 6);
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(h[d], binom(nv + d - 1, d)) << nv << " " << d;
  }
  // weights (1, 2): floor(d / 2) + 1
  auto w = ring<GF>({"x", "y"}, {}, {1, 2}, gf101());
  auto h = ring_module<GF>(w).hilbert(0, 9);
  for (int d = 0; d <= 9; ++d) EXPECT_EQ(h[d], d / 2 + 1) << d;
  // a hypersurface of degree 3 in three variables: C(d+2,2) - C(d-1,2)
  auto c = ring<GF>({"x", "y", "z"}, {"x^3 + y^3 + z^3"}, {}, gf101());
  auto hc = ring_module<GF>(c).hilbert(0, 7);
  for (int d = 0; d <= 7; ++d) EXPECT_EQ(hc[d], binom(d + 2, 2) - binom(d - 1, 2)) << d;
}

TEST(Property, ExtAgreesWithBarComplexOnRandomArtinianRings) {
  std::mt19937 rng(5);
  const Window w{-8, 8};
  for (int trial = 0; trial < 4; ++trial) {
    auto s = random_artinian(rng);
    auto sm = ring_module<GF>(s), k = residue_field<GF>(s);
    std::vector<std::pair<ModulePresentation<GF>, ModulePresentation<GF>>> pairs = {{k, k}, {sm, k}, {k, sm}};
    for (const auto& [m, n] : pairs) {
      auto bar = bar_oracle(*s, hom_linear(s->field(), linear_module(m), linear_module(n)), 2, w);
      auto ext = ext_graded(m, n, 2, w);
      for (int i = 0; i <= 2; ++i) EXPECT_EQ(ext.find(i)->dims, bar.graded.find(i)->dims) << trial << " " << i;
    }
  }
}

TEST(Property, TwistShiftsExtDegrees) {
  auto s = ring<GF>({"x"}, {"x^2"}, {}, gf101());
  auto k = residue_field<GF>(s);
  const Window w{-10, 10};
  auto base = ext_graded(k, k, 3, w);
  for (int a : {-2, 1, 3}) {
    auto moved = ext_graded(k.twist(a), k, 3, w);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(moved.find(n)->dims, shift_dims(base.find(n)->dims, a)) << a << " " << n;
  }
}
