#include <gtest/gtest.h>

#include "hochred/dualizing.hpp"
#include "test_support.hpp"

using namespace hochred;
using namespace hochred::testing;
using QQ = RationalField;
using GF = PrimeField;

namespace {

const Window kWin{-8, 8};

std::vector<long> at(std::initializer_list<std::pair<int, long>> entries, Window w = kWin) {
  std::vector<long> out(w.width(), 0);
  for (auto [deg, dim] : entries) out[deg - w.lo] = dim;
  return out;
}

}  // namespace

TEST(Dualizing, DualNumbers) {
  auto s = ring({"x"}, {"x^2"});
  auto d = build_dualizing<QQ>(s);
  ASSERT_TRUE(d.concentrated_at.has_value());
  EXPECT_EQ(*d.concentrated_at, 0);
  // Ω twist 1, resolution shift 2: generated in degree -1
  EXPECT_EQ(d.canonical_module().hilbert(kWin.lo, kWin.hi), at({{-1, 1}, {0, 1}}));
}

TEST(Dualizing, PolynomialLine) {
  auto p = ring({"x"});
  auto d = build_dualizing<QQ>(p);
  EXPECT_EQ(d.concentrated_at, 1);
  EXPECT_EQ(d.canonical_module().generator_degrees(), std::vector<int>{1});
  EXPECT_TRUE(d.canonical_module().relations().empty());
}

TEST(Dualizing, PointAndNoVariables) {
  auto k0 = ring({});
  auto d0 = build_dualizing<QQ>(k0);
  EXPECT_EQ(d0.concentrated_at, 0);
  EXPECT_EQ(d0.canonical_module().hilbert(kWin.lo, kWin.hi), at({{0, 1}}));
  auto k1 = ring({"x"}, {"x"});
  auto d1 = build_dualizing<QQ>(k1);
  EXPECT_EQ(d1.concentrated_at, 0);
  EXPECT_EQ(d1.canonical_module().hilbert(kWin.lo, kWin.hi), at({{0, 1}}));
}

TEST(Dualizing, CompleteIntersectionTwist) {
  // Q/(f_1..f_c), regular: concentrated at e - c, ω ≅ S(Σ deg f - Σ w)
  struct Case {
    std::vector<std::string> names, ideal;
    std::vector<int> weights;
    int c, shift;
  };
  std::vector<Case> cases = {
      {{"x", "y"}, {"x*y"}, {}, 1, 0},
      {{"x", "y"}, {"x^2", "y^3"}, {}, 2, 3},
      {{"x", "y", "z"}, {"x^2 - y*z"}, {}, 1, -1},
      {{"x", "y"}, {"x^2 - y^3"}, {3, 2}, 1, 1},
  };
  for (const auto& c : cases) {
    auto s = ring(c.names, c.ideal, c.weights);
    auto d = build_dualizing<QQ>(s);
    ASSERT_TRUE(d.concentrated_at.has_value());
    EXPECT_EQ(*d.concentrated_at, static_cast<int>(c.names.size()) - c.c);
    EXPECT_EQ(d.canonical_module().hilbert(kWin.lo, kWin.hi), ring_module<QQ>(s).twist(c.shift).hilbert(kWin.lo, kWin.hi));
  }
}

TEST(Dualizing, SpreadHomologyIsDetected) {
  // k[x,y]/(x^2, xy) is not Cohen-Macaulay
  auto s = ring({"x", "y"}, {"x^2", "x*y"});
  auto d = build_dualizing<QQ>(s);
  EXPECT_FALSE(d.concentrated_at.has_value());
  EXPECT_THROW(d.canonical_module(), NotConcentrated);
  EXPECT_THROW(homothety_check(d, 2, kWin), NotConcentrated);
}

TEST(Dualizing, HomologyIsKilledByIdeal) {
  auto s = ring({"x", "y"}, {"x^2", "x*y"});
  auto d = build_dualizing<QQ>(s);
  for (const auto& [i, h] : d.homology)
    for (int j = 0; j < h.rank(); ++j)
      for (const auto& g : s->ambient()->ideal_generators())
        EXPECT_TRUE(h.is_zero_element(in_component(s->reduce(g), j)));
  (void)s->ambient();
}

TEST(Dualizing, OrderIndependence) {
  for (auto order : {MonomialOrder::WeightedGrevlex, MonomialOrder::Lex}) {
    auto s = ring({"x", "y", "z"}, {"x*y", "y*z"}, {}, QQ{}, order);
    auto ref = ring({"x", "y", "z"}, {"x*y", "y*z"});
    auto a = build_dualizing<QQ>(s).table(kWin), b = build_dualizing<QQ>(ref).table(kWin);
    EXPECT_FALSE(first_discrepancy(a, b).has_value());
  }
}

TEST(Factorization, ExtraVariableEliminated) {
  auto a = ring<GF>({"x", "y"}, {"x*y"}, {}, gf101());
  auto b = ring<GF>({"x", "y", "z"}, {"x*y", "z - x - y"}, {}, gf101());
  Matching<GF> m{{{"z", poly<GF>(a, "x + y")}}};
  auto r = factorization_independence<GF>(a, b, m, kWin);
  EXPECT_TRUE(r.pass);
}

TEST(Factorization, SamePresentationTwice) {
  auto a = ring({"x", "y"}, {"x^2", "y^2"});
  auto r = factorization_independence<QQ>(a, a, Matching<QQ>{}, kWin);
  EXPECT_TRUE(r.pass);
}

TEST(Factorization, GraphOfASquare) {
  auto a = ring<GF>({"x"}, {}, {1}, gf101());
  auto b = ring<GF>({"x", "y"}, {"y - x^2"}, {1, 2}, gf101());
  Matching<GF> m{{{"y", poly<GF>(a, "x^2")}}};
  auto r = factorization_independence<GF>(a, b, m, kWin);
  EXPECT_TRUE(r.pass);
  auto top = r.lhs.find(1);
  ASSERT_NE(top, nullptr);
  EXPECT_EQ(top->dims, ring_module<GF>(a).twist(-1).hilbert(kWin.lo, kWin.hi));
}

TEST(Factorization, RejectsNonIsomorphicMatchings) {
  auto a = ring({"x", "y"}, {"x*y"});
  auto b = ring({"x", "y", "z"}, {"x*y", "z - x - y"});
  // z -> x does not respect z - x - y
  EXPECT_THROW(factorization_independence<QQ>(a, b, Matching<QQ>{{{"z", poly<QQ>(a, "x")}}}, kWin),
               PresentationsNotIsomorphic);
  // wrong degree
  EXPECT_THROW(factorization_independence<QQ>(a, b, Matching<QQ>{{{"z", poly<QQ>(a, "x^2")}}}, kWin),
               PresentationsNotIsomorphic);
  // kernel too large: k[x,y] -> k[x,y]/(xy)
  auto free = ring({"x", "y"});
  EXPECT_THROW(factorization_independence<QQ>(a, free, Matching<QQ>{}, kWin), PresentationsNotIsomorphic);
  // not surjective: k[x] -> k[x,y]/(xy) via x -> x
  auto line = ring({"x"});
  EXPECT_THROW(factorization_independence<QQ>(a, line, Matching<QQ>{}, kWin), PresentationsNotIsomorphic);
}

TEST(Biduality, DualNumbers) {
  auto s = ring<GF>({"x"}, {"x^2"}, {}, gf101());
  auto d = build_dualizing<GF>(s);
  auto k = residue_field<GF>(s);
  auto sm = ring_module<GF>(s);
  for (const auto& m : {sm, k, direct_sum(sm, k.twist(-1))}) {
    auto r = biduality_check(m, d, 6, kWin);
    EXPECT_TRUE(r.pass) << r.discrepancy->n << " " << r.discrepancy->degree;
  }
}

TEST(Biduality, NodeCurve) {
  auto s = ring<GF>({"x", "y"}, {"x*y"}, {}, gf101());
  auto d = build_dualizing<GF>(s);
  for (const auto& m : {ring_module<GF>(s), residue_field<GF>(s)}) {
    auto r = biduality_check(m, d, 6, kWin);
    EXPECT_TRUE(r.pass);
  }
}

TEST(Biduality, Additivity) {
  auto s = ring({"x"}, {"x^3"});
  auto d = build_dualizing<QQ>(s);
  auto k = residue_field<QQ>(s);
  ModulePresentation<QQ> m(s, {0}, {in_component(poly<QQ>(s, "x^2"), 0)});
  auto a = biduality_check(k, d, 3, kWin), b = biduality_check(m, d, 3, kWin);
  auto ab = biduality_check(direct_sum(k, m), d, 3, kWin);
  for (std::size_t i = 0; i < ab.lhs.rows.size(); ++i)
    for (int j = 0; j < kWin.width(); ++j)
      EXPECT_EQ(ab.lhs.rows[i].dims[j], a.lhs.rows[i].dims[j] + b.lhs.rows[i].dims[j]);
  EXPECT_TRUE(ab.pass);
}

TEST(Homothety, ShippedAlgebras) {
  for (auto s : {ring<GF>({"x"}, {"x^2"}, {}, gf101()), ring<GF>({"x", "y"}, {"x*y"}, {}, gf101()),
                 ring<GF>({"x"}, {}, {}, gf101())}) {
    auto r = homothety_check(build_dualizing<GF>(s), 6, kWin);
    EXPECT_TRUE(r.pass);
  }
}

TEST(FiniteDual, ArtinianAlgebras) {
  for (auto s : {ring({}), ring({"x"}, {"x^2"}), ring({"x"}, {"x^3"}), ring({"x", "y"}, {"x^2", "x*y", "y^3"})}) {
    auto r = finite_dual_check<QQ>(s, kWin);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.alignment, 0);
  }
  EXPECT_THROW(finite_dual_check<QQ>(ring({"x"}), kWin), NotFiniteDimensional);
}

TEST(FiniteDual, NonGorensteinTable) {
  // k[x,y]/(x,y)^2: the dual is generated in degree -1 by two elements
  auto s = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  auto r = finite_dual_check<QQ>(s, kWin);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.lhs.rows[0].dims, at({{-1, 2}, {0, 1}}));
}

TEST(Smooth, PolynomialRings) {
  for (int e = 0; e <= 3; ++e) {
    std::vector<std::string> names;
    for (int i = 0; i < e; ++i) names.push_back("x" + std::to_string(i));
    auto p = ring<GF>(names, {}, {}, gf101());
    auto r = smooth_diagnostics<GF>(p, 4, kWin);
    EXPECT_TRUE(r.consistent) << e;
    EXPECT_EQ(r.d, e);
    EXPECT_EQ(r.generator_degree, -e);
  }
}

TEST(Smooth, PatternIsNecessaryOnly) {
  // the enveloping algebra of k[x]/(x^2) is self-injective, so the pattern holds
  auto s = ring({"x"}, {"x^2"});
  EXPECT_TRUE(smooth_diagnostics<QQ>(s, 3, kWin).consistent);
  EXPECT_TRUE(nonsmooth_certificate<QQ>(s, 3).not_smooth);
  auto t = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  EXPECT_FALSE(smooth_diagnostics<QQ>(t, 2, kWin).consistent);
}

TEST(Nonsmooth, Certificates) {
  auto s = ring<GF>({"x"}, {"x^2"}, {}, gf101());
  auto v = nonsmooth_certificate<GF>(s, 4);
  EXPECT_TRUE(v.not_smooth);
  EXPECT_EQ(v.n, 1);
  EXPECT_EQ(v.betti, (std::vector<int>{1, 1, 1, 1, 1}));
  auto p = ring<GF>({"x"}, {}, {}, gf101());
  auto w = nonsmooth_certificate<GF>(p, 6);
  EXPECT_FALSE(w.not_smooth);
  EXPECT_EQ(w.n, 6);
  auto k = ring<GF>({}, {}, {}, gf101());
  EXPECT_FALSE(nonsmooth_certificate<GF>(k, 3).not_smooth);
  auto node = ring<GF>({"x", "y"}, {"x*y"}, {}, gf101());
  auto u = nonsmooth_certificate<GF>(node, 4);
  EXPECT_TRUE(u.not_smooth);
  EXPECT_EQ(u.n, 2);
}
