#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace hochred;
using namespace hochred::testing;
using QQ = RationalField;
using V = Vector<mpq_class>;

TEST(FreeResolution, ResidueFieldOverPlane) {
  auto r = ring({"x", "y"});
  auto f = free_resolution(residue_field<QQ>(r), 5);
  f.check();
  EXPECT_TRUE(f.complete);
  EXPECT_EQ(ranks(f), (std::vector<int>{1, 2, 1}));
}

TEST(FreeResolution, PrincipalIdealOverLine) {
  auto q = ring({"x"});
  auto s = ring({"x"}, {"x^2"});
  ModulePresentation<QQ> m(q, {0}, {in_component(poly<QQ>(q, "x^2"), 0)});
  auto f = free_resolution(m, 3);
  EXPECT_EQ(ranks(f), (std::vector<int>{1, 1}));
  EXPECT_EQ(f.terms[1].generator_degrees(), std::vector<int>{2});
  (void)s;
}

TEST(FreeResolution, FreeModuleHasLengthZero) {
  auto s = ring({"x"}, {"x^2"});
  auto f = free_resolution(free_module<QQ>(s, {2}), 4);
  EXPECT_EQ(ranks(f), (std::vector<int>{1}));
  EXPECT_TRUE(f.complete);
}

TEST(FreeResolution, PeriodicOverDualNumbersIsMinimal) {
  auto s = ring({"x"}, {"x^2"});
  auto f = free_resolution(residue_field<QQ>(s), 6);
  f.check();
  EXPECT_FALSE(f.complete);
  EXPECT_EQ(ranks(f), (std::vector<int>(7, 1)));
  for (int i = 1; i <= f.hi(); ++i) {
    EXPECT_EQ(f.terms[i].generator_degrees()[0], i);
    for (const auto& col : f.differential(i))
      for (const auto& t : col.terms) EXPECT_FALSE(t.m.is_one());
  }
  EXPECT_THROW(f.homology(6), OutsideValidityWindow);
}

TEST(Hom, KoszulIntoRing) {
  auto r = ring({"x", "y"});
  auto k = koszul_complex<QQ>(r, {r->variable(0), r->variable(1)});
  auto h = hom(k, concentrated(ring_module<QQ>(r)));
  h.check();
  Window w{-4, 0};
  EXPECT_EQ(h.homology_hilbert(0, w), std::vector<long>(5, 0));
  EXPECT_EQ(h.homology_hilbert(-1, w), std::vector<long>(5, 0));
  EXPECT_EQ(h.homology_hilbert(-2, w), (std::vector<long>{0, 0, 1, 0, 0}));
}

TEST(Hom, RingIntoRing) {
  auto r = ring({"x", "y"});
  auto h = hom(concentrated(ring_module<QQ>(r)), concentrated(ring_module<QQ>(r)));
  EXPECT_EQ(h.homology_hilbert(0, {0, 3}), (std::vector<long>{1, 2, 3, 4}));
}

TEST(Hom, TransposeOfMultiplication) {
  auto q = ring({"x"});
  auto f = free_complex<QQ>(q, 0, {{0}, {2}}, {{}, {in_component(poly<QQ>(q, "x^2"), 0)}});
  auto h = hom(f, concentrated(ring_module<QQ>(q)));
  h.check();
  EXPECT_EQ(h.homology_hilbert(0, {-3, 3}), std::vector<long>(7, 0));
  EXPECT_EQ(h.homology_hilbert(-1, {-3, 3}), (std::vector<long>{0, 1, 1, 0, 0, 0, 0}));
}

TEST(Tensor, KoszulFactors) {
  auto r = ring({"x", "y"});
  auto kx = koszul_complex<QQ>(r, {r->variable(0)});
  auto ky = koszul_complex<QQ>(r, {r->variable(1)});
  auto t = tensor(kx, ky);
  t.check();
  EXPECT_EQ(ranks(t), (std::vector<int>{1, 2, 1}));
  Window w{0, 3};
  EXPECT_EQ(t.homology_hilbert(0, w), (std::vector<long>{1, 0, 0, 0}));
  EXPECT_EQ(t.homology_hilbert(1, w), std::vector<long>(4, 0));
  auto kxy = koszul_complex<QQ>(r, {r->variable(0), r->variable(1)});
  auto sq = tensor(kxy, kxy);
  sq.check();
  EXPECT_EQ(ranks(sq), (std::vector<int>{1, 4, 6, 4, 1}));
  auto unit = tensor(kxy, concentrated(ring_module<QQ>(r)));
  EXPECT_EQ(ranks(unit), (std::vector<int>{1, 2, 1}));
}

TEST(Homology, ZeroDifferential) {
  auto r = ring({"x"});
  auto c = free_complex<QQ>(r, 0, {{0}, {0}}, {{}, {V{}}});
  EXPECT_EQ(c.homology_hilbert(0, {0, 2}), (std::vector<long>{1, 1, 1}));
  EXPECT_EQ(c.homology_hilbert(1, {0, 2}), (std::vector<long>{1, 1, 1}));
}

TEST(Homology, MultiplicationOnDualNumbers) {
  auto s = ring({"x"}, {"x^2"});
  auto c = free_complex<QQ>(s, 0, {{0}, {1}}, {{}, {in_component(s->variable(0), 0)}});
  c.check();
  EXPECT_EQ(c.homology_hilbert(0, {0, 3}), (std::vector<long>{1, 0, 0, 0}));
  EXPECT_EQ(c.homology_hilbert(1, {0, 3}), (std::vector<long>{0, 0, 1, 0}));
  auto h1 = c.homology(1);
  EXPECT_EQ(h1.rank(), 1);
  EXPECT_EQ(h1.generator_degrees()[0], 2);
  auto h0 = c.homology(0);
  EXPECT_EQ(h0.hilbert(0, 3), (std::vector<long>{1, 0, 0, 0}));
}

TEST(Koszul, NonRegularElement) {
  auto s = ring({"x"}, {"x^2"});
  auto k = koszul_complex<QQ>(s, {s->variable(0)});
  EXPECT_EQ(k.homology_hilbert(0, {0, 2}), (std::vector<long>{1, 0, 0}));
  // the kernel of x on S(-1) is generated by x e_1, of degree 2
  EXPECT_EQ(k.homology_hilbert(1, {0, 2}), (std::vector<long>{0, 0, 1}));
}

TEST(Koszul, SelfDuality) {
  auto r = ring({"x", "y", "z"});
  auto y = koszul_complex<QQ>(r, {r->variable(0), r->variable(1), r->variable(2)});
  auto dual = hom(y, concentrated(ring_module<QQ>(r)));
  auto shifted = shift(y, -3);
  Window w{-5, 3};
  // Hom(Y, R) = Sigma^{-3} Y twisted by the total degree 3 of the sequence
  for (int i = -3; i <= 0; ++i)
    EXPECT_EQ(dual.homology_hilbert(i, w), shift_dims(shifted.homology_hilbert(i, w), -3)) << i;
}

TEST(Semifree, SingleModuleMatchesResolution) {
  auto s = ring({"x"}, {"x^2"});
  auto k = residue_field<QQ>(s);
  auto p = semifree_resolution(concentrated(k), 5).complex;
  auto f = free_resolution(k, 5);
  EXPECT_EQ(ranks(p), ranks(f));
}

TEST(Semifree, TwoTermComplex) {
  auto s = ring({"x"}, {"x^2"});
  auto c = free_complex<QQ>(s, 0, {{0}, {1}}, {{}, {in_component(s->variable(0), 0)}});
  auto res = semifree_resolution(c, 6);
  res.complex.check();
  Window w{-2, 4};
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(res.complex.homology_hilbert(i, w), c.homology_hilbert(i, w)) << i;
}

TEST(Semifree, ExactComplexHasNoHomology) {
  auto s = ring({"x"}, {"x^2"});
  auto c = free_complex<QQ>(s, 0, {{0}, {0}}, {{}, {in_component(s->one(), 0)}});
  auto res = semifree_resolution(c, 4);
  Window w{-2, 4};
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(res.complex.homology_hilbert(i, w), std::vector<long>(7, 0));
}

TEST(Derived, ExtOverDualNumbers) {
  auto s = ring({"x"}, {"x^2"});
  auto k = residue_field<QQ>(s);
  auto t = ext_graded(k, k, 5, {-8, 8});
  EXPECT_EQ(totals(t), std::vector<long>(6, 1));
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(t.dim(n, -n), 1);
  auto ss = ext_graded(ring_module<QQ>(s), ring_module<QQ>(s), 3, {0, 3});
  EXPECT_EQ(ss.rows[0].dims, (std::vector<long>{1, 1, 0, 0}));
  EXPECT_EQ(totals(ss), (std::vector<long>{2, 0, 0, 0}));
}

TEST(Derived, ExtAndTorOverPolynomialRings) {
  auto line = ring({"x"});
  EXPECT_EQ(totals(ext_graded(residue_field<QQ>(line), residue_field<QQ>(line), 3, {-3, 3})),
            (std::vector<long>{1, 1, 0, 0}));
  auto plane = ring({"x", "y"});
  EXPECT_EQ(totals(tor_graded(residue_field<QQ>(plane), residue_field<QQ>(plane), 3, {0, 4})),
            (std::vector<long>{1, 2, 1, 0}));
  auto s = ring({"x"}, {"x^2"});
  EXPECT_EQ(totals(tor_graded(residue_field<QQ>(s), residue_field<QQ>(s), 4, {0, 6})),
            (std::vector<long>(5, 1)));
  EXPECT_EQ(tor_graded(ring_module<QQ>(s), residue_field<QQ>(s), 0, {0, 2}).rows[0].dims,
            (std::vector<long>{1, 0, 0}));
}

TEST(Derived, HyperExtOnTwoTermComplex) {
  auto s = ring({"x"}, {"x^2"});
  auto c = free_complex<QQ>(s, 0, {{0}, {1}}, {{}, {in_component(s->variable(0), 0)}});
  Window w{-8, 8};
  auto t = hyper_ext(c, residue_field<QQ>(s), 0, 3, w);
  // c is already free, so Hom(c, k) computes the hyper-Ext directly
  auto direct = hom(c, concentrated(residue_field<QQ>(s)));
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(t.find(n)->dims, direct.homology_hilbert(-n, w)) << n;
  EXPECT_EQ(totals(t), (std::vector<long>{1, 1, 0, 0}));
}

TEST(Derived, HyperFunctorsDegenerateAndShift) {
  auto s = ring({"x"}, {"x^2"});
  auto k = residue_field<QQ>(s);
  Window w{-8, 8};
  auto a = hyper_ext(concentrated(k), k, 0, 4, w);
  auto b = ext_graded(k, k, 4, w);
  EXPECT_FALSE(first_discrepancy(a, b).has_value());
  auto c = hyper_tor(concentrated(ring_module<QQ>(s)), k, 0, 4, w);
  auto d = tor_graded(ring_module<QQ>(s), k, 4, w);
  EXPECT_FALSE(first_discrepancy(c, d).has_value());
  auto shifted = hyper_ext(concentrated(k, 2), k, 2, 6, w);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(shifted.find(n)->dims, b.find(n - 2)->dims) << n;
}
