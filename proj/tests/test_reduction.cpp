#include <gtest/gtest.h>

#include "hochred/reduction.hpp"
#include "test_support.hpp"

using namespace hochred;
using namespace hochred::testing;
using QQ = RationalField;
using GF = PrimeField;

namespace {

const Window kWin{-8, 8};

std::vector<long> head(const HilbertTable& t, std::size_t k) {
  auto v = t.totals();
  v.resize(k);
  return v;
}

template <Field F>
struct Dual {
  typename Ring<F>::Ptr s;
  ModulePresentation<F> sm, k;
  explicit Dual(F field = F{})
      : s(ring<F>({"x"}, {"x^2"}, {}, field)), sm(ring_module<F>(s)), k(residue_field<F>(s)) {}
};

}  // namespace

TEST(Reduction, CohomologyExamples) {
  Dual<QQ> a;
  auto d = build_dualizing<QQ>(a.s);
  EXPECT_EQ(totals(reduce_cohomology(a.sm, a.sm, d, 4, kWin)), (std::vector<long>{2, 0, 0, 0, 0}));
  EXPECT_EQ(totals(reduce_cohomology(a.k, a.k, d, 4, kWin)), (std::vector<long>{1, 1, 1, 1, 1}));
  EXPECT_EQ(totals(reduce_cohomology(a.sm, a.k, d, 4, kWin)), (std::vector<long>{1, 0, 0, 0, 0}));
}

TEST(Reduction, HomologyExamples) {
  Dual<QQ> a;
  auto d = build_dualizing<QQ>(a.s);
  EXPECT_EQ(totals(reduce_homology(a.sm, a.sm, d, 4, kWin)), (std::vector<long>{2, 0, 0, 0, 0}));
  EXPECT_EQ(totals(reduce_homology(a.sm, a.k, d, 4, kWin)), (std::vector<long>{1, 0, 0, 0, 0}));
  EXPECT_EQ(totals(reduce_homology(a.k, a.k, d, 4, kWin)), (std::vector<long>{1, 1, 1, 1, 1}));
}

TEST(Reduction, VerifyDualNumbers) {
  Dual<GF> a(gf101());
  for (const auto& [m, n] : std::vector<std::pair<ModulePresentation<GF>, ModulePresentation<GF>>>{
           {a.sm, a.sm}, {a.k, a.k}, {a.sm, a.k}, {a.k, a.sm}}) {
    auto r = verify_reduction<GF>(a.s, m, n, 5, kWin);
    EXPECT_TRUE(r.pass);
    ASSERT_TRUE(r.truncation.has_value());
    EXPECT_TRUE(r.truncation->stable);
    EXPECT_EQ(r.alignment, 0);
  }
}

TEST(Reduction, VerifyBeyondArtinian) {
  // hypersurface and polynomial cases; D sits in degree 1
  auto node = ring<GF>({"x", "y"}, {"x*y"}, {}, gf101());
  auto r = verify_reduction<GF>(node, ring_module<GF>(node), residue_field<GF>(node), 3, kWin);
  EXPECT_TRUE(r.pass) << r.discrepancy->n;
  EXPECT_EQ(r.alignment, 1);
  auto line = ring<GF>({"x"}, {}, {}, gf101());
  auto k = residue_field<GF>(line);
  auto rl = verify_reduction<GF>(line, k, k, 3, kWin);
  EXPECT_TRUE(rl.pass);
}

TEST(Reduction, CoefficientForm) {
  Dual<QQ> a;
  for (const auto& [m, n, expect] :
       std::vector<std::tuple<ModulePresentation<QQ>, ModulePresentation<QQ>, std::vector<long>>>{
           {a.sm, a.sm, {2, 0, 0, 0}}, {a.k, a.k, {1, 1, 1, 1}}, {a.sm, a.k, {1, 0, 0, 0}}}) {
    auto r = reduce_ext<QQ>(a.s, m, n, 3, kWin);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(totals(r.lhs), expect);
  }
}

TEST(Reduction, HomologyVerification) {
  Dual<QQ> a;
  for (const auto& [m, n] : std::vector<std::pair<ModulePresentation<QQ>, ModulePresentation<QQ>>>{
           {a.sm, a.sm}, {a.sm, a.k}, {a.k, a.k}}) {
    auto r = verify_homology_reduction<QQ>(a.s, m, n, 5, kWin);
    EXPECT_TRUE(r.pass);
  }
}

TEST(Reduction, DualizingViaTor) {
  for (auto s : {ring({"x"}, {"x^2"}), ring({"x"}, {"x^3"}), ring({})}) {
    auto r = dualizing_via_tor<QQ>(s, 4, kWin);
    EXPECT_TRUE(r.pass);
  }
  EXPECT_EQ(head(dualizing_via_tor<QQ>(ring({"x"}, {"x^3"}), 3, kWin).lhs, 4), (std::vector<long>{3, 0, 0, 0}));
  EXPECT_THROW(dualizing_via_tor<QQ>(ring({"x"}), 2, kWin), NotFiniteDimensional);
}

TEST(Reduction, ClassicalIdentities) {
  Dual<QQ> a;
  for (const auto& [m, n] : std::vector<std::pair<ModulePresentation<QQ>, ModulePresentation<QQ>>>{
           {a.k, a.k}, {a.sm, a.sm}, {a.sm, a.k}}) {
    auto r = classical_check<QQ>(a.s, m, n, 4, kWin);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.lhs.rows.size(), 10u);
  }
  auto line = ring({"x"});
  auto free = ring_module<QQ>(line);
  EXPECT_THROW(classical_check<QQ>(line, free, free, 2, kWin), CoefficientNotFinitelyGenerated);
}

TEST(Reduction, ShiftedForm) {
  Dual<QQ> a;
  auto r = corollary_shift_check<QQ>(a.s, a.sm, a.sm, 4, kWin);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.alignment, 0);
  auto point = ring({});
  auto k = ring_module<QQ>(point);
  EXPECT_TRUE(corollary_shift_check<QQ>(point, k, k, 3, kWin).pass);
  auto node = ring<GF>({"x", "y"}, {"x*y"}, {}, gf101());
  auto rn = corollary_shift_check<GF>(node, ring_module<GF>(node), residue_field<GF>(node), 5, Window{-4, 4});
  EXPECT_TRUE(rn.pass);
  EXPECT_EQ(rn.alignment, 1);
}

TEST(Reduction, ShiftedFormNeedsConcentratedDual) {
  auto node = ring({"x", "y"}, {"x*y"});
  auto k = residue_field<QQ>(node);
  auto sm = ring_module<QQ>(node);
  // k alone has its Q-dual in one degree; S ⊕ k spreads over two
  EXPECT_TRUE(corollary_shift_check<QQ>(node, k, k, 3, kWin).pass);
  EXPECT_THROW(corollary_shift_check<QQ>(node, direct_sum(sm, k), k, 2, kWin), NotConcentrated);
  // and D itself must be concentrated
  auto spread = ring({"x", "y"}, {"x^2", "x*y"});
  auto ks = residue_field<QQ>(spread);
  EXPECT_THROW(corollary_shift_check<QQ>(spread, ks, ks, 2, kWin), NotConcentrated);
  EXPECT_THROW(verify_reduction<QQ>(spread, ks, ks, 2, kWin), NotConcentrated);
}

TEST(Reduction, ShiftCoherence) {
  Dual<QQ> a;
  auto d = build_dualizing<QQ>(a.s);
  auto base = reduce_cohomology(a.k, a.sm, d, 4, kWin);
  auto moved = reduce_cohomology(a.k, a.sm, d, 4, kWin, -1, 1);
  EXPECT_TRUE(moved.find(0)->is_zero());
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(moved.find(n)->dims, base.find(n - 1)->dims);
  // a misplaced D is caught by the comparison
  auto env = enveloping_algebra<QQ>(a.s);
  auto lhs = hochschild_ext(env, tensor_bimodule(env, a.k, a.sm), 4, kWin);
  EXPECT_FALSE(first_discrepancy(lhs, base).has_value());
  EXPECT_TRUE(first_discrepancy(lhs, moved).has_value());
}

TEST(Reduction, NaturalityAdditivity) {
  auto s = ring({"x", "y"}, {"x^2", "y^2"});
  auto sm = ring_module<QQ>(s);
  auto k = residue_field<QQ>(s);
  auto r1 = verify_reduction<QQ>(s, sm, k, 2, kWin);
  auto r2 = verify_reduction<QQ>(s, direct_sum(sm, k), k, 2, kWin);
  auto r3 = verify_reduction<QQ>(s, k, k, 2, kWin);
  EXPECT_TRUE(r1.pass && r2.pass && r3.pass);
  for (std::size_t i = 0; i < r2.lhs.rows.size(); ++i)
    for (int j = 0; j < kWin.width(); ++j) {
      EXPECT_EQ(r2.lhs.rows[i].dims[j], r1.lhs.rows[i].dims[j] + r3.lhs.rows[i].dims[j]);
      EXPECT_EQ(r2.rhs.rows[i].dims[j], r1.rhs.rows[i].dims[j] + r3.rhs.rows[i].dims[j]);
    }
}

TEST(Reduction, PolynomialLineComparesOnlyDerivedOutputs) {
  // over k[x] the coefficient S ⊗ S and RHom_S(S, D) ⊗ S are different
  // modules; only the two derived-functor tables are compared
  auto line = ring({"x"});
  auto sm = ring_module<QQ>(line);
  auto r = verify_reduction<QQ>(line, sm, sm, 3, kWin);
  EXPECT_TRUE(r.pass);
  auto env = enveloping_algebra<QQ>(line);
  auto coefficient = tensor_bimodule(env, sm, sm);
  EXPECT_FALSE(coefficient.presentation.is_finite_dimensional());
  EXPECT_NE(coefficient.presentation.hilbert(0, 3), sm.hilbert(0, 3));
}
