#include <gtest/gtest.h>

#include "hochred/module.hpp"
#include "hochred/parser.hpp"

using namespace hochred;

namespace {

using R = Ring<RationalField>;

R::Ptr make(std::vector<std::string> names, std::vector<int> weights, std::vector<std::string> ideal,
            MonomialOrder order = MonomialOrder::WeightedGrevlex) {
  auto q = R::create(RationalField{}, names, weights, order);
  std::vector<Polynomial<mpq_class>> gens;
  for (auto& s : ideal) gens.push_back(parse_polynomial(*q, s));
  return q->with_ideal(gens);
}

}  // namespace

TEST(Groebner, MonomialIdealIsItsOwnBasis) {
  auto s = make({"x", "y"}, {}, {"x^2", "x*y"});
  ASSERT_EQ(s->groebner().size(), 2u);
  EXPECT_EQ(s->to_string(s->groebner()[0]), "x*y");
  EXPECT_EQ(s->to_string(s->groebner()[1]), "x^2");
}

TEST(Groebner, WeightedNormalForm) {
  auto s = make({"x", "y"}, {1, 2}, {"x^2 - y"});
  auto f = parse_polynomial(*s, "x^3");
  EXPECT_EQ(s->to_string(s->reduce(f)), "x*y");
}

TEST(Groebner, HilbertFunctionOfQuotient) {
  auto s = make({"x", "y"}, {}, {"x^2", "x*y"});
  auto m = ring_module<RationalField>(s);
  EXPECT_EQ(m.hilbert(0, 4), (std::vector<long>{1, 2, 1, 1, 1}));
  EXPECT_FALSE(m.is_finite_dimensional());
  EXPECT_EQ(s->krull_dimension(), 1);
}

TEST(Groebner, KoszulSyzygy) {
  auto q = make({"x", "y"}, {}, {});
  Matrix<mpq_class> m{{0}, {1, 1}, {q->variable(0), q->variable(1)}};
  auto syz = syzygies(*q, m);
  ASSERT_EQ(syz.cols(), 1);
  EXPECT_EQ(syz.source_degrees[0], 2);
  auto c = syz.columns[0];
  auto a = component(c, 0), b = component(c, 1);
  EXPECT_TRUE(q->add(q->mul(q->variable(0), a), q->mul(q->variable(1), b)).is_zero());
  EXPECT_EQ(a.size(), 1u);
  EXPECT_EQ(a.lead().m, q->space().variable(1));
}

TEST(Groebner, SyzygiesOverQuotientIncludeAnnihilator) {
  auto s = make({"x"}, {}, {"x^2"});
  Matrix<mpq_class> m{{0}, {1}, {s->variable(0)}};
  auto syz = syzygies(*s, m);
  ASSERT_EQ(syz.cols(), 1);
  EXPECT_EQ(s->to_string(component(syz.columns[0], 0)), "x");
}

TEST(Groebner, TwistMismatchRejected) {
  auto q = make({"x", "y"}, {}, {});
  Matrix<mpq_class> m{{0}, {2, 1}, {q->variable(0), q->variable(1)}};
  EXPECT_THROW(syzygies(*q, m), TwistMismatch);
}

TEST(Groebner, StandardBasisOfArtinianModule) {
  auto s = make({"x", "y"}, {}, {"x^2", "y^2"});
  auto m = ring_module<RationalField>(s);
  EXPECT_TRUE(m.is_finite_dimensional());
  EXPECT_EQ(m.total_dimension(), 4);
  auto k = residue_field<RationalField>(s);
  EXPECT_EQ(k.total_dimension(), 1);
}

TEST(Groebner, PruneRemovesUnitRelations) {
  auto q = make({"x", "y"}, {}, {});
  Vector<mpq_class> rel = add(q->order(), in_component(q->variable(0), 0), in_component(q->one(), 1));
  ModulePresentation<RationalField> m(q, {0, 1}, {rel});
  auto p = prune(m);
  EXPECT_EQ(p.module.rank(), 1);
  EXPECT_TRUE(p.module.relations().empty());
  EXPECT_EQ(q->to_string(component(p.substitution[1], 0)), "-x");
}

TEST(Groebner, FiniteField) {
  auto q = Ring<PrimeField>::create(PrimeField(7), {"x", "y"});
  auto s = q->with_ideal({parse_polynomial(*q, "x^2 + 6*y^2"), parse_polynomial(*q, "x*y")});
  auto m = ring_module<PrimeField>(s);
  EXPECT_EQ(m.hilbert(0, 4), (std::vector<long>{1, 2, 1, 0, 0}));
}
