#include <gtest/gtest.h>

#include "orbiroot/errors.hpp"
#include "orbiroot/moduli.hpp"
#include "support.hpp"

using namespace orbiroot;
using namespace orbiroot::testing;

TEST(Slope, Examples) {
    EXPECT_EQ(slope(OrbiConfig::make(0, 2, 2), StackBundle{obj(-1, {1, 1})}), q(0));
    auto cfg = OrbiConfig::make(0, 1, 2);
    EXPECT_EQ(slope(cfg, StackBundle{unit_line(cfg), unit_line(cfg), unit_line(cfg)}), q(0));
    EXPECT_EQ(slope(cfg, StackBundle{obj(0, {0}), obj(1, {0})}), q(1, 2));
    EXPECT_THROW(slope(cfg, StackBundle{}), DomainError);
}

TEST(Semistable, Examples) {
    auto cfg = OrbiConfig::make(0, 1, 2);
    EXPECT_TRUE(is_semistable(cfg, StackBundle{obj(2, {1}), obj(2, {1})}));
    EXPECT_FALSE(is_semistable(cfg, StackBundle{obj(0, {0}), obj(-1, {1})}));
    EXPECT_TRUE(is_semistable(cfg, StackBundle{obj(-1, {1}), obj(-1, {1})}));
    EXPECT_THROW(is_semistable(OrbiConfig::make(1, 1, 2), StackBundle{obj(0, {0})}), DomainError);
}

TEST(MaxLineSub, Examples) {
    auto cfg = OrbiConfig::make(0, 1, 2);
    EXPECT_EQ(max_line_sub_degree(cfg, StackBundle{obj(0, {0}), obj(-1, {1})}), q(0));
    EXPECT_EQ(max_line_sub_degree(cfg, StackBundle{obj(3, {1})}), q(7, 2));
}

TEST(Saturation, Examples) {
    auto cfg = OrbiConfig::make(0, 2, 3);
    StackBundle F{obj(-1, {1, 2}), obj(2, {0, 0})};
    auto j = static_cast<std::size_t>(std::find(F.summands().begin(), F.summands().end(), obj(-1, {1, 2})) -
                                      F.summands().begin());
    EXPECT_EQ(saturation(cfg, obj(-1, {0, 0}), F, j), obj(-1, {1, 2}));
    EXPECT_EQ(saturation(cfg, F.summands()[j], F, j), F.summands()[j]);
    EXPECT_THROW(saturation(cfg, obj(5, {0, 0}), F, j), DomainError);
    EXPECT_THROW(saturation(cfg, obj(-1, {0, 0}), F, 7), DomainError);
}

TEST(Finite, Examples) {
    EXPECT_TRUE(is_finite(OrbiConfig::make(0, 2, 2), StackBundle{obj(-1, {1, 1})}));
    auto cfg = OrbiConfig::make(0, 1, 2);
    EXPECT_TRUE(is_finite(cfg, StackBundle{unit_line(cfg), unit_line(cfg)}));
    EXPECT_FALSE(is_finite(cfg, StackBundle{obj(0, {1})}));
}

TEST(Witness, SquareTrivial) {
    auto cfg = OrbiConfig::make(0, 2, 2);
    auto w = witness_polynomials(cfg, StackBundle{obj(-1, {1, 1})}, 4);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->p, (std::vector<BigInt>{0, 0, 1}));
    EXPECT_EQ(w->q, (std::vector<BigInt>{1}));
    EXPECT_EQ(w->p_of_f, w->q_of_f);
}

TEST(Witness, TrivialLine) {
    auto cfg = OrbiConfig::make(0, 1, 3);
    auto w = witness_polynomials(cfg, StackBundle{unit_line(cfg)}, 2);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->p, (std::vector<BigInt>{0, 1}));
    EXPECT_EQ(w->q, (std::vector<BigInt>{1}));
}

TEST(Witness, DegreeObstruction) {
    auto cfg = OrbiConfig::make(0, 1, 2);
    EXPECT_FALSE(witness_polynomials(cfg, StackBundle{obj(0, {1})}, 6).has_value());
    EXPECT_THROW(witness_polynomials(cfg, StackBundle{obj(0, {1})}, 0), DomainError);
}

TEST(Witness, RelationEvaluatesCorrectly) {
    auto cfg = OrbiConfig::make(0, 3, 3);
    StackBundle F{obj(-1, {1, 2, 0}), obj(-1, {0, 1, 2}), unit_line(cfg)};
    auto w = witness_polynomials(cfg, F, 12);
    ASSERT_TRUE(w.has_value());
    EXPECT_NE(w->p, w->q);
    EXPECT_EQ(evaluate_polynomial(cfg, F, w->p), evaluate_polynomial(cfg, F, w->q));
}

TEST(EvaluatePolynomial, Basics) {
    auto cfg = OrbiConfig::make(0, 1, 2);
    StackBundle F{obj(0, {1})};
    auto v = evaluate_polynomial(cfg, F, {2, 0, 3});
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[0], (std::pair<LineObject, BigInt>{obj(0, {0}), 2}));
    EXPECT_EQ(v[1], (std::pair<LineObject, BigInt>{obj(1, {0}), 3}));
    EXPECT_THROW(evaluate_polynomial(cfg, F, {-1}), DomainError);
}

TEST(EnumerateFinite, Examples) {
    auto lines = enumerate_finite_lines(OrbiConfig::make(0, 3, 2));
    std::vector<LineObject> expected{obj(-1, {0, 1, 1}), obj(-1, {1, 0, 1}), obj(-1, {1, 1, 0}), obj(0, {0, 0, 0})};
    EXPECT_EQ(lines, expected);
    EXPECT_EQ(enumerate_finite_lines(OrbiConfig::make(0, 0, 4)), std::vector<LineObject>{obj(0, {})});
    EXPECT_EQ(enumerate_finite_lines(OrbiConfig::make(0, 2, 3)).size(), 3u);
}

TEST(StructureTheorem, Examples) {
    auto r = verify_structure_theorem(OrbiConfig::make(0, 3, 2));
    EXPECT_EQ(r.count, 4u);
    EXPECT_EQ(r.min_degree, -1);
    EXPECT_EQ(r.max_degree, 0);
    EXPECT_TRUE(r.bounds_hold);
    auto single = verify_structure_theorem(OrbiConfig::make(0, 1, 2));
    EXPECT_EQ(single.count, 1u);
    EXPECT_EQ(single.min_degree, 0);
    auto big = verify_structure_theorem(OrbiConfig::make(0, 4, 6));
    EXPECT_EQ(big.min_degree, -3);
    EXPECT_EQ(big.count, 216u);
    EXPECT_THROW(verify_structure_theorem(OrbiConfig::make(0, 0, 2)), DomainError);
}
