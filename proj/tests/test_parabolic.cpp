#include <gtest/gtest.h>

#include "orbiroot/errors.hpp"
#include "orbiroot/parabolic.hpp"
#include "support.hpp"

using namespace orbiroot;
using namespace orbiroot::testing;

namespace {
const OrbiConfig one_point_r2 = OrbiConfig::make(0, 1, 2);
}

TEST(Filtration, HalfWeight) {
    auto L = par(0, {q(1, 2)});
    EXPECT_EQ(filtration_degree(one_point_r2, L, q(0)), 0);
    EXPECT_EQ(filtration_degree(one_point_r2, L, q(1, 2)), 0);
    EXPECT_EQ(filtration_degree(one_point_r2, L, q(1)), -1);
    EXPECT_EQ(filtration_degree(one_point_r2, L, q(3, 2)), -1);
    EXPECT_EQ(filtration_degree(one_point_r2, L, q(3, 2)), filtration_degree(one_point_r2, L, q(1, 2)) - 1);
}

TEST(Filtration, RejectsIndexOffTheLattice) {
    EXPECT_THROW(filtration_degree(one_point_r2, par(0, {q(1, 2)}), q(1, 3)), DomainError);
}

TEST(Shift, Examples) {
    auto L = par(0, {q(1, 2)});
    EXPECT_EQ(shift(one_point_r2, L, WeightIndex(one_point_r2, 2)), par(-1, {q(1, 2)}));
    EXPECT_EQ(shift(one_point_r2, L, WeightIndex(one_point_r2, 1)), par(0, {q(0)}));
    EXPECT_EQ(shift(one_point_r2, L, WeightIndex(one_point_r2, 0)), L);
}

TEST(Special, FiltrationAndDegree) {
    auto cfg = OrbiConfig::make(0, 3, 4);
    auto S = special(cfg, 0);
    EXPECT_EQ(filtration_degree(cfg, S, q(0)), 0);
    for (int l = 1; l <= 4; ++l) {
        EXPECT_EQ(filtration_degree(cfg, S, q(l, 4)), -3);
    }
    EXPECT_EQ(deg_par(special(cfg, 5)), q(5));
}

TEST(DegPar, Examples) {
    EXPECT_EQ(deg_par(par(-1, {q(1, 2), q(1, 2)})), q(0));
    EXPECT_EQ(deg_par(ParBundle{par(0, {q(1, 3)}), par(2, {q(2, 3)})}), q(3));
}

TEST(ChiPar, Examples) {
    EXPECT_EQ(chi_par(one_point_r2, ParBundle{par(0, {q(1, 2)})}), q(1, 2));
    auto bare = OrbiConfig::make(0, 0, 1);
    EXPECT_EQ(chi_par(bare, ParBundle{special(bare, 0)}), q(1));
    EXPECT_EQ(chi_par(one_point_r2, ParBundle{special(one_point_r2, 0)}), q(0));
}

TEST(DegParHilbert, MatchesDegPar) {
    auto cfg = OrbiConfig::make(0, 2, 2);
    EXPECT_EQ(deg_par_hilbert(cfg, ParBundle{par(-1, {q(1, 2), q(1, 2)})}), q(0));
    EXPECT_EQ(deg_par_hilbert(cfg, ParBundle{special(cfg, 7)}), q(7));
    ParBundle E{par(3, {q(0), q(1, 2)}), par(-2, {q(1, 2), q(1, 2)})};
    EXPECT_EQ(deg_par_hilbert(cfg, E), deg_par(E));
}

TEST(TensorPar, Examples) {
    EXPECT_EQ(tensor_par(one_point_r2, par(0, {q(1, 2)}), par(0, {q(1, 2)})), par(1, {q(0)}));
    auto r3 = OrbiConfig::make(0, 1, 3);
    EXPECT_EQ(tensor_par(r3, par(0, {q(1, 3)}), par(0, {q(1, 3)})), par(0, {q(2, 3)}));
    auto E = par(4, {q(2, 3)});
    EXPECT_EQ(tensor_par(r3, E, special(r3, 0)), E);
}

TEST(TensorPar, BundleDistributes) {
    auto r3 = OrbiConfig::make(0, 1, 3);
    ParBundle A{par(0, {q(1, 3)}), par(1, {q(0)})};
    ParBundle B{par(0, {q(2, 3)})};
    EXPECT_EQ(tensor_par(r3, A, B), (ParBundle{par(1, {q(0)}), par(1, {q(2, 3)})}));
}

TEST(CoendDegree, Examples) {
    auto L = par(0, {q(1, 2)});
    EXPECT_EQ(tensor_par_coend_degree(one_point_r2, L, L, 2), 0);
    auto S = special(one_point_r2, 0);
    EXPECT_EQ(tensor_par_coend_degree(one_point_r2, S, S, 1), -1);
}

TEST(CoendDegree, PseudoPeriodic) {
    auto cfg = OrbiConfig::make(0, 2, 3);
    auto A = par(1, {q(1, 3), q(2, 3)});
    auto B = par(-1, {q(2, 3), q(0)});
    for (std::int64_t l = -3; l <= 3; ++l) {
        EXPECT_EQ(tensor_par_coend_degree(cfg, A, B, l + 3), tensor_par_coend_degree(cfg, A, B, l) - 2);
    }
}

TEST(DualPar, Examples) {
    auto cfg2 = OrbiConfig::make(0, 2, 3);
    EXPECT_EQ(dual_par(cfg2, special(cfg2, 4)), special(cfg2, -4));
    EXPECT_EQ(dual_par(one_point_r2, par(0, {q(1, 2)})), par(-1, {q(1, 2)}));
    EXPECT_EQ(dual_par(cfg2, par(1, {q(1, 3), q(2, 3)})), par(-3, {q(2, 3), q(1, 3)}));
}

TEST(FlagData, Grouping) {
    ParBundle E{par(0, {q(0)}), par(0, {q(1, 2)}), par(-1, {q(1, 2)})};
    auto flags = to_flag_data(one_point_r2, E);
    ASSERT_EQ(flags.points.size(), 1u);
    EXPECT_EQ(flags.points[0].weights, (std::vector<Rational>{q(0), q(1, 2)}));
    EXPECT_EQ(flags.points[0].multiplicities, (std::vector<std::size_t>{1, 2}));

    ParBundle S{special(one_point_r2, 0), special(one_point_r2, 0), special(one_point_r2, 0)};
    auto sflags = to_flag_data(one_point_r2, S);
    EXPECT_EQ(sflags.points[0].weights, (std::vector<Rational>{q(0)}));
    EXPECT_EQ(sflags.points[0].multiplicities, (std::vector<std::size_t>{3}));

    auto cfg2 = OrbiConfig::make(0, 2, 3);
    auto two = to_flag_data(cfg2, ParBundle{par(0, {q(1, 3), q(2, 3)})});
    EXPECT_EQ(two.points[0].weights, (std::vector<Rational>{q(1, 3)}));
    EXPECT_EQ(two.points[1].weights, (std::vector<Rational>{q(2, 3)}));
}

TEST(HomExists, Direct) {
    auto S = special(one_point_r2, 0);
    auto L = par(0, {q(1, 2)});
    EXPECT_TRUE(hom_exists_par_direct(one_point_r2, S, L));
    EXPECT_FALSE(hom_exists_par_direct(one_point_r2, L, S));
    EXPECT_TRUE(hom_exists_par_direct(one_point_r2, L, L));
}

TEST(InducedSubQuot, SplitCase) {
    auto L1 = par(0, {q(1, 2)});
    auto L2 = par(3, {q(0)});
    ParBundle E{L1, L2};
    EXPECT_EQ(induced_sub_par(E, 0), L1);
    EXPECT_EQ(induced_quot_par(E, 0), ParBundle{L2});
    ParBundle single{L1};
    EXPECT_EQ(induced_sub_par(single, 0), L1);
    EXPECT_TRUE(induced_quot_par(single, 0).empty());
    EXPECT_THROW(induced_sub_par(E, 2), DomainError);
}

TEST(Validation, WeightsMustFitR) {
    EXPECT_THROW(check_par_line(one_point_r2, par(0, {q(1, 3)})), DomainError);
    EXPECT_THROW(check_par_line(one_point_r2, par(0, {q(1)})), DomainError);
    EXPECT_THROW(check_par_line(one_point_r2, par(0, {q(-1, 2)})), DomainError);
    EXPECT_THROW(check_par_line(one_point_r2, par(0, {q(0), q(0)})), DomainError);
}
