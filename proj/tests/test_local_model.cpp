#include <gtest/gtest.h>

#include "orbiroot/errors.hpp"
#include "orbiroot/local_model.hpp"
#include "support.hpp"

using namespace orbiroot;
using namespace orbiroot::testing;

namespace {

TruncatedPoly P(const LocalRing& ring, const char* text) { return parse_poly(text, ring.precision); }

ShiftMultiset counts(std::initializer_list<std::size_t> c) { return ShiftMultiset(c); }

}  // namespace

TEST(LocalRing, Construction) {
    EXPECT_EQ(LocalRing::with_default_precision(3).precision, 12);
    EXPECT_THROW(LocalRing::make(3, 10), DomainError);
    EXPECT_THROW(LocalRing::make(0, 4), DomainError);
}

TEST(TruncatedPoly, ParseAndPrint) {
    auto p = parse_poly("1 + t^2", 8);
    EXPECT_EQ(p[0], q(1));
    EXPECT_EQ(p[2], q(1));
    auto r = parse_poly("-3/2*t^3", 8);
    EXPECT_EQ(r[3], q(-3, 2));
    EXPECT_EQ(parse_poly("2t - t^5", 8)[1], q(2));
    EXPECT_TRUE(parse_poly("0", 8).is_zero());
    EXPECT_EQ(parse_poly(to_string(p), 8), p);
    EXPECT_THROW(parse_poly("1 + s", 8), DomainError);
    EXPECT_THROW(parse_poly("t^", 8), DomainError);
}

TEST(TruncatedPoly, ArithmeticTruncates) {
    auto a = parse_poly("1 + t^3", 4);
    auto b = parse_poly("t", 4);
    EXPECT_EQ(a * b, parse_poly("t", 4));
    EXPECT_EQ(b.shifted(3), TruncatedPoly(4));
    EXPECT_EQ((a - a).valuation(), 4);
    EXPECT_EQ(b.valuation(), 1);
}

TEST(TruncatedPoly, HomogeneousDegree) {
    EXPECT_EQ(homogeneous_degree(parse_poly("t + t^3", 8), 2), 1);
    EXPECT_THROW(homogeneous_degree(parse_poly("1 + t", 8), 2), DomainError);
    EXPECT_THROW(homogeneous_degree(TruncatedPoly(8), 2), DomainError);
}

TEST(Decompose, IdentityMatrix) {
    auto ring = LocalRing::with_default_precision(2);
    auto M = standard_module(ring, {0, 1});
    EXPECT_EQ(decompose_shifts(M), counts({1, 1}));
}

TEST(Decompose, SingleShiftedGenerator) {
    auto ring = LocalRing::with_default_precision(2);
    GradedModule M(ring, {0}, {{P(ring, "t")}});
    EXPECT_EQ(decompose_shifts(M), counts({0, 1}));
}

TEST(Decompose, MixedMatrix) {
    auto ring = LocalRing::with_default_precision(2);
    GradedModule M(ring, {0, 1}, {{P(ring, "1"), P(ring, "t")}, {P(ring, "t"), P(ring, "1 + t^2")}});
    EXPECT_EQ(graded_quotient_dimensions(M), counts({1, 1}));
    EXPECT_EQ(decompose_shifts(M), counts({1, 1}));
}

TEST(Decompose, RejectsSingular) {
    auto ring = LocalRing::with_default_precision(2);
    GradedModule M(ring, {0, 0}, {{P(ring, "1"), P(ring, "1")}, {P(ring, "1"), P(ring, "1")}});
    EXPECT_THROW(decompose_shifts(M), DomainError);
}

TEST(GradedModule, RejectsMalformed) {
    auto ring = LocalRing::with_default_precision(2);
    EXPECT_THROW(GradedModule(ring, {0}, {{P(ring, "1 + t")}}), DomainError);
    EXPECT_THROW(GradedModule(ring, {0, 1}, {{P(ring, "1")}}), DomainError);
    EXPECT_THROW(GradedModule(ring, {0}, {{TruncatedPoly(8)}}), DomainError);
    EXPECT_THROW(GradedModule(ring, {0}, {{TruncatedPoly(3)}}), DomainError);
}

TEST(Determinant, Triangular) {
    auto ring = LocalRing::with_default_precision(2);
    std::vector<std::vector<TruncatedPoly>> m{{P(ring, "2"), P(ring, "t")}, {P(ring, "0"), P(ring, "1 + t^2")}};
    EXPECT_EQ(determinant(ring, m), P(ring, "2 + 2t^2"));
}

TEST(Invariant, Examples) {
    auto r2 = LocalRing::with_default_precision(2);
    EXPECT_EQ(invariant_part_rank(standard_module(r2, {0})).rank, 1u);
    auto a1 = invariant_part_rank(standard_module(r2, {1}));
    EXPECT_EQ(a1.rank, 1u);
    EXPECT_EQ(a1.valuation_profile, std::vector<int>{1});
    auto r3 = LocalRing::with_default_precision(3);
    auto all = invariant_part_rank(standard_module(r3, {0, 1, 2}));
    EXPECT_EQ(all.rank, 3u);
    EXPECT_EQ(all.valuation_profile, (std::vector<int>{0, 1, 2}));
}

TEST(Cokernel, Examples) {
    auto r2 = LocalRing::with_default_precision(2);
    auto A0 = standard_module(r2, {0});
    EXPECT_TRUE(cokernel_free_check(A0, 0, 1));
    EXPECT_TRUE(cokernel_free_check(A0, 1, 1));
    EXPECT_THROW(cokernel_free_check(A0, 0, 2), DomainError);
    EXPECT_THROW(cokernel_free_check(A0, 1, 0), DomainError);
}

TEST(ChangeBasis, PreservesShifts) {
    auto ring = LocalRing::with_default_precision(3);
    auto M = standard_module(ring, {0, 2, 2});
    std::vector<std::vector<TruncatedPoly>> U{
        {P(ring, "1 + t^3"), P(ring, "t^2"), P(ring, "0")},
        {P(ring, "0"), P(ring, "1"), P(ring, "3")},
        {P(ring, "t"), P(ring, "-1 + t^6"), P(ring, "1")},
    };
    auto N = change_basis(M, U);
    EXPECT_EQ(decompose_shifts(N), counts({1, 0, 2}));
    EXPECT_EQ(invariant_part_rank(N).rank, 3u);
}

TEST(LocalModelOf, ResidueGivesShift) {
    auto cfg = OrbiConfig::make(0, 2, 3);
    auto ring = LocalRing::with_default_precision(3);
    StackBundle F{obj(0, {1, 2}), obj(5, {1, 0}), obj(-1, {2, 2})};
    EXPECT_EQ(decompose_shifts(local_model_of(cfg, F, 0, ring)), counts({0, 2, 1}));
    EXPECT_EQ(decompose_shifts(local_model_of(cfg, F, 1, ring)), counts({1, 0, 2}));
    EXPECT_THROW(local_model_of(cfg, F, 2, ring), DomainError);
    EXPECT_THROW(local_model_of(cfg, F, 0, LocalRing::with_default_precision(2)), DomainError);
}
