#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "orbiroot/root_stack.hpp"

namespace orbiroot {

/// Multiset of line objects with (possibly huge) multiplicities, keyed in
/// canonical order.
using LineMultiset = std::vector<std::pair<LineObject, BigInt>>;

/// Distinct P, Q in N[X] with P(F) = Q(F). Coefficients are listed from the
/// constant term up; both evaluations are stored as evidence.
struct WitnessRelation {
    std::vector<BigInt> p;
    std::vector<BigInt> q;
    LineMultiset p_of_f;
    LineMultiset q_of_f;
};

Rational slope(const OrbiConfig& cfg, const StackBundle& bundle);

/// On orbifold P^1 a split bundle is semistable iff all summand degrees agree.
bool is_semistable(const OrbiConfig& cfg, const StackBundle& bundle);

Rational max_line_sub_degree(const OrbiConfig& cfg, const StackBundle& bundle);

/// Saturation of a line subsheaf K' -> F_j inside F; the summand itself.
LineObject saturation(const OrbiConfig& cfg, const LineObject& sub, const StackBundle& bundle, std::size_t j);

/// Finite in Nori's sense; on P^1 exactly when every summand has degree 0.
bool is_finite(const OrbiConfig& cfg, const StackBundle& bundle);

/// Evaluates a polynomial with nonnegative coefficients on F as a multiset.
LineMultiset evaluate_polynomial(const OrbiConfig& cfg, const StackBundle& bundle,
                                 const std::vector<BigInt>& coefficients);

/// Searches for a relation P(F) = Q(F) with deg P, deg Q <= degree_bound.
/// The powers F^0, F^1, ... are expanded in the free abelian group on line
/// objects; the first power lying in the rational span of the previous ones
/// yields the minimal integer relation, which is split into its positive and
/// negative parts and verified by direct evaluation.
std::optional<WitnessRelation> witness_polynomials(const OrbiConfig& cfg, const StackBundle& bundle,
                                                   int degree_bound);

/// All canonical degree-0 line objects, sorted.
std::vector<LineObject> enumerate_finite_lines(const OrbiConfig& cfg);

struct StructureReport {
    std::size_t count = 0;
    std::int64_t min_degree = 0;
    std::int64_t max_degree = 0;
    bool bounds_hold = true;       // -m < d <= 0 for every object
    bool all_semistable_deg0 = true;
};

StructureReport verify_structure_theorem(const OrbiConfig& cfg);

}  // namespace orbiroot
