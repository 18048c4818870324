#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "orbiroot/geometry.hpp"
#include "orbiroot/rational.hpp"

namespace orbiroot {

/// Line bundle on the root stack, pi^*O(d) (x) N_1^{res_1} (x) ... (x) N_m^{res_m}
/// with each N_i an r-th root of pi^*O(P_i). Canonical form has 0 <= res_i < r.
struct LineObject {
    std::int64_t degree = 0;
    std::vector<int> residues;

    auto operator<=>(const LineObject&) const = default;
};

/// Split bundle on the root stack; sorted multiset of line objects.
class StackBundle {
public:
    StackBundle() = default;
    explicit StackBundle(std::vector<LineObject> summands);
    StackBundle(std::initializer_list<LineObject> summands)
        : StackBundle(std::vector<LineObject>(summands)) {}

    const std::vector<LineObject>& summands() const noexcept { return summands_; }
    std::size_t rank() const noexcept { return summands_.size(); }
    bool empty() const noexcept { return summands_.empty(); }

    bool operator==(const StackBundle&) const = default;

private:
    std::vector<LineObject> summands_;
};

void check_line_object(const OrbiConfig& cfg, const LineObject& line);
void check_stack_bundle(const OrbiConfig& cfg, const StackBundle& bundle);

/// Reduces raw exponents modulo r, carrying floor(raw_i / r) into the degree
/// (N_i^r = pi^*O(P_i)).
LineObject normalize(const OrbiConfig& cfg, std::int64_t degree, std::span<const std::int64_t> raw_residues);

Rational deg_stack(const OrbiConfig& cfg, const LineObject& line);
Rational deg_stack(const OrbiConfig& cfg, const StackBundle& bundle);

LineObject tensor_stack(const OrbiConfig& cfg, const LineObject& a, const LineObject& b);
StackBundle tensor_stack(const OrbiConfig& cfg, const StackBundle& a, const StackBundle& b);

LineObject dual_stack(const OrbiConfig& cfg, const LineObject& line);
StackBundle dual_stack(const OrbiConfig& cfg, const StackBundle& bundle);

/// N^{(x) l} where N = N_1 (x) ... (x) N_m is the tautological root of O(D).
LineObject tautological_power(const OrbiConfig& cfg, std::int64_t l);

/// The trivial line object O.
LineObject unit_line(const OrbiConfig& cfg);

/// deg pi_*(K); for canonical residues this is the pullback degree.
std::int64_t pushforward_degree(const OrbiConfig& cfg, const LineObject& line);

/// deg pi_*(N^{(x) -l} (x) K) = d + sum_i floor((res_i - l) / r).
std::int64_t pushforward_twisted_degree(const OrbiConfig& cfg, const LineObject& line, std::int64_t l);

/// chi(stack, K) = chi(X, pi_* K).
std::int64_t chi_stack(const OrbiConfig& cfg, const LineObject& line);
std::int64_t chi_stack(const OrbiConfig& cfg, const StackBundle& bundle);

/// Whether Hom(K1, K2) is nonzero. Genus 0 only.
bool hom_nonzero(const OrbiConfig& cfg, const LineObject& source, const LineObject& target);

}  // namespace orbiroot
