#pragma once

#include <cstdint>
#include <vector>

#include "orbiroot/parabolic.hpp"
#include "orbiroot/root_stack.hpp"

namespace orbiroot {

// Functor F: stack bundles -> parabolic bundles, E_{l/r} = pi_*(N^{-l} (x) F).
ParLine to_parabolic(const OrbiConfig& cfg, const LineObject& line);
ParBundle to_parabolic(const OrbiConfig& cfg, const StackBundle& bundle);

// Inverse functor G, closed form: residue = r * weight.
LineObject to_stack(const OrbiConfig& cfg, const ParLine& line);
StackBundle to_stack(const OrbiConfig& cfg, const ParBundle& bundle);

/// A line subsheaf of a common ambient N^{R} (x) pi^*O(d), recorded by its
/// vanishing order at each marked point in the local root coordinate t_i
/// (ord s_i = r) together with the underlying degree offset d. Orders may be
/// negative (poles).
struct OrderVector {
    std::vector<std::int64_t> orders;
    std::int64_t degree_offset = 0;

    bool operator==(const OrderVector&) const = default;
};

/// Image of N^{(x) l} (x) pi^*E_{l/r} in the ambient; per point the order is
/// -l - r * floor(a_i - l/r).
OrderVector dinatural_term(const OrbiConfig& cfg, const ParLine& line, std::int64_t l);

/// Sum of line subsheaves: pointwise minimum order.
OrderVector subsheaf_sum(const std::vector<OrderVector>& terms);

/// Line object whose ambient image is the given subsheaf.
LineObject reassemble(const OrbiConfig& cfg, const OrderVector& sum);

/// Evaluates the coend over the window l in [first, last) as an actual
/// colimit of line subsheaves. The default window is one period {0..r-1}.
LineObject coend_evaluate(const OrbiConfig& cfg, const ParLine& line);
LineObject coend_evaluate(const OrbiConfig& cfg, const ParLine& line, std::int64_t first, std::int64_t last);

/// to_stack(A (x) B) == to_stack(A) (x) to_stack(B).
bool tensor_compat_check(const OrbiConfig& cfg, const ParBundle& a, const ParBundle& b);

/// Existence of a nonzero parabolic morphism A -> B, computed on the stack
/// side and cross-checked against the per-point order condition. Genus 0.
bool hom_exists_par(const OrbiConfig& cfg, const ParLine& a, const ParLine& b);

}  // namespace orbiroot
