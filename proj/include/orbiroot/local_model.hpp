#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <optional>
#include <string_view>
#include <vector>

#include "orbiroot/geometry.hpp"
#include "orbiroot/rational.hpp"
#include "orbiroot/root_stack.hpp"

namespace orbiroot {

/// The truncated local chart A = Q[t]/(t^N), graded by deg t = 1 mod r.
/// x = t^r generates the degree-0 subring.
struct LocalRing {
    int root_index = 1;
    int precision = 4;

    /// Throws DomainError unless r >= 1 and N is a positive multiple of r.
    static LocalRing make(int root_index, int precision);
    /// Default precision N = 4r.
    static LocalRing with_default_precision(int root_index) { return make(root_index, 4 * root_index); }

    bool operator==(const LocalRing&) const = default;
};

/// Element of A: coefficients of 1, t, ..., t^{N-1}.
class TruncatedPoly {
public:
    explicit TruncatedPoly(int precision) : coeffs_(static_cast<std::size_t>(precision), Rational(0)) {}
    static TruncatedPoly monomial(int precision, const Rational& c, int exponent);

    int precision() const noexcept { return static_cast<int>(coeffs_.size()); }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    Rational& operator[](std::size_t k) { return coeffs_[k]; }

    bool is_zero() const;
    /// t-adic valuation; precision() for the zero element.
    int valuation() const;

    TruncatedPoly operator+(const TruncatedPoly& other) const;
    TruncatedPoly operator-(const TruncatedPoly& other) const;
    TruncatedPoly operator*(const TruncatedPoly& other) const;
    /// Multiplication by t^k, dropping everything at or past t^N.
    TruncatedPoly shifted(int k) const;

    bool operator==(const TruncatedPoly&) const = default;

private:
    std::vector<Rational> coeffs_;
};

/// Parses expressions such as "1 + t^2", "-3/2*t^3", "2t - t^5" or "0".
TruncatedPoly parse_poly(std::string_view text, int precision);
std::string to_string(const TruncatedPoly& p);

/// Degree class mod r of a nonzero homogeneous element; throws DomainError
/// if the element mixes classes or is zero.
int homogeneous_degree(const TruncatedPoly& p, int root_index);

/// Z/r-graded module spanned by n homogeneous columns inside the free module
/// with basis e_1..e_n of degrees `ambient`. Assumed free with the columns
/// as basis.
class GradedModule {
public:
    /// matrix[i][j] is the coefficient of e_i in column j. Throws DomainError
    /// on shape errors, entries of the wrong precision, or non-homogeneous
    /// columns.
    GradedModule(LocalRing ring, std::vector<int> ambient, std::vector<std::vector<TruncatedPoly>> matrix);

    const LocalRing& ring() const noexcept { return ring_; }
    std::size_t size() const noexcept { return ambient_.size(); }
    const std::vector<int>& ambient() const noexcept { return ambient_; }
    const std::vector<std::vector<TruncatedPoly>>& matrix() const noexcept { return matrix_; }
    const TruncatedPoly& entry(std::size_t i, std::size_t j) const { return matrix_[i][j]; }
    /// Degree class of each column generator.
    const std::vector<int>& column_degrees() const noexcept { return column_degrees_; }
    /// Determinant nonzero modulo t^N; computed once.
    bool is_free() const;

private:
    LocalRing ring_;
    std::vector<int> ambient_;
    std::vector<std::vector<TruncatedPoly>> matrix_;
    std::vector<int> column_degrees_;
    mutable std::optional<bool> free_;
};

/// Multiplicity of each shift j in 0..r-1, so that M = (+)_j A[j]^{n_j}.
using ShiftMultiset = std::vector<std::size_t>;

/// (+)_j A[shift_j] presented by the identity matrix.
GradedModule standard_module(const LocalRing& ring, const std::vector<int>& shifts);

/// Columns M * P. P must be homogeneous; the result is re-validated.
GradedModule change_basis(const GradedModule& module, const std::vector<std::vector<TruncatedPoly>>& transform);

/// Determinant of the presentation matrix, exact modulo t^N.
TruncatedPoly determinant(const LocalRing& ring, const std::vector<std::vector<TruncatedPoly>>& matrix);

/// dim_Q (M/tM)_c for every class c, by direct linear algebra on the
/// truncated spans of M and tM.
ShiftMultiset graded_quotient_dimensions(const GradedModule& module);

/// Nakayama decomposition. Rejects singular presentations (determinant zero
/// mod t^N). The graded dimensions of M/tM are computed directly and must
/// match the degrees of the homogeneous lifts (the columns).
ShiftMultiset decompose_shifts(const GradedModule& module);

struct InvariantPart {
    std::size_t rank = 0;
    /// Sorted t-adic valuations of the minimal generators of M_0.
    std::vector<int> valuation_profile;
};

/// Degree-0 part of M as a module over Q[x]/(x^{N/r}).
InvariantPart invariant_part_rank(const GradedModule& module);

/// Whether the cokernel of t^{l'-l}: M_l -> M_{l'} is annihilated by x, hence
/// a free module over Q[x]/(x). Requires l <= l' < l + r.
bool cokernel_free_check(const GradedModule& module, std::int64_t l, std::int64_t l_prime);

/// Local model of a stack bundle at a marked point: each summand contributes
/// the ideal t^{res_i} A, a free module generated in degree res_i.
GradedModule local_model_of(const OrbiConfig& cfg, const StackBundle& bundle, int point, const LocalRing& ring);

}  // namespace orbiroot
