#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "orbiroot/parabolic.hpp"
#include "orbiroot/root_stack.hpp"

namespace orbiroot {

inline constexpr double kDefaultTolerance = 1e-9;

/// Twisted sector of the inertia stack: the gerbe over point `point`
/// (0-based) with band element zeta_r^k, 1 <= k < r.
struct Sector {
    int point = 0;
    int k = 1;

    auto operator<=>(const Sector&) const = default;
};

/// The inertia stack: the orbicurve itself plus m * (r - 1) twisted sectors,
/// listed in (point, k) order.
struct InertiaModel {
    int root_index = 1;
    std::vector<Sector> twisted;

    static InertiaModel of(const OrbiConfig& cfg);
};

/// Evaluation of a bundle on each inertia component: (rank, degree) on the
/// untwisted sector and the character trace on every twisted one.
struct SectorValue {
    std::int64_t rank = 0;
    Rational degree;
    std::vector<std::pair<Sector, std::complex<double>>> twisted;
};

/// Trace of zeta_r^k acting on the fibre of F at P_i:
/// sum over summands of exp(2 pi i k res_i / r).
std::complex<double> trace_at(const OrbiConfig& cfg, const StackBundle& bundle, int point, int k);

SectorValue sector_values(const OrbiConfig& cfg, const StackBundle& bundle);

/// Character of the regular representation, sum_{l=1}^{r} zeta^{-lk}.
std::complex<double> regular_char(std::int64_t k, int r);

/// Todd contribution of one orbifold point to the untwisted sector, -(r-1)/(2r).
Rational orbifold_todd_constant(int r);

/// 1 / (r (1 - zeta^{-k})): inverse of lambda_{-1} of the conormal at zeta^k,
/// with the 1/r gerbe normalisation.
std::complex<double> twisted_sector_coefficient(int r, int k);

/// Euler characteristic via Kawasaki/Toen Riemann-Roch on the inertia stack:
///   rank (1-g) + deg F - rank m (r-1)/(2r) + sum_{i,k} coeff(k) trace_at(F,i,k).
/// The sum is evaluated in floating point and reconstructed as the nearest
/// rational with denominator r * rank; a residue above `tol` throws
/// VerificationError.
Rational chi_inertia(const OrbiConfig& cfg, const StackBundle& bundle, double tol = kDefaultTolerance);

struct ChiRoutes {
    Rational parabolic;
    Rational pushforward;
    Rational inertia;

    bool agree() const { return parabolic == pushforward && pushforward == inertia; }
};

/// Parabolic Euler characteristic three ways: the filtration average, the
/// pushforward (1/r) sum_l chi(F (x) N^{-l}), and the inertia formula.
ChiRoutes chi_par_three_way(const OrbiConfig& cfg, const ParBundle& bundle, double tol = kDefaultTolerance);

/// deg_par(E) == deg_stack(G(E)), plus the vanishing of the regular character
/// factor on every twisted sector.
bool deg_theorem_check(const OrbiConfig& cfg, const ParBundle& bundle, double tol = kDefaultTolerance);

}  // namespace orbiroot
