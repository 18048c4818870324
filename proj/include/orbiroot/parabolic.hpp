#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orbiroot/geometry.hpp"
#include "orbiroot/rational.hpp"

namespace orbiroot {

/// Rank-one parabolic bundle: underlying degree plus one weight per marked
/// point. Weights live in [0, 1) and have denominator dividing r.
struct ParLine {
    std::int64_t degree = 0;
    std::vector<Rational> weights;

    bool operator==(const ParLine& other) const {
        return degree == other.degree && weights == other.weights;
    }
    bool operator<(const ParLine& other) const;
};

/// Split parabolic bundle, stored as a sorted multiset of ParLines so that
/// equality is isomorphism.
class ParBundle {
public:
    ParBundle() = default;
    explicit ParBundle(std::vector<ParLine> summands);
    ParBundle(std::initializer_list<ParLine> summands)
        : ParBundle(std::vector<ParLine>(summands)) {}

    const std::vector<ParLine>& summands() const noexcept { return summands_; }
    std::size_t rank() const noexcept { return summands_.size(); }
    bool empty() const noexcept { return summands_.empty(); }

    bool operator==(const ParBundle&) const = default;

private:
    std::vector<ParLine> summands_;
};

/// Seshadri flag data at one point: strictly increasing weights with
/// positive multiplicities.
struct PointFlag {
    std::vector<Rational> weights;
    std::vector<std::size_t> multiplicities;
};

struct FlagData {
    std::vector<PointFlag> points;
};

/// Throws DomainError if the line does not fit the configuration.
void check_par_line(const OrbiConfig& cfg, const ParLine& line);
void check_par_bundle(const OrbiConfig& cfg, const ParBundle& bundle);

/// Degree of the filtration step E_t, i.e. d + sum_i floor(a_i - t).
/// Requires r*t to be an integer.
std::int64_t filtration_degree(const OrbiConfig& cfg, const ParLine& line, const Rational& t);

/// E[i]_t = E_{i+t}; integer parts of the shifted weights move into the degree.
ParLine shift(const OrbiConfig& cfg, const ParLine& line, const WeightIndex& index);
ParBundle shift(const OrbiConfig& cfg, const ParBundle& bundle, const WeightIndex& index);

/// The special structure on O(d): all weights zero.
ParLine special(const OrbiConfig& cfg, std::int64_t d);

Rational deg_par(const ParLine& line);
Rational deg_par(const ParBundle& bundle);

/// Parabolic Euler characteristic (1/r) sum_{l=1}^{r} chi(X, E_{l/r}).
Rational chi_par(const OrbiConfig& cfg, const ParBundle& bundle);

/// Parabolic degree recovered from the Hilbert-polynomial style definition:
/// the (constant) difference chi_par(E(nu)) - chi_par(O^rho(nu)), sampled at
/// nu = 0 and nu = 1. Throws VerificationError if the difference moves.
Rational deg_par_hilbert(const OrbiConfig& cfg, const ParBundle& bundle);

/// Closed form of the convolution product on lines: weight frac(a + b),
/// degree d_A + d_B + sum floor(a + b).
ParLine tensor_par(const OrbiConfig& cfg, const ParLine& a, const ParLine& b);
ParBundle tensor_par(const OrbiConfig& cfg, const ParBundle& a, const ParBundle& b);

/// Brute-force evaluation of the Day convolution coend at index l/r. For
/// each point the maximum over k in {l - periods*r, ..., l + periods*r} of
/// floor(a - k/r) + floor(b - (l-k)/r) is taken.
std::int64_t tensor_par_coend_degree(const OrbiConfig& cfg, const ParLine& a, const ParLine& b,
                                     std::int64_t l, int periods = 1);

/// Internal Hom into the unit object.
ParLine dual_par(const OrbiConfig& cfg, const ParLine& line);
ParBundle dual_par(const OrbiConfig& cfg, const ParBundle& bundle);

FlagData to_flag_data(const OrbiConfig& cfg, const ParBundle& bundle);

/// Existence of a nonzero filtration-preserving map O(d_A) -> O(d_B) on P^1:
/// the map must vanish at every point where the source weight exceeds the
/// target weight. Genus 0 only.
bool hom_exists_par_direct(const OrbiConfig& cfg, const ParLine& a, const ParLine& b);

/// Sub-bundle induced by the j-th underlying summand (0-based), and the
/// complementary quotient.
ParLine induced_sub_par(const ParBundle& bundle, std::size_t j);
ParBundle induced_quot_par(const ParBundle& bundle, std::size_t j);

}  // namespace orbiroot
