#pragma once

#include <cstdint>
#include <random>

#include "orbiroot/parabolic.hpp"
#include "orbiroot/root_stack.hpp"

namespace orbiroot {

/// Seeded generator with a portable bounded draw, so that a given seed
/// produces the same samples with any standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

struct SampleRanges {
    int max_root_index = 6;
    int max_points = 4;
    int min_points = 0;
    int max_genus = 0;
    std::int64_t max_abs_degree = 10;
    int max_rank = 5;
};

OrbiConfig random_config(Sampler& sampler, const SampleRanges& ranges);
LineObject random_line_object(const OrbiConfig& cfg, Sampler& sampler, std::int64_t max_abs_degree);
StackBundle random_stack_bundle(const OrbiConfig& cfg, Sampler& sampler, const SampleRanges& ranges);
ParBundle random_par_bundle(const OrbiConfig& cfg, Sampler& sampler, const SampleRanges& ranges);
/// Uniform draws from the degree-0 line objects. Genus 0 only.
StackBundle random_finite_bundle(const OrbiConfig& cfg, Sampler& sampler, int max_rank);

}  // namespace orbiroot
