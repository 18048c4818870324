#include "orbiroot/sampling.hpp"

#include <limits>

#include "orbiroot/moduli.hpp"

namespace orbiroot {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) {
        return static_cast<std::int64_t>(engine_());
    }
    // Rejection sampling keeps the draw unbiased and independent of the
    // library's distribution implementation.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

OrbiConfig random_config(Sampler& sampler, const SampleRanges& ranges) {
    auto genus = static_cast<int>(sampler.uniform(0, ranges.max_genus));
    auto m = static_cast<int>(sampler.uniform(ranges.min_points, ranges.max_points));
    auto r = static_cast<int>(sampler.uniform(1, ranges.max_root_index));
    return OrbiConfig::make(genus, m, r);
}

LineObject random_line_object(const OrbiConfig& cfg, Sampler& sampler, std::int64_t max_abs_degree) {
    LineObject line;
    line.degree = sampler.uniform(-max_abs_degree, max_abs_degree);
    for (int i = 0; i < cfg.num_points(); ++i) {
        line.residues.push_back(static_cast<int>(sampler.uniform(0, cfg.root_index() - 1)));
    }
    return line;
}

StackBundle random_stack_bundle(const OrbiConfig& cfg, Sampler& sampler, const SampleRanges& ranges) {
    auto rank = sampler.uniform(1, ranges.max_rank);
    std::vector<LineObject> lines;
    for (std::int64_t j = 0; j < rank; ++j) {
        lines.push_back(random_line_object(cfg, sampler, ranges.max_abs_degree));
    }
    return StackBundle(std::move(lines));
}

ParBundle random_par_bundle(const OrbiConfig& cfg, Sampler& sampler, const SampleRanges& ranges) {
    auto rank = sampler.uniform(1, ranges.max_rank);
    std::vector<ParLine> lines;
    for (std::int64_t j = 0; j < rank; ++j) {
        ParLine line;
        line.degree = sampler.uniform(-ranges.max_abs_degree, ranges.max_abs_degree);
        for (int i = 0; i < cfg.num_points(); ++i) {
            line.weights.emplace_back(sampler.uniform(0, cfg.root_index() - 1), cfg.root_index());
        }
        lines.push_back(std::move(line));
    }
    return ParBundle(std::move(lines));
}

StackBundle random_finite_bundle(const OrbiConfig& cfg, Sampler& sampler, int max_rank) {
    const auto pool = enumerate_finite_lines(cfg);
    auto rank = sampler.uniform(1, max_rank);
    std::vector<LineObject> lines;
    for (std::int64_t j = 0; j < rank; ++j) {
        lines.push_back(pool[static_cast<std::size_t>(sampler.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))]);
    }
    return StackBundle(std::move(lines));
}

}  // namespace orbiroot
