#include "orbiroot/root_stack.hpp"

#include <algorithm>

namespace orbiroot {

StackBundle::StackBundle(std::vector<LineObject> summands) : summands_(std::move(summands)) {
    std::sort(summands_.begin(), summands_.end());
}

namespace {

void require_same_shape(const OrbiConfig& cfg, const LineObject& line) {
    if (static_cast<int>(line.residues.size()) != cfg.num_points()) {
        throw DomainError("config mismatch: line object has " + std::to_string(line.residues.size()) +
                          " residues but the configuration has " + std::to_string(cfg.num_points()) +
                          " marked points");
    }
}

}  // namespace

void check_line_object(const OrbiConfig& cfg, const LineObject& line) {
    require_same_shape(cfg, line);
    for (int res : line.residues) {
        if (res < 0 || res >= cfg.root_index()) {
            throw DomainError("residue " + std::to_string(res) + " is outside {0, ..., " +
                              std::to_string(cfg.root_index() - 1) + "}");
        }
    }
}

void check_stack_bundle(const OrbiConfig& cfg, const StackBundle& bundle) {
    for (const auto& line : bundle.summands()) {
        check_line_object(cfg, line);
    }
}

LineObject normalize(const OrbiConfig& cfg, std::int64_t degree, std::span<const std::int64_t> raw_residues) {
    if (static_cast<int>(raw_residues.size()) != cfg.num_points()) {
        throw DomainError("config mismatch: expected " + std::to_string(cfg.num_points()) + " residues, got " +
                          std::to_string(raw_residues.size()));
    }
    const std::int64_t r = cfg.root_index();
    LineObject out;
    out.degree = degree;
    out.residues.reserve(raw_residues.size());
    for (std::int64_t raw : raw_residues) {
        out.degree += floor_div(raw, r);
        out.residues.push_back(static_cast<int>(floor_mod(raw, r)));
    }
    return out;
}

Rational deg_stack(const OrbiConfig& cfg, const LineObject& line) {
    std::int64_t residue_sum = 0;
    for (int res : line.residues) {
        residue_sum += res;
    }
    return Rational(line.degree) + Rational(residue_sum, cfg.root_index());
}

Rational deg_stack(const OrbiConfig& cfg, const StackBundle& bundle) {
    Rational total(0);
    for (const auto& line : bundle.summands()) {
        total += deg_stack(cfg, line);
    }
    return total;
}

LineObject tensor_stack(const OrbiConfig& cfg, const LineObject& a, const LineObject& b) {
    require_same_shape(cfg, a);
    require_same_shape(cfg, b);
    std::vector<std::int64_t> raw(a.residues.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        raw[i] = std::int64_t{a.residues[i]} + b.residues[i];
    }
    return normalize(cfg, a.degree + b.degree, raw);
}

StackBundle tensor_stack(const OrbiConfig& cfg, const StackBundle& a, const StackBundle& b) {
    std::vector<LineObject> lines;
    lines.reserve(a.rank() * b.rank());
    for (const auto& x : a.summands()) {
        for (const auto& y : b.summands()) {
            lines.push_back(tensor_stack(cfg, x, y));
        }
    }
    return StackBundle(std::move(lines));
}

LineObject dual_stack(const OrbiConfig& cfg, const LineObject& line) {
    require_same_shape(cfg, line);
    std::vector<std::int64_t> raw;
    raw.reserve(line.residues.size());
    for (int res : line.residues) {
        raw.push_back(-std::int64_t{res});
    }
    return normalize(cfg, -line.degree, raw);
}

StackBundle dual_stack(const OrbiConfig& cfg, const StackBundle& bundle) {
    std::vector<LineObject> lines;
    for (const auto& line : bundle.summands()) {
        lines.push_back(dual_stack(cfg, line));
    }
    return StackBundle(std::move(lines));
}

LineObject tautological_power(const OrbiConfig& cfg, std::int64_t l) {
    std::vector<std::int64_t> raw(static_cast<std::size_t>(cfg.num_points()), l);
    return normalize(cfg, 0, raw);
}

LineObject unit_line(const OrbiConfig& cfg) {
    return LineObject{0, std::vector<int>(static_cast<std::size_t>(cfg.num_points()), 0)};
}

std::int64_t pushforward_degree(const OrbiConfig& cfg, const LineObject& line) {
    return pushforward_twisted_degree(cfg, line, 0);
}

std::int64_t pushforward_twisted_degree(const OrbiConfig& cfg, const LineObject& line, std::int64_t l) {
    require_same_shape(cfg, line);
    const std::int64_t r = cfg.root_index();
    std::int64_t degree = line.degree;
    for (int res : line.residues) {
        degree += floor_div(res - l, r);
    }
    return degree;
}

std::int64_t chi_stack(const OrbiConfig& cfg, const LineObject& line) {
    return chi_line_on_base(cfg, pushforward_degree(cfg, line));
}

std::int64_t chi_stack(const OrbiConfig& cfg, const StackBundle& bundle) {
    std::int64_t total = 0;
    for (const auto& line : bundle.summands()) {
        total += chi_stack(cfg, line);
    }
    return total;
}

bool hom_nonzero(const OrbiConfig& cfg, const LineObject& source, const LineObject& target) {
    require_genus_zero(cfg, "hom_nonzero");
    return pushforward_degree(cfg, tensor_stack(cfg, target, dual_stack(cfg, source))) >= 0;
}

}  // namespace orbiroot
