#include "orbiroot/correspondence.hpp"

#include <algorithm>

namespace orbiroot {

ParLine to_parabolic(const OrbiConfig& cfg, const LineObject& line) {
    check_line_object(cfg, line);
    const int r = cfg.root_index();
    ParLine out;
    out.degree = line.degree;
    for (int res : line.residues) {
        out.weights.emplace_back(res, r);
    }
    for (std::int64_t l = 1; l <= r; ++l) {
        if (filtration_degree(cfg, out, Rational(l, r)) != pushforward_twisted_degree(cfg, line, l)) {
            throw VerificationError("twisted pushforward disagrees with the parabolic filtration at l = " +
                                    std::to_string(l));
        }
    }
    return out;
}

ParBundle to_parabolic(const OrbiConfig& cfg, const StackBundle& bundle) {
    std::vector<ParLine> lines;
    for (const auto& line : bundle.summands()) {
        lines.push_back(to_parabolic(cfg, line));
    }
    return ParBundle(std::move(lines));
}

LineObject to_stack(const OrbiConfig& cfg, const ParLine& line) {
    check_par_line(cfg, line);
    LineObject out;
    out.degree = line.degree;
    for (const auto& w : line.weights) {
        out.residues.push_back(static_cast<int>(floor_of(w * cfg.root_index())));
    }
    return out;
}

StackBundle to_stack(const OrbiConfig& cfg, const ParBundle& bundle) {
    std::vector<LineObject> lines;
    for (const auto& line : bundle.summands()) {
        lines.push_back(to_stack(cfg, line));
    }
    return StackBundle(std::move(lines));
}

OrderVector dinatural_term(const OrbiConfig& cfg, const ParLine& line, std::int64_t l) {
    const std::int64_t r = cfg.root_index();
    OrderVector term;
    term.degree_offset = line.degree;
    for (const auto& w : line.weights) {
        term.orders.push_back(-l - r * floor_of(w - Rational(l, r)));
    }
    return term;
}

OrderVector subsheaf_sum(const std::vector<OrderVector>& terms) {
    if (terms.empty()) {
        throw DomainError("subsheaf sum over an empty window");
    }
    OrderVector sum = terms.front();
    for (const auto& term : terms) {
        if (term.degree_offset != sum.degree_offset || term.orders.size() != sum.orders.size()) {
            throw VerificationError("dinatural terms live in different ambients");
        }
        for (std::size_t i = 0; i < sum.orders.size(); ++i) {
            sum.orders[i] = std::min(sum.orders[i], term.orders[i]);
        }
    }
    return sum;
}

LineObject reassemble(const OrbiConfig& cfg, const OrderVector& sum) {
    // A subsheaf of order o at P_i is N_i^{-o} relative to the ambient.
    std::vector<std::int64_t> raw;
    raw.reserve(sum.orders.size());
    for (std::int64_t o : sum.orders) {
        raw.push_back(-o);
    }
    return normalize(cfg, sum.degree_offset, raw);
}

LineObject coend_evaluate(const OrbiConfig& cfg, const ParLine& line) {
    return coend_evaluate(cfg, line, 0, cfg.root_index());
}

LineObject coend_evaluate(const OrbiConfig& cfg, const ParLine& line, std::int64_t first, std::int64_t last) {
    check_par_line(cfg, line);
    std::vector<OrderVector> terms;
    for (std::int64_t l = first; l < last; ++l) {
        terms.push_back(dinatural_term(cfg, line, l));
    }
    return reassemble(cfg, subsheaf_sum(terms));
}

bool tensor_compat_check(const OrbiConfig& cfg, const ParBundle& a, const ParBundle& b) {
    return to_stack(cfg, tensor_par(cfg, a, b)) == tensor_stack(cfg, to_stack(cfg, a), to_stack(cfg, b));
}

bool hom_exists_par(const OrbiConfig& cfg, const ParLine& a, const ParLine& b) {
    require_genus_zero(cfg, "hom_exists_par");
    bool via_stack = hom_nonzero(cfg, to_stack(cfg, a), to_stack(cfg, b));
    if (via_stack != hom_exists_par_direct(cfg, a, b)) {
        throw VerificationError("stack-side and direct parabolic Hom existence disagree");
    }
    return via_stack;
}

}  // namespace orbiroot
