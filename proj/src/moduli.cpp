#include "orbiroot/moduli.hpp"

#include <algorithm>
#include <map>

#include "linalg.hpp"

namespace orbiroot {

namespace {

void require_nonempty(const StackBundle& bundle, const char* operation) {
    if (bundle.empty()) {
        throw DomainError(std::string(operation) + " needs a bundle of rank >= 1");
    }
}

using Counts = std::map<LineObject, BigInt>;

Counts multiply(const OrbiConfig& cfg, const Counts& lhs, const StackBundle& bundle) {
    Counts out;
    for (const auto& [line, n] : lhs) {
        for (const auto& summand : bundle.summands()) {
            out[tensor_stack(cfg, line, summand)] += n;
        }
    }
    return out;
}

LineMultiset to_multiset(const Counts& counts) {
    LineMultiset out;
    for (const auto& [line, n] : counts) {
        if (n != 0) {
            out.emplace_back(line, n);
        }
    }
    return out;
}

}  // namespace

Rational slope(const OrbiConfig& cfg, const StackBundle& bundle) {
    require_nonempty(bundle, "slope");
    return deg_stack(cfg, bundle) / static_cast<std::int64_t>(bundle.rank());
}

bool is_semistable(const OrbiConfig& cfg, const StackBundle& bundle) {
    require_genus_zero(cfg, "is_semistable");
    require_nonempty(bundle, "is_semistable");
    const Rational first = deg_stack(cfg, bundle.summands().front());
    return std::all_of(bundle.summands().begin(), bundle.summands().end(),
                       [&](const LineObject& line) { return deg_stack(cfg, line) == first; });
}

Rational max_line_sub_degree(const OrbiConfig& cfg, const StackBundle& bundle) {
    require_genus_zero(cfg, "max_line_sub_degree");
    require_nonempty(bundle, "max_line_sub_degree");
    Rational best = deg_stack(cfg, bundle.summands().front());
    for (const auto& line : bundle.summands()) {
        best = std::max(best, deg_stack(cfg, line));
    }
    return best;
}

LineObject saturation(const OrbiConfig& cfg, const LineObject& sub, const StackBundle& bundle, std::size_t j) {
    require_genus_zero(cfg, "saturation");
    if (j >= bundle.rank()) {
        throw DomainError("summand index " + std::to_string(j) + " out of range for rank " +
                          std::to_string(bundle.rank()));
    }
    const LineObject& target = bundle.summands()[j];
    if (!hom_nonzero(cfg, sub, target)) {
        throw DomainError("no nonzero map from the line subsheaf into summand " + std::to_string(j));
    }
    if (deg_stack(cfg, sub) > deg_stack(cfg, target)) {
        throw VerificationError("saturation lowered the degree of a line subsheaf");
    }
    return target;
}

bool is_finite(const OrbiConfig& cfg, const StackBundle& bundle) {
    require_genus_zero(cfg, "is_finite");
    return std::all_of(bundle.summands().begin(), bundle.summands().end(),
                       [&](const LineObject& line) { return deg_stack(cfg, line) == 0; });
}

LineMultiset evaluate_polynomial(const OrbiConfig& cfg, const StackBundle& bundle,
                                 const std::vector<BigInt>& coefficients) {
    Counts total;
    Counts power{{unit_line(cfg), BigInt(1)}};
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        if (k > 0) {
            power = multiply(cfg, power, bundle);
        }
        if (coefficients[k] < 0) {
            throw DomainError("polynomial coefficients must be nonnegative");
        }
        if (coefficients[k] == 0) {
            continue;
        }
        for (const auto& [line, n] : power) {
            total[line] += coefficients[k] * n;
        }
    }
    return to_multiset(total);
}

std::optional<WitnessRelation> witness_polynomials(const OrbiConfig& cfg, const StackBundle& bundle,
                                                   int degree_bound) {
    require_genus_zero(cfg, "witness_polynomials");
    if (degree_bound < 1) {
        throw DomainError("degree bound must be >= 1");
    }
    check_stack_bundle(cfg, bundle);

    std::vector<Counts> powers{Counts{{unit_line(cfg), BigInt(1)}}};
    for (int k = 1; k <= degree_bound; ++k) {
        powers.push_back(multiply(cfg, powers.back(), bundle));
    }

    // Coordinates: every line object occurring in some power.
    std::map<LineObject, std::size_t> index;
    for (const auto& power : powers) {
        for (const auto& entry : power) {
            index.emplace(entry.first, 0);
        }
    }
    std::size_t next = 0;
    for (auto& entry : index) {
        entry.second = next++;
    }

    detail::IncrementalSpan span(index.size());
    for (int n = 0; n <= degree_bound; ++n) {
        std::vector<Rational> v(index.size(), Rational(0));
        for (const auto& [line, count] : powers[static_cast<std::size_t>(n)]) {
            v[index.at(line)] = Rational(count);
        }
        auto dependency = span.insert(std::move(v));
        if (!dependency) {
            continue;
        }
        // F^n = sum_k c_k F^k with k < n: the powers before n were all
        // independent, so c indexes them directly. Clear denominators.
        BigInt common = 1;
        for (const auto& c : *dependency) {
            common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(c));
        }
        WitnessRelation relation;
        relation.p.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
        relation.q.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
        relation.p[static_cast<std::size_t>(n)] = common;
        for (std::size_t k = 0; k < dependency->size(); ++k) {
            Rational scaled = (*dependency)[k] * common;
            BigInt c = boost::multiprecision::numerator(scaled);
            if (c > 0) {
                relation.q[k] = c;
            } else if (c < 0) {
                relation.p[k] = -c;
            }
        }
        while (relation.q.size() > 1 && relation.q.back() == 0) {
            relation.q.pop_back();
        }
        relation.p_of_f = evaluate_polynomial(cfg, bundle, relation.p);
        relation.q_of_f = evaluate_polynomial(cfg, bundle, relation.q);
        if (relation.p == relation.q || relation.p_of_f != relation.q_of_f) {
            throw VerificationError("witness relation failed direct evaluation");
        }
        return relation;
    }
    return std::nullopt;
}

std::vector<LineObject> enumerate_finite_lines(const OrbiConfig& cfg) {
    require_genus_zero(cfg, "enumerate_finite_lines");
    const int r = cfg.root_index();
    const int m = cfg.num_points();
    std::vector<LineObject> out;
    std::vector<int> residues(static_cast<std::size_t>(m), 0);
    // Odometer over {0..r-1}^m; keep residue patterns whose sum is a multiple of r.
    while (true) {
        std::int64_t sum = 0;
        for (int res : residues) {
            sum += res;
        }
        if (sum % r == 0) {
            out.push_back(LineObject{-sum / r, residues});
        }
        int i = m - 1;
        while (i >= 0 && residues[static_cast<std::size_t>(i)] == r - 1) {
            residues[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) {
            break;
        }
        ++residues[static_cast<std::size_t>(i)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

StructureReport verify_structure_theorem(const OrbiConfig& cfg) {
    require_genus_zero(cfg, "verify_structure_theorem");
    if (cfg.num_points() < 1) {
        throw DomainError("the structure theorem needs at least one marked point");
    }
    const auto lines = enumerate_finite_lines(cfg);
    StructureReport report;
    report.count = lines.size();
    report.min_degree = lines.front().degree;
    report.max_degree = lines.front().degree;
    for (const auto& line : lines) {
        report.min_degree = std::min(report.min_degree, line.degree);
        report.max_degree = std::max(report.max_degree, line.degree);
        if (!(-cfg.num_points() < line.degree && line.degree <= 0)) {
            report.bounds_hold = false;
        }
        StackBundle single{line};
        if (!is_semistable(cfg, single) || deg_stack(cfg, single) != 0) {
            report.all_semistable_deg0 = false;
        }
    }
    if (!report.bounds_hold) {
        throw VerificationError("finite line object violates -m < d <= 0");
    }
    return report;
}

}  // namespace orbiroot
