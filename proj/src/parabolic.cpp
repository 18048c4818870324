#include "orbiroot/parabolic.hpp"

#include <algorithm>
#include <map>

namespace orbiroot {

bool ParLine::operator<(const ParLine& other) const {
    if (degree != other.degree) {
        return degree < other.degree;
    }
    return std::lexicographical_compare(weights.begin(), weights.end(), other.weights.begin(),
                                        other.weights.end());
}

ParBundle::ParBundle(std::vector<ParLine> summands) : summands_(std::move(summands)) {
    std::sort(summands_.begin(), summands_.end());
}

namespace {

bool is_multiple_of_inverse_r(const OrbiConfig& cfg, const Rational& x) {
    return boost::multiprecision::denominator(Rational(x * cfg.root_index())) == 1;
}

void require_index(const OrbiConfig& cfg, const Rational& t) {
    if (!is_multiple_of_inverse_r(cfg, t)) {
        throw DomainError("filtration index " + to_display_string(t) +
                          " does not have denominator dividing r = " + std::to_string(cfg.root_index()));
    }
}

void require_same_shape(const OrbiConfig& cfg, const ParLine& line) {
    if (static_cast<int>(line.weights.size()) != cfg.num_points()) {
        throw DomainError("config mismatch: parabolic line has " + std::to_string(line.weights.size()) +
                          " weights but the configuration has " + std::to_string(cfg.num_points()) +
                          " marked points");
    }
}

}  // namespace

void check_par_line(const OrbiConfig& cfg, const ParLine& line) {
    require_same_shape(cfg, line);
    for (const auto& w : line.weights) {
        if (w < 0 || w >= 1) {
            throw DomainError("weight " + to_display_string(w) + " is outside [0, 1)");
        }
        if (!is_multiple_of_inverse_r(cfg, w)) {
            throw DomainError("weight " + to_display_string(w) + " does not have denominator dividing r = " +
                              std::to_string(cfg.root_index()));
        }
    }
}

void check_par_bundle(const OrbiConfig& cfg, const ParBundle& bundle) {
    for (const auto& line : bundle.summands()) {
        check_par_line(cfg, line);
    }
}

std::int64_t filtration_degree(const OrbiConfig& cfg, const ParLine& line, const Rational& t) {
    require_index(cfg, t);
    require_same_shape(cfg, line);
    std::int64_t degree = line.degree;
    for (const auto& w : line.weights) {
        degree += floor_of(w - t);
    }
    return degree;
}

ParLine shift(const OrbiConfig& cfg, const ParLine& line, const WeightIndex& index) {
    require_same_shape(cfg, line);
    Rational by = index.value();
    ParLine out;
    out.degree = line.degree;
    out.weights.reserve(line.weights.size());
    for (const auto& w : line.weights) {
        Rational moved = w - by;
        out.degree += floor_of(moved);
        out.weights.push_back(frac_of(moved));
    }
    return out;
}

ParBundle shift(const OrbiConfig& cfg, const ParBundle& bundle, const WeightIndex& index) {
    std::vector<ParLine> lines;
    for (const auto& line : bundle.summands()) {
        lines.push_back(shift(cfg, line, index));
    }
    return ParBundle(std::move(lines));
}

ParLine special(const OrbiConfig& cfg, std::int64_t d) {
    return ParLine{d, std::vector<Rational>(static_cast<std::size_t>(cfg.num_points()), Rational(0))};
}

Rational deg_par(const ParLine& line) {
    Rational total(line.degree);
    for (const auto& w : line.weights) {
        total += w;
    }
    return total;
}

Rational deg_par(const ParBundle& bundle) {
    Rational total(0);
    for (const auto& line : bundle.summands()) {
        total += deg_par(line);
    }
    return total;
}

Rational chi_par(const OrbiConfig& cfg, const ParBundle& bundle) {
    const int r = cfg.root_index();
    Rational total(0);
    for (const auto& line : bundle.summands()) {
        for (int l = 1; l <= r; ++l) {
            total += chi_line_on_base(cfg, filtration_degree(cfg, line, Rational(l, r)));
        }
    }
    return total / r;
}

namespace {

ParBundle twist_by_polarization(const OrbiConfig& cfg, const ParBundle& bundle, std::int64_t nu) {
    std::vector<ParLine> lines;
    for (auto line : bundle.summands()) {
        line.degree += nu * cfg.polarization_degree();
        lines.push_back(std::move(line));
    }
    return ParBundle(std::move(lines));
}

}  // namespace

Rational deg_par_hilbert(const OrbiConfig& cfg, const ParBundle& bundle) {
    ParBundle reference(std::vector<ParLine>(bundle.rank(), special(cfg, 0)));
    Rational at0 = chi_par(cfg, bundle) - chi_par(cfg, reference);
    Rational at1 = chi_par(cfg, twist_by_polarization(cfg, bundle, 1)) -
                   chi_par(cfg, twist_by_polarization(cfg, reference, 1));
    if (at0 != at1) {
        throw VerificationError("parabolic Hilbert difference is not constant: " + to_display_string(at0) +
                                " vs " + to_display_string(at1));
    }
    return at0;
}

ParLine tensor_par(const OrbiConfig& cfg, const ParLine& a, const ParLine& b) {
    require_same_shape(cfg, a);
    require_same_shape(cfg, b);
    ParLine out;
    out.degree = a.degree + b.degree;
    for (std::size_t i = 0; i < a.weights.size(); ++i) {
        Rational sum = a.weights[i] + b.weights[i];
        out.degree += floor_of(sum);
        out.weights.push_back(frac_of(sum));
    }
    return out;
}

ParBundle tensor_par(const OrbiConfig& cfg, const ParBundle& a, const ParBundle& b) {
    std::vector<ParLine> lines;
    lines.reserve(a.rank() * b.rank());
    for (const auto& x : a.summands()) {
        for (const auto& y : b.summands()) {
            lines.push_back(tensor_par(cfg, x, y));
        }
    }
    return ParBundle(std::move(lines));
}

std::int64_t tensor_par_coend_degree(const OrbiConfig& cfg, const ParLine& a, const ParLine& b,
                                     std::int64_t l, int periods) {
    require_same_shape(cfg, a);
    require_same_shape(cfg, b);
    const std::int64_t r = cfg.root_index();
    std::int64_t degree = a.degree + b.degree;
    for (std::size_t i = 0; i < a.weights.size(); ++i) {
        std::int64_t best = 0;
        bool first = true;
        for (std::int64_t k = l - periods * r; k <= l + periods * r; ++k) {
            std::int64_t term = floor_of(a.weights[i] - Rational(k, r)) + floor_of(b.weights[i] - Rational(l - k, r));
            if (first || term > best) {
                best = term;
                first = false;
            }
        }
        degree += best;
    }
    return degree;
}

ParLine dual_par(const OrbiConfig& cfg, const ParLine& line) {
    require_same_shape(cfg, line);
    ParLine out;
    out.degree = -line.degree;
    for (const auto& w : line.weights) {
        if (w > 0) {
            out.degree -= 1;
        }
        out.weights.push_back(frac_of(-w));
    }
    return out;
}

ParBundle dual_par(const OrbiConfig& cfg, const ParBundle& bundle) {
    std::vector<ParLine> lines;
    for (const auto& line : bundle.summands()) {
        lines.push_back(dual_par(cfg, line));
    }
    return ParBundle(std::move(lines));
}

FlagData to_flag_data(const OrbiConfig& cfg, const ParBundle& bundle) {
    check_par_bundle(cfg, bundle);
    FlagData data;
    for (int i = 0; i < cfg.num_points(); ++i) {
        std::map<Rational, std::size_t> counts;
        for (const auto& line : bundle.summands()) {
            ++counts[line.weights[static_cast<std::size_t>(i)]];
        }
        PointFlag flag;
        for (const auto& [w, n] : counts) {
            flag.weights.push_back(w);
            flag.multiplicities.push_back(n);
        }
        data.points.push_back(std::move(flag));
    }
    return data;
}

bool hom_exists_par_direct(const OrbiConfig& cfg, const ParLine& a, const ParLine& b) {
    require_genus_zero(cfg, "hom_exists_par");
    require_same_shape(cfg, a);
    require_same_shape(cfg, b);
    std::int64_t forced_zeros = 0;
    for (std::size_t i = 0; i < a.weights.size(); ++i) {
        if (a.weights[i] > b.weights[i]) {
            ++forced_zeros;
        }
    }
    return b.degree - a.degree - forced_zeros >= 0;
}

ParLine induced_sub_par(const ParBundle& bundle, std::size_t j) {
    if (j >= bundle.rank()) {
        throw DomainError("summand index " + std::to_string(j) + " out of range for rank " +
                          std::to_string(bundle.rank()));
    }
    return bundle.summands()[j];
}

ParBundle induced_quot_par(const ParBundle& bundle, std::size_t j) {
    if (j >= bundle.rank()) {
        throw DomainError("summand index " + std::to_string(j) + " out of range for rank " +
                          std::to_string(bundle.rank()));
    }
    std::vector<ParLine> rest;
    for (std::size_t k = 0; k < bundle.rank(); ++k) {
        if (k != j) {
            rest.push_back(bundle.summands()[k]);
        }
    }
    return ParBundle(std::move(rest));
}

}  // namespace orbiroot
