#include "orbiroot/inertia_rr.hpp"

#include <cmath>
#include <numbers>

#include "orbiroot/correspondence.hpp"

namespace orbiroot {

namespace {

std::complex<double> root_of_unity(std::int64_t exponent, int r) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(floor_mod(exponent, r)) / r;
    return std::polar(1.0, angle);
}

}  // namespace

InertiaModel InertiaModel::of(const OrbiConfig& cfg) {
    InertiaModel model;
    model.root_index = cfg.root_index();
    for (int i = 0; i < cfg.num_points(); ++i) {
        for (int k = 1; k < cfg.root_index(); ++k) {
            model.twisted.push_back(Sector{i, k});
        }
    }
    return model;
}

std::complex<double> trace_at(const OrbiConfig& cfg, const StackBundle& bundle, int point, int k) {
    if (point < 0 || point >= cfg.num_points()) {
        throw DomainError("point index " + std::to_string(point) + " out of range");
    }
    if (k < 1 || k >= cfg.root_index()) {
        throw DomainError("sector index k = " + std::to_string(k) + " must lie in 1..r-1");
    }
    std::complex<double> trace{0.0, 0.0};
    for (const auto& line : bundle.summands()) {
        trace += root_of_unity(std::int64_t{k} * line.residues[static_cast<std::size_t>(point)], cfg.root_index());
    }
    return trace;
}

SectorValue sector_values(const OrbiConfig& cfg, const StackBundle& bundle) {
    check_stack_bundle(cfg, bundle);
    SectorValue value;
    value.rank = static_cast<std::int64_t>(bundle.rank());
    value.degree = deg_stack(cfg, bundle);
    for (const auto& sector : InertiaModel::of(cfg).twisted) {
        value.twisted.emplace_back(sector, trace_at(cfg, bundle, sector.point, sector.k));
    }
    return value;
}

std::complex<double> regular_char(std::int64_t k, int r) {
    std::complex<double> sum{0.0, 0.0};
    for (int l = 1; l <= r; ++l) {
        sum += root_of_unity(-l * k, r);
    }
    return sum;
}

Rational orbifold_todd_constant(int r) {
    return Rational(-(r - 1), 2 * r);
}

std::complex<double> twisted_sector_coefficient(int r, int k) {
    return 1.0 / (static_cast<double>(r) * (1.0 - root_of_unity(-k, r)));
}

Rational chi_inertia(const OrbiConfig& cfg, const StackBundle& bundle, double tol) {
    if (bundle.empty()) {
        return Rational(0);
    }
    const int r = cfg.root_index();
    SectorValue values = sector_values(cfg, bundle);

    Rational untwisted = Rational(values.rank * (1 - cfg.genus())) + values.degree +
                         Rational(values.rank * cfg.num_points()) * orbifold_todd_constant(r);

    // Sectors are already in (point, k) order, so the summation order is fixed.
    std::complex<double> twisted{0.0, 0.0};
    for (const auto& [sector, trace] : values.twisted) {
        twisted += twisted_sector_coefficient(r, sector.k) * trace;
    }

    double total = to_double(untwisted) + twisted.real();
    if (std::abs(twisted.imag()) >= tol) {
        throw VerificationError("inertia Riemann-Roch left an imaginary residue " + std::to_string(twisted.imag()));
    }
    const std::int64_t denominator = std::int64_t{r} * values.rank;
    const double scaled = total * static_cast<double>(denominator);
    const auto numerator = static_cast<std::int64_t>(std::llround(scaled));
    Rational result(numerator, denominator);
    if (std::abs(total - to_double(result)) >= tol) {
        throw VerificationError("inertia Riemann-Roch value " + std::to_string(total) +
                                " is not within tolerance of a rational with denominator " +
                                std::to_string(denominator));
    }
    return result;
}

ChiRoutes chi_par_three_way(const OrbiConfig& cfg, const ParBundle& bundle, double tol) {
    const int r = cfg.root_index();
    StackBundle stack = to_stack(cfg, bundle);

    ChiRoutes routes;
    routes.parabolic = chi_par(cfg, bundle);

    std::int64_t pushforward_sum = 0;
    Rational inertia_sum(0);
    for (int l = 1; l <= r; ++l) {
        StackBundle twisted = tensor_stack(cfg, stack, StackBundle{tautological_power(cfg, -l)});
        pushforward_sum += chi_stack(cfg, twisted);
        inertia_sum += chi_inertia(cfg, twisted, tol);
    }
    routes.pushforward = Rational(pushforward_sum, r);
    routes.inertia = inertia_sum / r;
    return routes;
}

bool deg_theorem_check(const OrbiConfig& cfg, const ParBundle& bundle, double tol) {
    StackBundle stack = to_stack(cfg, bundle);
    if (deg_par(bundle) != deg_stack(cfg, stack)) {
        return false;
    }
    // On a twisted sector the difference ch(F) - ch(O^rho) is multiplied by
    // the regular character, which vanishes for k != 0 mod r.
    const auto rank = static_cast<double>(stack.rank());
    for (const auto& sector : InertiaModel::of(cfg).twisted) {
        std::complex<double> factor = regular_char(sector.k, cfg.root_index());
        std::complex<double> contribution = factor * (trace_at(cfg, stack, sector.point, sector.k) - rank);
        if (std::abs(factor) >= tol || std::abs(contribution) >= tol * std::max(1.0, 2.0 * rank)) {
            return false;
        }
    }
    return true;
}

}  // namespace orbiroot
