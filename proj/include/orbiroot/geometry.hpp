#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbiroot/errors.hpp"
#include "orbiroot/rational.hpp"

namespace orbiroot {

struct RawConfig;

/// A smooth projective curve of genus g with m distinct marked points and a
/// root index r. Line bundles on the curve are tracked by degree only; the
/// reference very ample bundle has degree `polarization_degree`.
class OrbiConfig {
public:
    /// Convenience constructor with labels "P1".."Pm". Throws ConfigError.
    static OrbiConfig make(int genus, int num_points, int root_index, int polarization_degree = 1);

    int genus() const noexcept { return genus_; }
    int num_points() const noexcept { return static_cast<int>(labels_.size()); }
    int root_index() const noexcept { return root_index_; }
    int polarization_degree() const noexcept { return polarization_degree_; }
    const std::vector<std::string>& point_labels() const noexcept { return labels_; }

    bool operator==(const OrbiConfig&) const = default;

private:
    friend OrbiConfig validate_config(const RawConfig& raw);
    OrbiConfig() = default;

    int genus_ = 0;
    int root_index_ = 1;
    int polarization_degree_ = 1;
    std::vector<std::string> labels_;
};

/// Unvalidated configuration as read from a session file. Missing optional
/// fields take defaults during validation.
struct RawConfig {
    std::optional<std::int64_t> genus;
    std::optional<std::int64_t> num_points;
    std::optional<std::int64_t> root_index;
    std::optional<std::vector<std::string>> point_labels;
    std::optional<std::int64_t> polarization_degree;
};

OrbiConfig validate_config(const RawConfig& raw);

/// The symbol l/r indexing the filtration steps.
class WeightIndex {
public:
    WeightIndex(const OrbiConfig& cfg, std::int64_t numerator)
        : numerator_(numerator), denominator_(cfg.root_index()) {}

    std::int64_t numerator() const noexcept { return numerator_; }
    int denominator() const noexcept { return denominator_; }
    Rational value() const { return Rational(numerator_, denominator_); }

private:
    std::int64_t numerator_;
    int denominator_;
};

/// Riemann-Roch on the base curve: chi(O_X(d)) = d + 1 - g.
std::int64_t chi_line_on_base(const OrbiConfig& cfg, std::int64_t d);

/// Throws DomainError unless genus is 0.
void require_genus_zero(const OrbiConfig& cfg, const char* operation);

}  // namespace orbiroot
