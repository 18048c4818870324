#include "orbiroot/geometry.hpp"

#include <set>

namespace orbiroot {

OrbiConfig OrbiConfig::make(int genus, int num_points, int root_index, int polarization_degree) {
    RawConfig raw;
    raw.genus = genus;
    raw.num_points = num_points;
    raw.root_index = root_index;
    raw.polarization_degree = polarization_degree;
    return validate_config(raw);
}

OrbiConfig validate_config(const RawConfig& raw) {
    OrbiConfig cfg;

    std::int64_t genus = raw.genus.value_or(0);
    if (genus < 0) {
        throw ConfigError("genus", "genus must be >= 0");
    }
    std::int64_t r = raw.root_index.value_or(1);
    if (r < 1) {
        throw ConfigError("root_index", "root_index must be >= 1");
    }
    std::int64_t h = raw.polarization_degree.value_or(1);
    if (h < 1) {
        throw ConfigError("polarization_degree", "polarization_degree must be >= 1");
    }

    std::vector<std::string> labels;
    if (raw.point_labels) {
        labels = *raw.point_labels;
        if (raw.num_points && *raw.num_points != static_cast<std::int64_t>(labels.size())) {
            throw ConfigError("num_points", "num_points does not match the number of point_labels");
        }
    } else {
        std::int64_t m = raw.num_points.value_or(0);
        if (m < 0) {
            throw ConfigError("num_points", "num_points must be >= 0");
        }
        for (std::int64_t i = 1; i <= m; ++i) {
            labels.push_back("P" + std::to_string(i));
        }
    }
    std::set<std::string> seen;
    for (const auto& label : labels) {
        if (!seen.insert(label).second) {
            throw ConfigError("point_labels", "duplicate point label '" + label + "'");
        }
    }

    cfg.genus_ = static_cast<int>(genus);
    cfg.root_index_ = static_cast<int>(r);
    cfg.polarization_degree_ = static_cast<int>(h);
    cfg.labels_ = std::move(labels);
    return cfg;
}

std::int64_t chi_line_on_base(const OrbiConfig& cfg, std::int64_t d) {
    return d + 1 - cfg.genus();
}

void require_genus_zero(const OrbiConfig& cfg, const char* operation) {
    if (cfg.genus() != 0) {
        throw DomainError(std::string(operation) + " is only supported on genus 0 curves (got genus " +
                          std::to_string(cfg.genus()) + ")");
    }
}

}  // namespace orbiroot
