#pragma once

#include <istream>
#include <map>
#include <string>
#include <variant>

#include "json.hpp"

#include "orbiroot/geometry.hpp"
#include "orbiroot/local_model.hpp"
#include "orbiroot/parabolic.hpp"
#include "orbiroot/root_stack.hpp"

namespace orbiroot {

using NamedBundle = std::variant<ParBundle, StackBundle>;

/// A session file: one configuration and a map of named bundles, each either
/// parabolic ({d, weights}) or on the root stack ({d, res}).
struct Session {
    OrbiConfig config = OrbiConfig::make(0, 0, 1);
    std::map<std::string, NamedBundle> bundles;

    const NamedBundle& bundle(const std::string& name) const;
};

Session parse_session(const nlohmann::json& doc);
Session load_session(const std::string& path);

RawConfig parse_raw_config(const nlohmann::json& doc);

/// Weight strings must be "a/b" (or "0") with b dividing r.
Rational parse_weight(const OrbiConfig& cfg, const nlohmann::json& value);

NamedBundle parse_bundle(const OrbiConfig& cfg, const nlohmann::json& doc);

nlohmann::json config_to_json(const OrbiConfig& cfg);
nlohmann::json bundle_to_json(const ParBundle& bundle);
nlohmann::json bundle_to_json(const StackBundle& bundle);
nlohmann::json bundle_to_json(const NamedBundle& bundle);
nlohmann::json session_to_json(const Session& session);

/// Graded-module file: {r, N (optional, default 4r), ambient_degrees, matrix}.
GradedModule parse_module(const nlohmann::json& doc);
GradedModule load_module(const std::string& path);

}  // namespace orbiroot
