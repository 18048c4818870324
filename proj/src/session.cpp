#include "orbiroot/session.hpp"

#include <fstream>

namespace orbiroot {

using nlohmann::json;

namespace {

std::int64_t get_integer(const json& doc, const char* field) {
    const auto& v = doc.at(field);
    if (!v.is_number_integer()) {
        throw ConfigError(field, "expected an integer");
    }
    return v.get<std::int64_t>();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError("'" + path + "' is not valid JSON: " + e.what());
    }
}

LineObject parse_line_object(const OrbiConfig& cfg, const json& rec) {
    LineObject line;
    if (!rec.at("d").is_number_integer()) {
        throw DomainError("field 'd' must be an integer");
    }
    line.degree = rec.at("d").get<std::int64_t>();
    const auto& res = rec.at("res");
    if (!res.is_array()) {
        throw DomainError("field 'res' must be a list of integers");
    }
    for (const auto& v : res) {
        if (!v.is_number_integer()) {
            throw DomainError("residues must be integers");
        }
        line.residues.push_back(v.get<int>());
    }
    check_line_object(cfg, line);
    return line;
}

ParLine parse_par_line(const OrbiConfig& cfg, const json& rec) {
    ParLine line;
    if (!rec.at("d").is_number_integer()) {
        throw DomainError("field 'd' must be an integer");
    }
    line.degree = rec.at("d").get<std::int64_t>();
    const auto& weights = rec.at("weights");
    if (!weights.is_array()) {
        throw DomainError("field 'weights' must be a list of \"a/r\" strings");
    }
    for (const auto& w : weights) {
        line.weights.push_back(parse_weight(cfg, w));
    }
    check_par_line(cfg, line);
    return line;
}

}  // namespace

const NamedBundle& Session::bundle(const std::string& name) const {
    auto it = bundles.find(name);
    if (it == bundles.end()) {
        throw DomainError("no bundle named '" + name + "' in the session");
    }
    return it->second;
}

RawConfig parse_raw_config(const json& doc) {
    if (!doc.is_object()) {
        throw ConfigError("config", "expected an object");
    }
    RawConfig raw;
    if (doc.contains("genus")) raw.genus = get_integer(doc, "genus");
    if (doc.contains("num_points")) raw.num_points = get_integer(doc, "num_points");
    if (doc.contains("root_index")) raw.root_index = get_integer(doc, "root_index");
    if (doc.contains("polarization_degree")) raw.polarization_degree = get_integer(doc, "polarization_degree");
    if (doc.contains("point_labels")) {
        const auto& labels = doc.at("point_labels");
        if (!labels.is_array()) {
            throw ConfigError("point_labels", "expected a list of strings");
        }
        std::vector<std::string> out;
        for (const auto& label : labels) {
            if (!label.is_string()) {
                throw ConfigError("point_labels", "expected a list of strings");
            }
            out.push_back(label.get<std::string>());
        }
        raw.point_labels = std::move(out);
    }
    return raw;
}

Rational parse_weight(const OrbiConfig& cfg, const json& value) {
    if (!value.is_string()) {
        throw DomainError("weights must be given as strings \"a/r\"");
    }
    const auto text = value.get<std::string>();
    if (text.find_first_of(".eE") != std::string::npos) {
        throw DomainError("decimal weight '" + text + "' rejected; write weights as \"a/r\"");
    }
    Rational w;
    try {
        w = parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw DomainError(e.what());
    }
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::int64_t written = std::stoll(text.substr(slash + 1));
        if (written <= 0 || cfg.root_index() % written != 0) {
            throw DomainError("weight '" + text + "' has a denominator not dividing r = " +
                              std::to_string(cfg.root_index()));
        }
    }
    return w;
}

NamedBundle parse_bundle(const OrbiConfig& cfg, const json& doc) {
    json records = doc.is_array() ? doc : json::array({doc});
    if (records.empty()) {
        throw DomainError("a bundle needs at least one summand");
    }
    bool parabolic = false;
    bool stack = false;
    for (const auto& rec : records) {
        if (!rec.is_object()) {
            throw DomainError("bundle summands must be objects");
        }
        parabolic = parabolic || rec.contains("weights");
        stack = stack || rec.contains("res");
        if (rec.contains("weights") == rec.contains("res")) {
            throw DomainError("each summand needs exactly one of 'weights' or 'res'");
        }
    }
    if (parabolic && stack) {
        throw DomainError("a bundle cannot mix parabolic and root-stack summands");
    }
    try {
        if (parabolic) {
            std::vector<ParLine> lines;
            for (const auto& rec : records) lines.push_back(parse_par_line(cfg, rec));
            return ParBundle(std::move(lines));
        }
        std::vector<LineObject> lines;
        for (const auto& rec : records) lines.push_back(parse_line_object(cfg, rec));
        return StackBundle(std::move(lines));
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed bundle record: ") + e.what());
    }
}

Session parse_session(const json& doc) {
    if (!doc.is_object() || !doc.contains("config")) {
        throw DomainError("session file needs a 'config' object");
    }
    Session session;
    session.config = validate_config(parse_raw_config(doc.at("config")));
    if (doc.contains("bundles")) {
        const auto& bundles = doc.at("bundles");
        if (!bundles.is_object()) {
            throw DomainError("'bundles' must map names to bundle records");
        }
        for (const auto& [name, value] : bundles.items()) {
            try {
                session.bundles.emplace(name, parse_bundle(session.config, value));
            } catch (const DomainError& e) {
                throw DomainError("bundle '" + name + "': " + e.what());
            }
        }
    }
    return session;
}

Session load_session(const std::string& path) {
    return parse_session(load_json_file(path));
}

json config_to_json(const OrbiConfig& cfg) {
    return json{{"genus", cfg.genus()},
                {"num_points", cfg.num_points()},
                {"root_index", cfg.root_index()},
                {"point_labels", cfg.point_labels()},
                {"polarization_degree", cfg.polarization_degree()}};
}

json bundle_to_json(const ParBundle& bundle) {
    json out = json::array();
    for (const auto& line : bundle.summands()) {
        json weights = json::array();
        for (const auto& w : line.weights) weights.push_back(to_fraction_string(w));
        out.push_back(json{{"d", line.degree}, {"weights", weights}});
    }
    return out;
}

json bundle_to_json(const StackBundle& bundle) {
    json out = json::array();
    for (const auto& line : bundle.summands()) {
        out.push_back(json{{"d", line.degree}, {"res", line.residues}});
    }
    return out;
}

json bundle_to_json(const NamedBundle& bundle) {
    return std::visit([](const auto& b) { return bundle_to_json(b); }, bundle);
}

json session_to_json(const Session& session) {
    json bundles = json::object();
    for (const auto& [name, bundle] : session.bundles) {
        bundles[name] = bundle_to_json(bundle);
    }
    return json{{"config", config_to_json(session.config)}, {"bundles", bundles}};
}

GradedModule parse_module(const json& doc) {
    try {
        const int r = doc.at("r").get<int>();
        const int N = doc.contains("N") ? doc.at("N").get<int>() : 4 * r;
        LocalRing ring = LocalRing::make(r, N);
        std::vector<int> ambient = doc.at("ambient_degrees").get<std::vector<int>>();
        std::vector<std::vector<TruncatedPoly>> matrix;
        for (const auto& row : doc.at("matrix")) {
            std::vector<TruncatedPoly> out;
            for (const auto& entry : row) {
                if (entry.is_number_integer()) {
                    out.push_back(TruncatedPoly::monomial(N, Rational(entry.get<std::int64_t>()), 0));
                } else {
                    out.push_back(parse_poly(entry.get<std::string>(), N));
                }
            }
            matrix.push_back(std::move(out));
        }
        return GradedModule(ring, std::move(ambient), std::move(matrix));
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed module file: ") + e.what());
    }
}

GradedModule load_module(const std::string& path) {
    return parse_module(load_json_file(path));
}

}  // namespace orbiroot
