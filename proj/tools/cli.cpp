#include "orbiroot/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "orbiroot/correspondence.hpp"
#include "orbiroot/inertia_rr.hpp"
#include "orbiroot/moduli.hpp"
#include "orbiroot/session.hpp"
#include "orbiroot/verify.hpp"

namespace orbiroot {

using nlohmann::json;

namespace {

struct Options {
    std::string config_path;
    bool emit_json = false;
    std::optional<double> tol;

    std::string name;
    std::string other;
    std::string method = "all";
    std::string direction;
    int bound = 6;
    std::string module_path;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
};

double resolve_tolerance(const Options& opt) {
    if (opt.tol) {
        return *opt.tol;
    }
    if (const char* env = std::getenv("ORBIROOT_TOL")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            throw DomainError(std::string("ORBIROOT_TOL is not a number: '") + env + "'");
        }
    }
    return kDefaultTolerance;
}

Session require_session(const Options& opt) {
    if (opt.config_path.empty()) {
        throw DomainError("this command needs --config <session file>");
    }
    return load_session(opt.config_path);
}

StackBundle as_stack(const OrbiConfig& cfg, const NamedBundle& bundle) {
    if (const auto* par = std::get_if<ParBundle>(&bundle)) {
        return to_stack(cfg, *par);
    }
    return std::get<StackBundle>(bundle);
}

ParBundle as_parabolic(const OrbiConfig& cfg, const NamedBundle& bundle) {
    if (const auto* stack = std::get_if<StackBundle>(&bundle)) {
        return to_parabolic(cfg, *stack);
    }
    return std::get<ParBundle>(bundle);
}

std::string display(const NamedBundle& bundle);

std::string display_line(const LineObject& line) {
    std::ostringstream out;
    out << "(" << line.degree << ", [";
    for (std::size_t i = 0; i < line.residues.size(); ++i) {
        out << (i ? "," : "") << line.residues[i];
    }
    out << "])";
    return out.str();
}

std::string display_line(const ParLine& line) {
    std::ostringstream out;
    out << "(" << line.degree << ", (";
    for (std::size_t i = 0; i < line.weights.size(); ++i) {
        out << (i ? "," : "") << to_display_string(line.weights[i]);
    }
    out << "))";
    return out.str();
}

std::string display(const NamedBundle& bundle) {
    return std::visit([](const auto& b) {
        std::string s;
        for (const auto& line : b.summands()) {
            s += (s.empty() ? "" : " + ") + display_line(line);
        }
        return s.empty() ? std::string("0") : s;
    }, bundle);
}

std::string polynomial_string(const std::vector<BigInt>& coeffs) {
    std::string s;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (coeffs[k] == 0) continue;
        std::string term;
        if (k == 0) {
            term = coeffs[k].str();
        } else {
            term = (coeffs[k] == 1 ? "" : coeffs[k].str() + "*") + "X" + (k > 1 ? "^" + std::to_string(k) : "");
        }
        s += (s.empty() ? "" : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

json coefficients_json(const std::vector<BigInt>& coeffs) {
    json out = json::array();
    for (const auto& c : coeffs) out.push_back(c.str());
    return out;
}

json multiset_json(const LineMultiset& multiset) {
    json out = json::array();
    for (const auto& [line, n] : multiset) {
        out.push_back(json{{"d", line.degree}, {"res", line.residues}, {"multiplicity", n.str()}});
    }
    return out;
}

/// Envelope shared by every JSON answer; it is itself a valid session file.
json envelope(const std::string& command, const Session& session, const std::vector<std::string>& names) {
    json bundles = json::object();
    for (const auto& name : names) {
        bundles[name] = bundle_to_json(session.bundle(name));
    }
    return json{{"command", command}, {"config", config_to_json(session.config)}, {"bundles", bundles}};
}

class Printer {
public:
    Printer(std::ostream& out, bool emit_json) : out_(out), json_(emit_json) {}

    void row(const std::string& key, const std::string& value) {
        if (!json_) out_ << std::left << std::setw(22) << key << value << "\n";
    }
    void text(const std::string& line) {
        if (!json_) out_ << line << "\n";
    }
    void finish(const json& doc) {
        if (json_) out_ << doc.dump(2) << "\n";
    }

private:
    std::ostream& out_;
    bool json_;
};

int cmd_degree(const Options& opt, std::ostream& out) {
    Session session = require_session(opt);
    const auto& cfg = session.config;
    const auto& bundle = session.bundle(opt.name);
    ParBundle par = as_parabolic(cfg, bundle);
    StackBundle stack = as_stack(cfg, bundle);
    Rational dpar = deg_par(par);
    Rational dstack = deg_stack(cfg, stack);
    Rational hilbert = deg_par_hilbert(cfg, par);

    Printer p(out, opt.emit_json);
    p.row("deg_par", to_display_string(dpar));
    p.row("deg_stack", to_display_string(dstack));
    p.row("deg_par_hilbert", to_display_string(hilbert));
    json doc = envelope("degree", session, {opt.name});
    doc["result"] = {{"deg_par", to_fraction_string(dpar)},
                     {"deg_stack", to_fraction_string(dstack)},
                     {"deg_par_hilbert", to_fraction_string(hilbert)}};
    p.finish(doc);
    return (dpar == dstack && dstack == hilbert) ? kExitOk : kExitVerificationFailure;
}

int cmd_chi(const Options& opt, std::ostream& out) {
    static const std::vector<std::string> methods{"parabolic", "pushforward", "inertia", "all"};
    if (std::find(methods.begin(), methods.end(), opt.method) == methods.end()) {
        throw DomainError("unknown --method '" + opt.method + "'");
    }
    Session session = require_session(opt);
    const auto& cfg = session.config;
    ParBundle par = as_parabolic(cfg, session.bundle(opt.name));
    ChiRoutes routes = chi_par_three_way(cfg, par, resolve_tolerance(opt));

    Printer p(out, opt.emit_json);
    json result = json::object();
    auto emit = [&](const std::string& key, const Rational& value) {
        if (opt.method == key || opt.method == "all") {
            p.row(key, to_display_string(value));
            result[key] = to_fraction_string(value);
        }
    };
    emit("parabolic", routes.parabolic);
    emit("pushforward", routes.pushforward);
    emit("inertia", routes.inertia);
    json doc = envelope("chi", session, {opt.name});
    doc["result"] = result;
    p.finish(doc);
    return routes.agree() ? kExitOk : kExitVerificationFailure;
}

int cmd_tensor(const Options& opt, std::ostream& out) {
    Session session = require_session(opt);
    const auto& cfg = session.config;
    const auto& a = session.bundle(opt.name);
    const auto& b = session.bundle(opt.other);
    if (a.index() != b.index()) {
        throw DomainError("tensor needs two bundles of the same kind (both parabolic or both on the root stack)");
    }
    NamedBundle product;
    int status = kExitOk;
    if (const auto* pa = std::get_if<ParBundle>(&a)) {
        const auto& pb = std::get<ParBundle>(b);
        product = tensor_par(cfg, *pa, pb);
        if (!tensor_compat_check(cfg, *pa, pb)) status = kExitVerificationFailure;
    } else {
        product = tensor_stack(cfg, std::get<StackBundle>(a), std::get<StackBundle>(b));
    }
    Printer p(out, opt.emit_json);
    p.row("tensor", display(product));
    json doc = envelope("tensor", session, {opt.name, opt.other});
    doc["result"] = {{"bundle", bundle_to_json(product)}};
    p.finish(doc);
    return status;
}

int cmd_correspond(const Options& opt, std::ostream& out) {
    Session session = require_session(opt);
    const auto& cfg = session.config;
    const auto& bundle = session.bundle(opt.name);
    Printer p(out, opt.emit_json);
    json doc = envelope("correspond", session, {opt.name});
    doc["direction"] = opt.direction;
    int status = kExitOk;
    if (opt.direction == "f") {
        const auto* stack = std::get_if<StackBundle>(&bundle);
        if (!stack) throw DomainError("correspond f expects a root-stack bundle ({d, res})");
        ParBundle par = to_parabolic(cfg, *stack);
        p.row("parabolic", display(par));
        doc["result"] = {{"bundle", bundle_to_json(par)}};
    } else if (opt.direction == "g") {
        const auto* par = std::get_if<ParBundle>(&bundle);
        if (!par) throw DomainError("correspond g expects a parabolic bundle ({d, weights})");
        StackBundle stack = to_stack(cfg, *par);
        p.row("stack", display(stack));
        doc["result"] = {{"bundle", bundle_to_json(stack)}};
    } else if (opt.direction == "roundtrip") {
        NamedBundle back;
        NamedBundle image;
        if (const auto* par = std::get_if<ParBundle>(&bundle)) {
            StackBundle stack = to_stack(cfg, *par);
            image = stack;
            back = to_parabolic(cfg, stack);
        } else {
            ParBundle par2 = to_parabolic(cfg, std::get<StackBundle>(bundle));
            image = par2;
            back = to_stack(cfg, par2);
        }
        bool identity = back == bundle;
        p.row("image", display(image));
        p.row("round trip", display(back));
        p.row("identity", identity ? "true" : "false");
        doc["result"] = {{"image", bundle_to_json(image)}, {"bundle", bundle_to_json(back)}, {"identity", identity}};
        if (!identity) status = kExitVerificationFailure;
    } else {
        throw DomainError("correspond direction must be f, g or roundtrip");
    }
    p.finish(doc);
    return status;
}

int cmd_semistable(const Options& opt, std::ostream& out) {
    Session session = require_session(opt);
    const auto& cfg = session.config;
    StackBundle stack = as_stack(cfg, session.bundle(opt.name));
    bool semistable = is_semistable(cfg, stack);
    Rational mu = slope(cfg, stack);
    Rational top = max_line_sub_degree(cfg, stack);
    Printer p(out, opt.emit_json);
    p.row("slope", to_display_string(mu));
    p.row("max_line_sub_degree", to_display_string(top));
    p.row("semistable", semistable ? "true" : "false");
    json doc = envelope("semistable", session, {opt.name});
    doc["result"] = {{"slope", to_fraction_string(mu)},
                     {"max_line_sub_degree", to_fraction_string(top)},
                     {"semistable", semistable}};
    p.finish(doc);
    return kExitOk;
}

int cmd_check_finite(const Options& opt, std::ostream& out) {
    Session session = require_session(opt);
    const auto& cfg = session.config;
    StackBundle stack = as_stack(cfg, session.bundle(opt.name));
    bool finite = is_finite(cfg, stack);
    Printer p(out, opt.emit_json);
    p.row("degree", to_display_string(deg_stack(cfg, stack)));
    p.row("finite", finite ? "true" : "false");
    json doc = envelope("check-finite", session, {opt.name});
    doc["result"] = {{"degree", to_fraction_string(deg_stack(cfg, stack))}, {"finite", finite}};
    p.finish(doc);
    int status = kExitOk;
    if (finite && !(is_semistable(cfg, stack) && deg_stack(cfg, stack) == 0)) {
        status = kExitVerificationFailure;
    }
    return status;
}

int cmd_witness(const Options& opt, std::ostream& out) {
    Session session = require_session(opt);
    const auto& cfg = session.config;
    StackBundle stack = as_stack(cfg, session.bundle(opt.name));
    auto relation = witness_polynomials(cfg, stack, opt.bound);
    Printer p(out, opt.emit_json);
    json doc = envelope("witness", session, {opt.name});
    doc["bound"] = opt.bound;
    if (relation) {
        p.row("P", polynomial_string(relation->p));
        p.row("Q", polynomial_string(relation->q));
        p.row("P(F) = Q(F)", std::to_string(relation->p_of_f.size()) + " isomorphism classes");
        doc["result"] = {{"found", true},
                         {"P", coefficients_json(relation->p)},
                         {"Q", coefficients_json(relation->q)},
                         {"evaluation", multiset_json(relation->p_of_f)}};
    } else {
        p.text("no relation P(F) = Q(F) with degree <= " + std::to_string(opt.bound));
        doc["result"] = {{"found", false}};
    }
    p.finish(doc);
    return kExitOk;
}

int cmd_classify_finite(const Options& opt, std::ostream& out) {
    Session session = require_session(opt);
    const auto& cfg = session.config;
    auto lines = enumerate_finite_lines(cfg);
    StructureReport report = verify_structure_theorem(cfg);
    Printer p(out, opt.emit_json);
    json rows = json::array();
    for (const auto& line : lines) {
        p.text(display_line(line));
        rows.push_back(json{{"d", line.degree}, {"res", line.residues}});
    }
    p.row("count", std::to_string(report.count));
    p.row("degree range", std::to_string(report.min_degree) + " .. " + std::to_string(report.max_degree));
    p.row("-m < d <= 0", report.bounds_hold ? "holds" : "VIOLATED");
    json doc = envelope("classify-finite", session, {});
    doc["result"] = {{"lines", rows},
                     {"count", report.count},
                     {"min_degree", report.min_degree},
                     {"max_degree", report.max_degree},
                     {"bounds_hold", report.bounds_hold},
                     {"semistable_degree_zero", report.all_semistable_deg0}};
    p.finish(doc);
    return report.bounds_hold && report.all_semistable_deg0 ? kExitOk : kExitVerificationFailure;
}

int cmd_local_decompose(const Options& opt, std::ostream& out) {
    GradedModule module = load_module(opt.module_path);
    ShiftMultiset shifts = decompose_shifts(module);
    InvariantPart invariant = invariant_part_rank(module);
    Printer p(out, opt.emit_json);
    std::string summary;
    json shifts_json = json::object();
    for (std::size_t j = 0; j < shifts.size(); ++j) {
        if (shifts[j] == 0) continue;
        summary += (summary.empty() ? "" : ", ") + std::to_string(j) + ":" + std::to_string(shifts[j]);
        shifts_json[std::to_string(j)] = shifts[j];
    }
    p.row("shifts", "{" + summary + "}");
    p.row("invariant rank", std::to_string(invariant.rank));
    json matrix = json::array();
    for (const auto& row : module.matrix()) {
        json r = json::array();
        for (const auto& entry : row) r.push_back(to_string(entry));
        matrix.push_back(r);
    }
    json doc{{"command", "local-decompose"},
             {"r", module.ring().root_index},
             {"N", module.ring().precision},
             {"ambient_degrees", module.ambient()},
             {"matrix", matrix}};
    doc["result"] = {{"shifts", shifts_json},
                     {"invariant_rank", invariant.rank},
                     {"valuation_profile", invariant.valuation_profile}};
    p.finish(doc);
    return kExitOk;
}

int cmd_selftest(const Options& opt, std::ostream& out) {
    SelftestOptions options;
    options.samples = opt.samples;
    options.seed = opt.seed;
    options.tolerance = resolve_tolerance(opt);
    auto results = run_selftest(options);
    Printer p(out, opt.emit_json);
    json suites = json::array();
    bool ok = true;
    for (const auto& suite : results) {
        ok = ok && suite.passed();
        std::ostringstream line;
        line << (suite.passed() ? "PASS " : "FAIL ") << std::left << std::setw(34) << suite.name << suite.cases
             << " cases, " << suite.failures << " failures";
        if (!suite.passed()) line << " [first: " << suite.first_failure << "]";
        p.text(line.str());
        suites.push_back(json{{"name", suite.name},
                              {"cases", suite.cases},
                              {"failures", suite.failures},
                              {"first_failure", suite.first_failure}});
    }
    p.finish(json{{"command", "selftest"}, {"seed", opt.seed}, {"samples", opt.samples}, {"suites", suites}});
    return ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Parabolic bundles and bundles on root stacks over a marked curve"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--config", opt.config_path, "Session file (JSON)");
    app.add_flag("--json", opt.emit_json, "Machine-readable output; rationals as \"p/q\"");
    app.add_option("--tol", opt.tol, "Tolerance for root-of-unity sums (default 1e-9, or ORBIROOT_TOL)");

    auto* degree = app.add_subcommand("degree", "Parabolic, stack and Hilbert-style degrees");
    degree->add_option("name", opt.name)->required();

    auto* chi = app.add_subcommand("chi", "Parabolic Euler characteristic");
    chi->add_option("name", opt.name)->required();
    chi->add_option("--method", opt.method, "parabolic|pushforward|inertia|all");

    auto* tensor = app.add_subcommand("tensor", "Tensor product of two bundles");
    tensor->add_option("a", opt.name)->required();
    tensor->add_option("b", opt.other)->required();

    auto* correspond = app.add_subcommand("correspond", "Apply the correspondence functors");
    correspond->add_option("direction", opt.direction, "f | g | roundtrip")
        ->required()
        ->check(CLI::IsMember({"f", "g", "roundtrip"}));
    correspond->add_option("name", opt.name)->required();

    auto* semistable = app.add_subcommand("semistable", "Slope semistability (genus 0)");
    semistable->add_option("name", opt.name)->required();

    auto* check_finite = app.add_subcommand("check-finite", "Nori finiteness (genus 0)");
    check_finite->add_option("name", opt.name)->required();

    auto* witness = app.add_subcommand("witness", "Search P != Q with P(F) = Q(F)");
    witness->add_option("name", opt.name)->required();
    witness->add_option("--bound", opt.bound, "Maximal polynomial degree");

    app.add_subcommand("classify-finite", "Enumerate the finite line objects");

    auto* local = app.add_subcommand("local-decompose", "Decompose a graded module over the local chart");
    local->add_option("modulefile", opt.module_path)->required();

    auto* selftest = app.add_subcommand("selftest", "Run the internal cross-check suites");
    selftest->add_option("--samples", opt.samples, "Random samples per suite");
    selftest->add_option("--seed", opt.seed, "Seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitDomainError;
    }

    try {
        const std::string command = app.get_subcommands().front()->get_name();
        if (command == "degree") return cmd_degree(opt, out);
        if (command == "chi") return cmd_chi(opt, out);
        if (command == "tensor") return cmd_tensor(opt, out);
        if (command == "correspond") return cmd_correspond(opt, out);
        if (command == "semistable") return cmd_semistable(opt, out);
        if (command == "check-finite") return cmd_check_finite(opt, out);
        if (command == "witness") return cmd_witness(opt, out);
        if (command == "classify-finite") return cmd_classify_finite(opt, out);
        if (command == "local-decompose") return cmd_local_decompose(opt, out);
        if (command == "selftest") return cmd_selftest(opt, out);
        err << "unknown command\n";
        return kExitDomainError;
    } catch (const VerificationError& e) {
        err << "verification failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
}

}  // namespace orbiroot
