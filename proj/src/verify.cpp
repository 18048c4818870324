#include "orbiroot/verify.hpp"

#include <functional>
#include <sstream>

#include "orbiroot/correspondence.hpp"
#include "orbiroot/local_model.hpp"
#include "orbiroot/moduli.hpp"
#include "orbiroot/sampling.hpp"

namespace orbiroot {

namespace {

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    /// Runs one case; exceptions count as failures.
    void check(const std::function<bool()>& body, const std::function<std::string()>& describe) {
        ++result_.cases;
        bool ok = false;
        std::string why;
        try {
            ok = body();
        } catch (const std::exception& e) {
            why = e.what();
        }
        if (!ok) {
            if (result_.failures++ == 0) {
                result_.first_failure = describe() + (why.empty() ? "" : " (" + why + ")");
            }
        }
    }

    SuiteResult done() { return std::move(result_); }

private:
    SuiteResult result_;
};

std::string describe(const OrbiConfig& cfg) {
    std::ostringstream out;
    out << "g=" << cfg.genus() << " m=" << cfg.num_points() << " r=" << cfg.root_index();
    return out.str();
}

/// All residue patterns {0..r-1}^m.
std::vector<std::vector<int>> residue_patterns(int r, int m) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < m; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : out) {
            for (int a = 0; a < r; ++a) {
                auto p = prefix;
                p.push_back(a);
                next.push_back(std::move(p));
            }
        }
        out = std::move(next);
    }
    return out;
}

SuiteResult roundtrip_suite(const SelftestOptions& opt) {
    Suite suite("equivalence round-trip");
    Sampler sampler(opt.seed);
    SampleRanges ranges;
    for (std::size_t n = 0; n < opt.samples; ++n) {
        auto cfg = random_config(sampler, ranges);
        auto par = random_par_bundle(cfg, sampler, ranges);
        auto stack = random_stack_bundle(cfg, sampler, ranges);
        suite.check([&] { return to_parabolic(cfg, to_stack(cfg, par)) == par &&
                                 to_stack(cfg, to_parabolic(cfg, stack)) == stack; },
                    [&] { return describe(cfg); });
    }
    return suite.done();
}

SuiteResult coend_suite(const SelftestOptions&) {
    Suite suite("coend oracle");
    for (int r = 1; r <= 6; ++r) {
        for (int m = 0; m <= 2; ++m) {
            auto cfg = OrbiConfig::make(0, m, r);
            for (const auto& res : residue_patterns(r, m)) {
                for (std::int64_t d = -1; d <= 1; ++d) {
                    LineObject line{d, res};
                    ParLine par = to_parabolic(cfg, line);
                    suite.check([&] { return coend_evaluate(cfg, par) == line &&
                                             coend_evaluate(cfg, par, -r, 2 * r) == line; },
                                [&] { return describe(cfg) + " d=" + std::to_string(d); });
                }
            }
        }
    }
    return suite.done();
}

SuiteResult tensor_suite(const SelftestOptions& opt) {
    Suite suite("tensoriality");
    Sampler sampler(opt.seed + 1);
    SampleRanges ranges;
    ranges.max_rank = 3;
    for (std::size_t n = 0; n < opt.samples; ++n) {
        auto cfg = random_config(sampler, ranges);
        auto a = random_par_bundle(cfg, sampler, ranges);
        auto b = random_par_bundle(cfg, sampler, ranges);
        suite.check([&] {
            auto ab = tensor_par(cfg, a, b);
            return tensor_compat_check(cfg, a, b) &&
                   deg_par(ab) == Rational(static_cast<std::int64_t>(a.rank())) * deg_par(b) +
                                      Rational(static_cast<std::int64_t>(b.rank())) * deg_par(a);
        }, [&] { return describe(cfg); });
    }
    for (int r = 1; r <= 6; ++r) {
        auto cfg = OrbiConfig::make(0, 1, r);
        for (int a = 0; a < r; ++a) {
            for (int b = 0; b < r; ++b) {
                ParLine x{0, {Rational(a, r)}};
                ParLine y{0, {Rational(b, r)}};
                ParLine closed = tensor_par(cfg, x, y);
                for (std::int64_t l = 0; l < r; ++l) {
                    suite.check([&] { return tensor_par_coend_degree(cfg, x, y, l) ==
                                             filtration_degree(cfg, closed, Rational(l, r)); },
                                [&] { return describe(cfg) + " l=" + std::to_string(l); });
                }
            }
        }
    }
    return suite.done();
}

SuiteResult degree_suite(const SelftestOptions& opt) {
    Suite suite("degree theorem");
    Sampler sampler(opt.seed + 2);
    SampleRanges ranges;
    for (std::size_t n = 0; n < opt.samples; ++n) {
        auto cfg = random_config(sampler, ranges);
        auto par = random_par_bundle(cfg, sampler, ranges);
        suite.check([&] { return deg_theorem_check(cfg, par, opt.tolerance) &&
                                 deg_par_hilbert(cfg, par) == deg_par(par); },
                    [&] { return describe(cfg); });
    }
    for (int r = 2; r <= 24; ++r) {
        for (int k = 1; k < r; ++k) {
            suite.check([&] { return std::abs(regular_char(k, r)) < 1e-12; },
                        [&] { return "regular character r=" + std::to_string(r) + " k=" + std::to_string(k); });
        }
    }
    return suite.done();
}

SuiteResult chi_suite(const SelftestOptions& opt) {
    Suite suite("Euler characteristic three ways");
    Sampler sampler(opt.seed + 3);
    SampleRanges ranges;
    ranges.max_genus = 2;
    ranges.max_rank = 3;
    for (std::size_t n = 0; n < opt.samples; ++n) {
        auto cfg = random_config(sampler, ranges);
        auto par = random_par_bundle(cfg, sampler, ranges);
        suite.check([&] { return chi_par_three_way(cfg, par, opt.tolerance).agree(); },
                    [&] { return describe(cfg); });
    }
    return suite.done();
}

SuiteResult integer_part_suite(const SelftestOptions&) {
    Suite suite("integer-part formula");
    for (int r = 1; r <= 8; ++r) {
        auto cfg = OrbiConfig::make(0, 1, r);
        for (int res = 0; res < r; ++res) {
            LineObject line{0, {res}};
            for (std::int64_t l = -3 * r; l <= 3 * r; ++l) {
                suite.check([&] {
                    return pushforward_twisted_degree(cfg, line, l) == floor_div(res - l, r) &&
                           pushforward_twisted_degree(cfg, line, l + r) == pushforward_twisted_degree(cfg, line, l) - 1;
                }, [&] { return describe(cfg) + " l=" + std::to_string(l); });
            }
        }
    }
    return suite.done();
}

SuiteResult structure_suite(const SelftestOptions&) {
    Suite suite("finite structure theorem");
    for (int r = 1; r <= 6; ++r) {
        for (int m = 1; m <= 4; ++m) {
            auto cfg = OrbiConfig::make(0, m, r);
            suite.check([&] {
                auto report = verify_structure_theorem(cfg);
                std::size_t expected = 1;
                for (int i = 1; i < m; ++i) expected *= static_cast<std::size_t>(r);
                return report.count == expected && report.bounds_hold && report.all_semistable_deg0;
            }, [&] { return describe(cfg); });
        }
    }
    return suite.done();
}

SuiteResult witness_suite(const SelftestOptions& opt) {
    Suite suite("finiteness witnesses");
    Sampler sampler(opt.seed + 4);
    SampleRanges ranges;
    ranges.max_root_index = 4;
    ranges.max_points = 3;
    ranges.min_points = 1;
    ranges.max_rank = 4;
    const std::size_t count = std::max<std::size_t>(1, opt.samples / 10);
    for (std::size_t n = 0; n < count; ++n) {
        auto cfg = random_config(sampler, ranges);
        auto finite = random_finite_bundle(cfg, sampler, ranges.max_rank);
        // The minimal relation has degree at most |Pic^0| = r^(m-1).
        int bound = 1;
        for (int i = 1; i < cfg.num_points(); ++i) bound *= cfg.root_index();
        suite.check([&] { return is_finite(cfg, finite) && witness_polynomials(cfg, finite, bound + 1).has_value(); },
                    [&] { return describe(cfg) + " finite"; });

        auto other = random_stack_bundle(cfg, sampler, ranges);
        if (is_finite(cfg, other)) {
            continue;
        }
        suite.check([&] { return !witness_polynomials(cfg, other, 6).has_value(); },
                    [&] { return describe(cfg) + " non-finite"; });
    }
    return suite.done();
}

SuiteResult local_suite(const SelftestOptions& opt) {
    Suite suite("local graded decomposition");
    Sampler sampler(opt.seed + 5);
    for (int r = 1; r <= 3; ++r) {
        auto ring = LocalRing::with_default_precision(r);
        for (std::size_t n = 0; n < std::max<std::size_t>(1, opt.samples / 50); ++n) {
            auto rank = static_cast<std::size_t>(sampler.uniform(1, 3));
            std::vector<int> shifts;
            ShiftMultiset expected(static_cast<std::size_t>(r), 0);
            for (std::size_t j = 0; j < rank; ++j) {
                shifts.push_back(static_cast<int>(sampler.uniform(0, r - 1)));
                ++expected[static_cast<std::size_t>(shifts.back())];
            }
            // Unipotent homogeneous change of basis: identity plus one
            // off-diagonal monomial of the right degree.
            std::vector<std::vector<TruncatedPoly>> transform(rank, std::vector<TruncatedPoly>(rank, TruncatedPoly(ring.precision)));
            for (std::size_t j = 0; j < rank; ++j) transform[j][j] = TruncatedPoly::monomial(ring.precision, Rational(1), 0);
            if (rank > 1) {
                std::size_t from = 0, to = rank - 1;
                int exponent = static_cast<int>(floor_mod(shifts[to] - shifts[from], r));
                transform[from][to] = TruncatedPoly::monomial(ring.precision, Rational(sampler.uniform(1, 5)), exponent);
            }
            auto module = change_basis(standard_module(ring, shifts), transform);
            suite.check([&] {
                if (decompose_shifts(module) != expected || invariant_part_rank(module).rank != rank) return false;
                for (std::int64_t l = 0; l < r; ++l) {
                    for (std::int64_t lp = l; lp < l + r; ++lp) {
                        if (!cokernel_free_check(module, l, lp)) return false;
                    }
                }
                return true;
            }, [&] { return "r=" + std::to_string(r) + " rank=" + std::to_string(rank); });
        }
    }
    return suite.done();
}

SuiteResult inequality_suite(const SelftestOptions& opt) {
    Suite suite("degree inequality");
    Sampler sampler(opt.seed + 6);
    SampleRanges ranges;
    ranges.max_root_index = 3;
    ranges.max_points = 2;
    ranges.max_abs_degree = 2;
    ranges.max_rank = 3;
    for (std::size_t n = 0; n < std::max<std::size_t>(1, opt.samples / 20); ++n) {
        auto cfg = random_config(sampler, ranges);
        auto bundle = random_stack_bundle(cfg, sampler, ranges);
        Rational bound = max_line_sub_degree(cfg, bundle);
        for (const auto& res : residue_patterns(cfg.root_index(), cfg.num_points())) {
            for (std::int64_t d = -3; d <= 3; ++d) {
                LineObject sub{d, res};
                suite.check([&] {
                    for (const auto& target : bundle.summands()) {
                        if (hom_nonzero(cfg, sub, target) && deg_stack(cfg, sub) > bound) return false;
                    }
                    return true;
                }, [&] { return describe(cfg); });
            }
        }
    }
    return suite.done();
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
    std::vector<SuiteResult> results;
    results.push_back(roundtrip_suite(options));
    results.push_back(coend_suite(options));
    results.push_back(tensor_suite(options));
    results.push_back(degree_suite(options));
    results.push_back(chi_suite(options));
    results.push_back(integer_part_suite(options));
    results.push_back(structure_suite(options));
    results.push_back(witness_suite(options));
    results.push_back(local_suite(options));
    results.push_back(inequality_suite(options));
    return results;
}

}  // namespace orbiroot
