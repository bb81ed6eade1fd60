#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wradius/bounds.hpp"
#include "wradius/ensemble.hpp"
#include "wradius/io.hpp"
#include "wradius/radius.hpp"
#include "wradius/report.hpp"
#include "wradius/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitUnknownBound = 4;
constexpr int kExitUsage = 64;

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> names;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t comma = csv.find(',', start);
        const std::string piece =
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) {
            names.push_back(piece);
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return names;
}

int run_radius(const std::string& path, std::optional<double> tol) {
    const wradius::MatrixFile file = wradius::load_matrix_file(path);
    const wradius::ComplexMatrix flat = file.flattened();
    const wradius::Enclosure w =
        tol ? wradius::numerical_radius(flat, *tol) : wradius::numerical_radius(flat);
    std::printf("radius in [%.17g, %.17g]  width %.3g  kind %s\n", w.lo, w.hi, w.width(),
                wradius::kind_name(w.kind));
    return kExitOk;
}

int run_bounds(const std::string& path, const std::string& csv, std::optional<double> t,
               bool min_t, const std::string& format) {
    const wradius::MatrixFile file = wradius::load_matrix_file(path);
    const wradius::Report report =
        wradius::make_report(file, path, split_names(csv), t, min_t);
    const std::string text =
        format == "json" ? wradius::to_json(report) : wradius::to_markdown(report);
    std::fputs(text.c_str(), stdout);
    if (!text.empty() && text.back() != '\n') {
        std::fputc('\n', stdout);
    }
    return kExitOk;
}

/// WRADIUS_SEED overrides the --seed flag; a set but unparsable value is a
/// usage error.
int apply_seed_env(wradius::EnsembleSpec& spec) {
    const char* raw = std::getenv("WRADIUS_SEED");
    if (raw == nullptr) {
        return kExitOk;
    }
    char* end = nullptr;
    errno = 0;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (*raw == '\0' || end == nullptr || *end != '\0' || errno != 0) {
        std::fprintf(stderr, "WRADIUS_SEED is not an unsigned integer: '%s'\n", raw);
        return kExitUsage;
    }
    spec.seed = parsed;
    return kExitOk;
}

int run_verify(wradius::EnsembleSpec spec) {
    const int env_status = apply_seed_env(spec);
    if (env_status != kExitOk) {
        return env_status;
    }
    const wradius::VerificationReport report = wradius::run_verification(spec);
    std::fputs(wradius::verification_summary(report).c_str(), stdout);
    return report.ok() ? kExitOk : kExitFailure;
}

int run_reproduce() {
    using wradius::ComplexMatrix;

    const ComplexMatrix nil = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    wradius::BlockOperatorMatrix cross(2, 2);
    cross.block(0, 1) = nil;
    cross.block(1, 0) = nil;

    const ComplexMatrix shift23 =
        ComplexMatrix::from_rows({{0.0, 2.0, 0.0}, {0.0, 0.0, 3.0}, {0.0, 0.0, 0.0}});
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const ComplexMatrix hollow =
        ComplexMatrix::from_rows({{0.0, inv_sqrt2}, {inv_sqrt2, 0.0}});

    struct Case {
        const char* name;
        double expected;
        double computed;
    };
    const std::vector<Case> cases = {
        {"cross-block prop4", inv_sqrt2,
         wradius::evaluate_bound(cross, {wradius::BoundTag::prop4, std::nullopt}).value.hi},
        {"cross-block aok", 1.0,
         wradius::evaluate_bound(cross, {wradius::BoundTag::aok, std::nullopt}).value.hi},
        {"weighted-shift prop1_min", 2.5, wradius::single_op_prop1_min(shift23).value.hi},
        {"weighted-shift prop1(1/2)", 0.5 * (3.0 + std::sqrt(6.0)),
         wradius::single_op_prop1(shift23, 0.5).value.hi},
        {"hollow radius fast path", inv_sqrt2, wradius::w_nonneg(hollow).mid()},
    };

    bool all_ok = true;
    for (const Case& c : cases) {
        const bool ok = std::abs(c.computed - c.expected) <= 1e-6;
        all_ok = all_ok && ok;
        std::printf("%-28s expected %.12g  computed %.12g  %s\n", c.name, c.expected, c.computed,
                    ok ? "ok" : "MISMATCH");
    }
    std::printf(all_ok ? "all fixtures reproduced\n" : "FIXTURE MISMATCH\n");
    return all_ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified numerical radius enclosures and block matrix bounds"};
    app.require_subcommand(1);

    std::string radius_path;
    std::optional<double> radius_tol;
    CLI::App* radius_cmd = app.add_subcommand("radius", "Certified radius of a matrix file");
    radius_cmd->add_option("path", radius_path, "Matrix file (JSON)")->required();
    radius_cmd->add_option("--tol", radius_tol, "Sweep tolerance (default scales with the norm)");

    std::string bounds_path;
    std::string bounds_csv = "all";
    std::optional<double> bounds_t;
    bool bounds_min_t = false;
    std::string bounds_format = "md";
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "Evaluate catalogue bounds for a file");
    bounds_cmd->add_option("path", bounds_path, "Matrix file (JSON)")->required();
    bounds_cmd->add_option("--bounds", bounds_csv, "Comma-separated bound names, or 'all'");
    CLI::Option* t_opt = bounds_cmd->add_option("--t", bounds_t, "Parameter t in [0, 1]");
    CLI::Option* min_t_opt =
        bounds_cmd->add_flag("--min-t", bounds_min_t, "Minimize t-parameterized bounds over t");
    t_opt->excludes(min_t_opt);
    bounds_cmd->add_option("--format", bounds_format, "Output format")
        ->check(CLI::IsMember({"md", "json"}));

    wradius::EnsembleSpec spec;
    std::string ensemble_name = "gaussian";
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the property catalogue");
    verify_cmd->add_option("--seed", spec.seed, "PRNG seed (WRADIUS_SEED overrides)");
    verify_cmd->add_option("--count", spec.count, "Matrices per property")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--n", spec.n, "Block grid size")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--d", spec.d, "Block dimension")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--ensemble", ensemble_name, "Matrix family")
        ->check(CLI::IsMember({"gaussian", "nilpotent", "normal", "positive", "shift"}));

    CLI::App* reproduce_cmd =
        app.add_subcommand("reproduce", "Recompute built-in fixtures with known values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (radius_cmd->parsed()) {
            return run_radius(radius_path, radius_tol);
        }
        if (bounds_cmd->parsed()) {
            return run_bounds(bounds_path, bounds_csv, bounds_t, bounds_min_t, bounds_format);
        }
        if (verify_cmd->parsed()) {
            spec.ensemble = *wradius::parse_ensemble(ensemble_name);
            return run_verify(spec);
        }
        if (reproduce_cmd->parsed()) {
            return run_reproduce();
        }
    } catch (const wradius::ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitParse;
    } catch (const wradius::UnknownBoundError& e) {
        std::fprintf(stderr, "unknown bound: %s\n", e.what());
        return kExitUnknownBound;
    } catch (const wradius::DimensionError& e) {
        std::fprintf(stderr, "dimension error: %s\n", e.what());
        return kExitDimension;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFailure;
    }
    return kExitOk;
}
