// stabdyn: growth curves, isometry classification and verification sweeps
// for endofunctors of semisimple graded module categories.
//
// Exit codes: 0 success, 2 validation error, 3 verification failure,
// 4 nilpotent input.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "stabdyn/catalog.hpp"
#include "stabdyn/dynamics.hpp"
#include "stabdyn/instance.hpp"
#include "stabdyn/laurent.hpp"
#include "stabdyn/perron.hpp"
#include "stabdyn/random.hpp"
#include "stabdyn/semisimple.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;
constexpr int kExitNilpotent = 4;

constexpr double kBoundTolerance = 1e-9;

// CSV goes to --out when given, else to stdout (with the human summary
// diverted to stderr so the data stream stays clean).
void write_text(const std::optional<std::string>& out_path,
                const std::string& text) {
    if (out_path) {
        std::ofstream out(*out_path, std::ios::binary);
        if (!out) {
            throw stabdyn::ValidationError("cannot open output file: " +
                                           *out_path);
        }
        out << text;
    } else {
        std::cout << text;
    }
}

std::ostream& summary_stream(const std::optional<std::string>& out_path) {
    return out_path ? std::cout : std::cerr;
}

struct EntropyArgs {
    std::string instance_path;
    std::string grid_spec;
    std::optional<std::string> out_path;
};

int cmd_entropy(const EntropyArgs& args) {
    const stabdyn::Instance instance =
        stabdyn::load_instance(args.instance_path);
    std::optional<stabdyn::LaurentMatrix> matrix = instance.matrix;
    if (!matrix && instance.functor) {
        matrix = instance.functor->matrix();
    }
    if (!matrix) {
        throw stabdyn::ValidationError(
            "entropy needs a matrix or auto_equivalence in the instance");
    }
    if (stabdyn::is_nilpotent(*matrix)) {
        throw stabdyn::NilpotentError(
            "matrix is nilpotent: the growth curve is identically -infinity");
    }
    std::vector<double> grid;
    if (!args.grid_spec.empty()) {
        grid = stabdyn::parse_grid_spec(args.grid_spec);
    } else if (instance.grid) {
        grid = *instance.grid;
    } else {
        grid = stabdyn::default_grid();
    }
    const stabdyn::EntropyCurve curve =
        stabdyn::sample_entropy_curve(*matrix, grid);
    write_text(args.out_path, stabdyn::curve_to_csv(curve));
    const stabdyn::BoundReport report = stabdyn::check_pl_bounds(curve);
    if (report.max_violation > kBoundTolerance) {
        std::cerr << "bound violation " << stabdyn::format_double(
                         report.max_violation)
                  << " at t = " << stabdyn::format_double(report.worst_t)
                  << "\n";
        return kExitVerification;
    }
    return kExitSuccess;
}

struct ClassifyArgs {
    std::string instance_path;
    std::optional<std::string> out_path;
};

int cmd_classify(const ClassifyArgs& args) {
    const stabdyn::Instance instance =
        stabdyn::load_instance(args.instance_path);
    if (!instance.functor) {
        throw stabdyn::ValidationError(
            "classify needs an auto_equivalence in the instance");
    }
    const stabdyn::IsometryReport report =
        stabdyn::exact_report(*instance.functor);
    write_text(args.out_path,
               stabdyn::isometry_report_to_json(report).dump(2) + "\n");
    return kExitSuccess;
}

struct CatalogArgs {
    std::string name;
    std::optional<std::int64_t> shift_n;
    std::optional<double> gepner_w;
    std::optional<double> dhkk_r;
    std::optional<double> dhkk_f0;
    std::optional<std::int64_t> twist_order;
    std::optional<std::int64_t> cy_m;
    std::optional<std::int64_t> cy_n;
    std::optional<double> sdim_lower;
    std::optional<double> sdim_upper;
    std::string grid_spec;
    std::optional<std::string> out_path;
};

stabdyn::ClosedForm make_closed_form(const CatalogArgs& args) {
    auto require = [](const auto& opt,
                      const char* flag) -> decltype(*opt) {
        if (!opt) {
            throw stabdyn::ValidationError(std::string("missing required ") +
                                           flag);
        }
        return *opt;
    };
    if (args.name == "shift") {
        return stabdyn::make_shift(require(args.shift_n, "--n"));
    }
    if (args.name == "gepner") {
        return stabdyn::make_gepner(require(args.gepner_w, "--w"));
    }
    if (args.name == "dhkk") {
        return stabdyn::make_dhkk(require(args.dhkk_r, "--r"),
                                  require(args.dhkk_f0, "--f0"));
    }
    if (args.name == "spherical-twist") {
        return stabdyn::make_spherical_twist(require(args.twist_order, "--N"));
    }
    if (args.name == "serre-fractional-cy") {
        return stabdyn::make_serre_fractional_cy(require(args.cy_m, "--cy-m"),
                                                 require(args.cy_n, "--cy-n"));
    }
    if (args.name == "serre-dim") {
        return stabdyn::make_serre_dimension(
            require(args.sdim_lower, "--sdim-lower"),
            require(args.sdim_upper, "--sdim-upper"));
    }
    throw stabdyn::ValidationError("unknown catalog entry: " + args.name);
}

int cmd_catalog(const CatalogArgs& args) {
    stabdyn::ClosedForm form;
    try {
        form = make_closed_form(args);
    } catch (const std::invalid_argument& e) {
        throw stabdyn::ValidationError(e.what());
    }
    const std::vector<double> grid =
        args.grid_spec.empty() ? stabdyn::default_grid()
                               : stabdyn::parse_grid_spec(args.grid_spec);

    // A Serre-dimension entry has bounds but no curve, so no CSV is
    // emitted and stdout is free to carry the summary.
    const bool has_curve =
        form.kind != stabdyn::ClosedFormKind::SerreDimension;
    std::ostream& summary =
        has_curve ? summary_stream(args.out_path) : std::cout;
    if (has_curve) {
        write_text(args.out_path,
                   stabdyn::closed_form_curve_to_csv(form, grid));
    }
    const stabdyn::ClosedFormSlopes slopes = stabdyn::closed_form_slopes(form);
    const stabdyn::ClosedFormDisplacement displacement =
        stabdyn::closed_form_displacement(form);
    summary << "name: " << stabdyn::closed_form_name(form.kind) << "\n"
            << "slopes: " << stabdyn::format_double(slopes.phi_minus) << " "
            << stabdyn::format_double(slopes.phi_plus) << "\n"
            << "displacement: "
            << stabdyn::format_double(displacement.displacement)
            << (displacement.lower_bound_only ? " (lower bound)" : "") << "\n";
    if (displacement.translation_length) {
        summary << "translation_length: "
                << stabdyn::format_double(*displacement.translation_length)
                << "\n";
    }
    const stabdyn::ConsistencyReport consistency =
        stabdyn::consistency_with_bounds(form, grid);
    summary << "consistency_max_violation: "
            << stabdyn::format_double(consistency.max_violation) << "\n";
    return consistency.max_violation > kBoundTolerance ? kExitVerification
                                                       : kExitSuccess;
}

struct SweepResult {
    bool pass = false;
    double violation = 0.0;
    std::string detail;  // instance JSON for failures
};

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 0;
    int count = 100;
};

// Derives independent sub-seeds for the pieces of one sweep instance.
struct SeedSplit {
    std::uint64_t a, b;
    explicit SeedSplit(std::uint64_t seed) : a(0), b(0) {
        stabdyn::Rng rng(seed);
        a = rng.next();
        b = rng.next();
    }
};

SweepResult run_metric_bounds(std::uint64_t seed) {
    const SeedSplit split(seed);
    const stabdyn::AutoEquivalence alpha =
        stabdyn::random_auto_equivalence(split.a, 6, 5);
    const stabdyn::StabilityCondition sigma = stabdyn::random_stability(
        split.b, alpha.simple_count(), 0.5, 2.0, -1.0, 1.0);
    const stabdyn::MetricBoundReport report =
        stabdyn::verify_metric_bounds(alpha, sigma);
    SweepResult result;
    result.violation = std::max(report.max_violation, std::abs(report.h_zero));
    result.pass = report.equality && result.violation <= 1e-12;
    if (!result.pass) {
        result.detail =
            stabdyn::auto_equivalence_to_json(alpha).dump();
    }
    return result;
}

SweepResult run_free_proper(std::uint64_t seed) {
    const SeedSplit split(seed);
    const stabdyn::AutoEquivalence alpha =
        stabdyn::random_auto_equivalence(split.a, 6, 5);
    const stabdyn::StabilityCondition sigma = stabdyn::random_stability(
        split.b, alpha.simple_count(), 0.5, 2.0, -1.0, 1.0);
    const stabdyn::FreeProperReport report =
        stabdyn::verify_free_proper(alpha, sigma, 60);
    SweepResult result;
    result.pass = report.separated;
    if (report.applicable) {
        result.violation =
            std::max(0.0, 2.0 * report.epsilon - report.min_separation);
    }
    if (!result.pass) {
        result.detail = stabdyn::auto_equivalence_to_json(alpha).dump();
    }
    return result;
}

SweepResult run_quotient_bounds(std::uint64_t seed) {
    const SeedSplit split(seed);
    const stabdyn::AutoEquivalence alpha =
        stabdyn::random_auto_equivalence(split.a, 6, 5);
    const stabdyn::StabilityCondition sigma = stabdyn::random_stability(
        split.b, alpha.simple_count(), 0.5, 2.0, -1.0, 1.0);
    const stabdyn::QuotientBoundReport report =
        stabdyn::verify_quotient_bounds(alpha, sigma, 60);
    SweepResult result;
    const double lower_excess =
        report.lower_bound.to_double() - report.estimate;
    const double upper_excess =
        report.estimate - report.upper_bound.to_double();
    result.violation = std::max({0.0, lower_excess - 0.15,
                                 upper_excess - kBoundTolerance});
    result.pass = result.violation <= 0.0;
    if (!result.pass) {
        result.detail = stabdyn::auto_equivalence_to_json(alpha).dump();
    }
    return result;
}

SweepResult run_conjugation(std::uint64_t seed) {
    const SeedSplit split(seed);
    const stabdyn::AutoEquivalence alpha =
        stabdyn::random_auto_equivalence(split.a, 6, 5);
    const stabdyn::AutoEquivalence beta =
        stabdyn::random_auto_equivalence_of_size(split.b,
                                                 alpha.simple_count(), 5);
    const stabdyn::ConjugationReport report =
        stabdyn::conjugation_invariance_check(
            alpha, beta, stabdyn::uniform_grid(-10.0, 10.0, 21));
    SweepResult result;
    result.violation = report.max_entropy_gap;
    result.pass =
        report.displacement_equal && report.max_entropy_gap <= kBoundTolerance;
    if (!result.pass) {
        result.detail = stabdyn::auto_equivalence_to_json(alpha).dump() + " " +
                        stabdyn::auto_equivalence_to_json(beta).dump();
    }
    return result;
}

SweepResult run_pl_bounds(std::uint64_t seed) {
    const stabdyn::LaurentMatrix m =
        stabdyn::random_laurent_matrix(seed, 4, -5, 5);
    const stabdyn::BoundReport report =
        stabdyn::check_pl_bounds(m, stabdyn::default_grid());
    SweepResult result;
    result.violation = report.max_violation;
    result.pass = report.max_violation <= kBoundTolerance;
    if (!result.pass) {
        result.detail = stabdyn::matrix_to_json(m).dump();
    }
    return result;
}

int cmd_verify(const VerifyArgs& args) {
    SweepResult (*run_one)(std::uint64_t) = nullptr;
    if (args.suite == "metric-bounds") {
        run_one = run_metric_bounds;
    } else if (args.suite == "free-proper") {
        run_one = run_free_proper;
    } else if (args.suite == "quotient-bounds") {
        run_one = run_quotient_bounds;
    } else if (args.suite == "conjugation") {
        run_one = run_conjugation;
    } else if (args.suite == "pl-bounds") {
        run_one = run_pl_bounds;
    } else {
        throw stabdyn::ValidationError("unknown suite: " + args.suite);
    }
    if (args.count < 0) {
        throw stabdyn::ValidationError("count must be nonnegative");
    }

    // Seeds fan out over a small pool; results are indexed by seed so the
    // report below is byte-identical regardless of scheduling.
    std::vector<SweepResult> results(args.count);
    const unsigned workers = std::max(
        1u, std::min(std::thread::hardware_concurrency(), 16u));
    std::atomic<int> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = cursor.fetch_add(1); i < args.count;
                 i = cursor.fetch_add(1)) {
                results[i] = run_one(args.seed + static_cast<std::uint64_t>(i));
            }
        });
    }
    for (auto& thread : pool) {
        thread.join();
    }

    int passed = 0;
    double max_violation = 0.0;
    for (int i = 0; i < args.count; ++i) {
        const SweepResult& result = results[i];
        passed += result.pass ? 1 : 0;
        max_violation = std::max(max_violation, result.violation);
        if (!result.pass) {
            std::cout << "FAIL seed " << (args.seed + i) << " violation "
                      << stabdyn::format_double(result.violation)
                      << " instance " << result.detail << "\n";
        }
    }
    std::cout << "suite " << args.suite << ": " << passed << "/" << args.count
              << " passed, max violation "
              << stabdyn::format_double(max_violation) << "\n";
    return passed == args.count ? kExitSuccess : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "growth curves and stability-space isometries of semisimple "
        "categories"};
    app.require_subcommand(1);

    EntropyArgs entropy_args;
    CLI::App* entropy = app.add_subcommand(
        "entropy", "sample the growth curve of a Laurent matrix as CSV");
    entropy->add_option("--instance", entropy_args.instance_path,
                        "instance JSON file")
        ->required();
    entropy->add_option("--grid", entropy_args.grid_spec,
                        "t-grid as lo:hi:n (default -10:10:201)");
    std::string entropy_out;
    entropy->add_option("--out", entropy_out, "write CSV here (else stdout)");

    ClassifyArgs classify_args;
    CLI::App* classify = app.add_subcommand(
        "classify", "exact isometry invariants of an auto-equivalence");
    classify->add_option("--instance", classify_args.instance_path,
                         "instance JSON file")
        ->required();
    std::string classify_out;
    classify->add_option("--out", classify_out,
                         "write JSON here (else stdout)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "run a seeded verification sweep");
    verify
        ->add_option("--suite", verify_args.suite,
                     "one of metric-bounds, free-proper, quotient-bounds, "
                     "conjugation, pl-bounds")
        ->required();
    verify->add_option("--seed", verify_args.seed, "base seed (default 0)");
    verify->add_option("--count", verify_args.count,
                       "number of instances (default 100)");

    CatalogArgs catalog_args;
    CLI::App* catalog = app.add_subcommand(
        "catalog", "closed-form curve and invariants of a catalog entry");
    catalog
        ->add_option("--name", catalog_args.name,
                     "shift | gepner | dhkk | spherical-twist | "
                     "serre-fractional-cy | serre-dim")
        ->required();
    catalog->add_option("--n", catalog_args.shift_n, "shift amount");
    catalog->add_option("--w", catalog_args.gepner_w, "gepner parameter");
    catalog->add_option("--r", catalog_args.dhkk_r, "dhkk stretch, |r| > 1");
    catalog->add_option("--f0", catalog_args.dhkk_f0, "dhkk f(0)");
    catalog->add_option("--N", catalog_args.twist_order,
                        "spherical dimension, N >= 2");
    catalog->add_option("--cy-m", catalog_args.cy_m, "fractional CY shift m");
    catalog->add_option("--cy-n", catalog_args.cy_n,
                        "fractional CY power n >= 1");
    catalog->add_option("--sdim-lower", catalog_args.sdim_lower,
                        "lower asymptotic slope");
    catalog->add_option("--sdim-upper", catalog_args.sdim_upper,
                        "upper asymptotic slope");
    catalog->add_option("--grid", catalog_args.grid_spec,
                        "t-grid as lo:hi:n (default -10:10:201)");
    std::string catalog_out;
    catalog->add_option("--out", catalog_out, "write CSV here (else stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (*entropy) {
            if (!entropy_out.empty()) {
                entropy_args.out_path = entropy_out;
            }
            return cmd_entropy(entropy_args);
        }
        if (*classify) {
            if (!classify_out.empty()) {
                classify_args.out_path = classify_out;
            }
            return cmd_classify(classify_args);
        }
        if (*verify) {
            return cmd_verify(verify_args);
        }
        if (*catalog) {
            if (!catalog_out.empty()) {
                catalog_args.out_path = catalog_out;
            }
            return cmd_catalog(catalog_args);
        }
    } catch (const stabdyn::NilpotentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNilpotent;
    } catch (const stabdyn::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
