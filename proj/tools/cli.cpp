#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <magnus/bounds.hpp>
#include <magnus/coefficients.hpp>
#include <magnus/report_io.hpp>
#include <magnus/run_config.hpp>
#include <magnus/series_analysis.hpp>
#include <magnus/tree.hpp>
#include <magnus/validation.hpp>

namespace magnus::cli
{

namespace
{

constexpr std::size_t kTreeCap = 12;

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

std::string fmt9(double v)
{
    return format_double(v);
}

std::vector<Check> verify_coefficients()
{
    std::vector<Check> checks;
    const NuTable rec = nu_table(NuMethod::recursion, 24);
    const NuTable en = nu_enumeration_table(10);
    std::optional<std::size_t> bad;
    for (std::size_t n = 1; n <= 10 && !bad; ++n) {
        if (en.at(n) != rec.at(n)) {
            bad = n;
        }
    }
    checks.push_back({"recursion = enumeration, n <= 10", !bad,
                      bad ? "n=" + std::to_string(*bad) + ": " + rec.at(*bad).str() + " vs " + en.at(*bad).str()
                          : "10 values equal"});
    const NuTable simp = nu_table(NuMethod::simplified, 24);
    bad.reset();
    for (std::size_t n = 1; n <= 24 && !bad; ++n) {
        const bool ok = n <= 4 ? simp.at(n) == rec.at(n) : simp.at(n) < rec.at(n);
        if (!ok) {
            bad = n;
        }
    }
    checks.push_back({"simplified recursion: equal for n <= 4, strictly smaller for 5 <= n <= 24", !bad,
                      bad ? "n=" + std::to_string(*bad) + ": " + simp.at(*bad).str() + " vs " + rec.at(*bad).str()
                          : "nu_5 simplified = " + simp.at(5).str()});
    return checks;
}

std::vector<Check> verify_envelope()
{
    const NuTable rec = nu_table(NuMethod::recursion, 24);
    std::optional<std::size_t> bad8;
    std::optional<std::size_t> bad6;
    for (std::size_t n = 1; n <= 24; ++n) {
        const double v = rec.at(n).to_double();
        if (!bad8 && v > coefficient_envelope(n, 8.0)) {
            bad8 = n;
        }
        if (!bad6 && v > coefficient_envelope(n, 6.0)) {
            bad6 = n;
        }
    }
    std::vector<Check> checks;
    checks.push_back({"nu_n <= 8 (delta_xi/2)^n / n^2, n <= 24", !bad8,
                      bad8 ? "counterexample n=" + std::to_string(*bad8) + ": nu=" + fmt9(rec.at(*bad8).to_double()) +
                                 " > " + fmt9(coefficient_envelope(*bad8, 8.0))
                           : "holds for n = 1..24"});
    checks.push_back({"constant 6 is violated for some n <= 24", bad6.has_value(),
                      bad6 ? "first violation n=" + std::to_string(*bad6) + ": nu=" + fmt9(rec.at(*bad6).to_double()) +
                                 " > " + fmt9(coefficient_envelope(*bad6, 6.0))
                           : "constant 6 holds everywhere; 8 is not minimal"});
    return checks;
}

std::vector<Check> verify_ode()
{
    std::vector<Check> checks;
    const NuTable rec = nu_table(NuMethod::recursion, 17);
    const OdeReport rep = magnus::verify_ode(rec, 17);
    std::string detail = "exact through order " + std::to_string(rep.checked_through);
    if (rep.first_failing_order) {
        detail = "first failing order " + std::to_string(*rep.first_failing_order) + ": lhs " +
                 rep.lhs_at_failure->str() + " vs rhs " + rep.rhs_at_failure->str();
    }
    checks.push_back({"generating-function ODE through order 16", rep.pass && rep.checked_through >= 16, detail});

    const LogSeries ls = lhs_integral_series(5);
    const std::vector<Rational> expected = {Rational(-1, 3), Rational(1, 36), Rational(-2, 405), Rational(11, 12960),
                                            Rational(-29, 170100)};
    std::optional<std::size_t> bad;
    for (std::size_t k = 1; k <= 5 && !bad; ++k) {
        if (ls.series[k] != expected[k - 1]) {
            bad = k;
        }
    }
    checks.push_back({"lhs integral series orders 1..5", !bad && ls.log_coefficient == Rational(2),
                      bad ? "order " + std::to_string(*bad) + ": " + ls.series[*bad].str()
                          : "2 log f - f/3 + f^2/36 - 2f^3/405 + 11f^4/12960 - 29f^5/170100; order 4 differs "
                            "from the misprinted 11/12969"});
    return checks;
}

std::vector<Check> verify_beta()
{
    constexpr double beta_low = 8.233432;
    constexpr double beta_high = 8.32685;
    constexpr double delta_ref = 0.902362;
    const auto sweep = beta_sweep(10, 24, 60);
    const auto [lo_it, hi_it] =
        std::minmax_element(sweep.begin(), sweep.end(), [](const auto &a, const auto &b) { return a.beta < b.beta; });
    const auto delta_it =
        std::max_element(sweep.begin(), sweep.end(), [](const auto &a, const auto &b) { return a.delta < b.delta; });
    auto rel = [](double v, double ref) { return std::abs(v - ref) / ref; };
    std::vector<Check> checks;
    checks.push_back({"min beta over n = 10..24 ~ 8.233432 (1e-3 rel)", rel(lo_it->beta, beta_low) <= 1e-3,
                      "beta=" + fmt9(lo_it->beta) + " at n=" + std::to_string(lo_it->n)});
    checks.push_back({"max beta over n = 10..24 ~ 8.32685 (1e-3 rel)", rel(hi_it->beta, beta_high) <= 1e-3,
                      "beta=" + fmt9(hi_it->beta) + " at n=" + std::to_string(hi_it->n)});
    checks.push_back({"max delta ~ 0.902362 (5e-4 abs)", std::abs(delta_it->delta - delta_ref) <= 5e-4,
                      "delta=" + fmt9(delta_it->delta) + " at n=" + std::to_string(delta_it->n) + "; beta(10)=" +
                          fmt9(sweep.front().beta) + ", beta(24)=" + fmt9(sweep.back().beta)});
    return checks;
}

Table checks_table(const std::vector<Check> &checks)
{
    Table t{{"check", "pass", "detail"}, {}};
    for (const auto &c : checks) {
        t.rows.push_back({c.name, c.pass, c.detail});
    }
    return t;
}

Format resolve_format(const std::string &name, Format fallback)
{
    if (name.empty()) {
        return fallback;
    }
    return *parse_format(name);
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact tree coefficients and truncation bounds for the Magnus expansion", "magnus-bound"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_name;
    std::string output_path;
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "json", "pretty"}));
    app.add_option("-o,--output", output_path, "Write output to this file");

    std::size_t coeffs_n = 0;
    std::string coeffs_method = "recursion";
    auto *coeffs = app.add_subcommand("coeffs", "Tree coefficients nu_1..nu_n");
    coeffs->add_option("n_max", coeffs_n)->required()->check(CLI::PositiveNumber);
    coeffs->add_option("--method", coeffs_method)
        ->check(CLI::IsMember({"recursion", "enumeration", "simplified", "all"}));

    std::size_t trees_n = 0;
    bool with_coefficients = false;
    auto *trees = app.add_subcommand("trees", "List the trees with n leaves");
    trees->add_option("n", trees_n)->required()->check(CLI::PositiveNumber);
    trees->add_flag("--with-coefficients", with_coefficients);

    std::optional<std::size_t> phi_n;
    std::optional<double> phi_beta;
    std::size_t k_first = 1;
    std::size_t k_last = 60;
    std::optional<std::size_t> gen_order;
    bool beta_sweep_flag = false;
    std::size_t sweep_first = 10;
    std::size_t sweep_last = 24;
    std::size_t k_cut = 60;
    auto *series = app.add_subcommand("series", "Generating-function series and scaling data");
    auto *phi_opt = series->add_option("--phi", phi_n, "phi(n, k) curve for this n");
    series->add_option("--beta", phi_beta, "beta for --phi (default: estimated from nu_n)");
    series->add_option("--k-first", k_first)->check(CLI::PositiveNumber);
    series->add_option("--k-last", k_last)->check(CLI::PositiveNumber);
    auto *gen_opt = series->add_option("--gen-coeffs", gen_order, "Series of the lhs integral up to this order");
    auto *sweep_opt = series->add_flag("--beta-sweep", beta_sweep_flag, "(n, beta, theta, delta, k_max) rows");
    series->add_option("--n-first", sweep_first);
    series->add_option("--n-last", sweep_last);
    series->add_option("--k-cut", k_cut)->check(CLI::PositiveNumber);
    phi_opt->excludes(gen_opt)->excludes(sweep_opt);
    gen_opt->excludes(sweep_opt);

    double h_max = 0.0;
    double t = 0.0;
    std::size_t bound_n = 1;
    bool tight = false;
    bool compare = false;
    auto *bounds = app.add_subcommand("bounds", "Per-term and truncation bounds");
    bounds->add_option("h_max", h_max)->required();
    bounds->add_option("t", t)->required();
    bounds->add_option("N", bound_n)->required()->check(CLI::PositiveNumber);
    bounds->add_flag("--tight", tight, "Include the summed tail bound");
    bounds->add_flag("--compare", compare, "Compare with pi x^n");

    std::string suite;
    auto *verify = app.add_subcommand("verify", "Run a cross-check suite");
    verify->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"coefficients", "envelope", "ode", "beta", "all"}));

    std::string config_path;
    std::string dump_path;
    auto *simulate = app.add_subcommand("simulate", "Validate the bounds numerically on a configured instance");
    simulate->add_option("config", config_path)->required();
    simulate->add_option("--dump-coefficients", dump_path, "Write the coefficient matrices as CSV");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    std::ofstream file;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            err << "error: cannot open " << output_path << " for writing\n";
            return kUsageError;
        }
    }
    std::ostream &sink = output_path.empty() ? out : file;

    try {
        if (coeffs->parsed()) {
            const Format format = resolve_format(format_name, Format::csv);
            if (coeffs_method == "all") {
                const NuTable rec = nu_table(NuMethod::recursion, coeffs_n);
                const NuTable en = nu_enumeration_table(std::min(coeffs_n, kEnumerationCap));
                const NuTable simp = nu_table(NuMethod::simplified, coeffs_n);
                write_table(sink, nu_table_all(rec, en, simp), format);
            } else {
                const NuMethod method = *parse_nu_method(coeffs_method);
                write_table(sink, nu_table(nu_table(method, coeffs_n)), format);
            }
            return kSuccess;
        }
        if (trees->parsed()) {
            if (trees_n > kTreeCap) {
                throw std::invalid_argument("tree listing is capped at n = " + std::to_string(kTreeCap));
            }
            write_table(sink, tree_table(enumerate(trees_n), with_coefficients),
                        resolve_format(format_name, Format::csv));
            return kSuccess;
        }
        if (series->parsed()) {
            const Format format = resolve_format(format_name, Format::csv);
            if (phi_n) {
                const double beta = phi_beta ? *phi_beta : estimate_beta(*phi_n, k_cut);
                write_table(sink, phi_table(*phi_n, beta, emit_phi_curve(*phi_n, beta, k_first, k_last)), format);
            } else if (gen_order) {
                Table table = lhs_series_table(lhs_integral_series(*gen_order));
                table.columns.push_back("note");
                for (auto &row : table.rows) {
                    const bool order4 = std::get<std::string>(row.front()) == "4";
                    row.push_back(order4 ? Cell{std::string("exact value; 11/12969 is a known misprint")} : Cell{});
                }
                write_table(sink, table, format);
            } else if (beta_sweep_flag) {
                write_table(sink, scaling_table(beta_sweep(sweep_first, sweep_last, k_cut)), format);
            } else {
                err << "error: series needs one of --phi, --gen-coeffs, --beta-sweep\n";
                return kUsageError;
            }
            return kSuccess;
        }
        if (bounds->parsed()) {
            const Format format = resolve_format(format_name, Format::csv);
            BoundReport report = bound_report({h_max, t, bound_n});
            if (!tight) {
                report.truncation_tight.reset();
            }
            std::vector<ComparisonRow> rows;
            if (compare) {
                rows = comparison_table(bound_n, h_max, t);
            }
            if (format == Format::json) {
                nlohmann::json j = to_json(report);
                if (!tight) {
                    j.erase("truncation_bound_tight");
                }
                if (compare) {
                    j["comparison"] = to_json(comparison_to_table(rows));
                }
                sink << j.dump(2) << '\n';
            } else {
                Table table = bound_table(report);
                if (!tight) {
                    std::erase_if(table.rows, [](const auto &row) {
                        return std::get<std::string>(row.front()) == "truncation_bound_tight";
                    });
                }
                write_table(sink, table, format);
                if (compare) {
                    sink << '\n';
                    write_table(sink, comparison_to_table(rows), format);
                }
            }
            return kSuccess;
        }
        if (verify->parsed()) {
            std::vector<Check> checks;
            auto add = [&](std::vector<Check> more) { checks.insert(checks.end(), more.begin(), more.end()); };
            if (suite == "coefficients" || suite == "all") {
                add(verify_coefficients());
            }
            if (suite == "envelope" || suite == "all") {
                add(verify_envelope());
            }
            if (suite == "ode" || suite == "all") {
                add(verify_ode());
            }
            if (suite == "beta" || suite == "all") {
                add(verify_beta());
            }
            write_table(sink, checks_table(checks), resolve_format(format_name, Format::pretty));
            const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
            return ok ? kSuccess : kVerificationFailure;
        }
        if (simulate->parsed()) {
            const numeric::RunConfig config = numeric::load_run_config(config_path);
            const numeric::GeneratorFunction gen = numeric::make_generator(config);
            const double horizon = numeric::resolve_horizon(config, gen);
            gen.check_hermitian(horizon);
            if (!dump_path.empty()) {
                std::ofstream dump(dump_path);
                if (!dump) {
                    err << "error: cannot open " << dump_path << " for writing\n";
                    return kUsageError;
                }
                for (std::size_t k = 0; k < config.coefficients.size(); ++k) {
                    dump << "# P" << k << '\n';
                    dump_matrix_csv(dump, config.coefficients[k]);
                }
            }
            const numeric::ValidationReport report =
                numeric::validate_bounds(gen, horizon, numeric::make_validation_options(config));
            const Format format = resolve_format(format_name, Format::json);
            if (format == Format::json) {
                sink << to_json(report).dump(2) << '\n';
            } else {
                write_table(sink, validation_table(report), format);
            }
            for (const auto &reason : report.rejection_reasons) {
                err << "rejected: " << reason << '\n';
            }
            return report.pass ? kSuccess : kVerificationFailure;
        }
    } catch (const numeric::QuadratureError &e) {
        err << "error: " << e.what() << '\n';
        return kNonConvergence;
    } catch (const numeric::ConvergenceError &e) {
        err << "error: " << e.what() << '\n';
        return kNonConvergence;
    } catch (const BracketingError &e) {
        err << "error: " << e.what() << '\n';
        return kNonConvergence;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace magnus::cli
