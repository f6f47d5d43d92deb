// Acceptance suite: one PASS/FAIL line per criterion; exits 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include <magnus/bounds.hpp>
#include <magnus/coefficients.hpp>
#include <magnus/magnus_terms.hpp>
#include <magnus/propagator.hpp>
#include <magnus/series_analysis.hpp>
#include <magnus/validation.hpp>

#include "cli.hpp"

using namespace magnus;
using Clock = std::chrono::steady_clock;

namespace
{

// Tolerances and limits.
constexpr double kTable1Seconds = 1.0;
constexpr double kEnumerationSeconds = 30.0;
constexpr double kEnvelopeSeconds = 120.0;
constexpr double kBetaRelTol = 1e-3;
constexpr double kBeta10Target = 8.233432;
constexpr double kBeta24Target = 8.32685;
constexpr double kDeltaTarget = 0.902362;
constexpr double kDeltaAbsTol = 5e-4;
constexpr double kHalfBound = 0.03125;
constexpr double kHalfBoundTol = 1e-12;
constexpr int kNumericInstances = 20;
constexpr double kNumericX = 0.3;
constexpr double kTreeDirectRelTol = 1e-6;
constexpr double kNumericSeconds = 300.0;
constexpr double kUnitarityTol = 1e-10;
constexpr double kConstantTermTol = 1e-10;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome table_one()
{
    const std::vector<std::string> expected = {
        "1",         "1/4",          "5/72",           "11/576",
        "479/86400", "1769/1036800", "34091/60963840", "943633/4877107200",
        "92107357/1316818944000",    "688988827/26336378880000",
    };
    const auto start = Clock::now();
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli({"coeffs", "10", "--method", "recursion"}, out, err);
    const double elapsed = seconds_since(start);
    if (code != 0) {
        return {false, "exit code " + std::to_string(code)};
    }
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    std::size_t n = 0;
    while (std::getline(in, line)) {
        const auto a = line.find(',');
        const auto b = line.find(',', a + 1);
        const std::string nu = line.substr(a + 1, b - a - 1);
        if (n >= expected.size() || nu != expected[n]) {
            return {false, fmt::format("row {}: {}", n + 1, nu)};
        }
        ++n;
    }
    const bool ok = n == expected.size() && elapsed < kTable1Seconds;
    return {ok, fmt::format("{} rows exact, {:.3f} s", n, elapsed)};
}

Outcome enumeration_oracle()
{
    const auto start = Clock::now();
    const auto rec = nu_recursive(10);
    for (std::size_t n = 1; n <= 10; ++n) {
        if (nu_enumeration(n) != rec.at(n)) {
            return {false, fmt::format("mismatch at n = {}", n)};
        }
    }
    const double elapsed = seconds_since(start);
    return {elapsed < kEnumerationSeconds, fmt::format("n = 1..10 equal, {:.3f} s", elapsed)};
}

Outcome integral_oracle()
{
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const auto &t : enumerate(n).members) {
            if (mu(t) != mu_oracle(t)) {
                return {false, "mismatch at " + serialize(t)};
            }
            ++checked;
        }
    }
    const Rational seven = mu(parse("((L) ((L) L))"));
    return {seven == Rational(1, 112), fmt::format("{} trees equal, seven-leaf mu = {}", checked, seven.str())};
}

Outcome envelope()
{
    const auto start = Clock::now();
    const auto rec = nu_recursive(24);
    std::size_t first_six = 0;
    for (std::size_t n = 1; n <= 24; ++n) {
        const double v = rec.at(n).to_double();
        if (v > coefficient_envelope(n, 8.0)) {
            return {false, fmt::format("c = 8 fails at n = {}", n)};
        }
        if (first_six == 0 && v > coefficient_envelope(n, 6.0)) {
            first_six = n;
        }
    }
    const double elapsed = seconds_since(start);
    return {first_six != 0 && elapsed < kEnvelopeSeconds,
            fmt::format("c = 8 holds for n <= 24, c = 6 first fails at n = {}, {:.3f} s", first_six, elapsed)};
}

Outcome generating_function()
{
    const auto table = nu_recursive(17);
    const auto ode = verify_ode(table, 17);
    const auto ls = lhs_integral_series(5);
    const bool printed = ls.series[1] == Rational(-1, 3) && ls.series[2] == Rational(1, 36) &&
                         ls.series[3] == Rational(-2, 405) && ls.series[5] == Rational(-29, 170100);
    // The order-4 coefficient is checked against the independent series
    // oracle: f S'(f) g(f)/f must reproduce 1 - 2 g(f)/f through order 5.
    const auto g = abs_bernoulli_series(6).divide_by_x();
    const auto product = ls.f_times_derivative() * g;
    bool order4 = product[0] == Rational(1);
    for (std::size_t k = 1; k <= product.order(); ++k) {
        order4 = order4 && product[k].is_zero();
    }
    const bool ok = ode.pass && ode.checked_through >= 16 && printed && order4;
    return {ok, fmt::format("ODE exact through order {}; order-4 coefficient {} (printed 11/12969 differs)",
                            ode.checked_through, ls.series[4].str())};
}

Outcome scaling_constants()
{
    const double beta10 = estimate_beta(10, 60);
    const double beta24 = estimate_beta(24, 60);
    const auto sweep = beta_sweep(10, 24, 60);
    double max_delta = 0.0;
    for (const auto &row : sweep) {
        max_delta = std::max(max_delta, row.delta);
    }
    const double r10 = std::abs(beta10 - kBeta10Target) / kBeta10Target;
    const double r24 = std::abs(beta24 - kBeta24Target) / kBeta24Target;
    const double dd = std::abs(max_delta - kDeltaTarget);
    const bool ok = r10 <= kBetaRelTol && r24 <= kBetaRelTol && dd <= kDeltaAbsTol;
    return {ok, fmt::format("beta(10) = {:.9g} (rel {:.2e}), beta(24) = {:.9g} (rel {:.2e}), max delta = {:.9g} "
                            "(abs {:.2e})",
                            beta10, r10, beta24, r24, max_delta, dd)};
}

Outcome bound_algebra()
{
    for (int i = 1; i <= 9; ++i) {
        const double x = 0.1 * i;
        const double h = x / Constants::delta_xi;
        for (std::size_t N = 1; N <= 8; ++N) {
            const auto simple = truncation_bound(N, h, 1.0);
            const auto tight = truncation_bound_tight(N, h, 1.0);
            if (!simple || !tight || *tight > *simple) {
                return {false, fmt::format("tight > simple at x = {:.1f}, N = {}", x, N)};
            }
        }
    }
    const double half = *truncation_bound(3, 0.5 / Constants::delta_xi, 1.0);
    const double diff = std::abs(half - kHalfBound);
    return {diff <= kHalfBoundTol, fmt::format("tight <= simple on 72 points; bound(3, x = 1/2) - 1/32 = {:.2e}", diff)};
}

Outcome numerical_validation()
{
    using namespace magnus::numeric;
    const auto start = Clock::now();
    double worst_term_margin = INFINITY;
    double worst_trunc_margin = INFINITY;
    double worst_m3 = 0.0;
    for (int seed = 0; seed < kNumericInstances; ++seed) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(1000 + seed));
        const auto inst = random_affine_instance(2, kNumericX, rng);
        ValidationOptions opts;
        opts.n_max = 4;
        const auto rep = validate_bounds(inst.generator, inst.t, opts);
        if (rep.rejected) {
            return {false, fmt::format("instance {} rejected", seed)};
        }
        for (const auto &row : rep.terms) {
            if (!row.pass) {
                return {false, fmt::format("instance {}: ||M_{}|| = {:.6g} > {:.6g}", seed, row.n, row.measured,
                                           row.bound)};
            }
            worst_term_margin = std::min(worst_term_margin, row.margin);
        }
        for (const auto &row : rep.truncation) {
            if (row.N > 3) {
                continue;
            }
            if (!row.applicable || !row.pass) {
                return {false, fmt::format("instance {}: truncation N = {} fails", seed, row.N)};
            }
            worst_trunc_margin = std::min(worst_trunc_margin, *row.margin);
        }
        const auto tree = magnus_term_tree(3, inst.generator, inst.t);
        const auto direct = magnus_term_direct(3, inst.generator, inst.t);
        worst_m3 = std::max(worst_m3, op_norm(tree.value - direct.value) / op_norm(tree.value));
    }
    const double elapsed = seconds_since(start);
    const bool ok = worst_m3 <= kTreeDirectRelTol && elapsed < kNumericSeconds;
    return {ok, fmt::format("{} instances; min term margin {:.3e}, min truncation margin {:.3e}, tree vs direct M_3 "
                            "rel {:.2e}, {:.2f} s",
                            kNumericInstances, worst_term_margin, worst_trunc_margin, worst_m3, elapsed)};
}

Outcome structural_invariants()
{
    using namespace magnus::numeric;
    std::mt19937_64 rng(4242);
    double worst_unitary = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const auto inst = random_affine_instance(2 + trial % 3, 0.6, rng);
        const auto terms = magnus_terms(4, inst.generator, inst.t);
        std::vector<Matrix> values;
        for (const auto &t : terms) {
            values.push_back(t.value);
        }
        for (std::size_t N = 1; N <= 4; ++N) {
            const Matrix u = truncated_propagator(N, values);
            const double defect = op_norm(u.adjoint() * u - identity(static_cast<int>(u.rows())));
            worst_unitary = std::max(worst_unitary, defect);
        }
    }
    double worst_constant = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        const auto gen = GeneratorFunction::constant(random_hermitian(2 + trial, rng));
        for (std::size_t n = 2; n <= kMaxTreeOrder; ++n) {
            worst_constant = std::max(worst_constant, op_norm(magnus_term_tree(n, gen, 0.9).value));
        }
    }
    const bool ok = worst_unitary <= kUnitarityTol && worst_constant < kConstantTermTol;
    return {ok, fmt::format("max unitarity defect {:.2e}; max ||M_n|| (n >= 2, constant H) {:.2e}", worst_unitary,
                            worst_constant)};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"table of exact coefficients", table_one},
        {"enumeration equals recursion", enumeration_oracle},
        {"integral coefficients equal the unfolded oracle", integral_oracle},
        {"coefficient envelope and minimal constant", envelope},
        {"generating-function ODE and lhs series", generating_function},
        {"scaling constants", scaling_constants},
        {"bound algebra", bound_algebra},
        {"numerical validation of the bounds", numerical_validation},
        {"structural invariants", structural_invariants},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " | "
                  << o.detail << '\n';
    }
    // Where the targets of criterion 6 actually sit in the sweep.
    const auto sweep = beta_sweep(10, 24, 60);
    const auto lo = std::min_element(sweep.begin(), sweep.end(), [](auto &a, auto &b) { return a.beta < b.beta; });
    const auto hi = std::max_element(sweep.begin(), sweep.end(), [](auto &a, auto &b) { return a.beta < b.beta; });
    std::cout << fmt::format("INFO criterion 6: sweep n = 10..24 has min beta {:.9g} at n = {} and max beta {:.9g} at "
                             "n = {}\n",
                             lo->beta, lo->n, hi->beta, hi->n);
    std::cout << failures << " of " << criteria.size() << " criteria failed\n";
    return failures == 0 ? 0 : 1;
}
