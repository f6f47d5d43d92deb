#ifndef MAGNUS_VALIDATION_HPP
#define MAGNUS_VALIDATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <magnus/generator.hpp>
#include <magnus/propagator.hpp>
#include <magnus/quadrature.hpp>

namespace magnus::numeric
{

struct ValidationOptions {
    std::size_t n_max = 4;
    QuadratureConfig quadrature;
    double propagator_tol = 1e-11;
    PropagatorOptions propagator;
    double slack_floor = 1e-12;
    // Eigenvalues within this distance of -1 make the principal log unreliable.
    double branch_margin = 1e-2;
};

struct TermRow {
    std::size_t n = 0;
    double measured = 0.0; // ||M_n||
    double bound = 0.0;    // 4 x^n / n^2
    double slack = 0.0;    // quadrature error estimate + floor
    double margin = 0.0;   // bound + slack - measured
    bool anti_hermitian_defect_small = true;
    bool pass = false;
};

struct TruncationRow {
    std::size_t N = 0;
    bool applicable = false; // x < 1 and the log branch is safe
    std::optional<double> measured;     // ||log U_ref - M^(N)||
    std::optional<double> bound;        // 4/(N+1)^2 x^{N+1}/(1-x)
    std::optional<double> bound_tight;  // 4 sum_{m>N} x^m/m^2
    double slack = 0.0;
    std::optional<double> margin;
    double propagator_difference = 0.0; // ||U_ref - exp(M^(N))||, reported only
    bool pass = true;
};

struct ValidationReport {
    int dimension = 0;
    double t = 0.0;
    double h_max = 0.0;
    double x = 0.0;
    std::size_t n_max = 0;
    std::vector<TermRow> terms;
    std::vector<TruncationRow> truncation;
    double reference_error_estimate = 0.0;
    std::size_t reference_steps = 0;
    bool rejected = false;
    std::vector<std::string> rejection_reasons;
    // True iff every evaluated row satisfies measured <= bound + slack.
    bool pass = false;
};

// Measures ||M_n|| against the per-term bound for n <= n_max and the exponent
// defect ||log U_ref - sum_{n<=N} M_n|| against the truncation bound for
// N <= n_max. Truncation rows need x < 1; near-branch instances are
// rejected (rows marked not applicable) rather than counted as violations.
ValidationReport validate_bounds(const GeneratorFunction &gen, double t, const ValidationOptions &options = {});

} // namespace magnus::numeric

#endif
