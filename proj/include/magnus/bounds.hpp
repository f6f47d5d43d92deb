#ifndef MAGNUS_BOUNDS_HPP
#define MAGNUS_BOUNDS_HPP

#include <cstddef>
#include <optional>
#include <vector>

namespace magnus
{

// Universal Magnus convergence radius and its reciprocal. delta_xi is kept
// as the literal decimal so outputs are bit-stable.
struct Constants {
    static constexpr double xi = 1.086869;
    static constexpr double delta_xi = 0.920075;
    static constexpr double envelope_constant = 8.0;
    static constexpr double term_constant = 4.0;
};

// All bound values are rounded one ulp upward at the final operation
// (exact zeros stay zero), so they never under-report.
double round_up(double value);

// m(n) = c * delta_xi^n * n^{-2} * 2^{-n}, default c = 8.
double coefficient_envelope(std::size_t n, double constant = Constants::envelope_constant);

// x = delta_xi * h_max * t
double scaled_time(double h_max, double t);

// ||M_n|| <= c (delta_xi h_max t)^n / n^2, default c = 4.
double magnus_term_bound(std::size_t n, double h_max, double t, double constant = Constants::term_constant);

// Same bound reached through the tree coefficients:
// 2^{n-1} (h_max t)^n m(n).
double magnus_term_bound_via_envelope(std::size_t n, double h_max, double t);

// c/(N+1)^2 * x^{N+1}/(1-x); nullopt (diverged) unless x < 1.
std::optional<double> truncation_bound(std::size_t N, double h_max, double t,
                                       double constant = Constants::term_constant);

// c * sum_{m >= N+1} x^m / m^2, summed until the geometric tail estimate of
// the remainder drops below rel_tol times the partial sum. At x = 1 the
// p-series tail is evaluated in closed form (trigamma). nullopt when x > 1.
std::optional<double> truncation_bound_tight(std::size_t N, double h_max, double t, double rel_tol = 1e-12,
                                             double constant = Constants::term_constant);

struct BoundInput {
    double h_max = 0;
    double t = 0;
    std::size_t N = 1;
};

struct PerTermBound {
    std::size_t n;
    double bound;
};

struct BoundReport {
    BoundInput input;
    double x = 0;
    std::vector<PerTermBound> per_term;
    std::optional<double> truncation_simple;
    std::optional<double> truncation_tight;
    bool converged = false;
};

// Validates h_max >= 0, t >= 0, N >= 1 (std::invalid_argument otherwise).
BoundReport bound_report(const BoundInput &input, double rel_tol = 1e-12);

struct ComparisonRow {
    std::size_t n;
    double bound_new;   // 4 x^n / n^2
    double bound_prior; // pi x^n
    double ratio;       // new / prior, 0 when both vanish
};

// Rows n = 1..N against the earlier structure-free bound pi * x^n
// (constant-norm specialization).
std::vector<ComparisonRow> comparison_table(std::size_t N, double h_max, double t);

} // namespace magnus

#endif
