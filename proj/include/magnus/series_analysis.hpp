#ifndef MAGNUS_SERIES_ANALYSIS_HPP
#define MAGNUS_SERIES_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <magnus/coefficients.hpp>
#include <magnus/power_series.hpp>

namespace magnus
{

/// (f/2) cot(f/2) = sum_k (-1)^k B_{2k} f^{2k} / (2k)!, truncated at `order`.
PowerSeries cot_half_series(std::size_t order);

/// sum_{r=1}^{order} |B_r| / r! f^r, i.e. f/2 - (f/2) cot(f/2) + 1.
PowerSeries abs_bernoulli_series(std::size_t order);

/// An antiderivative kept as `log_coefficient * log(f) + series(f)`. The
/// logarithmic part is never expanded.
struct LogSeries {
    Rational log_coefficient;
    PowerSeries series;

    /// d/df of the power-series part plus log_coefficient / f, returned as
    /// f times the derivative so that it stays a power series.
    PowerSeries f_times_derivative() const;
};

/// Antiderivative of 1 / (f/2 - (f/2) cot(f/2) + 1) about f = 0, with the
/// power-series part known through f^order. Requires order >= 5.
/// The f^4 coefficient is 11/12960.
LogSeries lhs_integral_series(std::size_t order);

struct OdeReport {
    bool pass = false;
    std::size_t checked_through = 0; // highest order compared
    std::optional<std::size_t> first_failing_order;
    std::optional<Rational> lhs_at_failure;
    std::optional<Rational> rhs_at_failure;
};

/// Checks, coefficient by coefficient through x^{n_max - 1}, that
/// f = sum nu_n x^n satisfies [x^k] df/dx = [x^k] (f/2 - (f/2) cot(f/2) + 1)
/// for every k >= 1, and that [x^0] df/dx equals the seed nu_1 = 1 (the
/// composed series has no constant term).
OdeReport verify_ode(const NuTable &table, std::size_t n_max);

class RangeError : public std::range_error
{
public:
    using std::range_error::range_error;
};

class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class BracketingError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// (6 / (2^n n!)) sum_{k=1}^{k_cut} k^{k+n-1} / k! * beta^{-k}, accumulated in
/// the log domain.
double nu_hat(std::size_t n, double beta, std::size_t k_cut);

/// One term of nu_hat's sum, prefactor included.
double nu_hat_term(std::size_t n, std::size_t k, double beta);

struct BetaBracket {
    double lo;
    double hi;
};

BetaBracket default_beta_bracket();

/// Bisection solve of nu_hat(n, beta, k_cut) = nu_n, run until the bracket
/// is two adjacent doubles (far inside a 1e-9 relative tolerance).
double estimate_beta(std::size_t n, const Rational &nu_n, std::size_t k_cut = 60,
                     BetaBracket bracket = default_beta_bracket());

/// Convenience: uses the exact recursion for nu_n.
double estimate_beta(std::size_t n, std::size_t k_cut = 60);

struct ThetaDelta {
    double theta;
    double delta;
};

/// theta = ln(beta) - 1, delta = e^{1 + 1/theta} / (beta^{1/theta} theta).
ThetaDelta delta_from_beta(double beta);

/// Stirling envelope of the k-th term:
/// (6/2pi) (e/2)^n n^{-(n+1/2)} k^{n-3/2} (e/beta)^k.
double phi(std::size_t n, double k, double beta);

/// (n - 3/2) / theta.
double phi_argmax(std::size_t n, double beta);

/// (beta/e)^{3/(2 theta)} theta^{3/2} delta^n n^{-2} 2^{-n}.
double phi_peak_bound(std::size_t n, double beta);

std::vector<std::pair<std::size_t, double>> emit_phi_curve(std::size_t n, double beta, std::size_t k_first,
                                                           std::size_t k_last);

struct ScalingReport {
    std::size_t n = 0;
    std::size_t k_cut = 0;
    double beta = 0;
    double theta = 0;
    double delta = 0;
    double k_max = 0;
};

ScalingReport scaling_report(std::size_t n, const Rational &nu_n, std::size_t k_cut = 60);

/// Rows n = n_first..n_last using the exact recursion.
std::vector<ScalingReport> beta_sweep(std::size_t n_first = 10, std::size_t n_last = 24, std::size_t k_cut = 60);

} // namespace magnus

#endif
