#include <magnus/bounds.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/trigamma.hpp>

namespace magnus
{

double round_up(double value)
{
    if (value == 0.0 || !std::isfinite(value)) {
        return value;
    }
    return std::nextafter(value, std::numeric_limits<double>::infinity());
}

double coefficient_envelope(std::size_t n, double constant)
{
    if (n < 1) {
        throw std::invalid_argument("coefficient_envelope needs n >= 1");
    }
    const double nd = static_cast<double>(n);
    return round_up(constant * std::pow(Constants::delta_xi / 2.0, nd) / (nd * nd));
}

double scaled_time(double h_max, double t)
{
    return Constants::delta_xi * h_max * t;
}

double magnus_term_bound(std::size_t n, double h_max, double t, double constant)
{
    if (n < 1) {
        throw std::invalid_argument("magnus_term_bound needs n >= 1");
    }
    // Extended precision keeps the n-fold amplified rounding of x out of the result.
    const long double nd = static_cast<long double>(n);
    const long double x = static_cast<long double>(Constants::delta_xi) * h_max * t;
    return round_up(static_cast<double>(constant * std::pow(x, nd) / (nd * nd)));
}

double magnus_term_bound_via_envelope(std::size_t n, double h_max, double t)
{
    if (n < 1) {
        throw std::invalid_argument("magnus_term_bound needs n >= 1");
    }
    const long double nd = static_cast<long double>(n);
    const long double m =
        Constants::envelope_constant * std::pow(static_cast<long double>(Constants::delta_xi) / 2.0L, nd) / (nd * nd);
    return round_up(static_cast<double>(std::pow(2.0L, nd - 1.0L) * std::pow(static_cast<long double>(h_max) * t, nd) * m));
}

std::optional<double> truncation_bound(std::size_t N, double h_max, double t, double constant)
{
    if (N < 1) {
        throw std::invalid_argument("truncation order N must be >= 1");
    }
    const double x = scaled_time(h_max, t);
    if (!(x < 1.0)) {
        return std::nullopt;
    }
    const double np1 = static_cast<double>(N) + 1.0;
    return round_up(constant / (np1 * np1) * std::pow(x, np1) / (1.0 - x));
}

std::optional<double> truncation_bound_tight(std::size_t N, double h_max, double t, double rel_tol, double constant)
{
    if (N < 1) {
        throw std::invalid_argument("truncation order N must be >= 1");
    }
    if (!(rel_tol > 0.0)) {
        throw std::invalid_argument("rel_tol must be positive");
    }
    const double x = scaled_time(h_max, t);
    if (x > 1.0) {
        return std::nullopt;
    }
    if (x == 0.0) {
        return 0.0;
    }
    if (x == 1.0) {
        return round_up(constant * boost::math::trigamma(static_cast<double>(N) + 1.0));
    }
    double sum = 0.0;
    double power = std::pow(x, static_cast<double>(N) + 1.0);
    for (std::size_t m = N + 1;; ++m) {
        const double md = static_cast<double>(m);
        sum += power / (md * md);
        power *= x;
        // Remainder after m is at most x^{m+1} / ((m+1)^2 (1-x)).
        const double tail = power / ((md + 1.0) * (md + 1.0) * (1.0 - x));
        if (tail < rel_tol * sum || power == 0.0) {
            break;
        }
    }
    return round_up(constant * sum);
}

BoundReport bound_report(const BoundInput &input, double rel_tol)
{
    if (!(input.h_max >= 0.0) || !(input.t >= 0.0) || input.N < 1 || !std::isfinite(input.h_max) ||
        !std::isfinite(input.t)) {
        throw std::invalid_argument("bound input needs finite h_max >= 0, t >= 0 and N >= 1");
    }
    BoundReport rep;
    rep.input = input;
    rep.x = scaled_time(input.h_max, input.t);
    for (std::size_t n = 1; n <= input.N; ++n) {
        rep.per_term.push_back({n, magnus_term_bound(n, input.h_max, input.t)});
    }
    rep.truncation_simple = truncation_bound(input.N, input.h_max, input.t);
    rep.truncation_tight = truncation_bound_tight(input.N, input.h_max, input.t, rel_tol);
    rep.converged = rep.truncation_simple.has_value();
    return rep;
}

std::vector<ComparisonRow> comparison_table(std::size_t N, double h_max, double t)
{
    if (N < 1) {
        throw std::invalid_argument("comparison table needs N >= 1");
    }
    const double x = scaled_time(h_max, t);
    std::vector<ComparisonRow> rows;
    for (std::size_t n = 1; n <= N; ++n) {
        const double nd = static_cast<double>(n);
        const double xn = std::pow(x, nd);
        ComparisonRow row{n, round_up(Constants::term_constant * xn / (nd * nd)), round_up(std::numbers::pi * xn), 0.0};
        if (row.bound_prior > 0.0) {
            row.ratio = row.bound_new / row.bound_prior;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace magnus
