#include <magnus/series_analysis.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include <magnus/bernoulli.hpp>

namespace magnus
{

PowerSeries cot_half_series(std::size_t order)
{
    if (order < 2) {
        throw std::invalid_argument("cot_half_series needs order >= 2");
    }
    PowerSeries s(order);
    for (std::size_t k = 0; 2 * k <= order; ++k) {
        Rational c = bernoulli(static_cast<unsigned>(2 * k)) / Rational(factorial(static_cast<unsigned>(2 * k)));
        s[2 * k] = (k % 2 == 0) ? c : -c;
    }
    return s;
}

PowerSeries abs_bernoulli_series(std::size_t order)
{
    PowerSeries s(order);
    for (std::size_t r = 1; r <= order; ++r) {
        s[r] = (bernoulli(static_cast<unsigned>(r)) / Rational(factorial(static_cast<unsigned>(r)))).abs();
    }
    return s;
}

PowerSeries LogSeries::f_times_derivative() const
{
    // f * (c/f + sum k a_k f^{k-1}) = c + sum k a_k f^k
    PowerSeries out(series.order());
    out[0] = log_coefficient;
    for (std::size_t k = 1; k <= series.order(); ++k) {
        out[k] = series[k] * Rational(static_cast<std::int64_t>(k));
    }
    return out;
}

LogSeries lhs_integral_series(std::size_t order)
{
    if (order < 5) {
        throw std::invalid_argument("lhs_integral_series needs order >= 5");
    }
    // g(f) = f/2 - (f/2) cot(f/2) + 1 has zero constant term, so
    // 1/g = (1/f) * q(f) with q = 1/(g/f). The f^{-1} term of 1/g integrates
    // to q_0 log f and the rest term by term.
    const std::size_t g_order = order + 1;
    PowerSeries g = Rational(BigInt(1), BigInt(2)) * PowerSeries::x(g_order) - cot_half_series(g_order) +
                    PowerSeries::constant(Rational(1), g_order);
    PowerSeries q = g.divide_by_x().reciprocal();
    LogSeries out{q[0], PowerSeries(order)};
    for (std::size_t k = 1; k <= order; ++k) {
        out.series[k] = q[k] / Rational(static_cast<std::int64_t>(k));
    }
    return out;
}

OdeReport verify_ode(const NuTable &table, std::size_t n_max)
{
    if (n_max < 1 || n_max > table.n_max()) {
        throw std::invalid_argument("verify_ode: n_max must lie in 1..table.n_max()");
    }
    PowerSeries f(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        f[n] = table.at(n);
    }
    PowerSeries lhs = f.differentiate();
    std::size_t order = n_max - 1;
    PowerSeries rhs = abs_bernoulli_series(std::max<std::size_t>(order, 1)).compose(f.truncate(order));
    OdeReport report;
    report.checked_through = order;
    // The relation is the recursion for n >= 1; at x^0 the derivative is the
    // seed nu_1 = 1 while the composed series vanishes.
    for (std::size_t k = 0; k <= order; ++k) {
        const Rational expected = (k == 0) ? rhs[0] + Rational(1) : rhs[k];
        if (lhs[k] != expected) {
            report.first_failing_order = k;
            report.lhs_at_failure = lhs[k];
            report.rhs_at_failure = expected;
            return report;
        }
    }
    report.pass = true;
    return report;
}

namespace
{

double log_term(std::size_t n, std::size_t k, double log_beta)
{
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    return std::log(6.0) - nd * std::numbers::ln2 - std::lgamma(nd + 1.0) + (kd + nd - 1.0) * std::log(kd) -
           std::lgamma(kd + 1.0) - kd * log_beta;
}

} // namespace

double nu_hat_term(std::size_t n, std::size_t k, double beta)
{
    if (!(beta > 1.0) || k == 0) {
        throw DomainError("nu_hat_term needs beta > 1 and k >= 1");
    }
    return std::exp(log_term(n, k, std::log(beta)));
}

double nu_hat(std::size_t n, double beta, std::size_t k_cut)
{
    if (!(beta > 1.0)) {
        throw DomainError("nu_hat needs beta > 1");
    }
    if (k_cut < 1) {
        throw DomainError("nu_hat needs k_cut >= 1");
    }
    const double lb = std::log(beta);
    std::vector<double> logs(k_cut);
    double peak = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= k_cut; ++k) {
        logs[k - 1] = log_term(n, k, lb);
        peak = std::max(peak, logs[k - 1]);
    }
    double scaled = 0.0;
    for (double l : logs) {
        scaled += std::exp(l - peak);
    }
    double value = std::exp(peak) * scaled;
    if (!std::isfinite(value)) {
        throw RangeError("nu_hat overflows double precision for n = " + std::to_string(n));
    }
    return value;
}

BetaBracket default_beta_bracket()
{
    return {std::numbers::e + 0.1, 100.0};
}

double estimate_beta(std::size_t n, const Rational &nu_n, std::size_t k_cut, BetaBracket bracket)
{
    const double target = nu_n.to_double();
    auto residual = [&](double beta) { return nu_hat(n, beta, k_cut) - target; };
    double lo = bracket.lo;
    double hi = bracket.hi;
    double r_lo = residual(lo);
    double r_hi = residual(hi);
    // nu_hat decreases in beta.
    if (!(r_lo > 0.0 && r_hi < 0.0)) {
        throw BracketingError("no sign change of nu_hat - nu_" + std::to_string(n) + " on [" + std::to_string(lo) +
                              ", " + std::to_string(hi) + "]");
    }
    // Bisect down to adjacent doubles so the residual, not the bracket,
    // limits the accuracy.
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        (residual(mid) > 0.0 ? lo : hi) = mid;
    }
    return std::abs(residual(lo)) < std::abs(residual(hi)) ? lo : hi;
}

double estimate_beta(std::size_t n, std::size_t k_cut)
{
    return estimate_beta(n, nu_recursive(n).at(n), k_cut);
}

ThetaDelta delta_from_beta(double beta)
{
    if (!(beta > std::numbers::e)) {
        throw DomainError("delta needs beta > e (theta = ln beta - 1 > 0)");
    }
    const double theta = std::log(beta) - 1.0;
    const double delta = std::exp(1.0 + 1.0 / theta - std::log(beta) / theta) / theta;
    return {theta, delta};
}

double phi(std::size_t n, double k, double beta)
{
    if (n < 2 || !(k >= 1.0) || !(beta > std::numbers::e)) {
        throw DomainError("phi needs n >= 2, k >= 1 and beta > e");
    }
    const double nd = static_cast<double>(n);
    const double l = std::log(6.0 / (2.0 * std::numbers::pi)) + nd * (1.0 - std::numbers::ln2) -
                     (nd + 0.5) * std::log(nd) + (nd - 1.5) * std::log(k) + k * (1.0 - std::log(beta));
    return std::exp(l);
}

double phi_argmax(std::size_t n, double beta)
{
    if (n < 2) {
        throw DomainError("phi_argmax needs n >= 2");
    }
    return (static_cast<double>(n) - 1.5) / delta_from_beta(beta).theta;
}

double phi_peak_bound(std::size_t n, double beta)
{
    auto [theta, delta] = delta_from_beta(beta);
    const double nd = static_cast<double>(n);
    const double l = (1.5 / theta) * (std::log(beta) - 1.0) + 1.5 * std::log(theta) + nd * std::log(delta) -
                     2.0 * std::log(nd) - nd * std::numbers::ln2;
    return std::exp(l);
}

std::vector<std::pair<std::size_t, double>> emit_phi_curve(std::size_t n, double beta, std::size_t k_first,
                                                           std::size_t k_last)
{
    if (k_first < 1 || k_last < k_first) {
        throw DomainError("phi curve needs 1 <= k_first <= k_last");
    }
    std::vector<std::pair<std::size_t, double>> out;
    out.reserve(k_last - k_first + 1);
    for (std::size_t k = k_first; k <= k_last; ++k) {
        out.emplace_back(k, phi(n, static_cast<double>(k), beta));
    }
    return out;
}

ScalingReport scaling_report(std::size_t n, const Rational &nu_n, std::size_t k_cut)
{
    ScalingReport rep;
    rep.n = n;
    rep.k_cut = k_cut;
    rep.beta = estimate_beta(n, nu_n, k_cut);
    auto [theta, delta] = delta_from_beta(rep.beta);
    rep.theta = theta;
    rep.delta = delta;
    rep.k_max = (static_cast<double>(n) - 1.5) / theta;
    return rep;
}

std::vector<ScalingReport> beta_sweep(std::size_t n_first, std::size_t n_last, std::size_t k_cut)
{
    NuTable table = nu_recursive(n_last);
    std::vector<ScalingReport> rows;
    for (std::size_t n = n_first; n <= n_last; ++n) {
        rows.push_back(scaling_report(n, table.at(n), k_cut));
    }
    return rows;
}

} // namespace magnus
