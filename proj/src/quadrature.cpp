#include <magnus/quadrature.hpp>

#include <cmath>

namespace magnus::numeric
{

void validate(const QuadratureConfig &config)
{
    if (config.intervals < 8 || config.intervals % 2 != 0) {
        throw std::invalid_argument("quadrature grid must have an even number of intervals >= 8");
    }
    if (config.scheme != "simpson") {
        throw std::invalid_argument("unknown quadrature scheme: " + config.scheme);
    }
    if (!(config.tolerance > 0.0) || !std::isfinite(config.tolerance)) {
        throw std::invalid_argument("quadrature tolerance must be positive");
    }
}

CumulativeWeights::CumulativeWeights(std::size_t intervals, double h)
    : intervals_(intervals), w_((intervals + 1) * (intervals + 1), 0.0)
{
    if (intervals < 2 || intervals % 2 != 0) {
        throw std::invalid_argument("cumulative weights need an even number of intervals");
    }
    const std::size_t stride = intervals + 1;
    auto at = [&](std::size_t i, std::size_t j) -> double & { return w_[i * stride + j]; };
    for (std::size_t i = 2; i <= intervals; i += 2) {
        for (std::size_t j = 0; j + 2 <= i; j += 2) {
            at(i, j) += h / 3.0;
            at(i, j + 1) += 4.0 * h / 3.0;
            at(i, j + 2) += h / 3.0;
        }
    }
    at(1, 0) = 5.0 * h / 12.0;
    at(1, 1) = 8.0 * h / 12.0;
    at(1, 2) = -h / 12.0;
    for (std::size_t i = 3; i <= intervals; i += 2) {
        for (std::size_t j = 0; j < i; ++j) {
            at(i, j) = at(i - 1, j);
        }
        at(i, i - 2) -= h / 12.0;
        at(i, i - 1) += 8.0 * h / 12.0;
        at(i, i) += 5.0 * h / 12.0;
    }
}

std::vector<Matrix> cumulative_integral(std::span<const Matrix> f, double h)
{
    const std::size_t m = f.size() - 1;
    if (f.size() < 3 || m % 2 != 0) {
        throw std::invalid_argument("cumulative integral needs an even number of intervals");
    }
    const auto rows = f[0].rows();
    std::vector<Matrix> out(f.size(), Matrix::Zero(rows, rows));
    out[1] = h / 12.0 * (5.0 * f[0] + 8.0 * f[1] - f[2]);
    for (std::size_t i = 2; i <= m; i += 2) {
        out[i] = out[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
        if (i + 1 <= m) {
            out[i + 1] = out[i] + h / 12.0 * (-f[i - 1] + 8.0 * f[i] + 5.0 * f[i + 1]);
        }
    }
    return out;
}

Matrix simpson(std::span<const Matrix> f, double h)
{
    const std::size_t m = f.size() - 1;
    if (f.size() < 3 || m % 2 != 0) {
        throw std::invalid_argument("Simpson rule needs an even number of intervals");
    }
    Matrix acc = f[0] + f[m];
    for (std::size_t i = 1; i < m; ++i) {
        acc += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
    }
    return h / 3.0 * acc;
}

QuadratureResult refine(const std::function<Matrix(std::size_t)> &on_grid, const QuadratureConfig &config)
{
    validate(config);
    std::size_t intervals = config.intervals;
    Matrix previous = on_grid(intervals);
    for (std::size_t level = 0; level < config.max_refinements; ++level) {
        intervals *= 2;
        const Matrix current = on_grid(intervals);
        const Matrix correction = (current - previous) / 15.0;
        const double err = op_norm(correction);
        if (err <= config.tolerance * std::max(1.0, op_norm(current))) {
            return {current + correction, err, intervals};
        }
        previous = current;
    }
    throw QuadratureError("quadrature did not reach tolerance after " + std::to_string(config.max_refinements) +
                          " refinements (" + std::to_string(intervals) + " intervals)");
}

} // namespace magnus::numeric
