#ifndef MAGNUS_QUADRATURE_HPP
#define MAGNUS_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <magnus/linalg.hpp>

namespace magnus::numeric
{

struct QuadratureConfig {
    std::size_t intervals = 32; // initial uniform grid, even, >= 8
    std::string scheme = "simpson";
    double tolerance = 1e-12;   // absolute, scaled by max(1, ||value||)
    std::size_t max_refinements = 6;
};

// Throws std::invalid_argument on a malformed config.
void validate(const QuadratureConfig &config);

class QuadratureError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct QuadratureResult {
    Matrix value;
    double error_estimate = 0.0;
    std::size_t intervals = 0;
};

// Weights of the cumulative rule on a uniform grid of `intervals` steps of
// width h: row i integrates f from t_0 to t_i. Even rows are composite
// Simpson; odd rows add a three-point correction for the last step (row 1
// reaches ahead to t_2). Exact for quadratics on every row.
class CumulativeWeights
{
public:
    CumulativeWeights(std::size_t intervals, double h);

    std::size_t intervals() const noexcept { return intervals_; }
    // Nonzero weights of row i live in columns 0..span_end(i) - 1.
    std::size_t span_end(std::size_t i) const noexcept { return i == 1 ? 3 : i + 1; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return w_[i * (intervals_ + 1) + j]; }

private:
    std::size_t intervals_;
    std::vector<double> w_;
};

// Running integrals F_i = int_0^{t_i} f for samples f_0..f_M.
std::vector<Matrix> cumulative_integral(std::span<const Matrix> samples, double h);
// Composite Simpson over the full grid.
Matrix simpson(std::span<const Matrix> samples, double h);

// Evaluates `on_grid(intervals)` on successively doubled grids until two
// levels agree; returns the Richardson-extrapolated value (fourth order,
// factor 15). Throws QuadratureError after max_refinements doublings.
QuadratureResult refine(const std::function<Matrix(std::size_t)> &on_grid, const QuadratureConfig &config);

} // namespace magnus::numeric

#endif
