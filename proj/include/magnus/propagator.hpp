#ifndef MAGNUS_PROPAGATOR_HPP
#define MAGNUS_PROPAGATOR_HPP

#include <cstddef>
#include <span>
#include <stdexcept>

#include <magnus/generator.hpp>
#include <magnus/quadrature.hpp>

namespace magnus::numeric
{

class ConvergenceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct PropagatorOptions {
    std::size_t initial_steps = 16;
    std::size_t max_doublings = 16;
};

struct PropagatorResult {
    Matrix value;
    double error_estimate = 0.0;
    std::size_t steps = 0;
};

// Time-ordered exponential by the exponential midpoint rule
// U = prod_k exp(h A(t_k + h/2)), later times to the left. The step count is
// doubled until two Richardson-extrapolated levels differ by less than tol
// in operator norm.
PropagatorResult reference_propagator(const GeneratorFunction &gen, double t, double tol,
                                      const PropagatorOptions &options = {});

// exp(M_1 + ... + M_N) with tree-formula terms. N <= 6.
Matrix truncated_propagator(std::size_t N, const GeneratorFunction &gen, double t,
                            const QuadratureConfig &config = {});
// Same from precomputed terms M_1, M_2, ...; uses the first N.
Matrix truncated_propagator(std::size_t N, std::span<const Matrix> terms);

} // namespace magnus::numeric

#endif
