#include <magnus/propagator.hpp>

#include <string>

#include <magnus/magnus_terms.hpp>

namespace magnus::numeric
{

namespace
{

Matrix midpoint_product(const GeneratorFunction &gen, double t, std::size_t steps)
{
    const double h = t / static_cast<double>(steps);
    Matrix u = identity(gen.dimension());
    for (std::size_t k = 0; k < steps; ++k) {
        const double mid = (static_cast<double>(k) + 0.5) * h;
        u = (expm(h * gen.evaluate(mid)) * u).eval();
    }
    return u;
}

} // namespace

PropagatorResult reference_propagator(const GeneratorFunction &gen, double t, double tol,
                                      const PropagatorOptions &options)
{
    if (!(tol > 0.0)) {
        throw std::invalid_argument("propagator tolerance must be positive");
    }
    if (!(t >= 0.0)) {
        throw std::invalid_argument("propagation time must be non-negative");
    }
    std::size_t steps = std::max<std::size_t>(options.initial_steps, 1);
    Matrix coarse = midpoint_product(gen, t, steps);
    Matrix previous_extrapolated;
    bool have_previous = false;
    for (std::size_t level = 0; level < options.max_doublings; ++level) {
        steps *= 2;
        const Matrix fine = midpoint_product(gen, t, steps);
        // Second-order method: error ratio 4 per halving.
        const Matrix extrapolated = fine + (fine - coarse) / 3.0;
        if (have_previous) {
            const double change = op_norm(extrapolated - previous_extrapolated);
            if (change < tol) {
                return {extrapolated, change, steps};
            }
        }
        previous_extrapolated = extrapolated;
        have_previous = true;
        coarse = fine;
    }
    throw ConvergenceError("reference propagator did not converge to " + std::to_string(tol) + " within " +
                           std::to_string(steps) + " steps");
}

Matrix truncated_propagator(std::size_t N, std::span<const Matrix> terms)
{
    if (N < 1 || N > terms.size()) {
        throw std::invalid_argument("truncation order exceeds the available terms");
    }
    Matrix sum = terms[0];
    for (std::size_t n = 1; n < N; ++n) {
        sum += terms[n];
    }
    return expm(sum);
}

Matrix truncated_propagator(std::size_t N, const GeneratorFunction &gen, double t, const QuadratureConfig &config)
{
    if (N < 1 || N > kMaxTreeOrder) {
        throw std::invalid_argument("truncation order must lie in 1.." + std::to_string(kMaxTreeOrder));
    }
    std::vector<Matrix> terms;
    for (const auto &r : magnus_terms(N, gen, t, config)) {
        terms.push_back(r.value);
    }
    return truncated_propagator(N, terms);
}

} // namespace magnus::numeric
