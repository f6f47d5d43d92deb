#ifndef MAGNUS_MAGNUS_TERMS_HPP
#define MAGNUS_MAGNUS_TERMS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <magnus/generator.hpp>
#include <magnus/quadrature.hpp>

namespace magnus::numeric
{

// All routines work with A = -iH and hbar = 1, so the tree formula and the
// textbook 1/(i hbar)^n prefactors coincide.

inline constexpr std::size_t kMaxTreeOrder = 6;
inline constexpr std::size_t kMaxDirectOrder = 4;

// Samples A(t_i) on the uniform grid t_i = i t / intervals.
std::vector<Matrix> sample_generator(const GeneratorFunction &gen, double t, std::size_t intervals);

// Single-grid evaluations (no refinement).
Matrix magnus_term_tree_on_grid(std::size_t n, std::span<const Matrix> samples, double h);
Matrix magnus_term_direct_on_grid(std::size_t n, std::span<const Matrix> samples, double h);

// M_n = sum over trees with alpha != 0 of alpha * int_0^t H_tau, with every
// subtree's running integral tabulated once per grid. n <= 6.
QuadratureResult magnus_term_tree(std::size_t n, const GeneratorFunction &gen, double t,
                                  const QuadratureConfig &config = {});

// Nested simplex integrals of the explicit M_1..M_4 commutator formulas.
QuadratureResult magnus_term_direct(std::size_t n, const GeneratorFunction &gen, double t,
                                    const QuadratureConfig &config = {});

// M_1..M_{n_max} from the tree formula.
std::vector<QuadratureResult> magnus_terms(std::size_t n_max, const GeneratorFunction &gen, double t,
                                           const QuadratureConfig &config = {});

} // namespace magnus::numeric

#endif
