#ifndef MAGNUS_GENERATOR_HPP
#define MAGNUS_GENERATOR_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include <magnus/linalg.hpp>

namespace magnus::numeric
{

enum class GeneratorFamily { constant, affine, polynomial, sinusoid, custom };

std::string to_string(GeneratorFamily family);

// Matrix-valued generator A(t) = -i H(t) (hbar = 1) together with a
// certified upper bound on sup ||H|| over [0, horizon].
class GeneratorFunction
{
public:
    using Hamiltonian = std::function<Matrix(double)>;
    using NormBound = std::function<double(double)>;

    GeneratorFunction(int dimension, Hamiltonian hamiltonian, NormBound h_max, bool hermitian,
                      GeneratorFamily family = GeneratorFamily::custom);

    // H = P0.
    static GeneratorFunction constant(const Matrix &p0);
    // H(t) = P0 + t P1. ||H(s)|| is convex in s, so the sup over [0, T] is
    // attained at an endpoint and h_max is exact.
    static GeneratorFunction affine(const Matrix &p0, const Matrix &p1);
    // H(t) = sum_k t^k P_k; h_max(T) = sum_k T^k ||P_k||.
    static GeneratorFunction polynomial(std::vector<Matrix> coefficients);
    // H(t) = P0 + sin(omega t) P1 + cos(omega t) P2; h_max = sum ||P_j||.
    static GeneratorFunction sinusoid(const Matrix &p0, const Matrix &p1, const Matrix &p2, double omega);

    int dimension() const noexcept { return dimension_; }
    GeneratorFamily family() const noexcept { return family_; }
    bool hermitian() const noexcept { return hermitian_; }

    Matrix hamiltonian(double t) const { return hamiltonian_(t); }
    // A(t) = -i H(t)
    Matrix evaluate(double t) const;
    double h_max(double horizon) const { return h_max_(horizon); }

    // Throws std::invalid_argument if flagged Hermitian but some sample on
    // [0, horizon] deviates by more than 1e-12.
    void check_hermitian(double horizon, int samples = 33) const;

private:
    int dimension_;
    Hamiltonian hamiltonian_;
    NormBound h_max_;
    bool hermitian_;
    GeneratorFamily family_;
};

// Pauli matrices.
Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();

// Hermitian matrix with i.i.d. standard normal real/imaginary parts.
Matrix random_hermitian(int dimension, std::mt19937_64 &rng);

struct Instance {
    GeneratorFunction generator;
    double t;
};

// Affine instance H(t) = P0 + t P1 with random Hermitian P0, P1 and t = 1,
// rescaled so that delta_xi * h_max * t = x exactly.
Instance random_affine_instance(int dimension, double x, std::mt19937_64 &rng);

// Horizon t with delta_xi * h_max(t) * t = x (bisection; h_max non-decreasing).
double horizon_for_scaled_time(const GeneratorFunction &gen, double x);

} // namespace magnus::numeric

#endif
