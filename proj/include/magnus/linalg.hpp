#ifndef MAGNUS_LINALG_HPP
#define MAGNUS_LINALG_HPP

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace magnus::numeric
{

inline constexpr int kMaxDimension = 8;

using Complex = std::complex<double>;
// Dynamic size with inline storage: no heap traffic in the quadrature loops.
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxDimension, kMaxDimension>;

inline Matrix commutator(const Matrix &a, const Matrix &b)
{
    return a * b - b * a;
}

// Largest singular value.
double op_norm(const Matrix &a);

// exp(A) by scaling and squaring with the [13/13] Pade approximant.
Matrix expm(const Matrix &a);

class BranchError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Principal logarithm by inverse scaling and squaring: repeated principal
// square roots (Denman-Beavers) until U is close to I, then the series of
// log(I + E). Throws BranchError if U has an eigenvalue on the closed
// negative real axis (including 0).
Matrix logm(const Matrix &u);

// Principal square root (Denman-Beavers iteration).
Matrix sqrtm(const Matrix &a);

Matrix identity(int dimension);

} // namespace magnus::numeric

#endif
