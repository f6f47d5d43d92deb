#include <doctest.h>

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include <magnus/generator.hpp>
#include <magnus/linalg.hpp>

using namespace magnus::numeric;

namespace
{

Eigen::MatrixXcd to_dense(const Matrix &m)
{
    return Eigen::MatrixXcd(m);
}

double dist(const Matrix &a, const Matrix &b)
{
    return op_norm(a - b);
}

} // namespace

TEST_CASE("operator norm")
{
    CHECK(op_norm(sigma_x()) == doctest::Approx(1.0));
    CHECK(op_norm(identity(3) * Complex(0, 2.5)) == doctest::Approx(2.5));
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 3.0;
    d(1, 1) = -4.0;
    CHECK(op_norm(d) == doctest::Approx(4.0));
}

TEST_CASE("expm matches the reference implementation")
{
    std::mt19937_64 rng(7);
    for (int dim = 1; dim <= kMaxDimension; ++dim) {
        for (double scale : {1e-3, 0.5, 3.0, 40.0}) {
            const Matrix a = random_hermitian(dim, rng) * Complex(0.2, -scale);
            const Eigen::MatrixXcd oracle = to_dense(a).exp();
            const Matrix got = expm(a);
            const double err = (to_dense(got) - oracle).norm();
            CAPTURE(dim);
            CAPTURE(scale);
            CHECK(err <= 1e-11 * std::max(1.0, oracle.norm()));
        }
    }
}

TEST_CASE("exp of a Pauli rotation")
{
    const double theta = 0.4;
    const Matrix u = expm(Complex(0, -theta) * sigma_z());
    CHECK(std::abs(u(0, 0) - std::exp(Complex(0, -theta))) < 1e-15);
    CHECK(std::abs(u(1, 1) - std::exp(Complex(0, theta))) < 1e-15);
    CHECK(dist(logm(u), Complex(0, -theta) * sigma_z()) < 1e-14);
}

TEST_CASE("logm of the identity is zero")
{
    for (int dim = 1; dim <= 4; ++dim) {
        CHECK(op_norm(logm(identity(dim))) < 1e-15);
    }
}

TEST_CASE("logm inverts expm on anti-Hermitian matrices inside the principal strip")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 1 + trial % kMaxDimension;
        Matrix h = random_hermitian(dim, rng);
        h *= 2.5 / op_norm(h);
        const Matrix a = Complex(0, -1) * h;
        const Matrix back = logm(expm(a));
        CAPTURE(trial);
        CHECK(dist(back, a) < 1e-10);
        const Eigen::MatrixXcd oracle = to_dense(expm(a)).log();
        CHECK((to_dense(back) - oracle).norm() < 1e-9);
    }
}

TEST_CASE("logm on a general matrix agrees with the reference")
{
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n(0.0, 0.3);
    Matrix a = identity(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            a(i, j) += Complex(n(rng), n(rng));
        }
    }
    const Matrix l = logm(a);
    CHECK((to_dense(l) - to_dense(a).log()).norm() < 1e-10);
    CHECK(dist(expm(l), a) < 1e-11);
}

TEST_CASE("sqrtm")
{
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = 4.0;
    a(1, 1) = 9.0;
    a(0, 1) = 1.0;
    const Matrix r = sqrtm(a);
    CHECK(dist(r * r, a) < 1e-13);
}

TEST_CASE("logm rejects eigenvalues on the negative real axis")
{
    CHECK_THROWS_AS(logm(-identity(2)), BranchError);
    Matrix singular = identity(2);
    singular(1, 1) = 0.0;
    CHECK_THROWS_AS(logm(singular), BranchError);
}
