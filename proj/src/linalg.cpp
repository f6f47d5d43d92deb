#include <magnus/linalg.hpp>

#include <array>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace magnus::numeric
{

namespace
{

double one_norm(const Matrix &a)
{
    return a.cwiseAbs().colwise().sum().maxCoeff();
}

} // namespace

Matrix identity(int dimension)
{
    return Matrix::Identity(dimension, dimension);
}

double op_norm(const Matrix &a)
{
    if (a.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues()(0);
}

Matrix expm(const Matrix &a)
{
    constexpr std::array<double, 14> b = {64764752532480000.0,
                                          32382376266240000.0,
                                          7771770303897600.0,
                                          1187353796428800.0,
                                          129060195264000.0,
                                          10559470521600.0,
                                          670442572800.0,
                                          33522128640.0,
                                          1323241920.0,
                                          40840800.0,
                                          960960.0,
                                          16380.0,
                                          182.0,
                                          1.0};
    constexpr double theta13 = 5.371920351148152;

    const int n = static_cast<int>(a.rows());
    const double norm = one_norm(a);
    int squarings = 0;
    if (norm > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
    }
    const Matrix scaled = a / std::ldexp(1.0, squarings);
    const Matrix id = identity(n);
    const Matrix a2 = scaled * scaled;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;
    const Matrix inner_u = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id;
    const Matrix u = scaled * inner_u;
    const Matrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
    Matrix r = (v - u).partialPivLu().solve(v + u);
    for (int k = 0; k < squarings; ++k) {
        r = r * r;
    }
    return r;
}

Matrix sqrtm(const Matrix &a)
{
    const int n = static_cast<int>(a.rows());
    Matrix y = a;
    Matrix z = identity(n);
    for (int iter = 0; iter < 100; ++iter) {
        const Matrix y_inv = y.partialPivLu().inverse();
        const Matrix z_inv = z.partialPivLu().inverse();
        Matrix y_next = 0.5 * (y + z_inv);
        z = 0.5 * (z + y_inv);
        const double change = one_norm(y_next - y);
        y = std::move(y_next);
        if (change <= 1e-15 * one_norm(y)) {
            return y;
        }
    }
    throw BranchError("square root iteration did not converge");
}

Matrix logm(const Matrix &u)
{
    const int n = static_cast<int>(u.rows());
    Eigen::ComplexEigenSolver<Matrix> eig(u, false);
    for (int i = 0; i < n; ++i) {
        const Complex lambda = eig.eigenvalues()(i);
        const double scale = std::max(1.0, std::abs(lambda));
        if (std::abs(lambda.imag()) <= 1e-14 * scale && lambda.real() <= 1e-14 * scale) {
            throw BranchError("matrix has an eigenvalue on the closed negative real axis");
        }
    }
    const Matrix id = identity(n);
    Matrix x = u;
    int roots = 0;
    while (one_norm(x - id) > 0.1) {
        if (++roots > 60) {
            throw BranchError("inverse scaling did not bring the matrix near the identity");
        }
        x = sqrtm(x);
    }
    // log(I + E) = sum (-1)^{j+1} E^j / j
    const Matrix e = x - id;
    Matrix power = e;
    Matrix sum = e;
    for (int j = 2; j < 200; ++j) {
        power = power * e;
        const Matrix term = power / static_cast<double>(j);
        if (j % 2 == 0) {
            sum -= term;
        } else {
            sum += term;
        }
        if (one_norm(term) <= 1e-18 * std::max(1.0, one_norm(sum))) {
            break;
        }
    }
    return sum * std::ldexp(1.0, roots);
}

} // namespace magnus::numeric
