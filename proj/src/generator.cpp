#include <magnus/generator.hpp>

#include <cmath>
#include <stdexcept>

#include <magnus/bounds.hpp>

namespace magnus::numeric
{

std::string to_string(GeneratorFamily family)
{
    switch (family) {
    case GeneratorFamily::constant:
        return "constant";
    case GeneratorFamily::affine:
        return "affine";
    case GeneratorFamily::polynomial:
        return "polynomial";
    case GeneratorFamily::sinusoid:
        return "sinusoid";
    case GeneratorFamily::custom:
        return "custom";
    }
    return "custom";
}

GeneratorFunction::GeneratorFunction(int dimension, Hamiltonian hamiltonian, NormBound h_max, bool hermitian,
                                     GeneratorFamily family)
    : dimension_(dimension), hamiltonian_(std::move(hamiltonian)), h_max_(std::move(h_max)), hermitian_(hermitian),
      family_(family)
{
    if (dimension < 1 || dimension > kMaxDimension) {
        throw std::invalid_argument("generator dimension must lie in 1.." + std::to_string(kMaxDimension));
    }
}

namespace
{

void require_square(const Matrix &m, int dimension)
{
    if (m.rows() != dimension || m.cols() != dimension) {
        throw std::invalid_argument("generator coefficient has the wrong shape");
    }
}

bool is_hermitian(const Matrix &m)
{
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff());
}

} // namespace

GeneratorFunction GeneratorFunction::constant(const Matrix &p0)
{
    const int d = static_cast<int>(p0.rows());
    require_square(p0, d);
    const double norm = op_norm(p0);
    return GeneratorFunction(
        d, [p0](double) { return p0; }, [norm](double) { return norm; }, is_hermitian(p0), GeneratorFamily::constant);
}

GeneratorFunction GeneratorFunction::affine(const Matrix &p0, const Matrix &p1)
{
    const int d = static_cast<int>(p0.rows());
    require_square(p0, d);
    require_square(p1, d);
    return GeneratorFunction(
        d, [p0, p1](double t) -> Matrix { return p0 + t * p1; },
        [p0, p1](double horizon) { return std::max(op_norm(p0), op_norm(p0 + horizon * p1)); },
        is_hermitian(p0) && is_hermitian(p1), GeneratorFamily::affine);
}

GeneratorFunction GeneratorFunction::polynomial(std::vector<Matrix> coefficients)
{
    if (coefficients.empty()) {
        throw std::invalid_argument("polynomial generator needs at least one coefficient");
    }
    const int d = static_cast<int>(coefficients.front().rows());
    bool herm = true;
    std::vector<double> norms;
    for (const auto &c : coefficients) {
        require_square(c, d);
        herm = herm && is_hermitian(c);
        norms.push_back(op_norm(c));
    }
    return GeneratorFunction(
        d,
        [coefficients](double t) -> Matrix {
            Matrix acc = coefficients.back();
            for (std::size_t k = coefficients.size() - 1; k-- > 0;) {
                acc = (acc * t + coefficients[k]).eval();
            }
            return acc;
        },
        [norms](double horizon) {
            double s = 0.0;
            double p = 1.0;
            for (double n : norms) {
                s += n * p;
                p *= horizon;
            }
            return s;
        },
        herm, GeneratorFamily::polynomial);
}

GeneratorFunction GeneratorFunction::sinusoid(const Matrix &p0, const Matrix &p1, const Matrix &p2, double omega)
{
    const int d = static_cast<int>(p0.rows());
    require_square(p0, d);
    require_square(p1, d);
    require_square(p2, d);
    const double bound = op_norm(p0) + op_norm(p1) + op_norm(p2);
    return GeneratorFunction(
        d, [=](double t) -> Matrix { return p0 + std::sin(omega * t) * p1 + std::cos(omega * t) * p2; },
        [bound](double) { return bound; }, is_hermitian(p0) && is_hermitian(p1) && is_hermitian(p2),
        GeneratorFamily::sinusoid);
}

Matrix GeneratorFunction::evaluate(double t) const
{
    return Complex(0.0, -1.0) * hamiltonian_(t);
}

void GeneratorFunction::check_hermitian(double horizon, int samples) const
{
    if (!hermitian_) {
        return;
    }
    for (int i = 0; i < samples; ++i) {
        const double t = horizon * i / (samples - 1);
        if (!is_hermitian(hamiltonian_(t))) {
            throw std::invalid_argument("generator flagged Hermitian but H(" + std::to_string(t) + ") is not");
        }
    }
}

Matrix sigma_x()
{
    Matrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Matrix sigma_y()
{
    Matrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

Matrix sigma_z()
{
    Matrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

Matrix random_hermitian(int dimension, std::mt19937_64 &rng)
{
    std::normal_distribution<double> normal;
    Matrix m(dimension, dimension);
    for (int i = 0; i < dimension; ++i) {
        for (int j = 0; j < dimension; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return 0.5 * (m + m.adjoint());
}

Instance random_affine_instance(int dimension, double x, std::mt19937_64 &rng)
{
    Matrix p0 = random_hermitian(dimension, rng);
    Matrix p1 = random_hermitian(dimension, rng);
    const double h = std::max(op_norm(p0), op_norm(p0 + p1));
    const double scale = x / (Constants::delta_xi * h);
    p0 *= scale;
    p1 *= scale;
    return {GeneratorFunction::affine(p0, p1), 1.0};
}

double horizon_for_scaled_time(const GeneratorFunction &gen, double x)
{
    if (!(x > 0.0)) {
        throw std::invalid_argument("scaled time must be positive");
    }
    auto scaled = [&](double t) { return Constants::delta_xi * gen.h_max(t) * t; };
    double lo = 0.0;
    double hi = 1.0;
    int guard = 0;
    while (scaled(hi) < x) {
        hi *= 2.0;
        if (++guard > 200) {
            throw std::invalid_argument("generator norm vanishes; scaled time is unreachable");
        }
    }
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (scaled(mid) < x ? lo : hi) = mid;
    }
    return hi;
}

} // namespace magnus::numeric
