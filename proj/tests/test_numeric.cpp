#include <doctest.h>

#include <cmath>
#include <random>

#include <magnus/bounds.hpp>
#include <magnus/magnus_terms.hpp>
#include <magnus/propagator.hpp>
#include <magnus/validation.hpp>

using namespace magnus::numeric;

namespace
{

const Complex I(0.0, 1.0);

double dist(const Matrix &a, const Matrix &b)
{
    return op_norm(a - b);
}

double unitarity_defect(const Matrix &u)
{
    return op_norm(u.adjoint() * u - identity(static_cast<int>(u.rows())));
}

double anti_hermitian_defect(const Matrix &m)
{
    return op_norm(m + m.adjoint());
}

} // namespace

TEST_CASE("cumulative weights are exact for quadratics on every row")
{
    const std::size_t m = 10;
    const double h = 0.3;
    const CumulativeWeights w(m, h);
    for (std::size_t i = 1; i <= m; ++i) {
        const double ti = h * static_cast<double>(i);
        for (int p = 0; p <= 2; ++p) {
            double sum = 0.0;
            for (std::size_t j = 0; j < w.span_end(i); ++j) {
                sum += w(i, j) * std::pow(h * static_cast<double>(j), p);
            }
            CAPTURE(i);
            CAPTURE(p);
            CHECK(sum == doctest::Approx(std::pow(ti, p + 1) / (p + 1)).epsilon(1e-13));
        }
    }
}

TEST_CASE("quadrature config validation")
{
    QuadratureConfig c;
    CHECK_NOTHROW(validate(c));
    c.intervals = 7;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c.intervals = 6;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = {};
    c.scheme = "trapezoid";
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = {};
    c.tolerance = 0.0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("refine reports failure to converge")
{
    QuadratureConfig c;
    c.max_refinements = 2;
    auto noisy = [](std::size_t intervals) {
        Matrix m = Matrix::Zero(1, 1);
        m(0, 0) = static_cast<double>(intervals % 3);
        return m;
    };
    CHECK_THROWS_AS(refine(noisy, c), QuadratureError);
}

TEST_CASE("constant generator: M_1 = -iHt and higher terms vanish")
{
    std::mt19937_64 rng(1);
    const Matrix h = random_hermitian(3, rng);
    const auto gen = GeneratorFunction::constant(h);
    const double t = 0.7;
    CHECK(dist(magnus_term_tree(1, gen, t).value, -I * h * t) < 1e-13);
    for (std::size_t n = 2; n <= kMaxTreeOrder; ++n) {
        CHECK(op_norm(magnus_term_tree(n, gen, t).value) < 1e-13);
    }
}

TEST_CASE("commuting generator has vanishing second term")
{
    const auto gen = GeneratorFunction::polynomial({sigma_x(), 0.5 * sigma_x(), -0.2 * sigma_x()});
    CHECK(op_norm(magnus_term_tree(2, gen, 1.2).value) < 1e-13);
    CHECK(op_norm(magnus_term_direct(2, gen, 1.2).value) < 1e-13);
}

TEST_CASE("second term for sigma_x + t sigma_z has the closed form")
{
    // [A(t1), A(t2)] = -(t2 - t1) [sx, sz]; the simplex integral of t2 - t1 is -t^3/6.
    const auto gen = GeneratorFunction::affine(sigma_x(), sigma_z());
    const double t = 0.9;
    const Matrix c = commutator(sigma_x(), sigma_z());
    const Matrix exact = (t * t * t / 12.0) * c;
    CHECK(dist(magnus_term_tree(2, gen, t).value, exact) < 1e-13);
    CHECK(dist(magnus_term_direct(2, gen, t).value, exact) < 1e-13);
}

TEST_CASE("tree and direct formulas agree on random instances")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 5; ++trial) {
        const auto inst = random_affine_instance(2 + trial % 3, 0.3, rng);
        for (std::size_t n = 1; n <= kMaxDirectOrder; ++n) {
            const auto tree = magnus_term_tree(n, inst.generator, inst.t);
            const auto direct = magnus_term_direct(n, inst.generator, inst.t);
            const double scale = std::max(op_norm(tree.value), 1e-6);
            CAPTURE(trial);
            CAPTURE(n);
            CHECK(dist(tree.value, direct.value) <= 1e-6 * scale);
        }
    }
    const auto inst = random_affine_instance(2, 0.3, rng);
    CHECK_THROWS_AS(magnus_term_direct(5, inst.generator, inst.t), std::invalid_argument);
    CHECK_THROWS_AS(magnus_term_tree(7, inst.generator, inst.t), std::invalid_argument);
}

TEST_CASE("magnus terms are anti-Hermitian for Hermitian generators")
{
    std::mt19937_64 rng(5);
    const auto inst = random_affine_instance(3, 0.6, rng);
    const auto terms = magnus_terms(kMaxTreeOrder, inst.generator, inst.t);
    REQUIRE(terms.size() == kMaxTreeOrder);
    for (const auto &m : terms) {
        CHECK(anti_hermitian_defect(m.value) <= 1e-12 * std::max(1.0, op_norm(m.value)));
    }
}

TEST_CASE("single-grid error falls at fourth order")
{
    const auto gen = GeneratorFunction::sinusoid(sigma_z(), sigma_x(), 0.5 * sigma_y(), 2.0);
    const double t = 1.0;
    const auto exact = magnus_term_tree(3, gen, t).value;
    auto err = [&](std::size_t intervals) {
        const auto s = sample_generator(gen, t, intervals);
        return dist(magnus_term_tree_on_grid(3, s, t / static_cast<double>(intervals)), exact);
    };
    const double ratio = err(16) / err(32);
    CHECK(ratio > 10.0);
    CHECK(ratio < 24.0);
}

TEST_CASE("reference propagator")
{
    std::mt19937_64 rng(9);
    const Matrix h = random_hermitian(3, rng);
    const auto constant = GeneratorFunction::constant(h);
    const auto ref = reference_propagator(constant, 0.8, 1e-12);
    CHECK(dist(ref.value, expm(-I * h * 0.8)) < 1e-12);
    CHECK(unitarity_defect(ref.value) < 1e-11);

    // H = (1 + t) sx commutes with itself: U = exp(-i (t + t^2/2) sx).
    const auto commuting = GeneratorFunction::affine(sigma_x(), sigma_x());
    const double t = 1.3;
    const auto u = reference_propagator(commuting, t, 1e-12);
    CHECK(dist(u.value, expm(-I * (t + t * t / 2.0) * sigma_x())) < 1e-11);

    const auto inst = random_affine_instance(4, 0.5, rng);
    const double tol = 1e-11;
    const auto r = reference_propagator(inst.generator, inst.t, tol);
    CHECK(unitarity_defect(r.value) < 10 * tol);
    CHECK(r.error_estimate < tol);
    CHECK(r.steps >= 16);

    PropagatorOptions tight;
    tight.max_doublings = 1;
    CHECK_THROWS_AS(reference_propagator(inst.generator, inst.t, 1e-15, tight), ConvergenceError);
}

TEST_CASE("truncated propagator is unitary and improves with N")
{
    std::mt19937_64 rng(13);
    const auto inst = random_affine_instance(3, 0.4, rng);
    const auto ref = reference_propagator(inst.generator, inst.t, 1e-12);
    double previous = INFINITY;
    for (std::size_t N = 1; N <= kMaxTreeOrder; ++N) {
        const Matrix u = truncated_propagator(N, inst.generator, inst.t);
        CHECK(unitarity_defect(u) < 1e-12);
        const double e = dist(u, ref.value);
        CAPTURE(N);
        CHECK(e < previous);
        previous = e;
    }
}

TEST_CASE("validation report at x = 0.3")
{
    std::mt19937_64 rng(17);
    const auto inst = random_affine_instance(2, 0.3, rng);
    const auto rep = validate_bounds(inst.generator, inst.t);
    CHECK(rep.pass);
    CHECK_FALSE(rep.rejected);
    CHECK(rep.x == doctest::Approx(0.3).epsilon(1e-12));
    REQUIRE(rep.terms.size() == 4);
    REQUIRE(rep.truncation.size() == 4);
    for (const auto &row : rep.terms) {
        CHECK(row.pass);
        CHECK(row.measured <= row.bound);
        CHECK(row.anti_hermitian_defect_small);
    }
    for (const auto &row : rep.truncation) {
        CHECK(row.applicable);
        REQUIRE(row.measured.has_value());
        CHECK(*row.measured <= *row.bound + row.slack);
        CHECK(*row.bound_tight <= *row.bound);
    }
}

TEST_CASE("validation at x = 0.8 with two terms")
{
    std::mt19937_64 rng(19);
    const auto inst = random_affine_instance(3, 0.8, rng);
    ValidationOptions opts;
    opts.n_max = 2;
    const auto rep = validate_bounds(inst.generator, inst.t, opts);
    CHECK(rep.pass);
    CHECK(rep.terms.size() == 2);
}

TEST_CASE("beyond the convergence radius truncation rows are not applicable")
{
    const auto gen = GeneratorFunction::sinusoid(sigma_z(), sigma_x(), sigma_y(), 3.0);
    const double t = horizon_for_scaled_time(gen, 1.2);
    CHECK(magnus::scaled_time(gen.h_max(t), t) == doctest::Approx(1.2).epsilon(1e-9));
    ValidationOptions opts;
    opts.n_max = 3;
    const auto rep = validate_bounds(gen, t, opts);
    for (const auto &row : rep.truncation) {
        CHECK_FALSE(row.applicable);
        CHECK_FALSE(row.measured.has_value());
    }
    for (const auto &row : rep.terms) {
        CHECK(row.pass);
    }
}

TEST_CASE("generator checks")
{
    Matrix not_hermitian = sigma_x();
    not_hermitian(0, 1) = 2.0;
    CHECK_FALSE(GeneratorFunction::constant(not_hermitian).hermitian());
    const GeneratorFunction flagged(
        2, [&](double t) { return t > 0.5 ? not_hermitian : sigma_x(); }, [](double) { return 2.0; }, true);
    CHECK_NOTHROW(flagged.check_hermitian(0.4));
    CHECK_THROWS_AS(flagged.check_hermitian(1.0), std::invalid_argument);
    CHECK_NOTHROW(GeneratorFunction::affine(sigma_x(), sigma_z()).check_hermitian(2.0));
    CHECK(dist(GeneratorFunction::constant(sigma_z()).evaluate(0.1), -I * sigma_z()) == 0.0);
}
