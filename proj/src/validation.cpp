#include <magnus/validation.hpp>

#include <Eigen/Eigenvalues>

#include <magnus/bounds.hpp>
#include <magnus/magnus_terms.hpp>

namespace magnus::numeric
{

namespace
{

bool near_minus_one(const Matrix &u, double margin)
{
    Eigen::ComplexEigenSolver<Matrix> eig(u, false);
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
        if (std::abs(eig.eigenvalues()(i) + 1.0) <= margin) {
            return true;
        }
    }
    return false;
}

} // namespace

ValidationReport validate_bounds(const GeneratorFunction &gen, double t, const ValidationOptions &options)
{
    if (options.n_max < 1 || options.n_max > kMaxTreeOrder) {
        throw std::invalid_argument("n_max must lie in 1.." + std::to_string(kMaxTreeOrder));
    }
    if (!(t >= 0.0)) {
        throw std::invalid_argument("propagation time must be non-negative");
    }
    validate(options.quadrature);

    ValidationReport rep;
    rep.dimension = gen.dimension();
    rep.t = t;
    rep.h_max = gen.h_max(t);
    rep.x = scaled_time(rep.h_max, t);
    rep.n_max = options.n_max;

    const auto results = magnus_terms(options.n_max, gen, t, options.quadrature);
    std::vector<Matrix> terms;
    bool all_pass = true;
    for (std::size_t n = 1; n <= options.n_max; ++n) {
        const QuadratureResult &r = results[n - 1];
        terms.push_back(r.value);
        TermRow row;
        row.n = n;
        row.measured = op_norm(r.value);
        row.bound = magnus_term_bound(n, rep.h_max, t);
        row.slack = r.error_estimate + options.slack_floor;
        row.margin = row.bound + row.slack - row.measured;
        if (gen.hermitian()) {
            const double defect = op_norm(r.value + r.value.adjoint());
            row.anti_hermitian_defect_small = defect <= 10.0 * row.slack;
        }
        row.pass = row.measured <= row.bound + row.slack;
        all_pass = all_pass && row.pass;
        rep.terms.push_back(row);
    }

    const PropagatorResult ref = reference_propagator(gen, t, options.propagator_tol, options.propagator);
    rep.reference_error_estimate = ref.error_estimate;
    rep.reference_steps = ref.steps;

    const bool converges = rep.x < 1.0;
    std::optional<Matrix> log_ref;
    if (converges) {
        if (near_minus_one(ref.value, options.branch_margin)) {
            rep.rejected = true;
            rep.rejection_reasons.push_back("reference propagator has an eigenvalue near -1");
        } else {
            try {
                log_ref = logm(ref.value);
            } catch (const BranchError &e) {
                rep.rejected = true;
                rep.rejection_reasons.push_back(std::string("principal log of reference propagator: ") + e.what());
            }
        }
    }

    Matrix partial = Matrix::Zero(gen.dimension(), gen.dimension());
    double quadrature_error = 0.0;
    for (std::size_t N = 1; N <= options.n_max; ++N) {
        partial += terms[N - 1];
        quadrature_error += results[N - 1].error_estimate;
        TruncationRow row;
        row.N = N;
        const Matrix u_n = expm(partial);
        row.propagator_difference = op_norm(ref.value - u_n);
        row.bound = truncation_bound(N, rep.h_max, t);
        row.bound_tight = truncation_bound_tight(N, rep.h_max, t);
        if (log_ref) {
            if (near_minus_one(ref.value.adjoint() * u_n, options.branch_margin)) {
                rep.rejected = true;
                rep.rejection_reasons.push_back("U_ref^dagger exp(M^(" + std::to_string(N) +
                                                ")) has an eigenvalue near -1");
            } else {
                row.applicable = true;
                row.measured = op_norm(*log_ref - partial);
                row.slack = quadrature_error + 10.0 * ref.error_estimate + 1e-13 * (1.0 + op_norm(*log_ref)) +
                            options.slack_floor;
                row.margin = *row.bound + row.slack - *row.measured;
                row.pass = *row.measured <= *row.bound + row.slack;
                all_pass = all_pass && row.pass;
            }
        }
        rep.truncation.push_back(row);
    }
    rep.pass = all_pass;
    return rep;
}

} // namespace magnus::numeric
