#include <magnus/magnus_terms.hpp>

#include <map>
#include <stdexcept>
#include <string>

#include <magnus/coefficients.hpp>
#include <magnus/tree.hpp>

namespace magnus::numeric
{

std::vector<Matrix> sample_generator(const GeneratorFunction &gen, double t, std::size_t intervals)
{
    std::vector<Matrix> samples;
    samples.reserve(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        samples.push_back(gen.evaluate(t * static_cast<double>(i) / static_cast<double>(intervals)));
    }
    return samples;
}

namespace
{

class TreeGrid
{
public:
    TreeGrid(std::span<const Matrix> samples, double h) : samples_(samples), h_(h) {}

    std::vector<Matrix> integrand(const Tree &tree)
    {
        std::vector<Matrix> acc(samples_.begin(), samples_.end());
        for (const Tree &child : tree.children()) {
            const std::vector<Matrix> &inner = running_integral(child);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                acc[i] = commutator(acc[i], inner[i]);
            }
        }
        return acc;
    }

private:
    const std::vector<Matrix> &running_integral(const Tree &tree)
    {
        const std::string key = serialize(tree);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            std::vector<Matrix> f = integrand(tree);
            it = cache_.emplace(key, cumulative_integral(f, h_)).first;
        }
        return it->second;
    }

    std::span<const Matrix> samples_;
    double h_;
    std::map<std::string, std::vector<Matrix>> cache_;
};

void check_order(std::size_t n, std::size_t cap, const char *what)
{
    if (n < 1 || n > cap) {
        throw std::invalid_argument(std::string(what) + " supports orders 1.." + std::to_string(cap) + ", got " +
                                    std::to_string(n));
    }
}

} // namespace

Matrix magnus_term_tree_on_grid(std::size_t n, std::span<const Matrix> samples, double h)
{
    check_order(n, kMaxTreeOrder, "tree evaluation");
    TreeGrid grid(samples, h);
    const auto dim = samples.front().rows();
    Matrix total = Matrix::Zero(dim, dim);
    for (const Tree &tree : enumerate(n).members) {
        const Rational a = alpha(tree);
        if (a.is_zero()) {
            continue;
        }
        const std::vector<Matrix> f = grid.integrand(tree);
        total += a.to_double() * simpson(f, h);
    }
    return total;
}

Matrix magnus_term_direct_on_grid(std::size_t n, std::span<const Matrix> a, double h)
{
    check_order(n, kMaxDirectOrder, "direct evaluation");
    const std::size_t m = a.size() - 1;
    const auto dim = a.front().rows();
    if (n == 1) {
        return simpson(a, h);
    }
    // The innermost integral is linear in A, so it is replaced by the
    // running integral C(s) = int_0^s A.
    const std::vector<Matrix> c = cumulative_integral(a, h);
    if (n == 2) {
        std::vector<Matrix> f(m + 1);
        for (std::size_t i = 0; i <= m; ++i) {
            f[i] = commutator(a[i], c[i]);
        }
        return 0.5 * simpson(f, h);
    }
    const CumulativeWeights w(m, h);
    Matrix total = Matrix::Zero(dim, dim);
    if (n == 3) {
        for (std::size_t i = 0; i <= m; ++i) {
            Matrix inner = Matrix::Zero(dim, dim);
            for (std::size_t j = 0; j < w.span_end(i); ++j) {
                const double wij = w(i, j);
                if (wij == 0.0) {
                    continue;
                }
                inner += wij * (commutator(a[i], commutator(a[j], c[j])) + commutator(c[j], commutator(a[j], a[i])));
            }
            total += w(m, i) * inner;
        }
        return total / 6.0;
    }
    for (std::size_t i = 0; i <= m; ++i) {
        Matrix middle = Matrix::Zero(dim, dim);
        for (std::size_t j = 0; j < w.span_end(i); ++j) {
            const double wij = w(i, j);
            if (wij == 0.0) {
                continue;
            }
            const Matrix a12 = commutator(a[i], a[j]);
            Matrix inner = Matrix::Zero(dim, dim);
            for (std::size_t k = 0; k < w.span_end(j); ++k) {
                const double wjk = w(j, k);
                if (wjk == 0.0) {
                    continue;
                }
                inner += wjk * (commutator(commutator(a12, a[k]), c[k]) +
                                commutator(a[i], commutator(commutator(a[j], a[k]), c[k])) +
                                commutator(a[i], commutator(a[j], commutator(a[k], c[k]))) +
                                commutator(a[j], commutator(a[k], commutator(c[k], a[i]))));
            }
            middle += wij * inner;
        }
        total += w(m, i) * middle;
    }
    return total / 12.0;
}

QuadratureResult magnus_term_tree(std::size_t n, const GeneratorFunction &gen, double t,
                                  const QuadratureConfig &config)
{
    check_order(n, kMaxTreeOrder, "tree evaluation");
    return refine(
        [&](std::size_t intervals) {
            const auto samples = sample_generator(gen, t, intervals);
            return magnus_term_tree_on_grid(n, samples, t / static_cast<double>(intervals));
        },
        config);
}

QuadratureResult magnus_term_direct(std::size_t n, const GeneratorFunction &gen, double t,
                                    const QuadratureConfig &config)
{
    check_order(n, kMaxDirectOrder, "direct evaluation");
    return refine(
        [&](std::size_t intervals) {
            const auto samples = sample_generator(gen, t, intervals);
            return magnus_term_direct_on_grid(n, samples, t / static_cast<double>(intervals));
        },
        config);
}

std::vector<QuadratureResult> magnus_terms(std::size_t n_max, const GeneratorFunction &gen, double t,
                                           const QuadratureConfig &config)
{
    std::vector<QuadratureResult> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        out.push_back(magnus_term_tree(n, gen, t, config));
    }
    return out;
}

} // namespace magnus::numeric
