#ifndef MAGNUS_COEFFICIENTS_HPP
#define MAGNUS_COEFFICIENTS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <magnus/rational.hpp>
#include <magnus/tree.hpp>

namespace magnus
{

// alpha_leaf = 1, alpha_(tau_1..tau_r) = (B_r^+ / r!) * prod alpha_tau_i.
Rational alpha(const Tree &t);

// mu(leaf) = 1, mu(tau) = (1/n) * prod mu(tau_i), n = leaves(tau).
Rational mu(const Tree &t);

// Integral coefficient read off the literal nested simplex integral of the
// tree: every grafted subtree introduces one integration variable running
// from 0 to its parent's variable; the integrand is 1. Variables are
// integrated innermost first as polynomials in their parent variable, and
// the coefficient of t^n is returned.
Rational mu_oracle(const Tree &t);

struct CoefficientRecord {
    Tree tree;
    Rational alpha;
    Rational mu;
    Rational product; // |alpha| * mu
};

CoefficientRecord coefficient_record(const Tree &t);
std::vector<CoefficientRecord> coefficient_records(std::size_t n);

enum class NuMethod { enumeration, recursion, simplified };

std::string to_string(NuMethod method);
std::optional<NuMethod> parse_nu_method(std::string_view name);

// Tree coefficients nu_1..nu_{n_max}; nu_0 = 0 is stored at index 0.
class NuTable
{
public:
    NuTable(NuMethod method, std::vector<Rational> values);

    NuMethod method() const noexcept { return method_; }
    std::size_t n_max() const noexcept { return values_.size() - 1; }

    // Throws std::out_of_range outside 0..n_max.
    const Rational &at(std::size_t n) const;
    std::span<const Rational> values() const noexcept { return values_; }

private:
    NuMethod method_;
    std::vector<Rational> values_;
};

inline constexpr std::size_t kEnumerationCap = 12;

// Sum over all trees of |alpha| * mu. Throws std::invalid_argument when n
// exceeds `cap` (Catalan growth) or n = 0.
Rational nu_enumeration(std::size_t n, std::size_t cap = kEnumerationCap);
NuTable nu_enumeration_table(std::size_t n_max, std::size_t cap = kEnumerationCap);

// (n+1) nu_{n+1} = sum_r |B_r|/r! sum_{compositions (n, r)} prod nu_{j_i}.
// The inner composition sums are accumulated as coefficients of powers of
// the partial generating function, which equals the literal sum over
// compositions term by term.
NuTable nu_recursive(std::size_t n_max);

// Same recursion, with each composition sum evaluated by walking the
// compositions one at a time.
NuTable nu_recursive_streamed(std::size_t n_max);

// (n+1) nu_{n+1} = nu_n / 2 + (1/12) sum_{j=1}^{n-1} nu_j nu_{n-j}.
NuTable nu_simplified(std::size_t n_max);

NuTable nu_table(NuMethod method, std::size_t n_max);

// Streams the ordered r-tuples of positive integers summing to n in
// lexicographic order without materializing them.
class CompositionStream
{
public:
    CompositionStream(std::size_t n, std::size_t r);

    // Current composition, or empty once exhausted.
    std::span<const std::size_t> current() const noexcept;
    bool done() const noexcept { return done_; }
    void advance();

private:
    std::size_t n_;
    std::vector<std::size_t> parts_;
    bool done_ = false;
};

// Empty when r > n or r = 0.
std::vector<std::vector<std::size_t>> composition_enumerate(std::size_t n, std::size_t r);

} // namespace magnus

#endif
