#include <magnus/coefficients.hpp>

#include <stdexcept>

#include <magnus/bernoulli.hpp>

namespace magnus
{

namespace
{

Rational graft_factor(std::size_t r)
{
    return bernoulli(static_cast<unsigned>(r)) / Rational(factorial(static_cast<unsigned>(r)));
}

Rational abs_graft_factor(std::size_t r)
{
    return graft_factor(r).abs();
}

using Polynomial = std::vector<Rational>;

Polynomial multiply(const Polynomial &a, const Polynomial &b)
{
    Polynomial out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// p(s) -> int_0^u p(s) ds as a polynomial in u.
Polynomial integrate_from_zero(const Polynomial &p)
{
    Polynomial out(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k + 1] = p[k] / Rational(static_cast<std::int64_t>(k) + 1);
    }
    return out;
}

} // namespace

Rational alpha(const Tree &t)
{
    if (t.is_leaf()) {
        return Rational(1);
    }
    auto kids = t.children();
    Rational out = graft_factor(kids.size());
    for (const auto &k : kids) {
        if (out.is_zero()) {
            break;
        }
        out *= alpha(k);
    }
    return out;
}

Rational mu(const Tree &t)
{
    if (t.is_leaf()) {
        return Rational(1);
    }
    Rational out(1);
    for (const auto &k : t.children()) {
        out *= mu(k);
    }
    return out / Rational(static_cast<std::int64_t>(t.leaves()));
}

Rational mu_oracle(const Tree &t)
{
    // Flatten: one integration variable per vertex, parent[v] is the
    // variable bounding its range (the root runs up to t).
    std::vector<const Tree *> vertex;
    std::vector<std::ptrdiff_t> parent;
    vertex.push_back(&t);
    parent.push_back(-1);
    for (std::size_t v = 0; v < vertex.size(); ++v) {
        for (const auto &k : vertex[v]->children()) {
            vertex.push_back(&k);
            parent.push_back(static_cast<std::ptrdiff_t>(v));
        }
    }
    // Integrand of each variable, as a polynomial in that variable.
    std::vector<Polynomial> integrand(vertex.size(), Polynomial{Rational(1)});
    for (std::size_t v = vertex.size(); v-- > 0;) {
        Polynomial integrated = integrate_from_zero(integrand[v]);
        if (parent[v] < 0) {
            std::size_t n = t.leaves();
            if (integrated.size() <= n) {
                return Rational(0);
            }
            return integrated[n];
        }
        auto &host = integrand[static_cast<std::size_t>(parent[v])];
        host = multiply(host, integrated);
    }
    throw std::logic_error("mu_oracle: root not reached");
}

CoefficientRecord coefficient_record(const Tree &t)
{
    CoefficientRecord rec{t, alpha(t), mu(t), Rational()};
    rec.product = rec.alpha.abs() * rec.mu;
    return rec;
}

std::vector<CoefficientRecord> coefficient_records(std::size_t n)
{
    std::vector<CoefficientRecord> out;
    for (const auto &t : enumerate(n).members) {
        out.push_back(coefficient_record(t));
    }
    return out;
}

std::string to_string(NuMethod method)
{
    switch (method) {
    case NuMethod::enumeration:
        return "enumeration";
    case NuMethod::recursion:
        return "recursion";
    case NuMethod::simplified:
        return "simplified";
    }
    return "unknown";
}

std::optional<NuMethod> parse_nu_method(std::string_view name)
{
    if (name == "enumeration") {
        return NuMethod::enumeration;
    }
    if (name == "recursion") {
        return NuMethod::recursion;
    }
    if (name == "simplified") {
        return NuMethod::simplified;
    }
    return std::nullopt;
}

NuTable::NuTable(NuMethod method, std::vector<Rational> values) : method_(method), values_(std::move(values))
{
    if (values_.empty()) {
        values_.emplace_back(0);
    }
}

const Rational &NuTable::at(std::size_t n) const
{
    if (n >= values_.size()) {
        throw std::out_of_range("tree coefficient nu_" + std::to_string(n) + " not in table (n_max = " +
                                std::to_string(n_max()) + ")");
    }
    return values_[n];
}

Rational nu_enumeration(std::size_t n, std::size_t cap)
{
    if (n == 0) {
        throw std::invalid_argument("nu_n is defined for n >= 1");
    }
    if (n > cap) {
        throw std::invalid_argument("enumeration is capped at n = " + std::to_string(cap) + " (requested " +
                                    std::to_string(n) + ")");
    }
    Rational sum;
    for (const auto &t : enumerate(n).members) {
        Rational a = alpha(t);
        if (!a.is_zero()) {
            sum += a.abs() * mu(t);
        }
    }
    return sum;
}

NuTable nu_enumeration_table(std::size_t n_max, std::size_t cap)
{
    if (n_max > cap) {
        throw std::invalid_argument("enumeration is capped at n = " + std::to_string(cap) + " (requested " +
                                    std::to_string(n_max) + ")");
    }
    std::vector<Rational> values(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        values[n] = nu_enumeration(n, cap);
    }
    return NuTable(NuMethod::enumeration, std::move(values));
}

NuTable nu_recursive(std::size_t n_max)
{
    if (n_max == 0) {
        throw std::invalid_argument("n_max must be >= 1");
    }
    std::vector<Rational> nu(n_max + 1);
    nu[1] = Rational(1);
    // power[r][m] = [x^m] f^r, filled column by column as nu becomes known.
    std::vector<std::vector<Rational>> power(n_max + 1, std::vector<Rational>(n_max + 1));
    for (std::size_t n = 1; n < n_max; ++n) {
        power[1][n] = nu[n];
        for (std::size_t r = 2; r <= n; ++r) {
            Rational s;
            for (std::size_t j = 1; j + (r - 1) <= n; ++j) {
                const Rational &tail = power[r - 1][n - j];
                if (!tail.is_zero()) {
                    s += nu[j] * tail;
                }
            }
            power[r][n] = std::move(s);
        }
        Rational total;
        for (std::size_t r = 1; r <= n; ++r) {
            Rational weight = abs_graft_factor(r);
            if (!weight.is_zero()) {
                total += weight * power[r][n];
            }
        }
        nu[n + 1] = total / Rational(static_cast<std::int64_t>(n) + 1);
    }
    return NuTable(NuMethod::recursion, std::move(nu));
}

NuTable nu_recursive_streamed(std::size_t n_max)
{
    if (n_max == 0) {
        throw std::invalid_argument("n_max must be >= 1");
    }
    std::vector<Rational> nu(n_max + 1);
    nu[1] = Rational(1);
    for (std::size_t n = 1; n < n_max; ++n) {
        Rational total;
        for (std::size_t r = 1; r <= n; ++r) {
            Rational weight = abs_graft_factor(r);
            if (weight.is_zero()) {
                continue;
            }
            Rational inner;
            for (CompositionStream s(n, r); !s.done(); s.advance()) {
                Rational prod(1);
                for (std::size_t j : s.current()) {
                    prod *= nu[j];
                }
                inner += prod;
            }
            total += weight * inner;
        }
        nu[n + 1] = total / Rational(static_cast<std::int64_t>(n) + 1);
    }
    return NuTable(NuMethod::recursion, std::move(nu));
}

NuTable nu_simplified(std::size_t n_max)
{
    if (n_max == 0) {
        throw std::invalid_argument("n_max must be >= 1");
    }
    std::vector<Rational> nu(n_max + 1);
    nu[1] = Rational(1);
    const Rational half(BigInt(1), BigInt(2));
    const Rational twelfth(BigInt(1), BigInt(12));
    for (std::size_t n = 1; n < n_max; ++n) {
        Rational quad;
        for (std::size_t j = 1; j + 1 <= n; ++j) {
            quad += nu[j] * nu[n - j];
        }
        nu[n + 1] = (half * nu[n] + twelfth * quad) / Rational(static_cast<std::int64_t>(n) + 1);
    }
    return NuTable(NuMethod::simplified, std::move(nu));
}

NuTable nu_table(NuMethod method, std::size_t n_max)
{
    switch (method) {
    case NuMethod::enumeration:
        return nu_enumeration_table(n_max);
    case NuMethod::recursion:
        return nu_recursive(n_max);
    case NuMethod::simplified:
        return nu_simplified(n_max);
    }
    throw std::invalid_argument("unknown method");
}

CompositionStream::CompositionStream(std::size_t n, std::size_t r) : n_(n)
{
    if (r == 0 || r > n) {
        done_ = true;
        return;
    }
    parts_.assign(r, 1);
    parts_.back() = n - (r - 1);
}

std::span<const std::size_t> CompositionStream::current() const noexcept
{
    if (done_) {
        return {};
    }
    return parts_;
}

void CompositionStream::advance()
{
    if (done_) {
        return;
    }
    // The last part absorbs the remainder; bump the rightmost part (other
    // than the last) that can still grow, and reset everything after it.
    const std::size_t r = parts_.size();
    if (r == 1) {
        done_ = true;
        return;
    }
    std::size_t prefix_sum = 0;
    for (std::size_t i = 0; i + 1 < r; ++i) {
        prefix_sum += parts_[i];
    }
    for (std::size_t i = r - 1; i-- > 0;) {
        prefix_sum -= parts_[i];
        // Parts i+1..r-1 need at least one each.
        std::size_t remaining_after = r - 1 - i;
        if (prefix_sum + parts_[i] + 1 + remaining_after <= n_) {
            ++parts_[i];
            std::size_t used = prefix_sum + parts_[i];
            for (std::size_t k = i + 1; k + 1 < r; ++k) {
                parts_[k] = 1;
                ++used;
            }
            parts_.back() = n_ - used;
            return;
        }
    }
    done_ = true;
}

std::vector<std::vector<std::size_t>> composition_enumerate(std::size_t n, std::size_t r)
{
    std::vector<std::vector<std::size_t>> out;
    for (CompositionStream s(n, r); !s.done(); s.advance()) {
        auto c = s.current();
        out.emplace_back(c.begin(), c.end());
    }
    return out;
}

} // namespace magnus
