#ifndef MAGNUS_POWER_SERIES_HPP
#define MAGNUS_POWER_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <magnus/rational.hpp>

namespace magnus
{

// Coefficient requested beyond the known order, or an operation that would
// need more terms than are known.
class SeriesOrderError : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

class SeriesDivisionByZero : public std::domain_error
{
public:
    SeriesDivisionByZero() : std::domain_error("power series division needs a nonzero constant term") {}
};

class SeriesCompositionError : public std::domain_error
{
public:
    SeriesCompositionError() : std::domain_error("composition needs an inner series with zero constant term") {}
};

// Truncated formal power series sum_{k=0}^{order} c_k x^k with exact
// coefficients; terms beyond `order` are unknown, not zero.
class PowerSeries
{
public:
    explicit PowerSeries(std::size_t order);
    explicit PowerSeries(std::vector<Rational> coefficients);

    static PowerSeries x(std::size_t order);
    static PowerSeries constant(Rational c, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Rational &operator[](std::size_t k) const;
    Rational &operator[](std::size_t k);
    const std::vector<Rational> &coefficients() const noexcept { return coeffs_; }

    // Keeps orders 0..order; throws SeriesOrderError if order exceeds the known order.
    PowerSeries truncate(std::size_t order) const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries &a, const PowerSeries &b);
    friend PowerSeries operator-(const PowerSeries &a, const PowerSeries &b);
    friend PowerSeries operator*(const PowerSeries &a, const PowerSeries &b);
    friend PowerSeries operator*(const Rational &s, const PowerSeries &a);
    friend PowerSeries operator/(const PowerSeries &a, const PowerSeries &b);

    PowerSeries reciprocal() const;
    // (a(x) - a(0)) / x; requires a(0) = 0.
    PowerSeries divide_by_x() const;
    PowerSeries integrate() const;
    PowerSeries differentiate() const;
    // this(inner(x)); inner must have zero constant term.
    PowerSeries compose(const PowerSeries &inner) const;

    friend bool operator==(const PowerSeries &a, const PowerSeries &b) = default;

    std::string str(char variable = 'x') const;

private:
    std::vector<Rational> coeffs_;
};

} // namespace magnus

#endif
