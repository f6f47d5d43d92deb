#include <magnus/power_series.hpp>

#include <algorithm>

namespace magnus
{

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    if (coeffs_.empty()) {
        throw SeriesOrderError("a power series needs at least the constant term");
    }
}

PowerSeries PowerSeries::x(std::size_t order)
{
    PowerSeries s(order);
    if (order >= 1) {
        s.coeffs_[1] = Rational(1);
    }
    return s;
}

PowerSeries PowerSeries::constant(Rational c, std::size_t order)
{
    PowerSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
}

const Rational &PowerSeries::operator[](std::size_t k) const
{
    if (k > order()) {
        throw SeriesOrderError("coefficient " + std::to_string(k) + " beyond series order " + std::to_string(order()));
    }
    return coeffs_[k];
}

Rational &PowerSeries::operator[](std::size_t k)
{
    if (k > order()) {
        throw SeriesOrderError("coefficient " + std::to_string(k) + " beyond series order " + std::to_string(order()));
    }
    return coeffs_[k];
}

PowerSeries PowerSeries::truncate(std::size_t order) const
{
    if (order > this->order()) {
        throw SeriesOrderError("cannot extend a series of order " + std::to_string(this->order()) + " to order " +
                               std::to_string(order));
    }
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

PowerSeries PowerSeries::operator-() const
{
    PowerSeries out = *this;
    for (auto &c : out.coeffs_) {
        c = -c;
    }
    return out;
}

PowerSeries operator+(const PowerSeries &a, const PowerSeries &b)
{
    PowerSeries out(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= out.order(); ++k) {
        out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    }
    return out;
}

PowerSeries operator-(const PowerSeries &a, const PowerSeries &b)
{
    return a + (-b);
}

PowerSeries operator*(const PowerSeries &a, const PowerSeries &b)
{
    PowerSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= out.order(); ++j) {
            if (!b.coeffs_[j].is_zero()) {
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return out;
}

PowerSeries operator*(const Rational &s, const PowerSeries &a)
{
    PowerSeries out = a;
    for (auto &c : out.coeffs_) {
        c *= s;
    }
    return out;
}

PowerSeries PowerSeries::reciprocal() const
{
    if (coeffs_[0].is_zero()) {
        throw SeriesDivisionByZero();
    }
    PowerSeries out(order());
    Rational inv = coeffs_[0].reciprocal();
    out.coeffs_[0] = inv;
    for (std::size_t k = 1; k <= order(); ++k) {
        Rational s;
        for (std::size_t j = 1; j <= k; ++j) {
            if (!coeffs_[j].is_zero()) {
                s += coeffs_[j] * out.coeffs_[k - j];
            }
        }
        out.coeffs_[k] = -s * inv;
    }
    return out;
}

PowerSeries operator/(const PowerSeries &a, const PowerSeries &b)
{
    return a * b.reciprocal();
}

PowerSeries PowerSeries::divide_by_x() const
{
    if (!coeffs_[0].is_zero()) {
        throw SeriesDivisionByZero();
    }
    if (order() == 0) {
        throw SeriesOrderError("dividing an order-0 series by x leaves no known terms");
    }
    return PowerSeries(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

PowerSeries PowerSeries::integrate() const
{
    PowerSeries out(order() + 1);
    for (std::size_t k = 0; k <= order(); ++k) {
        out.coeffs_[k + 1] = coeffs_[k] / Rational(static_cast<std::int64_t>(k) + 1);
    }
    return out;
}

PowerSeries PowerSeries::differentiate() const
{
    if (order() == 0) {
        throw SeriesOrderError("derivative of an order-0 series has no known terms");
    }
    PowerSeries out(order() - 1);
    for (std::size_t k = 1; k <= order(); ++k) {
        out.coeffs_[k - 1] = coeffs_[k] * Rational(static_cast<std::int64_t>(k));
    }
    return out;
}

PowerSeries PowerSeries::compose(const PowerSeries &inner) const
{
    if (!inner.coeffs_[0].is_zero()) {
        throw SeriesCompositionError();
    }
    const std::size_t n = std::min(order(), inner.order());
    PowerSeries in = inner.truncate(n);
    // Horner: c_0 + in (c_1 + in (c_2 + ...)).
    PowerSeries acc = PowerSeries::constant(coeffs_[n], n);
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * in;
        acc.coeffs_[0] += coeffs_[k];
    }
    return acc;
}

std::string PowerSeries::str(char variable) const
{
    std::string out;
    for (std::size_t k = 0; k <= order(); ++k) {
        if (coeffs_[k].is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += coeffs_[k].sign() < 0 ? " - " : " + ";
        } else if (coeffs_[k].sign() < 0) {
            out += "-";
        }
        out += coeffs_[k].abs().str();
        if (k >= 1) {
            out += std::string("*") + variable;
        }
        if (k >= 2) {
            out += "^" + std::to_string(k);
        }
    }
    if (out.empty()) {
        out = "0";
    }
    return out + " + O(" + variable + "^" + std::to_string(order() + 1) + ")";
}

} // namespace magnus
