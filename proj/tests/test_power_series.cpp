#include <doctest.h>

#include <magnus/power_series.hpp>

using magnus::PowerSeries;
using magnus::Rational;

namespace
{

PowerSeries series(std::initializer_list<std::int64_t> values)
{
    std::vector<Rational> c;
    for (auto v : values) {
        c.emplace_back(v);
    }
    return PowerSeries(std::move(c));
}

} // namespace

TEST_CASE("products and sums")
{
    const PowerSeries a = series({1, 1, 0, 0});
    const PowerSeries b = series({1, -1, 0, 0});
    CHECK(a * b == series({1, 0, -1, 0}));
    CHECK(a + b == series({2, 0, 0, 0}));
    CHECK(a - b == series({0, 2, 0, 0}));
    CHECK((Rational(1, 2) * a)[1] == Rational(1, 2));
}

TEST_CASE("results keep the smaller order")
{
    const PowerSeries a = series({1, 1, 1, 1, 1});
    const PowerSeries b = series({1, 1});
    CHECK((a * b).order() == 1);
    CHECK((a + b).order() == 1);
    CHECK_THROWS_AS((a * b)[2], magnus::SeriesOrderError);
}

TEST_CASE("calculus")
{
    const PowerSeries a = series({1, 1, 0});
    const PowerSeries i = a.integrate();
    CHECK(i.order() == 3);
    CHECK(i[0] == Rational(0));
    CHECK(i[1] == Rational(1));
    CHECK(i[2] == Rational(1, 2));
    CHECK(i.differentiate() == a);
    CHECK_THROWS_AS(series({3}).differentiate(), magnus::SeriesOrderError);
}

TEST_CASE("division and reciprocal")
{
    const PowerSeries one_minus_x = series({1, -1, 0, 0, 0, 0});
    CHECK(one_minus_x.reciprocal() == series({1, 1, 1, 1, 1, 1}));
    const PowerSeries x = PowerSeries::x(5);
    CHECK(x / one_minus_x == series({0, 1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(one_minus_x / x, magnus::SeriesDivisionByZero);
    CHECK(x.divide_by_x().order() == 4);
    CHECK(x.divide_by_x()[0] == Rational(1));
    CHECK_THROWS_AS(one_minus_x.divide_by_x(), magnus::SeriesDivisionByZero);
}

TEST_CASE("composition with a geometric series")
{
    const std::size_t order = 8;
    const PowerSeries x = PowerSeries::x(order);
    const PowerSeries geometric = x / (PowerSeries::constant(Rational(1), order) - x);
    const PowerSeries x2 = x * x;
    const PowerSeries composed = geometric.compose(x2);
    for (std::size_t k = 0; k <= order; ++k) {
        CHECK(composed[k] == Rational((k >= 2 && k % 2 == 0) ? 1 : 0));
    }
    CHECK_THROWS_AS(geometric.compose(series({1, 1, 0, 0, 0, 0, 0, 0, 0})), magnus::SeriesCompositionError);
}

TEST_CASE("truncation and rendering")
{
    const PowerSeries a = series({1, -2, 3});
    CHECK(a.truncate(1) == series({1, -2}));
    CHECK_THROWS_AS(a.truncate(3), magnus::SeriesOrderError);
    CHECK(a.str() == "1 - 2*x + 3*x^2 + O(x^3)");
    CHECK_THROWS_AS(PowerSeries(std::vector<Rational>{}), magnus::SeriesOrderError);
}
