#ifndef MAGNUS_RATIONAL_HPP
#define MAGNUS_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace magnus
{

using BigInt = boost::multiprecision::cpp_int;

class DivisionByZero : public std::domain_error
{
public:
    DivisionByZero() : std::domain_error("rational division by zero") {}
};

// Exact rational number p/q with q > 0 and gcd(|p|, q) = 1.
class Rational
{
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {} // NOLINT: implicit by design of arithmetic use
    explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);

    // Accepts "p/q", "p" and optional leading sign.
    static Rational parse(std::string_view text);

    const BigInt &numerator() const noexcept { return num_; }
    const BigInt &denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    int sign() const noexcept { return num_.sign(); }
    bool is_integer() const noexcept { return den_ == 1; }

    Rational abs() const;
    Rational reciprocal() const;

    Rational operator-() const;
    Rational &operator+=(const Rational &rhs);
    Rational &operator-=(const Rational &rhs);
    Rational &operator*=(const Rational &rhs);
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational &a, const Rational &b) noexcept
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

    // Nearest double (correctly rounded).
    double to_double() const;

    // "p/q", or "p" when q = 1.
    std::string str() const;

    // Fixed-point rendering with `digits` fractional digits, round-half-even.
    std::string to_fixed(unsigned digits) const;

    // Scientific rendering "d.ddd" with `fraction_digits` digits after the point
    // and a signed decimal exponent, round-half-even. Zero renders with exponent 0.
    struct Scientific {
        bool negative = false;
        std::string mantissa;
        int exponent = 0;
    };
    Scientific to_scientific(unsigned fraction_digits) const;

    // "1.90972222e-02" style.
    std::string to_scientific_string(unsigned fraction_digits) const;

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// Divide-and-round to nearest, ties to even. Requires den > 0.
BigInt round_half_even(const BigInt &num, const BigInt &den);

} // namespace magnus

#endif
