#include <magnus/rational.hpp>

#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

namespace magnus
{

namespace mp = boost::multiprecision;

Rational::Rational(BigInt numerator, BigInt denominator) : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (den_.is_zero()) {
        throw DivisionByZero();
    }
    normalize();
}

void Rational::normalize()
{
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(mp::abs(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text)
{
    auto to_int = [&](std::string_view part) {
        if (part.empty()) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        std::size_t start = (part.front() == '-' || part.front() == '+') ? 1 : 0;
        if (start == part.size()) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        for (std::size_t i = start; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
            }
        }
        std::string s(part.front() == '+' ? part.substr(1) : part);
        return BigInt(s);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(to_int(text));
    }
    return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

Rational Rational::abs() const
{
    Rational r = *this;
    if (r.num_.sign() < 0) {
        r.num_ = -r.num_;
    }
    return r;
}

Rational Rational::reciprocal() const
{
    if (is_zero()) {
        throw DivisionByZero();
    }
    return Rational(den_, num_);
}

Rational Rational::operator-() const
{
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational &Rational::operator+=(const Rational &rhs)
{
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational &Rational::operator-=(const Rational &rhs)
{
    return *this += -rhs;
}

Rational &Rational::operator*=(const Rational &rhs)
{
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational &Rational::operator/=(const Rational &rhs)
{
    if (rhs.is_zero()) {
        throw DivisionByZero();
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

double Rational::to_double() const
{
    return mp::cpp_rational(num_, den_).convert_to<double>();
}

std::string Rational::str() const
{
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

BigInt round_half_even(const BigInt &num, const BigInt &den)
{
    BigInt q, r;
    mp::divide_qr(num, den, q, r);
    // Truncation toward zero; fix up to floor for negative values.
    if (r.sign() < 0) {
        q -= 1;
        r += den;
    }
    BigInt twice = r * 2;
    if (twice > den || (twice == den && mp::bit_test(q, 0))) {
        q += 1;
    }
    return q;
}

std::string Rational::to_fixed(unsigned digits) const
{
    BigInt scale = mp::pow(BigInt(10), digits);
    BigInt scaled = round_half_even(mp::abs(num_) * scale, den_);
    std::string body = scaled.str();
    if (body.size() <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    if (digits > 0) {
        body.insert(body.size() - digits, ".");
    }
    bool negative = num_.sign() < 0 && !scaled.is_zero();
    return negative ? "-" + body : body;
}

Rational::Scientific Rational::to_scientific(unsigned fraction_digits) const
{
    Scientific out;
    if (is_zero()) {
        out.mantissa = fraction_digits ? "0." + std::string(fraction_digits, '0') : "0";
        return out;
    }
    out.negative = num_.sign() < 0;
    BigInt a = mp::abs(num_);
    // Estimate exponent from digit counts, then correct.
    int exponent = static_cast<int>(a.str().size()) - static_cast<int>(den_.str().size());
    auto ge_pow10 = [&](int e) {
        // a/den >= 10^e
        if (e >= 0) {
            return a >= den_ * mp::pow(BigInt(10), static_cast<unsigned>(e));
        }
        return a * mp::pow(BigInt(10), static_cast<unsigned>(-e)) >= den_;
    };
    while (!ge_pow10(exponent)) {
        --exponent;
    }
    while (ge_pow10(exponent + 1)) {
        ++exponent;
    }
    auto scaled_digits = [&](int e) {
        int shift = static_cast<int>(fraction_digits) - e;
        BigInt n = a, d = den_;
        if (shift >= 0) {
            n *= mp::pow(BigInt(10), static_cast<unsigned>(shift));
        } else {
            d *= mp::pow(BigInt(10), static_cast<unsigned>(-shift));
        }
        return round_half_even(n, d);
    };
    BigInt digits = scaled_digits(exponent);
    if (digits >= mp::pow(BigInt(10), fraction_digits + 1)) {
        ++exponent;
        digits = scaled_digits(exponent);
    }
    std::string s = digits.str();
    out.mantissa = fraction_digits ? s.substr(0, 1) + "." + s.substr(1) : s;
    out.exponent = exponent;
    return out;
}

std::string Rational::to_scientific_string(unsigned fraction_digits) const
{
    Scientific s = to_scientific(fraction_digits);
    std::string exp = std::to_string(std::abs(s.exponent));
    if (exp.size() < 2) {
        exp.insert(0, "0");
    }
    return (s.negative ? "-" : "") + s.mantissa + "e" + (s.exponent < 0 ? "-" : "+") + exp;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.str();
}

BigInt factorial(unsigned n)
{
    BigInt out = 1;
    for (unsigned k = 2; k <= n; ++k) {
        out *= k;
    }
    return out;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt out = 1;
    for (unsigned i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

} // namespace magnus
