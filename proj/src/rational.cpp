#include "toric/rational.hpp"

#include <limits>
#include <stdexcept>

namespace toric {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(std::int64_t num, std::int64_t den)
{
    return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign)
{
    if (s.empty())
        return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s[0] == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num, true))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num));
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den, false))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return make_rational(parse_integer(num), d);
}

std::int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("integer does not fit in 64 bits: " + to_string(z));
    return static_cast<std::int64_t>(z.get_si());
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("lattice coordinate overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("lattice coordinate overflow");
    return out;
}

Point operator+(const Point& a, const Point& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("point dimension mismatch");
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = checked_add(a[i], b[i]);
    return out;
}

Point operator-(const Point& a, const Point& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("point dimension mismatch");
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = checked_add(a[i], -b[i]);
    return out;
}

Point scaled(const Point& a, std::int64_t factor)
{
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = checked_mul(a[i], factor);
    return out;
}

Integer dot(const Point& a, const Point& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("point dimension mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += Integer(static_cast<long>(a[i])) * static_cast<long>(b[i]);
    return s;
}

Integer factorial(long n)
{
    if (n < 0)
        throw std::domain_error("factorial of a negative integer");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Rational inverse_factorial(long n)
{
    if (n < 0)
        return 0;
    return make_rational(Integer(1), factorial(n));
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0)
            throw std::domain_error("zero to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return make_rational(num, den);
}

std::string to_string(const Point& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(p[i]);
    }
    return out + ")";
}

}  // namespace toric
