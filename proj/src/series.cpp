#include "toric/series.hpp"

#include <numeric>
#include <stdexcept>

namespace toric {

namespace {

std::int64_t degree(const Point& e)
{
    return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("series variable count mismatch");
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t nvars, std::int64_t order) : nvars_(nvars), order_(order)
{
    if (nvars == 0)
        throw std::invalid_argument("series needs at least one variable");
    if (order < 0)
        throw std::invalid_argument("negative truncation order");
}

TruncatedSeries TruncatedSeries::from_polynomial(const LaurentPolynomial& p, std::int64_t order)
{
    TruncatedSeries s(p.dim(), order);
    for (const auto& [e, c] : p.terms())
        s.add_to(e, c);
    return s;
}

Rational TruncatedSeries::coefficient(const Point& exponent) const
{
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::set(const Point& exponent, const Rational& value)
{
    if (exponent.size() != nvars_)
        throw std::invalid_argument("exponent length mismatch");
    for (auto x : exponent)
        if (x < 0)
            throw std::invalid_argument("negative exponent in a power series");
    if (degree(exponent) > order_)
        return;
    if (value == 0)
        coeffs_.erase(exponent);
    else
        coeffs_[exponent] = value;
}

void TruncatedSeries::add_to(const Point& exponent, const Rational& value)
{
    set(exponent, coefficient(exponent) + value);
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t order) const
{
    TruncatedSeries out(nvars_, std::min(order, order_));
    for (const auto& [e, c] : coeffs_)
        if (degree(e) <= out.order_)
            out.coeffs_.emplace(e, c);
    return out;
}

TruncatedSeries TruncatedSeries::diagonal() const
{
    TruncatedSeries out(1, order_);
    for (const auto& [e, c] : coeffs_)
        out.add_to({degree(e)}, c);
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    check_compatible(a, b);
    TruncatedSeries out = a.truncated(b.order_);
    for (const auto& [e, c] : b.coeffs_)
        out.add_to(e, c);
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a + b * Rational(-1);
}

TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c)
{
    TruncatedSeries out(a.nvars_, a.order_);
    if (c == 0)
        return out;
    for (const auto& [e, v] : a.coeffs_)
        out.coeffs_.emplace(e, v * c);
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    check_compatible(a, b);
    TruncatedSeries out(a.nvars_, std::min(a.order_, b.order_));
    for (const auto& [ea, ca] : a.coeffs_) {
        const auto da = degree(ea);
        for (const auto& [eb, cb] : b.coeffs_)
            if (da + degree(eb) <= out.order_)
                out.add_to(ea + eb, ca * cb);
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    const Point zero(nvars_, 0);
    const Rational c0 = coefficient(zero);
    if (c0 == 0)
        throw std::invalid_argument("series with zero constant term is not invertible");
    // 1/(c0 (1 - u)) = (1/c0) sum u^j with u = 1 - this/c0, which has no constant term.
    TruncatedSeries one(nvars_, order_);
    one.set(zero, 1);
    TruncatedSeries u = one - *this * (1 / c0);
    TruncatedSeries sum = one;
    TruncatedSeries power = one;
    for (std::int64_t j = 1; j <= order_; ++j) {
        power = power * u;
        if (power.is_zero())
            break;
        sum = sum + power;
    }
    return sum * (1 / c0);
}

TruncatedSeries expand_rational(const RationalFunctionSpec& spec, std::int64_t order)
{
    const std::size_t n = spec.nvars();
    TruncatedSeries num = TruncatedSeries::from_polynomial(spec.numerator, order);
    TruncatedSeries denom(n, order);
    denom.set(Point(n, 0), 1);
    for (const auto& [f, mult] : spec.denominator_factors) {
        if (f.dim() != n)
            throw std::invalid_argument("denominator factor has the wrong number of variables");
        if (mult <= 0)
            throw std::invalid_argument("denominator multiplicity must be positive");
        if (f.coefficient(Point(n, 0)) == 0)
            throw std::invalid_argument("denominator factor has zero constant term");
        auto fs = TruncatedSeries::from_polynomial(f, order);
        for (int i = 0; i < mult; ++i)
            denom = denom * fs;
    }
    TruncatedSeries out = num * denom.inverse();
    if (!(out * denom - num).is_zero())
        throw std::logic_error("rational expansion residual is nonzero");
    return out;
}

Integer linear_form_power_coefficient(const std::vector<LinearFormPower>& forms, const std::vector<std::int64_t>& target)
{
    const std::size_t p = target.size();
    std::int64_t total = 0;
    for (const auto& f : forms) {
        if (f.coeffs.size() != p)
            throw std::invalid_argument("linear form has the wrong number of variables");
        if (f.exponent < 0)
            throw std::invalid_argument("negative power of a linear form");
        total += f.exponent;
    }
    for (auto t : target)
        if (t < 0)
            return 0;
    if (total != std::accumulate(target.begin(), target.end(), std::int64_t{0}))
        return 0;

    // Partial products keyed by their exponent; anything exceeding the target is dropped.
    std::map<Point, Integer> state{{Point(p, 0), Integer(1)}};
    for (const auto& f : forms) {
        std::map<Point, Integer> next;
        for (const auto& [x, val] : state) {
            Point add(p, 0);
            auto rec = [&](auto&& self, std::size_t i, std::int64_t left, Integer weight) -> void {
                if (i + 1 == p) {
                    if (left > 0 && f.coeffs[i] == 0)
                        return;
                    if (x[i] + left > target[i])
                        return;
                    add[i] = left;
                    Integer w = weight;
                    if (left > 0) {
                        Integer c;
                        mpz_pow_ui(c.get_mpz_t(), f.coeffs[i].get_mpz_t(), static_cast<unsigned long>(left));
                        w *= c;
                    }
                    auto [it, inserted] = next.try_emplace(x + add, val * w);
                    if (!inserted)
                        it->second += val * w;
                    return;
                }
                const std::int64_t cap = f.coeffs[i] == 0 ? 0 : std::min(left, target[i] - x[i]);
                for (std::int64_t c = 0; c <= cap; ++c) {
                    add[i] = c;
                    Integer pw;
                    mpz_pow_ui(pw.get_mpz_t(), f.coeffs[i].get_mpz_t(), static_cast<unsigned long>(c));
                    self(self, i + 1, left - c, weight * binomial(left, c) * pw);
                }
            };
            rec(rec, 0, f.exponent, Integer(1));
        }
        state = std::move(next);
    }
    auto it = state.find(Point(target.begin(), target.end()));
    return it == state.end() ? Integer(0) : it->second;
}

}  // namespace toric
