#include "toric/laurent.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "toric/linalg.hpp"

namespace toric {

LaurentPolynomial::LaurentPolynomial(std::size_t dim, const Terms& terms) : dim_(dim)
{
    for (const auto& [e, c] : terms)
        add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::monomial(const Point& exponent, const Rational& coefficient)
{
    LaurentPolynomial p(exponent.size());
    p.add_term(exponent, coefficient);
    return p;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t dim, const Rational& c)
{
    return monomial(Point(dim, 0), c);
}

Rational LaurentPolynomial::coefficient(const Point& exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Point> LaurentPolynomial::support() const
{
    std::vector<Point> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_)
        out.push_back(e);
    return out;
}

void LaurentPolynomial::add_term(const Point& exponent, const Rational& coefficient)
{
    if (exponent.size() != dim_)
        throw std::invalid_argument("exponent dimension mismatch: " + to_string(exponent));
    if (coefficient == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o)
{
    if (o.dim_ != dim_)
        throw std::invalid_argument("polynomial dimension mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o)
{
    if (o.dim_ != dim_)
        throw std::invalid_argument("polynomial dimension mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    if (a.dim_ != b.dim_)
        throw std::invalid_argument("polynomial dimension mismatch");
    LaurentPolynomial out(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(ea + eb, ca * cb);
    return out;
}

LatticePolytope LaurentPolynomial::newton_polytope() const
{
    if (terms_.empty())
        throw std::invalid_argument("Newton polytope of the zero polynomial");
    return convex_hull(support());
}

LaurentPolynomial LaurentPolynomial::multigraded_component(const std::vector<std::int64_t>& k) const
{
    if (k.size() > dim_)
        throw std::invalid_argument("multidegree longer than the exponent vectors");
    const std::size_t off = dim_ - k.size();
    LaurentPolynomial out(dim_);
    for (const auto& [e, c] : terms_)
        if (std::equal(k.begin(), k.end(), e.begin() + static_cast<long>(off)))
            out.terms_.emplace(e, c);
    return out;
}

Rational LaurentPolynomial::evaluate(const std::vector<Rational>& values) const
{
    if (values.size() != dim_)
        throw std::invalid_argument("evaluation point dimension mismatch");
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (e[i] < 0)
                throw std::invalid_argument("evaluate: negative exponent");
            term *= pow(values[i], e[i]);
        }
        s += term;
    }
    return s;
}

std::int64_t MultiDegree::total() const
{
    return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
}

bool MultiDegree::strictly_positive() const
{
    return std::all_of(parts.begin(), parts.end(), [](auto x) { return x > 0; });
}

MultiDegree MultiDegree::shifted_down() const
{
    MultiDegree out = *this;
    for (auto& x : out.parts)
        --x;
    return out;
}

std::vector<MultiDegree> multidegrees(std::size_t r, std::int64_t total, bool strictly_positive)
{
    std::vector<MultiDegree> out;
    if (r == 0)
        return out;
    const std::int64_t lo = strictly_positive ? 1 : 0;
    MultiDegree cur;
    cur.parts.resize(r);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
        if (i + 1 == r) {
            if (left >= lo) {
                cur.parts[i] = left;
                out.push_back(cur);
            }
            return;
        }
        for (std::int64_t v = left - lo * static_cast<std::int64_t>(r - i - 1); v >= lo; --v) {
            cur.parts[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

LaurentPolynomial cayley_polynomial(const std::vector<LaurentPolynomial>& fs)
{
    if (fs.empty())
        throw std::invalid_argument("Cayley polynomial of no polynomials");
    const std::size_t d = fs.front().dim();
    const std::size_t r = fs.size();
    LaurentPolynomial out(d + r);
    for (std::size_t j = 0; j < r; ++j) {
        if (fs[j].dim() != d)
            throw std::invalid_argument("Cayley polynomial: dimension mismatch");
        if (fs[j].is_zero())
            throw std::invalid_argument("Cayley polynomial: f_" + std::to_string(j + 1) + " is zero");
        for (const auto& [e, c] : fs[j].terms()) {
            Point x = e;
            x.resize(d + r, 0);
            x[d + j] = 1;
            out.add_term(x, c);
        }
    }
    return out;
}

LaurentPolynomial log_derivative(const LaurentPolynomial& f, std::size_t i)
{
    if (i >= f.dim())
        throw std::out_of_range("log_derivative: coordinate index out of range");
    LaurentPolynomial out(f.dim());
    for (const auto& [e, c] : f.terms())
        out.add_term(e, c * static_cast<long>(e[i]));
    return out;
}

LaurentPolynomial hessian(const LaurentPolynomial& f)
{
    const std::size_t n = f.dim();
    if (n == 0 || n > 20)
        throw std::invalid_argument("hessian: unsupported dimension");
    std::vector<LaurentPolynomial> first;
    for (std::size_t i = 0; i < n; ++i)
        first.push_back(log_derivative(f, i));
    std::vector<std::vector<LaurentPolynomial>> g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g[i].push_back(log_derivative(first[j], i));

    // Laplace expansion along rows, memoized on the set of used columns.
    std::map<std::uint32_t, LaurentPolynomial> layer;
    layer.emplace(0U, LaurentPolynomial::constant(n, 1));
    for (std::size_t row = 0; row < n; ++row) {
        std::map<std::uint32_t, LaurentPolynomial> next;
        for (const auto& [used, minor] : layer) {
            if (minor.is_zero())
                continue;
            for (std::size_t col = 0; col < n; ++col) {
                if ((used >> col) & 1U || g[row][col].is_zero())
                    continue;
                auto above = static_cast<unsigned>(std::popcount(used >> (col + 1)));
                LaurentPolynomial term = minor * g[row][col];
                if (above % 2 == 1)
                    term *= Rational(-1);
                auto key = used | (1U << col);
                auto [it, inserted] = next.try_emplace(key, std::move(term));
                if (!inserted)
                    it->second += term;
            }
        }
        layer = std::move(next);
    }
    auto it = layer.find((n == 32) ? ~0U : ((1U << n) - 1));
    return it == layer.end() ? LaurentPolynomial(n) : it->second;
}

namespace {

// Calls fn(indices) for every size-k subset of {0, ..., n-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn)
{
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

LaurentPolynomial hessian_subset_sum(const LaurentPolynomial& f)
{
    const std::size_t n = f.dim();
    std::vector<std::pair<Point, Rational>> terms(f.terms().begin(), f.terms().end());
    LaurentPolynomial out(n);
    for_each_subset(terms.size(), n, [&](const std::vector<std::size_t>& s) {
        std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = static_cast<long>(terms[s[i]].first[j]);
        Integer det = determinant(std::move(m));
        if (det == 0)
            return;
        Rational coef = Rational(det * det);
        Point exp(n, 0);
        for (auto i : s) {
            coef *= terms[i].second;
            exp = exp + terms[i].first;
        }
        out.add_term(exp, coef);
    });
    return out;
}

Integer nu(const std::vector<std::vector<Point>>& subsets)
{
    if (subsets.empty())
        throw std::invalid_argument("nu: no subsets");
    std::size_t d = 0;
    bool have_dim = false;
    std::size_t rows_needed = 0;
    for (const auto& s : subsets) {
        if (s.empty())
            throw std::invalid_argument("nu: empty subset");
        for (const auto& p : s) {
            if (!have_dim) {
                d = p.size();
                have_dim = true;
            } else if (p.size() != d) {
                throw std::invalid_argument("nu: dimension mismatch");
            }
        }
        std::vector<Point> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("nu: repeated point inside a subset");
        rows_needed += s.size() - 1;
    }
    if (rows_needed != d)
        throw std::invalid_argument("nu: subset sizes must satisfy sum(|S_i| - 1) = d");
    std::vector<std::vector<Integer>> m;
    for (const auto& s : subsets)
        for (std::size_t i = 1; i < s.size(); ++i) {
            Point diff = s[i] - s[0];
            std::vector<Integer> row;
            for (auto x : diff)
                row.emplace_back(static_cast<long>(x));
            m.push_back(std::move(row));
        }
    Integer det = determinant(std::move(m));
    return det * det;
}

MixedHessian mixed_hessian(const std::vector<LaurentPolynomial>& fs, const MultiDegree& k)
{
    if (fs.empty())
        throw std::invalid_argument("mixed_hessian: no polynomials");
    const std::size_t d = fs.front().dim();
    const std::size_t r = fs.size();
    for (const auto& f : fs)
        if (f.dim() != d)
            throw std::invalid_argument("mixed_hessian: dimension mismatch");
    if (k.parts.size() != r)
        throw std::invalid_argument("mixed_hessian: multidegree length must equal the number of polynomials");
    if (k.total() != static_cast<std::int64_t>(d + r))
        throw std::invalid_argument("mixed_hessian: |k| must equal d + r");
    if (std::any_of(k.parts.begin(), k.parts.end(), [](auto x) { return x < 0; }))
        throw std::invalid_argument("mixed_hessian: negative multidegree");
    MixedHessian out{LaurentPolynomial(d + r), false};
    if (!k.strictly_positive()) {
        out.structurally_zero = true;
        return out;
    }

    std::vector<std::vector<std::pair<Point, Rational>>> supports;
    for (const auto& f : fs)
        supports.emplace_back(f.terms().begin(), f.terms().end());

    std::vector<std::vector<Point>> chosen(r);
    Rational coef = 1;
    Point exp(d, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == r) {
            Integer weight = nu(chosen);
            if (weight == 0)
                return;
            Point full = exp;
            full.insert(full.end(), k.parts.begin(), k.parts.end());
            out.value.add_term(full, coef * weight);
            return;
        }
        const auto& sup = supports[i];
        for_each_subset(sup.size(), static_cast<std::size_t>(k.parts[i]), [&](const std::vector<std::size_t>& s) {
            Rational saved_coef = coef;
            Point saved_exp = exp;
            chosen[i].clear();
            for (auto idx : s) {
                chosen[i].push_back(sup[idx].first);
                coef *= sup[idx].second;
                exp = exp + sup[idx].first;
            }
            self(self, i + 1);
            coef = saved_coef;
            exp = saved_exp;
        });
    };
    rec(rec, 0);
    return out;
}

}  // namespace toric
