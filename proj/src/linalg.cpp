#include "toric/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace toric {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows)
{
    if (rows.empty())
        return {};
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw std::invalid_argument("ragged matrix rows");
        std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<long>(i * m.cols_));
    }
    return m;
}

RatVector RatMatrix::row(std::size_t i) const
{
    return RatVector(data_.begin() + static_cast<long>(i * cols_),
                     data_.begin() + static_cast<long>((i + 1) * cols_));
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += x * b(k, j);
        }
    return out;
}

Integer determinant(std::vector<std::vector<Integer>> a)
{
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0)
        return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Rational determinant(const RatMatrix& m)
{
    if (!m.square())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Integer>> ints(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            Rational scaled = m(i, j) * l;
            ints[i][j] = scaled.get_num();
        }
        scale *= l;
    }
    return make_rational(determinant(std::move(ints)), scale);
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        Rational inv = 1 / rows[r][c];
        for (std::size_t j = c; j < cols; ++j)
            if (rows[r][j] != 0)
                rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (rows[r][j] != 0)
                    rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<RatVector> matrix_rows(const RatMatrix& m)
{
    std::vector<RatVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(m.row(i));
    return rows;
}

}  // namespace

std::size_t rank(const RatMatrix& m)
{
    auto rows = matrix_rows(m);
    return rref(rows, m.cols()).size();
}

std::vector<RatVector> nullspace(const RatMatrix& m)
{
    auto rows = matrix_rows(m);
    auto pivots = rref(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        RatVector v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Integer> primitive_integer_vector(const RatVector& v)
{
    Integer l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * l;
        out[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g > 1)
        for (auto& x : out)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

Integer gcd_of_maximal_minors(const std::vector<std::vector<Integer>>& rows)
{
    const std::size_t k = rows.size();
    if (k == 0)
        return 1;
    const std::size_t n = rows.front().size();
    if (k > n)
        return 0;
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    Integer g = 0;
    while (true) {
        std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                minor[i][j] = rows[i][cols[j]];
        Integer det = determinant(std::move(minor));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
        if (g == 1)
            return g;
        // next combination
        std::size_t i = k;
        while (i > 0 && cols[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++cols[i - 1];
        for (std::size_t j = i; j < k; ++j)
            cols[j] = cols[j - 1] + 1;
    }
    return g;
}

Rational inner(const RatVector& a, const RatVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("inner product dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

namespace {

// Incrementally maintained sparse reduced row echelon form. Each stored row
// has leading coefficient 1 at its pivot, and no other stored row has a
// nonzero entry in that pivot column.
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t dim) : pivot_row_(dim, npos) {}

    void insert(SparseRow row)
    {
        row = reduce(std::move(row));
        if (row.empty())
            return;
        const std::size_t pivot = row.front().first;
        Rational inv = 1 / row.front().second;
        for (auto& [c, v] : row)
            v *= inv;
        for (auto& other : rows_) {
            auto it = std::lower_bound(other.begin(), other.end(), pivot,
                                       [](const auto& e, std::size_t c) { return e.first < c; });
            if (it == other.end() || it->first != pivot)
                continue;
            Rational f = it->second;
            other = axpy(other, row, -f);
        }
        pivot_row_[pivot] = rows_.size();
        rows_.push_back(std::move(row));
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return pivot_row_.size(); }

    std::vector<RatVector> nullspace() const
    {
        std::vector<RatVector> basis;
        for (std::size_t f = 0; f < dim(); ++f) {
            if (pivot_row_[f] != npos)
                continue;
            RatVector v(dim(), Rational(0));
            v[f] = 1;
            for (const auto& row : rows_) {
                auto it = std::lower_bound(row.begin(), row.end(), f,
                                           [](const auto& e, std::size_t c) { return e.first < c; });
                if (it != row.end() && it->first == f)
                    v[row.front().first] = -it->second;
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    static SparseRow axpy(const SparseRow& a, const SparseRow& b, const Rational& f)
    {
        SparseRow out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, f * b[j].second);
                ++j;
            } else {
                Rational v = a[i].second + f * b[j].second;
                if (v != 0)
                    out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    SparseRow reduce(SparseRow row) const
    {
        std::size_t pos = 0;
        while (pos < row.size()) {
            const std::size_t c = row[pos].first;
            const std::size_t r = pivot_row_[c];
            if (r == npos) {
                ++pos;
                continue;
            }
            Rational f = row[pos].second;
            row = axpy(row, rows_[r], -f);
            // entries before pos are untouched pivot-free columns; restart from
            // the first column >= c
            pos = static_cast<std::size_t>(
                std::lower_bound(row.begin(), row.end(), c,
                                 [](const auto& e, std::size_t cc) { return e.first < cc; }) -
                row.begin());
        }
        return row;
    }

    std::vector<std::size_t> pivot_row_;
    std::vector<SparseRow> rows_;
};

FunctionalResult finish(const SparseEchelon& ech, const RatVector& target, const Rational& normalization)
{
    auto basis = ech.nullspace();
    if (basis.size() != 1)
        return NotUnique{basis.size(), "annihilator of the span has dimension " +
                                           std::to_string(basis.size()) + " (expected 1)"};
    Rational s = inner(basis.front(), target);
    if (s == 0)
        return NotUnique{1, "annihilator vanishes on the target; normalization unreachable"};
    Rational f = normalization / s;
    for (auto& x : basis.front())
        x *= f;
    return std::move(basis.front());
}

}  // namespace

FunctionalResult solve_functional(const std::vector<SparseRow>& span, std::size_t dim,
                                  const RatVector& target, const Rational& normalization)
{
    if (target.size() != dim)
        throw std::invalid_argument("solve_functional: target dimension mismatch");
    SparseEchelon ech(dim);
    for (const auto& row : span) {
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i].first >= dim || (i && row[i].first <= row[i - 1].first))
                throw std::invalid_argument("solve_functional: malformed sparse row");
        ech.insert(row);
    }
    return finish(ech, target, normalization);
}

FunctionalResult solve_functional(const std::vector<RatVector>& span, const RatVector& target,
                                  const Rational& normalization)
{
    const std::size_t dim = target.size();
    std::vector<SparseRow> rows;
    rows.reserve(span.size());
    for (const auto& v : span) {
        if (v.size() != dim)
            throw std::invalid_argument("solve_functional: span vector dimension mismatch");
        SparseRow row;
        for (std::size_t i = 0; i < dim; ++i)
            if (v[i] != 0)
                row.emplace_back(i, v[i]);
        rows.push_back(std::move(row));
    }
    return solve_functional(rows, dim, target, normalization);
}

}  // namespace toric
