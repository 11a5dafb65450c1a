#include "pperm/exactmath.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pperm {

std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(std::string_view s)
{
    std::string str(s);
    auto slash = str.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(str));
        BigInt p(str.substr(0, slash));
        BigInt q(str.substr(slash + 1));
        if (q == 0)
            throw std::invalid_argument("zero denominator in \"" + str + "\"");
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: \"" + str + "\"");
    }
}

BigInt factorial(int n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of negative number");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt ipow(const BigInt& base, unsigned e)
{
    return boost::multiprecision::pow(base, e);
}

Rational rpow(const Rational& base, unsigned e)
{
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= base;
    return r;
}

BigInt double_factorial(int i)
{
    if (i < 0)
        throw std::invalid_argument("double_factorial: negative index");
    BigInt p = 1;
    for (int j = 1; j <= i; ++j)
        p *= 2 * j - 3;
    return -p;
}

BigInt stirling2(int m, int k)
{
    if (m < 0 || k < 0)
        throw std::invalid_argument("stirling2: negative argument");
    std::vector<BigInt> row(k + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= m; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

BigInt multinomial(const std::vector<int>& parts)
{
    BigInt r = 1;
    int total = 0;
    for (int p : parts) {
        if (p < 0)
            throw std::invalid_argument("multinomial: negative part");
        for (int i = 1; i <= p; ++i) {
            ++total;
            r *= total;
            r /= i;
        }
    }
    return r;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& c)
{
    if (c != 0)
        c_.push_back(c);
}

Polynomial Polynomial::x() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const Rational& c, int degree)
{
    if (degree < 0)
        throw std::invalid_argument("monomial: negative degree");
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational Polynomial::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return 0;
    return c_[i];
}

Rational Polynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Polynomial::operator()(const Rational& x) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

Polynomial Polynomial::compose(const Polynomial& inner) const
{
    Polynomial r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= inner;
        r += Polynomial(*it);
    }
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s)
{
    for (auto& c : c_)
        c *= s;
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    r *= Rational(-1);
    return r;
}

std::string Polynomial::render(std::string_view var) const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0)
            continue;
        Rational a = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string mono;
        if (i >= 1)
            mono = std::string(var) + (i > 1 ? "^" + std::to_string(i) : "");
        if (i == 0)
            out += a.str();
        else if (a == 1)
            out += mono;
        else
            out += a.str() + "*" + mono;
    }
    return out;
}

Polynomial pow(const Polynomial& p, unsigned e)
{
    Polynomial r(1);
    for (unsigned i = 0; i < e; ++i)
        r *= p;
    return r;
}

Polynomial binomial_poly(const Polynomial& p, int k)
{
    if (k < 0)
        throw std::invalid_argument("binomial_poly: negative k");
    Polynomial r(1);
    for (int j = 0; j < k; ++j)
        r *= p - Polynomial(j);
    r *= Rational(1) / Rational(factorial(k));
    return r;
}

Polynomial eulerian(int m)
{
    if (m < 0)
        throw std::invalid_argument("eulerian: negative m");
    // row[k] = number of permutations of [i] with k descents
    std::vector<BigInt> row{1};
    for (int i = 1; i <= m; ++i) {
        std::vector<BigInt> next(i, 0);
        for (int k = 0; k < i; ++k) {
            if (k < static_cast<int>(row.size()))
                next[k] += (k + 1) * row[k];
            if (k >= 1 && k - 1 < static_cast<int>(row.size()))
                next[k] += (i - k) * row[k - 1];
        }
        row = std::move(next);
    }
    std::vector<Rational> c;
    for (auto& v : row)
        c.emplace_back(v);
    return Polynomial(std::move(c));
}

// -------------------------------------------------------------------- Series

Series::Series(int order) : order_(order), c_(order + 1, Rational(0))
{
    if (order < 0)
        throw std::invalid_argument("Series: negative order");
}

Series::Series(std::vector<Rational> coeffs, int order) : Series(order)
{
    for (size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i)
        c_[i] = std::move(coeffs[i]);
}

Series Series::constant(const Rational& c, int order) { return Series({c}, order); }

Series Series::linear(const Rational& c0, const Rational& c1, int order) { return Series({c0, c1}, order); }

Series Series::sqrt_one_minus(const Rational& c, int order)
{
    Series s(order);
    Rational cp = 1;
    for (int k = 0; k <= order; ++k) {
        s.c_[k] = -Rational(double_factorial(k)) * cp / (Rational(ipow(2, k)) * Rational(factorial(k)));
        cp *= c;
    }
    return s;
}

Series Series::tree_function(int order)
{
    Series s(order);
    for (int i = 1; i <= order; ++i)
        s.c_[i] = Rational(ipow(i, i - 1)) / Rational(factorial(i));
    return s;
}

const Rational& Series::coeff(int k) const
{
    if (k < 0 || k > order_)
        throw std::out_of_range("Series::coeff beyond truncation order");
    return c_[k];
}

void Series::set(int k, Rational v)
{
    if (k < 0 || k > order_)
        throw std::out_of_range("Series::set beyond truncation order");
    c_[k] = std::move(v);
}

Series& Series::operator+=(const Series& o)
{
    if (o.order_ != order_)
        throw std::invalid_argument("Series: truncation orders differ");
    for (int i = 0; i <= order_; ++i)
        c_[i] += o.c_[i];
    return *this;
}

Series& Series::operator*=(const Rational& s)
{
    for (auto& c : c_)
        c *= s;
    return *this;
}

Series operator*(const Series& a, const Series& b)
{
    if (a.order_ != b.order_)
        throw std::invalid_argument("Series: truncation orders differ");
    Series r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
        if (a.c_[i] == 0)
            continue;
        for (int j = 0; i + j <= a.order_; ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

Series exp(const Series& s)
{
    if (s.coeff(0) != 0)
        throw std::invalid_argument("exp: series has nonzero constant term");
    int K = s.order();
    Series e(K);
    e.set(0, 1);
    // k e_k = sum_{j=1}^k j s_j e_{k-j}
    for (int k = 1; k <= K; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j)
            acc += j * s.coeff(j) * e.coeff(k - j);
        e.set(k, acc / k);
    }
    return e;
}

// -------------------------------------------------------------- linear algebra

Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points)
{
    if (points.empty())
        throw std::invalid_argument("interpolate: no points");
    std::set<Rational> xs;
    for (auto& [x, y] : points)
        if (!xs.insert(x).second)
            throw std::invalid_argument("interpolate: duplicate x " + x.str());

    size_t n = points.size();
    std::vector<Rational> dd(n);
    for (size_t i = 0; i < n; ++i)
        dd[i] = points[i].second;
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

    Polynomial r;
    Polynomial basis(1);
    for (size_t i = 0; i < n; ++i) {
        r += basis * dd[i];
        basis *= Polynomial({-points[i].first, Rational(1)});
    }
    return r;
}

std::optional<std::vector<Rational>> solve_linear(RationalMatrix A, std::vector<Rational> b)
{
    size_t rows = A.size();
    if (rows != b.size())
        throw std::invalid_argument("solve_linear: row count mismatch");
    if (rows == 0)
        return std::nullopt;
    size_t cols = A[0].size();
    for (auto& r : A)
        if (r.size() != cols)
            throw std::invalid_argument("solve_linear: ragged matrix");
    if (rows < cols)
        return std::nullopt;

    for (size_t c = 0; c < cols; ++c) {
        size_t piv = c;
        while (piv < rows && A[piv][c] == 0)
            ++piv;
        if (piv == rows)
            return std::nullopt;
        std::swap(A[piv], A[c]);
        std::swap(b[piv], b[c]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == c || A[r][c] == 0)
                continue;
            Rational f = A[r][c] / A[c][c];
            for (size_t k = c; k < cols; ++k)
                A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    for (size_t r = cols; r < rows; ++r)
        if (b[r] != 0)
            return std::nullopt;
    std::vector<Rational> x(cols);
    for (size_t c = 0; c < cols; ++c)
        x[c] = b[c] / A[c][c];
    return x;
}

}  // namespace pperm
