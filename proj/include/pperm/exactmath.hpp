#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pperm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view s);

BigInt factorial(int n);
// C(n,k), zero outside 0 <= k <= n
BigInt binomial(std::int64_t n, std::int64_t k);
BigInt ipow(const BigInt& base, unsigned e);
Rational rpow(const Rational& base, unsigned e);

// -prod_{j=1}^{i} (2j-3): i=0 -> -1, i=1 -> 1, i=2 -> 1, i=3 -> 3
BigInt double_factorial(int i);
BigInt stirling2(int m, int k);
BigInt multinomial(const std::vector<int>& parts);

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(const Rational& c);
    Polynomial(int c) : Polynomial(Rational(c)) {}

    static Polynomial x();
    static Polynomial monomial(const Rational& c, int degree);

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const;
    Rational leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const;
    Polynomial compose(const Polynomial& inner) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    // "7/2*t^2 + 7/2*t + 1"
    std::string render(std::string_view var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

Polynomial pow(const Polynomial& p, unsigned e);
// p(p-1)...(p-k+1)/k!
Polynomial binomial_poly(const Polynomial& p, int k);
Polynomial eulerian(int m);

// Truncated power series: coefficients of z^0..z^order.
class Series {
public:
    explicit Series(int order);
    Series(std::vector<Rational> coeffs, int order);

    static Series constant(const Rational& c, int order);
    static Series linear(const Rational& c0, const Rational& c1, int order);
    static Series sqrt_one_minus(const Rational& c, int order);
    static Series tree_function(int order);

    int order() const { return order_; }
    const Rational& coeff(int k) const;
    void set(int k, Rational v);

    Series& operator+=(const Series& o);
    Series& operator*=(const Rational& s);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Rational& s) { return a *= s; }
    friend bool operator==(const Series& a, const Series& b) { return a.order_ == b.order_ && a.c_ == b.c_; }

private:
    int order_;
    std::vector<Rational> c_;
};

Series exp(const Series& s);

Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

using RationalMatrix = std::vector<std::vector<Rational>>;

// Unique solution of A x = b (A may have more rows than columns), or nullopt
// when A has deficient column rank or the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(RationalMatrix A, std::vector<Rational> b);

}  // namespace pperm
