#include "pperm/volume.hpp"

#include "pperm/combinat.hpp"
#include "pperm/ehrhart.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pperm {

std::string to_string(VolumeMethod m)
{
    switch (m) {
    case VolumeMethod::oracle: return "oracle";
    case VolumeMethod::recursive: return "recursive";
    case VolumeMethod::closed: return "closed";
    case VolumeMethod::three_term: return "three_term";
    case VolumeMethod::draconian: return "draconian";
    case VolumeMethod::parking: return "parking";
    case VolumeMethod::lambda: return "lambda";
    case VolumeMethod::small_n: return "small_n";
    }
    return "?";
}

VolumeMethod parse_volume_method(const std::string& s)
{
    for (auto m : {VolumeMethod::oracle, VolumeMethod::recursive, VolumeMethod::closed, VolumeMethod::three_term,
                   VolumeMethod::draconian, VolumeMethod::parking, VolumeMethod::lambda, VolumeMethod::small_n})
        if (to_string(m) == s)
            return m;
    throw std::invalid_argument("unknown volume method: " + s);
}

namespace {

void require_range(int m, int n)
{
    if (m < 1)
        throw std::invalid_argument("volume: need m >= 1");
    if (n < m - 1)
        throw std::invalid_argument("volume: this engine needs n >= m-1");
}

BigInt to_integer(const Rational& r, const char* what)
{
    if (denominator(r) != 1)
        throw std::logic_error(std::string(what) + ": non-integral normalized volume " + r.str());
    return numerator(r);
}

}  // namespace

BigInt nvol_oracle(int m, int n, unsigned workers)
{
    auto e = ehr_interpolate(m, n, workers);
    return to_integer(e.poly.leading() * Rational(factorial(m)), "nvol_oracle");
}

BigInt nvol_recursive(int m, int n)
{
    require_range(m, n);
    std::map<std::pair<int, int>, Rational> memo;
    std::function<Rational(int, int)> v = [&](int mm, int nn) -> Rational {
        if (mm == 0)
            return 1;
        auto key = std::make_pair(mm, nn);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        Rational sum = 0;
        for (int k = 1; k <= mm; ++k) {
            Rational kk = k >= 2 ? Rational(ipow(k, k - 2)) : Rational(1);
            Rational lin = Rational(k) * nn - Rational(binomial(k, 2));
            sum += kk * v(mm - k, nn - k) / Rational(factorial(mm - k)) * lin * Rational(binomial(mm, k));
        }
        Rational r = sum * Rational(factorial(mm - 1));
        memo[key] = r;
        return r;
    };
    return to_integer(v(m, n), "nvol_recursive");
}

ClosedVolumes nvol_closed(int m, int n)
{
    require_range(m, n);
    const Rational pre = -Rational(factorial(m)) / Rational(ipow(2, m));
    Rational s1 = 0;
    for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= j; ++i)
            s1 += Rational(binomial(m, j) * binomial(j, i) * double_factorial(i) * ipow(2 * BigInt(n), m - j));
    Rational s2 = 0;
    for (int i = 0; i <= m; ++i)
        s2 += Rational(binomial(m, i) * double_factorial(i) * ipow(2 * BigInt(n) + 1, m - i));
    Series g = Series::sqrt_one_minus(1, m) * exp(Series::linear(0, Rational(2 * n + 1, 2), m));
    Rational f = Rational(factorial(m));

    ClosedVolumes c{to_integer(pre * s1, "nvol_closed"), to_integer(pre * s2, "nvol_closed"),
                    to_integer(f * f * g.coeff(m), "nvol_closed")};
    if (c.vmn != c.vmn2 || c.vmn != c.vmncoeff)
        throw std::logic_error("nvol_closed: the three closed forms disagree");
    return c;
}

BigInt nvol_three_term(int m, int n)
{
    require_range(m, n);
    Rational w_prev = 0, w = 1;  // W(-1) arbitrary, W(0) = 1
    for (int k = 1; k <= m; ++k) {
        Rational next = Rational(k + n - 1) * w - Rational(k - 1) * (Rational(n) + Rational(1, 2)) * w_prev;
        w_prev = w;
        w = next;
    }
    return to_integer(w * Rational(factorial(m)), "nvol_three_term");
}

namespace {

BigInt draconian_general(int m, int n)
{
    const BigInt N = n - m + 1;
    BigInt total = 0;
    for (auto& a : enumerate_draconian(m, DraconianMode::volume)) {
        int s = std::accumulate(a.begin(), a.begin() + m, 0);
        total += multinomial(a) * ipow(N, s);
    }
    return total;
}

}  // namespace

BigInt nvol_draconian(int m, int n, DraconianVolumeMode mode)
{
    require_range(m, n);
    if (m > 7)
        throw std::invalid_argument("nvol_draconian: m too large");
    if (mode == DraconianVolumeMode::general)
        return draconian_general(m, n);
    if (n != m - 1)
        throw std::invalid_argument("nvol_draconian: the parking count needs n = m-1");
    BigInt total = 0;
    for (auto& b : enumerate_parking(m, true))
        total += multinomial(b);
    if (total != draconian_general(m, n))
        throw std::logic_error("nvol_draconian: parking count disagrees with the general sum");
    return total;
}

Rational nvol_lambda(int m, int n, const std::vector<Rational>& lambda)
{
    require_range(m, n);
    if (static_cast<int>(lambda.size()) != m + 1)
        throw std::invalid_argument("nvol_lambda: need m+1 parameters");
    for (size_t i = 0; i < lambda.size(); ++i)
        for (size_t j = i + 1; j < lambda.size(); ++j)
            if (lambda[i] == lambda[j])
                throw std::invalid_argument("nvol_lambda: parameters must be distinct");
    if (m > 7)
        throw std::invalid_argument("nvol_lambda: m too large");

    std::vector<int> sigma(m + 1);
    std::iota(sigma.begin(), sigma.end(), 1);
    Rational total = 0;
    do {
        int p = static_cast<int>(std::find(sigma.begin(), sigma.end(), m + 1) - sigma.begin()) + 1;
        Rational num = 0;
        for (int i = 1; i <= p - 1; ++i)
            num += Rational(n - i + 1) * lambda[sigma[i - 1] - 1];
        num += Rational((m - p + 1) * (2 * n - m - p + 2), 2) * lambda[m];
        Rational den = 1;
        for (int i = 1; i <= m; ++i)
            den *= lambda[sigma[i - 1] - 1] - lambda[sigma[i] - 1];
        total += rpow(num, m) / den;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

std::vector<Rational> default_lambda(int m)
{
    std::vector<Rational> l;
    for (int i = 1; i <= m + 1; ++i)
        l.emplace_back(i);
    return l;
}

std::vector<Rational> prime_lambda(int m)
{
    std::vector<Rational> l;
    for (int p = 2; static_cast<int>(l.size()) < m + 1; ++p) {
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0)
                prime = false;
        if (prime)
            l.emplace_back(p);
    }
    return l;
}

BigInt nvol_small_n(int m, int n)
{
    if (m < 1)
        throw std::invalid_argument("nvol_small_n: need m >= 1");
    const BigInt M = m;
    switch (n) {
    case 1:
        return 1;
    case 2:
        return ipow(3, m) - M;
    case 3:
        return ipow(6, m) - M * ipow(3, m) - (M - 1) * binomial(m, 2);
    case 4: {
        Rational r = Rational(ipow(10, m)) - Rational(M * ipow(6, m)) -
                     Rational(M * (M - 1) * (M - 3), 6) * Rational(ipow(3, m)) -
                     Rational((3 * M * M - 6 * M + 1) * binomial(m, 3));
        return to_integer(r, "nvol_small_n");
    }
    default:
        throw std::invalid_argument("nvol_small_n: only n <= 4 has a closed form");
    }
}

Polynomial nvol_poly(int m, PolyVariable var)
{
    if (m < 1 || m > 8)
        throw std::invalid_argument("nvol_poly: need 1 <= m <= 8");
    Polynomial p;
    if (var == PolyVariable::n) {
        for (int j = 0; j <= m; ++j)
            for (int i = 0; i <= j; ++i) {
                Rational c(binomial(m, j) * binomial(j, i) * double_factorial(i) * ipow(2, m - j));
                p += Polynomial::monomial(c, m - j);
            }
        p *= -Rational(factorial(m)) / Rational(ipow(2, m));
    } else {
        for (auto& a : enumerate_draconian(m, DraconianMode::volume)) {
            int s = std::accumulate(a.begin(), a.begin() + m, 0);
            p += Polynomial::monomial(Rational(multinomial(a)), s);
        }
    }
    return p;
}

BigInt formula_bank(FormulaBank which, int m)
{
    switch (which) {
    case FormulaBank::perm_nvol:
        if (m < 1)
            throw std::invalid_argument("perm_nvol: need m >= 1");
        return m >= 2 ? ipow(m, m - 2) : BigInt(1);
    case FormulaBank::aux1:
        if (m < 3)
            throw std::invalid_argument("aux1: need m >= 3");
        return ipow(2, m) - ipow(3, m) + m * ipow(3, m - 1);
    case FormulaBank::aux2:
        if (m < 3)
            throw std::invalid_argument("aux2: need m >= 3");
        return 3 * BigInt(m) * m - 6 * m + 1;
    }
    throw std::invalid_argument("formula_bank: unknown formula");
}

namespace {

// {0, e_first, ..., e_m} scaled by s, as vectors of length m
std::vector<IntVec> scaled_simplex(int m, int first, std::int64_t s)
{
    std::vector<IntVec> out{IntVec(m, 0)};
    for (int i = first; i <= m; ++i) {
        IntVec e(m, 0);
        e[i - 1] = s;
        out.push_back(e);
    }
    return out;
}

}  // namespace

VRep aux1_vertices(int m)
{
    if (m < 3)
        throw std::invalid_argument("aux1: need m >= 3");
    VRep v;
    v.dim = m;
    const std::int64_t base[3][3] = {{4, 4, 2}, {4, 3, 3}, {3, 4, 3}};
    for (auto& b : base)
        for (auto p : scaled_simplex(m, 3, b[2])) {
            p[0] += b[0];
            p[1] += b[1];
            v.points.push_back(p);
        }
    canonicalize(v);
    return v;
}

VRep aux2_vertices(int m)
{
    if (m < 3)
        throw std::invalid_argument("aux2: need m >= 3");
    VRep v;
    v.dim = m;
    IntVec perm{2, 3, 4};
    do {
        for (auto p : scaled_simplex(m, 4, 1)) {
            for (int i = 0; i < 3; ++i)
                p[i] += perm[i];
            v.points.push_back(p);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i = 0; i < 3; ++i) {
        IntVec p(m, 0);
        p[0] = p[1] = p[2] = 3;
        p[i] = 4;
        v.points.push_back(p);
    }
    canonicalize(v);
    return v;
}

VRep aux2_vertices_literal(int m)
{
    if (m < 3)
        throw std::invalid_argument("aux2: need m >= 3");
    VRep v;
    v.dim = m;
    v.points = scaled_simplex(m, 4, 1);
    for (int i = 0; i < 3; ++i) {
        IntVec p(m, 0);
        p[0] = p[1] = p[2] = 3;
        p[i] = 4;
        v.points.push_back(p);
    }
    canonicalize(v);
    return v;
}

BigInt nvol_of_vertices(const VRep& v, unsigned workers)
{
    auto e = ehr_interpolate(hull_v_to_h(v), workers);
    return to_integer(e.leading() * Rational(factorial(v.dim)), "nvol_of_vertices");
}

ConjFitReport conj_vmn_fit(int n, std::vector<int> m_values, int slack)
{
    if (n < 1)
        throw std::invalid_argument("conj_vmn_fit: need n >= 1");
    if (slack < 0)
        throw std::invalid_argument("conj_vmn_fit: negative slack");
    ConjFitReport rep;
    rep.n = n;
    const int terms = std::max(0, n - 2);
    int unknowns = 0;
    for (int i = 1; i <= terms; ++i)
        unknowns += 2 * i + 2 + slack;
    if (m_values.empty())
        for (int m = 1; m <= unknowns + 4; ++m)
            m_values.push_back(m);
    rep.m_values = m_values;

    auto value = [&](int m) {
        if (n <= 4)
            return nvol_small_n(m, n);
        if (n >= m - 1)
            return nvol_recursive(m, n);
        if (m <= 5 && n <= 6)
            return nvol_oracle(m, n);
        throw std::invalid_argument("conj_vmn_fit: v(" + std::to_string(m) + "," + std::to_string(n) +
                                    ") is out of reach; pass a smaller m-grid");
    };
    const BigInt top = binomial(n + 1, 2), second = binomial(n, 2);

    RationalMatrix A;
    std::vector<Rational> b;
    for (int m : m_values) {
        // sum_i p_i(m) C(n-i,2)^m = top^m - m second^m - v(m,n)
        b.emplace_back(ipow(top, m) - m * ipow(second, m) - value(m));
        std::vector<Rational> row;
        for (int i = 1; i <= terms; ++i) {
            BigInt base = ipow(binomial(n - i, 2), m);
            BigInt mk = 1;
            for (int k = 0; k <= 2 * i + 1 + slack; ++k) {
                row.emplace_back(base * mk);
                mk *= m;
            }
        }
        A.push_back(std::move(row));
    }

    if (terms == 0) {
        rep.solved = std::all_of(b.begin(), b.end(), [](const Rational& x) { return x == 0; });
        rep.degrees_ok = rep.signs_ok = true;
    } else {
        auto x = solve_linear(A, b);
        rep.solved = x.has_value();
        if (x) {
            size_t at = 0;
            rep.degrees_ok = rep.signs_ok = true;
            for (int i = 1; i <= terms; ++i) {
                std::vector<Rational> c(x->begin() + at, x->begin() + at + 2 * i + 2 + slack);
                at += 2 * i + 2 + slack;
                ConjFitTerm t{i, Polynomial(c), 2 * i + 1, 0, 0};
                t.degree = t.poly.degree();
                t.leading_sign = t.poly.leading() > 0 ? 1 : (t.poly.leading() < 0 ? -1 : 0);
                rep.degrees_ok = rep.degrees_ok && t.degree == t.expected_degree;
                rep.signs_ok = rep.signs_ok && t.leading_sign > 0;
                rep.terms.push_back(std::move(t));
            }
        }
    }
    rep.status = rep.solved && rep.degrees_ok && rep.signs_ok ? "consistent" : "inconsistent";
    return rep;
}

std::vector<VolumeResult> nvol_all_methods(int m, int n, unsigned workers)
{
    std::vector<VolumeResult> out;
    auto add = [&](VolumeMethod meth, const Rational& v) { out.push_back({v, meth, m, n}); };
    if (m <= 5 && n <= 6)
        add(VolumeMethod::oracle, Rational(nvol_oracle(m, n, workers)));
    if (n <= 4)
        add(VolumeMethod::small_n, Rational(nvol_small_n(m, n)));
    if (n >= m - 1) {
        add(VolumeMethod::recursive, Rational(nvol_recursive(m, n)));
        auto c = nvol_closed(m, n);
        add(VolumeMethod::closed, Rational(c.vmn));
        add(VolumeMethod::three_term, Rational(nvol_three_term(m, n)));
        if (m <= 6)
            add(VolumeMethod::draconian, Rational(nvol_draconian(m, n, DraconianVolumeMode::general)));
        if (n == m - 1 && m <= 6)
            add(VolumeMethod::parking, Rational(nvol_draconian(m, n, DraconianVolumeMode::parking_count)));
        if (m <= 5) {
            add(VolumeMethod::lambda, nvol_lambda(m, n, default_lambda(m)));
            add(VolumeMethod::lambda, nvol_lambda(m, n, prime_lambda(m)));
        }
    }
    return out;
}

}  // namespace pperm
