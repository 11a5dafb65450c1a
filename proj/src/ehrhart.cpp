#include "pperm/ehrhart.hpp"

#include "pperm/combinat.hpp"

#include <stdexcept>

namespace pperm {

std::string to_string(EhrMethod m)
{
    switch (m) {
    case EhrMethod::interpolate: return "interpolate";
    case EhrMethod::closed_small_n: return "closed_small_n";
    case EhrMethod::closed_small_m: return "closed_small_m";
    case EhrMethod::draconian: return "draconian";
    case EhrMethod::parking: return "parking";
    case EhrMethod::conjecture: return "conjecture";
    case EhrMethod::recurrence: return "recurrence";
    }
    return "?";
}

EhrMethod parse_ehr_method(const std::string& s)
{
    for (auto m : {EhrMethod::interpolate, EhrMethod::closed_small_n, EhrMethod::closed_small_m, EhrMethod::draconian,
                   EhrMethod::parking, EhrMethod::conjecture, EhrMethod::recurrence})
        if (to_string(m) == s)
            return m;
    throw std::invalid_argument("unknown Ehrhart method: " + s);
}

bool is_conjectural(EhrMethod m) { return m == EhrMethod::conjecture || m == EhrMethod::recurrence; }

namespace {

const Polynomial T = Polynomial::x();

Polynomial lin(const Rational& a, const Rational& b) { return Polynomial(std::vector<Rational>{b, a}); }

void require_range(int m, int n)
{
    if (m < 1)
        throw std::invalid_argument("ehrhart: need m >= 1");
    if (n < m - 1)
        throw std::invalid_argument("ehrhart: this engine needs n >= m-1");
}

}  // namespace

EhrhartResult ehr_interpolate(int m, int n, unsigned workers)
{
    PPSpec spec(m, n);
    std::vector<std::pair<Rational, Rational>> pts;
    for (int t = 0; t <= m; ++t)
        pts.emplace_back(t, Rational(count_points(spec, t, workers)));
    Polynomial p = interpolate(pts);
    std::uint64_t fresh = count_points(spec, m + 1, workers);
    if (p(Rational(m + 1)) != Rational(fresh))
        throw std::logic_error("ehr_interpolate: count at t=m+1 does not match the interpolant");
    return {p, m, n, EhrMethod::interpolate};
}

Polynomial ehr_interpolate(const HRep& h, unsigned workers)
{
    auto box = bounding_box(h);
    if (!box)
        return Polynomial();
    const int d = h.dim;
    std::vector<std::pair<Rational, Rational>> pts;
    for (int t = 0; t <= d; ++t)
        pts.emplace_back(t, Rational(t == 0 ? 1 : count_points(h, t, *box, workers)));
    Polynomial p = interpolate(pts);
    if (p(Rational(d + 1)) != Rational(count_points(h, d + 1, *box, workers)))
        throw std::logic_error("ehr_interpolate: count at t=d+1 does not match the interpolant");
    return p;
}

EhrhartResult ehr_closed_small_n(int m, int n)
{
    if (m < 1)
        throw std::invalid_argument("ehr_closed_small_n: need m >= 1");
    Polynomial p;
    switch (n) {
    case 1:
        p = binomial_poly(lin(1, m), m);
        break;
    case 2:
        p = binomial_poly(lin(3, m), m) - binomial_poly(lin(1, m - 1), m) * Rational(m);
        break;
    case 3:
        p = binomial_poly(lin(6, m), m) - binomial_poly(lin(3, m - 1), m) * Rational(m) -
            (binomial_poly(lin(1, m - 1), m) + binomial_poly(lin(1, m - 2), m) * Rational(m - 2)) *
                Rational(binomial(m, 2));
        break;
    default:
        throw std::invalid_argument("ehr_closed_small_n: only n <= 3 has a closed form");
    }
    return {p, m, n, EhrMethod::closed_small_n};
}

EhrhartResult ehr_closed_small_m(int m, int n)
{
    const Rational N = n;
    const Rational h(1, 2), q(1, 4);
    std::vector<Rational> c;
    switch (m) {
    case 1:
        if (n < 1)
            break;
        c = {1, N};
        break;
    case 2:
        if (n < 1)
            break;
        c = {1, 2 * N - h, N * N - h};
        break;
    case 3:
        if (n < 2)
            break;
        c = {1, 3 * N - 3 * h, 3 * N * N - 3 * N / 2 - 3 * h, N * N * N - 3 * N / 2 - 1};
        break;
    case 4:
        if (n < 3)
            break;
        c = {1, 4 * N - 3, 6 * N * N - 6 * N - 9 * q, 4 * N * N * N - 3 * N * N - 6 * N - 5 * h,
             N * N * N * N - 3 * N * N - 4 * N - 9 * q};
        break;
    default:
        throw std::invalid_argument("ehr_closed_small_m: only m <= 4 has a closed form");
    }
    if (c.empty())
        throw std::invalid_argument("ehr_closed_small_m: n below the formula's range");
    return {Polynomial(c), m, n, EhrMethod::closed_small_m};
}

EhrhartResult ehr_draconian(int m, int n)
{
    require_range(m, n);
    if (m > 5)
        throw std::invalid_argument("ehr_draconian: need m <= 5");
    const Rational N = n - m + 1;
    Polynomial total;
    for (auto& a : enumerate_draconian(m, DraconianMode::ehrhart)) {
        Polynomial term(1);
        for (size_t k = 0; k < a.size() && !term.is_zero(); ++k) {
            if (a[k] == 0)
                continue;
            Polynomial base = static_cast<int>(k) < m ? lin(N, a[k] - 1) : lin(1, a[k] - 1);
            term *= binomial_poly(base, a[k]);
        }
        total += term;
    }
    return {total, m, n, EhrMethod::draconian};
}

ParkingResult ehr_parking(int m)
{
    if (m < 1 || m > 5)
        throw std::invalid_argument("ehr_parking: need 1 <= m <= 5");
    Polynomial total;
    std::uint64_t count = 0;
    for (auto& b : enumerate_parking(m, false)) {
        Polynomial term(1);
        for (int x : b)
            if (x)
                term *= binomial_poly(lin(1, x - 1), x);
        total += term;
        ++count;
    }
    return {{total, m, m - 1, EhrMethod::parking}, count};
}

ConjectureResult ehr_conjecture(int m, int n)
{
    require_range(m, n);
    const Rational N = n;

    Polynomial e1;
    const Polynomial base = lin(2 * N + 1, 2);
    for (int i = 0; 2 * i <= m; ++i)
        for (int j = 2 * i; j <= m; ++j) {
            Rational c(multinomial({m - j, j - 2 * i, i, i}) * factorial(i) * double_factorial(j - 2 * i));
            if ((i + 1) % 2)
                c = -c;
            e1 += Polynomial::monomial(c, j - i) * pow(base, m - j);
        }
    e1 *= Rational(1) / Rational(ipow(2, m));

    // m! [z^m] sqrt(1-tz) exp((nt+t/2+1)z - tz^2/4), evaluated at enough t and interpolated
    std::vector<std::pair<Rational, Rational>> pts;
    for (int t = 0; t <= m + 1; ++t) {
        Rational tt = t;
        Series arg(m);
        arg.set(1, N * tt + tt / 2 + 1);
        if (m >= 2)
            arg.set(2, -tt / 4);
        Series g = Series::sqrt_one_minus(tt, m) * exp(arg);
        pts.emplace_back(tt, g.coeff(m) * Rational(factorial(m)));
    }
    Polynomial e2 = interpolate(pts);

    ConjectureResult r{{e1, m, n, EhrMethod::conjecture}, {e2, m, n, EhrMethod::conjecture}, e1 == e2};
    if (!r.equal)
        throw std::logic_error("ehr_conjecture: the two conjectured forms disagree");
    return r;
}

EhrhartResult ehr_recurrence(int m, int n)
{
    require_range(m, n);
    const Rational N = n;
    std::vector<Polynomial> E{Polynomial(), Polynomial(), Polynomial(1)};  // E(-2), E(-1), E(0)
    for (int k = 1; k <= m; ++k) {
        const Polynomial& e1 = E[E.size() - 1];
        const Polynomial& e2 = E[E.size() - 2];
        const Polynomial& e3 = E[E.size() - 3];
        Polynomial next = lin(Rational(k) + N - 1, 1) * e1 -
                          lin(N + Rational(1, 2), Rational(3, 2)) * T * e2 * Rational(k - 1) +
                          T * T * e3 * Rational((k - 1) * (k - 2), 2);
        E.push_back(next);
    }
    return {E.back(), m, n, EhrMethod::recurrence};
}

EhrhartResult ehrhart(int m, int n, EhrMethod method, unsigned workers)
{
    switch (method) {
    case EhrMethod::interpolate: return ehr_interpolate(m, n, workers);
    case EhrMethod::closed_small_n: return ehr_closed_small_n(m, n);
    case EhrMethod::closed_small_m: return ehr_closed_small_m(m, n);
    case EhrMethod::draconian: return ehr_draconian(m, n);
    case EhrMethod::parking:
        if (n != m - 1)
            throw std::invalid_argument("ehrhart: the parking sum needs n = m-1");
        return ehr_parking(m).ehr;
    case EhrMethod::conjecture: return ehr_conjecture(m, n).expl1;
    case EhrMethod::recurrence: return ehr_recurrence(m, n);
    }
    throw std::invalid_argument("ehrhart: unknown method");
}

// ------------------------------------------------------------------------ h*

std::vector<Rational> to_hstar(const Polynomial& ehr, int m)
{
    if (m < 0 || ehr.degree() > m)
        throw std::invalid_argument("to_hstar: polynomial degree exceeds the declared dimension");
    RationalMatrix A(m + 1, std::vector<Rational>(m + 1));
    for (int i = 0; i <= m; ++i) {
        Polynomial b = binomial_poly(lin(1, m - i), m);
        for (int k = 0; k <= m; ++k)
            A[k][i] = b.coeff(k);
    }
    std::vector<Rational> rhs;
    for (int k = 0; k <= m; ++k)
        rhs.push_back(ehr.coeff(k));
    auto x = solve_linear(A, rhs);
    if (!x)
        throw std::logic_error("to_hstar: singular binomial basis");
    return *x;
}

Polynomial from_hstar(const std::vector<Rational>& hstar)
{
    if (hstar.empty())
        throw std::invalid_argument("from_hstar: empty vector");
    const int m = static_cast<int>(hstar.size()) - 1;
    Polynomial p;
    for (int i = 0; i <= m; ++i)
        p += binomial_poly(lin(1, m - i), m) * hstar[i];
    return p;
}

std::vector<Rational> pyramid_hstar(const std::vector<Rational>& hstar)
{
    auto r = hstar;
    r.emplace_back(0);
    return r;
}

// ---------------------------------------------------------------------- aux3

VRep aux3_vertices(int n)
{
    if (n < 4)
        throw std::invalid_argument("aux3: need n >= 4");
    const std::int64_t N = n;
    const std::int64_t rows[4][14] = {
        {N, N, N, N, N, N - 1, N - 1, N - 1, N - 1, N - 1, N, N, N, N},
        {N - 1, N - 1, N - 1, N - 1, N - 1, N, N, N, N, N, N, N, N, N},
        {N - 2, N - 3, N - 2, 0, 0, N - 2, N - 3, N - 2, 0, 0, N - 3, N - 3, 0, 0},
        {N - 3, N - 2, 0, N - 2, 0, N - 3, N - 2, 0, N - 2, 0, N - 3, 0, N - 3, 0},
    };
    VRep v;
    v.dim = 4;
    for (int c = 0; c < 14; ++c)
        v.points.push_back({rows[0][c], rows[1][c], rows[2][c], rows[3][c]});
    return v;
}

Polynomial aux_lemma3(int n)
{
    if (n < 4)
        throw std::invalid_argument("aux_lemma3: need n >= 4");
    const Rational N = n;
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1, 12), N / 3 - Rational(5, 8), N * N / 2 - 2 * N + Rational(23, 12),
                       N * N / 2 - 7 * N / 3 + Rational(21, 8)});
}

std::uint64_t aux3_half_open_count(int n, std::int64_t t)
{
    auto v = aux3_vertices(n);
    HRep q = hull_v_to_h(v);
    // facet through the first ten columns: x1 + x2 = 2n-1, the polytope lying on the >= side
    HRep f = q;
    f.rows.push_back({{1, 1, 0, 0}, 2 * static_cast<std::int64_t>(n) - 1});
    auto box = bounding_box(q);
    return count_points(q, t, *box) - count_points(f, t, *box);
}

}  // namespace pperm
