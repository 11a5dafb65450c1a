// Acceptance battery: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "pperm/combinat.hpp"
#include "pperm/ehrhart.hpp"
#include "pperm/faces.hpp"
#include "pperm/polytope.hpp"
#include "pperm/volume.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pperm;

namespace {

// Criteria collect the first mismatch so the log says where things went wrong.
struct Check {
    std::string failure;
    void expect(bool ok, const std::string& what)
    {
        if (!ok && failure.empty())
            failure = what;
    }
};

std::string at(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

Polynomial ints(std::vector<long long> c)
{
    std::vector<Rational> r;
    for (auto x : c)
        r.push_back(Rational(x));
    return Polynomial(r);
}

void c1(Check& c)
{
    // printed rows, constant term first
    std::vector<Polynomial> nform{
        ints({0, 1}),
        ints({-1, 0, 2}),
        ints({-6, -9, 0, 6}),
        ints({-54, -96, -72, 0, 24}),
        ints({-840, -1350, -1200, -600, 0, 120}),
        ints({-21150, -30240, -24300, -14400, -5400, 0, 720}),
        ints({-782460, -1036350, -740880, -396900, -176400, -52920, 0, 5040}),
    };
    std::vector<Polynomial> Nform{
        ints({0, 1}),
        ints({1, 4, 2}),
        ints({24, 63, 36, 6}),
        ints({954, 2064, 1224, 288, 24}),
        ints({59040, 113850, 68400, 18600, 2400, 120}),
        ints({5295150, 9446760, 5699700, 1677600, 264600, 21600, 720}),
    };
    for (int m = 1; m <= 7; ++m)
        c.expect(nvol_poly(m, PolyVariable::n) == nform[m - 1], "n-form row m=" + std::to_string(m));
    for (int m = 1; m <= 6; ++m)
        c.expect(nvol_poly(m, PolyVariable::N) == Nform[m - 1], "N-form row m=" + std::to_string(m));
}

void c2(Check& c)
{
    auto cell = [&](int m, int n) {
        Rational o(nvol_oracle(m, n));
        auto cl = nvol_closed(m, n);
        c.expect(Rational(nvol_recursive(m, n)) == o, "recursive " + at(m, n));
        c.expect(Rational(cl.vmn) == o && Rational(cl.vmn2) == o && Rational(cl.vmncoeff) == o, "closed " + at(m, n));
        c.expect(Rational(nvol_three_term(m, n)) == o, "three-term " + at(m, n));
        c.expect(Rational(nvol_draconian(m, n, DraconianVolumeMode::general)) == o, "draconian " + at(m, n));
        c.expect(nvol_lambda(m, n, default_lambda(m)) == o, "lambda default " + at(m, n));
        c.expect(nvol_lambda(m, n, prime_lambda(m)) == o, "lambda primes " + at(m, n));
        if (n <= 4)
            c.expect(Rational(nvol_small_n(m, n)) == o, "small n " + at(m, n));
    };
    for (int m = 1; m <= 4; ++m)
        for (int n = std::max(1, m - 1); n <= 6; ++n)
            cell(m, n);
    for (int n : {4, 5, 6})
        cell(5, n);
}

void c3(Check& c)
{
    BigInt p3 = 1;
    for (int m = 1; m <= 5; ++m) {
        p3 *= 3;
        c.expect(nvol_oracle(m, 2) == p3 - m, "3^m-m at m=" + std::to_string(m));
    }
    for (int m = 1; m <= 4; ++m)
        for (int n : {3, 4})
            c.expect(nvol_oracle(m, n) == nvol_small_n(m, n), "small n " + at(m, n));
}

void c4(Check& c)
{
    for (int m = 1; m <= 4; ++m)
        for (int n = std::max(1, m - 1); n <= 6; ++n) {
            Polynomial e = ehr_interpolate(m, n).poly;
            c.expect(ehr_draconian(m, n).poly == e, "draconian " + at(m, n));
            c.expect(ehr_closed_small_m(m, n).poly == e, "small m " + at(m, n));
        }
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 3; ++n)
            c.expect(ehr_closed_small_n(m, n).poly == ehr_interpolate(m, n).poly, "small n " + at(m, n));
    std::vector<Rational> golden{1, Rational(9, 2), Rational(15, 2), 4};
    c.expect(ehr_interpolate(3, 2).poly == Polynomial(golden), "golden ehr P(3,2)");
}

void c5(Check& c)
{
    for (int m = 1; m <= 4; ++m)
        for (int n = std::max(1, m - 1); n <= 6; ++n) {
            Polynomial e = ehr_interpolate(m, n).poly;
            auto g = ehr_conjecture(m, n);
            c.expect(g.equal && g.expl1.poly == e, "generating function " + at(m, n));
            c.expect(ehr_recurrence(m, n).poly == e, "recurrence " + at(m, n));
        }
    for (int n : {3, 4}) {
        auto r = conj_vmn_fit(n);
        c.expect(r.status == "consistent" && r.solved && r.degrees_ok && r.signs_ok, "fit n=" + std::to_string(n));
        c.expect(r.terms.size() == static_cast<size_t>(n - 2), "fit term count n=" + std::to_string(n));
        for (auto& t : r.terms)
            c.expect(t.degree == 2 * t.index + 1 && t.leading_sign > 0, "fit degree/sign n=" + std::to_string(n));
    }
}

void c6(Check& c)
{
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            auto f = f_vector(m, n);
            std::vector<std::uint64_t> by_rank(m + 1, 0);
            for (auto& ch : enumerate_chains(m, n, false))
                ++by_rank.at(missing_ranks(ch));
            c.expect(by_rank == f, "chain census " + at(m, n));
            auto v = vertices(PPSpec(m, n));
            auto h = facets(PPSpec(m, n));
            c.expect(f[0] == v.points.size(), "vertex count " + at(m, n));
            if (m > 1)
                c.expect(f[m - 1] == h.rows.size(), "facet count " + at(m, n));
            for (auto& p : v.points) {
                int tight = 0;
                for (auto& r : h.rows) {
                    std::int64_t s = 0;
                    for (int i = 0; i < m; ++i)
                        s += r.a[i] * p[i];
                    tight += s == r.b;
                }
                c.expect(tight == m, "simplicity " + at(m, n));
            }
        }
    for (int n = 2; n <= 6; ++n)
        c.expect(f_vector(2, n) == std::vector<std::uint64_t>{5, 5, 1}, "f-vector P(2,n)");
    c.expect(f_vector(3, 3) == std::vector<std::uint64_t>{16, 24, 10, 1}, "f-vector P(3,3)");
    Subset a = Subset::of({1, 2, 3}), s = Subset::of({1, 2, 3, 4, 5}), t = Subset::of({1, 2, 3, 4, 5, 6, 7});
    c.expect(face_vertices(Chain{{a, s, t}}, 10, 6).points.size() == 40, "face with 40 vertices");
    c.expect(face_vertices(Chain{{Subset{}, a, s, t}}, 10, 6).points.size() == 24, "face with 24 vertices");
    for (int m = 1; m <= 4; ++m)
        c.expect(comb_equiv_check(m, m, m + 2), "comb equiv m=" + std::to_string(m));
}

void c7(Check& c)
{
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 6; ++n) {
            Polynomial h = h_poly(m, n, HMethod::from_f);
            c.expect(h_poly(m, n, HMethod::closed) == h, "closed " + at(m, n));
            c.expect(h_poly(m, n, HMethod::orientation) == h, "orientation " + at(m, n));
            if (n >= m)
                c.expect(h_poly(m, n, HMethod::stellohedron) == h, "stellohedron " + at(m, n));
            c.expect(is_palindromic(h, m), "palindromic " + at(m, n));
            if (n < 6) {
                Polynomial geo;
                for (int i = 1; i <= m - n; ++i)
                    geo += Polynomial::monomial(1, i);
                Polynomial rhs = h + eulerian(n) * Rational(binomial(m, n)) * geo;
                c.expect(h_poly(m, n + 1, HMethod::from_f) == rhs, "recurrence " + at(m, n));
            }
        }
    for (int m = 0; m <= 8; ++m) {
        Polynomial lhs(1), rhs;
        for (int i = 1; i <= m; ++i)
            lhs += Polynomial::x() * eulerian(i) * Rational(binomial(m, i));
        for (int i = 0; i <= m; ++i)
            rhs += eulerian(i) * Rational(binomial(m, i)) * Polynomial::monomial(1, m - i);
        c.expect(lhs == rhs, "Eulerian identity m=" + std::to_string(m));
    }
}

void c8(Check& c)
{
    c.expect(enumerate_draconian(2, DraconianMode::volume).size() == 4, "volume census m=2");
    c.expect(enumerate_draconian(2, DraconianMode::ehrhart).size() == 8, "ehrhart census m=2");
    c.expect(enumerate_draconian(3, DraconianMode::ehrhart).size() == 51, "ehrhart census m=3");
    c.expect(enumerate_draconian(4, DraconianMode::ehrhart).size() == 455, "ehrhart census m=4");
    // P(1,0) is the origin
    c.expect(enumerate_parking(1, false).size() == 1, "parking census m=1");
    for (int m = 2; m <= 4; ++m)
        c.expect(enumerate_parking(m, false).size() == count_points(PPSpec(m, m - 1), 1),
                 "parking census m=" + std::to_string(m));
}

void c9(Check& c)
{
    for (int m : {3, 4}) {
        c.expect(nvol_of_vertices(aux1_vertices(m)) == formula_bank(FormulaBank::aux1, m), "aux1 m=" + std::to_string(m));
        c.expect(nvol_of_vertices(aux2_vertices(m)) == formula_bank(FormulaBank::aux2, m), "aux2 m=" + std::to_string(m));
    }
    for (int n : {4, 5})
        for (int t : {1, 2})
            c.expect(Rational(aux3_half_open_count(n, t)) == aux_lemma3(n)(Rational(t)),
                     "aux3 n=" + std::to_string(n) + " t=" + std::to_string(t));
}

void c10(Check& c)
{
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            c.expect(verify_antiblocking_identity(PPSpec(m, n)), "identity " + at(m, n));
    auto g = antiblocking_vertices_edges(AntiBlockSpec{{1, 1, 0, 0}});
    auto it = std::find(g.vertices.points.begin(), g.vertices.points.end(), IntVec{1, 1, 0, 0});
    if (it == g.vertices.points.end()) {
        c.expect(false, "vertex (1,1,0,0) missing");
        return;
    }
    std::size_t idx = it - g.vertices.points.begin();
    int deg = 0;
    for (auto& [i, j] : g.edges)
        deg += i == idx || j == idx;
    c.expect(deg == 6, "degree of (1,1,0,0) is " + std::to_string(deg));
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"published polynomial tables", c1},
        {"cross-engine volume agreement", c2},
        {"small-n closed volumes", c3},
        {"Ehrhart engine agreement", c4},
        {"conjecture verification (consistent)", c5},
        {"face combinatorics", c6},
        {"h-polynomial", c7},
        {"draconian census", c8},
        {"appendix polytopes", c9},
        {"anti-blocking identity", c10},
    };
    int failed = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[k].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line << (c.failure.empty() ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first;
        if (!c.failure.empty())
            line << " [first mismatch: " << c.failure << "]";
        line.precision(2);
        line << std::fixed << " (" << secs << " s)";
        std::cout << line.str() << std::endl;
        failed += !c.failure.empty();
    }
    return failed ? 1 : 0;
}
