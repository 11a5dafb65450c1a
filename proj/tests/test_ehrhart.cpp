#include "pperm/ehrhart.hpp"
#include "pperm/volume.hpp"

#include <gtest/gtest.h>

using namespace pperm;

namespace {

Polynomial P(std::vector<Rational> c) { return Polynomial(std::move(c)); }

const Polynomial t = Polynomial::x();

}  // namespace

TEST(Interpolate, Examples)
{
    EXPECT_EQ(ehr_interpolate(2, 2).poly, P({1, Rational(7, 2), Rational(7, 2)}));
    EXPECT_EQ(ehr_interpolate(3, 2).poly, P({1, Rational(9, 2), Rational(15, 2), 4}));
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(ehr_interpolate(1, n).poly, P({1, n}));
}

TEST(Interpolate, GeneralHRep)
{
    HRep sq;
    sq.dim = 2;
    sq.rows = {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 0}, 1}, {{0, 1}, 1}};
    EXPECT_EQ(ehr_interpolate(sq), pow(t + Polynomial(1), 2));
}

TEST(ClosedSmallN, Examples)
{
    for (int m = 1; m <= 6; ++m)
        EXPECT_EQ(ehr_closed_small_n(m, 1).poly, binomial_poly(t + Polynomial(m), m));
    EXPECT_EQ(ehr_closed_small_n(3, 2).poly, ehr_interpolate(3, 2).poly);
    EXPECT_EQ(ehr_closed_small_n(4, 3).poly.leading() * Rational(factorial(4)), Rational(954));
    EXPECT_THROW(ehr_closed_small_n(3, 4), std::invalid_argument);
}

TEST(ClosedSmallN, AgainstOracleAllM)
{
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 3; ++n)
            EXPECT_EQ(ehr_closed_small_n(m, n).poly, ehr_interpolate(m, n).poly) << m << "," << n;
}

TEST(ClosedSmallM, Examples)
{
    EXPECT_EQ(ehr_closed_small_m(2, 5).poly, P({1, Rational(19, 2), Rational(49, 2)}));
    EXPECT_EQ(ehr_closed_small_m(3, 2).poly, P({1, Rational(9, 2), Rational(15, 2), 4}));
    EXPECT_EQ(ehr_closed_small_m(4, 3).poly, ehr_interpolate(4, 3).poly);
    EXPECT_THROW(ehr_closed_small_m(3, 1), std::invalid_argument);
    EXPECT_THROW(ehr_closed_small_m(4, 2), std::invalid_argument);
    EXPECT_THROW(ehr_closed_small_m(5, 5), std::invalid_argument);
}

TEST(Draconian, Examples)
{
    for (int n = 1; n <= 6; ++n) {
        Rational N = n;
        EXPECT_EQ(ehr_draconian(2, n).poly, P({1, 2 * N - Rational(1, 2), N * N - Rational(1, 2)}));
    }
    EXPECT_EQ(ehr_draconian(3, 3).poly, ehr_interpolate(3, 3).poly);
    EXPECT_THROW(ehr_draconian(4, 2), std::invalid_argument);
}

TEST(Parking, Examples)
{
    auto p1 = ehr_parking(1);
    EXPECT_EQ(p1.ehr.poly, Polynomial(1));
    EXPECT_EQ(p1.point_count, 1u);
    EXPECT_EQ(ehr_parking(2).ehr.poly, binomial_poly(t + Polynomial(2), 2));
    for (int m = 2; m <= 5; ++m) {
        auto p = ehr_parking(m);
        EXPECT_EQ(p.point_count, count_points(PPSpec(m, m - 1), 1)) << m;
        EXPECT_EQ(p.ehr.poly(Rational(1)), Rational(p.point_count));
        EXPECT_EQ(p.ehr.poly, ehr_draconian(m, m - 1).poly);
    }
}

TEST(Conjecture, Examples)
{
    for (int n = 1; n <= 5; ++n) {
        auto c = ehr_conjecture(1, n);
        EXPECT_TRUE(c.equal);
        EXPECT_EQ(c.expl1.poly, P({1, n}));
    }
    EXPECT_EQ(ehr_conjecture(2, 2).expl2.poly, ehr_interpolate(2, 2).poly);
}

TEST(Conjecture, LeadingTermGivesVolume)
{
    for (int m = 1; m <= 7; ++m)
        for (int n = m - 1; n <= m + 3; ++n)
            if (n >= 1) {
                auto c = ehr_conjecture(m, n);
                EXPECT_EQ(c.expl1.poly.leading() * Rational(factorial(m)), Rational(nvol_closed(m, n).vmncoeff));
                EXPECT_EQ(c.expl1.poly.coeff(0), 1);
            }
}

TEST(Recurrence, Examples)
{
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(ehr_recurrence(1, n).poly, P({1, n}));
        EXPECT_EQ(ehr_recurrence(2, n).poly, ehr_closed_small_m(2, n).poly);
    }
    EXPECT_EQ(ehr_recurrence(4, 4).poly, ehr_interpolate(4, 4).poly);
    for (int m = 1; m <= 7; ++m)
        for (int n = m - 1; n <= m + 2; ++n)
            if (n >= 1)
                EXPECT_EQ(ehr_recurrence(m, n).poly, ehr_conjecture(m, n).expl1.poly);
}

TEST(Engines, AgreeOnGrid)
{
    for (int m = 1; m <= 4; ++m)
        for (int n = std::max(1, m - 1); n <= 6; ++n) {
            Polynomial e = ehr_interpolate(m, n).poly;
            EXPECT_EQ(ehr_draconian(m, n).poly, e);
            EXPECT_EQ(ehr_closed_small_m(m, n).poly, e);
            EXPECT_EQ(ehr_conjecture(m, n).expl1.poly, e);
            EXPECT_EQ(ehr_recurrence(m, n).poly, e);
            EXPECT_EQ(e.coeff(0), 1);
            for (int i = 1; i <= m; ++i)
                EXPECT_GT(e.coeff(i), 0);
        }
}

TEST(Dispatcher, Methods)
{
    EXPECT_EQ(ehrhart(3, 2, EhrMethod::parking).poly, ehr_parking(3).ehr.poly);
    for (auto meth : {EhrMethod::closed_small_n, EhrMethod::closed_small_m, EhrMethod::draconian, EhrMethod::conjecture,
                      EhrMethod::recurrence})
        EXPECT_EQ(ehrhart(3, 3, meth).poly, ehrhart(3, 3, EhrMethod::interpolate).poly) << to_string(meth);
    EXPECT_THROW(ehrhart(3, 3, EhrMethod::parking), std::invalid_argument);
    EXPECT_EQ(parse_ehr_method("recurrence"), EhrMethod::recurrence);
    EXPECT_THROW(parse_ehr_method("magic"), std::invalid_argument);
    EXPECT_TRUE(is_conjectural(EhrMethod::conjecture));
    EXPECT_FALSE(is_conjectural(EhrMethod::draconian));
}

TEST(HStar, BasisExamples)
{
    for (int m = 1; m <= 5; ++m) {
        std::vector<Rational> simplex(m + 1, 0), half_open(m + 1, 0);
        simplex[0] = 1;
        half_open[1] = 1;
        EXPECT_EQ(to_hstar(binomial_poly(t + Polynomial(m), m), m), simplex);
        EXPECT_EQ(to_hstar(binomial_poly(t + Polynomial(m - 1), m), m), half_open);
        EXPECT_EQ(from_hstar(simplex), binomial_poly(t + Polynomial(m), m));
    }
    EXPECT_EQ(pyramid_hstar({1, 1}), (std::vector<Rational>{1, 1, 0}));
    EXPECT_THROW(to_hstar(P({1, 1, 1}), 1), std::invalid_argument);
}

TEST(HStar, PyramidAgainstCounting)
{
    // lattice pyramid over P(2,2) with apex e3
    VRep v;
    v.dim = 3;
    for (auto& p : vertices(PPSpec(2, 2)).points)
        v.points.push_back({p[0], p[1], 0});
    v.points.push_back({0, 0, 1});
    Polynomial pyr = ehr_interpolate(hull_v_to_h(v));
    auto base = to_hstar(ehr_interpolate(2, 2).poly, 2);
    EXPECT_EQ(to_hstar(pyr, 3), pyramid_hstar(base));
}

TEST(HStar, NonnegativeIntegers)
{
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 5; ++n) {
            auto h = to_hstar(ehr_interpolate(m, n).poly, m);
            EXPECT_EQ(h[0], 1);
            for (auto& x : h) {
                EXPECT_EQ(denominator(x), 1);
                EXPECT_GE(x, 0);
            }
            EXPECT_EQ(from_hstar(h), ehr_interpolate(m, n).poly);
        }
}

TEST(Aux3, PolynomialAndCounts)
{
    for (int n = 4; n <= 7; ++n) {
        Rational N = n;
        Polynomial p = aux_lemma3(n);
        EXPECT_EQ(p.coeff(4), N * N / 2 - 7 * N / 3 + Rational(21, 8));
        EXPECT_EQ(p(Rational(0)), 0);
    }
    for (int n : {4, 5})
        for (int tt : {1, 2, 3})
            EXPECT_EQ(Rational(aux3_half_open_count(n, tt)), aux_lemma3(n)(Rational(tt))) << n << " " << tt;
    EXPECT_EQ(aux3_vertices(5).points.size(), 14u);
}
