#pragma once

#include "pperm/exactmath.hpp"
#include "pperm/polytope.hpp"

#include <string>
#include <vector>

namespace pperm {

enum class EhrMethod { interpolate, closed_small_n, closed_small_m, draconian, parking, conjecture, recurrence };

std::string to_string(EhrMethod m);
EhrMethod parse_ehr_method(const std::string& s);
bool is_conjectural(EhrMethod m);

struct EhrhartResult {
    Polynomial poly;
    int m;
    int n;
    EhrMethod method;
};

EhrhartResult ehr_interpolate(int m, int n, unsigned workers = 1);
// Ehrhart polynomial of an arbitrary lattice polytope given by H-description.
Polynomial ehr_interpolate(const HRep& h, unsigned workers = 1);

EhrhartResult ehr_closed_small_n(int m, int n);
EhrhartResult ehr_closed_small_m(int m, int n);
EhrhartResult ehr_draconian(int m, int n);

struct ParkingResult {
    EhrhartResult ehr;
    std::uint64_t point_count;
};
ParkingResult ehr_parking(int m);

struct ConjectureResult {
    EhrhartResult expl1;
    EhrhartResult expl2;
    bool equal;
};
ConjectureResult ehr_conjecture(int m, int n);
EhrhartResult ehr_recurrence(int m, int n);

EhrhartResult ehrhart(int m, int n, EhrMethod method, unsigned workers = 1);

// ehr(t) = sum_i h*_i C(t+m-i, m)
std::vector<Rational> to_hstar(const Polynomial& ehr, int m);
Polynomial from_hstar(const std::vector<Rational>& hstar);
std::vector<Rational> pyramid_hstar(const std::vector<Rational>& hstar);

// The 14 vertices of the aux3 polytope and the facet spanned by the first ten.
VRep aux3_vertices(int n);
Polynomial aux_lemma3(int n);
// count(tQ) - count(tF)
std::uint64_t aux3_half_open_count(int n, std::int64_t t);

}  // namespace pperm
