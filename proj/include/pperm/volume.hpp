#pragma once

#include "pperm/exactmath.hpp"
#include "pperm/polytope.hpp"

#include <string>
#include <vector>

namespace pperm {

enum class VolumeMethod { oracle, recursive, closed, three_term, draconian, parking, lambda, small_n };

std::string to_string(VolumeMethod m);
VolumeMethod parse_volume_method(const std::string& s);

struct VolumeResult {
    Rational value;
    VolumeMethod method;
    int m;
    int n;
};

BigInt nvol_oracle(int m, int n, unsigned workers = 1);
BigInt nvol_recursive(int m, int n);

struct ClosedVolumes {
    BigInt vmn;       // double sum in (2n)
    BigInt vmn2;      // single sum in (2n+1)
    BigInt vmncoeff;  // series coefficient
};
ClosedVolumes nvol_closed(int m, int n);

// Three-term recurrence in m for W(m) = v(m,n)/m!; returns v(m,n).
BigInt nvol_three_term(int m, int n);

enum class DraconianVolumeMode { general, parking_count };
BigInt nvol_draconian(int m, int n, DraconianVolumeMode mode);

Rational nvol_lambda(int m, int n, const std::vector<Rational>& lambda);
std::vector<Rational> default_lambda(int m);
std::vector<Rational> prime_lambda(int m);

BigInt nvol_small_n(int m, int n);

enum class PolyVariable { n, N };
Polynomial nvol_poly(int m, PolyVariable var);

enum class FormulaBank { perm_nvol, aux1, aux2 };
BigInt formula_bank(FormulaBank which, int m);

// Q(m) of the aux lemmas. aux2 uses the product reading Pi(4,3,2) x Delta_{m-3}
// plus the three points; aux2_vertices_literal takes Delta_{m-3} alone.
VRep aux1_vertices(int m);
VRep aux2_vertices(int m);
VRep aux2_vertices_literal(int m);

// Normalized volume of a full-dimensional lattice polytope via counting and interpolation.
BigInt nvol_of_vertices(const VRep& v, unsigned workers = 1);

struct ConjFitTerm {
    int index;            // i in p_{n,i}
    Polynomial poly;      // fitted polynomial in m
    int expected_degree;  // 2i+1
    int degree;
    int leading_sign;
};

struct ConjFitReport {
    int n;
    std::vector<int> m_values;
    bool solved = false;
    bool degrees_ok = false;
    bool signs_ok = false;
    std::vector<ConjFitTerm> terms;
    std::string status;  // "consistent" / "inconsistent"
};

// Fits v(m,n) = C(n+1,2)^m - m C(n,2)^m - sum_{i=1}^{n-2} p_{n,i}(m) C(n-i,2)^m on the m-grid,
// allowing each p_{n,i} degree 2i+1+slack, then reports the degrees found.
ConjFitReport conj_vmn_fit(int n, std::vector<int> m_values = {}, int slack = 2);

std::vector<VolumeResult> nvol_all_methods(int m, int n, unsigned workers = 1);

}  // namespace pperm
