#pragma once

#include "pperm/combinat.hpp"
#include "pperm/exactmath.hpp"
#include "pperm/polytope.hpp"

#include <vector>

namespace pperm {

// <a,x> = b
struct Hyperplane {
    IntVec a;
    std::int64_t b;
    friend bool operator==(const Hyperplane& x, const Hyperplane& y) { return x.a == y.a && x.b == y.b; }
};

struct Face {
    Chain chain;
    std::vector<Hyperplane> hyperplanes;          // cases (i)-(iii)
    std::vector<Hyperplane> compact_hyperplanes;  // one per subset of the chain
    int dimension = 0;
};

Face face_from_chain(const Chain& c, int m, int n);
VRep face_vertices(const Chain& c, int m, int n);
VRep filter_vertices(const VRep& v, const std::vector<Hyperplane>& hs);

std::vector<std::uint64_t> f_vector(int m, int n);

enum class HMethod { from_f, closed, stellohedron, orientation };

Polynomial h_poly(int m, int n, HMethod method);
// Orientation sum; with use_des_inverse=false, des(v) replaces des(v^-1) throughout.
Polynomial h_poly_orientation(int m, int n, bool use_des_inverse);
bool is_palindromic(const Polynomial& p, int d);

enum class VertexClass { zero, V1, V2 };

struct VertexStats {
    IntVec vertex;
    VertexClass cls;
    std::vector<int> pi;  // reduced permutation
    int des = 0;
    int des_inv = 0;
    int beta = 0;  // zeros right of the 1; V1 only
};

std::vector<VertexStats> vertex_stats(int m, int n);

bool comb_equiv_check(int m, int n1, int n2);

}  // namespace pperm
