#pragma once

#include "pperm/exactmath.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pperm {

using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

struct PPSpec {
    int m;
    int n;
    PPSpec(int m, int n);
};

struct VRep {
    int dim = 0;
    std::vector<IntVec> points;  // kept sorted lexicographically
};

// <a,x> <= b
struct Inequality {
    IntVec a;
    std::int64_t b;
    friend bool operator==(const Inequality& x, const Inequality& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator<(const Inequality& x, const Inequality& y)
    {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

struct HRep {
    int dim = 0;
    std::vector<Inequality> rows;
};

struct AntiBlockSpec {
    IntVec z;
};

// C(n+1,2) - C(n+1-s,2), the second term dropped once n+1-s <= 1
std::int64_t subset_bound(int n, int s);

VRep vertices(const PPSpec& spec);
HRep facets(const PPSpec& spec);
std::size_t vertex_count_formula(int m, int n);
std::size_t facet_count_formula(int m, int n);

void canonicalize(VRep& v);
void canonicalize(HRep& h);

bool contains_point(const HRep& h, const IntVec& x);
bool contains_point(const HRep& h, const RatVec& x);

struct Box {
    IntVec lo;
    IntVec hi;
};

// Lattice points of t*P for P = {x : Ax <= b}, scanning t*box coordinatewise.
std::uint64_t count_points(const HRep& h, std::int64_t t, const Box& box, unsigned workers = 1);
std::uint64_t count_points(const PPSpec& spec, std::int64_t t, unsigned workers = 1);
// Box taken from the vertices of h; zero when h is empty.
std::uint64_t count_points(const HRep& h, std::int64_t t, unsigned workers = 1);

struct AntiBlockGraph {
    VRep vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // indices into vertices.points, i < j
};

AntiBlockGraph antiblocking_vertices_edges(const AntiBlockSpec& spec);
AntiBlockSpec antiblocking_spec_for(const PPSpec& spec);
bool verify_antiblocking_identity(const PPSpec& spec);

struct RationalVRep {
    int dim = 0;
    std::vector<RatVec> points;
};

HRep hull_v_to_h(const VRep& v);
RationalVRep hull_h_to_v(const HRep& h);
// Throws when some vertex is not a lattice point.
VRep to_lattice(const RationalVRep& v);
std::optional<Box> bounding_box(const HRep& h);

// Edges of a polytope from its H-description: pairs of vertices whose common
// tight rows have rank dim-1 and are tight at no other vertex.
std::vector<std::pair<std::size_t, std::size_t>> polytope_edges(const HRep& h, const RationalVRep& v);

struct CutResult {
    HRep kept;     // P cap <a,x> <= b
    HRep removed;  // P cap <a,x> >= b
    HRep face;     // P cap <a,x> = b
    bool removed_empty = false;
};

CutResult cut(const HRep& h, const IntVec& a, std::int64_t b);

// Vertices of P cap <a,x> >= b: vertices of P on that side, plus the points
// where edges of P cross <a,x> = b.
RationalVRep cut_vertices(const HRep& h, const IntVec& a, std::int64_t b);

}  // namespace pperm
