#include "pperm/faces.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pperm {

namespace {

IntVec indicator(Subset s, int m)
{
    IntVec a(m, 0);
    for (int i = 1; i <= m; ++i)
        if (s.contains(i))
            a[i - 1] = 1;
    return a;
}

// j (1-based) ranges over which hyperplanes of type (ii) / blocks of case (2) apply
bool type_ii_applies(const Chain& c, int j, int n)
{
    const int l = c.length();
    if (j < 1 || j > l - 1)
        return false;
    if (j >= 2)
        return true;
    return !(c.front().empty() && c.back().size() >= n);
}

bool satisfies(const IntVec& v, const Hyperplane& h)
{
    std::int64_t s = 0;
    for (size_t i = 0; i < v.size(); ++i)
        s += h.a[i] * v[i];
    return s == h.b;
}

}  // namespace

VRep filter_vertices(const VRep& v, const std::vector<Hyperplane>& hs)
{
    VRep out;
    out.dim = v.dim;
    for (auto& p : v.points)
        if (std::all_of(hs.begin(), hs.end(), [&](const Hyperplane& h) { return satisfies(p, h); }))
            out.points.push_back(p);
    return out;
}

Face face_from_chain(const Chain& c, int m, int n)
{
    if (!in_cmn(c, m, n))
        throw std::invalid_argument("face_from_chain: chain " + to_string(c) + " is not in C(m,n)");
    Face f;
    f.chain = c;
    f.dimension = missing_ranks(c);
    const Subset top = c.back();
    const int l = c.length();

    for (int i = 1; i <= m; ++i)
        if (!top.contains(i)) {
            IntVec a(m, 0);
            a[i - 1] = 1;
            f.hyperplanes.push_back({a, 0});
        }
    for (int j = 1; j <= l - 1; ++j)
        if (type_ii_applies(c, j, n)) {
            Subset s = top - c.sets[j - 1];
            f.hyperplanes.push_back({indicator(s, m), subset_bound(n, s.size())});
        }
    if (c.front().empty() && top.size() >= n)
        f.hyperplanes.push_back({IntVec(m, 1), subset_bound(n, n)});

    const Subset all = Subset::full(m);
    for (int j = 1; j <= l; ++j) {
        Subset s = all - c.sets[j - 1];
        f.compact_hyperplanes.push_back({indicator(s, m), subset_bound(n, (top - c.sets[j - 1]).size())});
    }

    auto verts = vertices(PPSpec(m, n));
    if (filter_vertices(verts, f.hyperplanes).points != filter_vertices(verts, f.compact_hyperplanes).points)
        throw std::logic_error("face_from_chain: case-split and compact forms disagree for " + to_string(c));
    return f;
}

VRep face_vertices(const Chain& c, int m, int n)
{
    if (!in_cmn(c, m, n))
        throw std::invalid_argument("face_vertices: chain " + to_string(c) + " is not in C(m,n)");
    const Subset top = c.back();
    const int l = c.length();

    // each block: positions and the multiset of values placed there in any order
    struct Block {
        std::vector<int> positions;
        std::vector<std::vector<std::int64_t>> choices;  // alternative sorted value lists
    };
    std::vector<Block> blocks;

    for (int j = 1; j <= l - 1; ++j) {
        if (!type_ii_applies(c, j, n))
            continue;
        Subset blk = c.sets[j] - c.sets[j - 1];
        std::int64_t hi = n - (top - c.sets[j]).size();
        std::int64_t lo = n - (top - c.sets[j - 1]).size() + 1;
        std::vector<std::int64_t> vals;
        for (std::int64_t v = lo; v <= hi; ++v)
            vals.push_back(v);
        blocks.push_back({blk.elements(), {vals}});
    }
    if (!c.front().empty()) {
        Subset a1 = c.front();
        int s = a1.size();
        std::int64_t start = n - (top - a1).size();
        Block b{a1.elements(), {}};
        for (int k = 0; k <= std::min<std::int64_t>(s, start); ++k) {
            std::vector<std::int64_t> vals(s - k, 0);
            for (int i = 0; i < k; ++i)
                vals.push_back(start - i);
            std::sort(vals.begin(), vals.end());
            b.choices.push_back(vals);
        }
        blocks.push_back(b);
    } else if (top.size() >= n && l >= 2) {
        Subset a2 = c.sets[1];
        std::vector<std::int64_t> vals(top.size() - n, 0);
        for (std::int64_t v = 1; v <= n - (top - a2).size(); ++v)
            vals.push_back(v);
        std::sort(vals.begin(), vals.end());
        if (static_cast<int>(vals.size()) != a2.size())
            throw std::logic_error("face_vertices: block size mismatch");
        blocks.push_back({a2.elements(), {vals}});
    }

    VRep out;
    out.dim = m;
    IntVec x(m, 0);
    std::function<void(size_t)> rec = [&](size_t bi) {
        if (bi == blocks.size()) {
            out.points.push_back(x);
            return;
        }
        const Block& b = blocks[bi];
        for (auto vals : b.choices) {
            if (vals.size() != b.positions.size())
                throw std::logic_error("face_vertices: block size mismatch");
            do {
                for (size_t i = 0; i < vals.size(); ++i)
                    x[b.positions[i] - 1] = vals[i];
                rec(bi + 1);
            } while (std::next_permutation(vals.begin(), vals.end()));
        }
        for (int p : b.positions)
            x[p - 1] = 0;
    };
    rec(0);
    canonicalize(out);
    return out;
}

std::vector<std::uint64_t> f_vector(int m, int n)
{
    std::vector<std::uint64_t> f(m + 1, 0);
    for (auto& c : enumerate_chains(m, n, false))
        ++f[missing_ranks(c)];
    return f;
}

// --------------------------------------------------------------- h-polynomial

std::vector<VertexStats> vertex_stats(int m, int n)
{
    std::vector<VertexStats> out;
    for (auto& v : vertices(PPSpec(m, n)).points) {
        VertexStats s;
        s.vertex = v;
        int k = 0;
        for (auto e : v)
            if (e != 0)
                ++k;
        if (k == 0) {
            s.cls = VertexClass::zero;
            out.push_back(s);
            continue;
        }
        for (auto e : v)
            if (e != 0)
                s.pi.push_back(static_cast<int>(e - (n - k)));
        s.des = descents(s.pi);
        s.des_inv = descents(inverse_permutation(s.pi));
        auto one = std::find(v.begin(), v.end(), 1);
        if (one != v.end()) {
            s.cls = VertexClass::V1;
            s.beta = static_cast<int>(std::count(one + 1, v.end(), 0));
        } else {
            s.cls = VertexClass::V2;
        }
        out.push_back(s);
    }
    return out;
}

Polynomial h_poly_orientation(int m, int n, bool use_des_inverse)
{
    Polynomial h;
    for (auto& s : vertex_stats(m, n)) {
        int d = use_des_inverse ? s.des_inv : s.des;
        switch (s.cls) {
        case VertexClass::zero:
            h += Polynomial(1);
            break;
        case VertexClass::V1:
            h += Polynomial::monomial(1, 1 + d + s.beta);
            break;
        case VertexClass::V2:
            h += Polynomial::monomial(1, 1 + d);
            break;
        }
    }
    return h;
}

Polynomial h_poly(int m, int n, HMethod method)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("h_poly: need m >= 1 and n >= 1");
    switch (method) {
    case HMethod::from_f: {
        auto f = f_vector(m, n);
        std::vector<Rational> c;
        for (auto x : f)
            c.emplace_back(x);
        return Polynomial(c).compose(Polynomial(std::vector<Rational>{-1, 1}));
    }
    case HMethod::closed: {
        Polynomial h(1);
        for (int i = 0; i <= std::min(n - 1, m); ++i) {
            Polynomial term = eulerian(i) * Rational(binomial(m, i));
            for (int j = 1; j <= m - i; ++j)
                h += term * Polynomial::monomial(1, j);
        }
        return h;
    }
    case HMethod::stellohedron: {
        if (n < m)
            throw std::invalid_argument("h_poly: the stellohedron form needs n >= m");
        Polynomial a(1), b;
        for (int i = 0; i <= m; ++i) {
            Polynomial term = eulerian(i) * Rational(binomial(m, i));
            if (i >= 1)
                a += term * Polynomial::x();
            b += term * Polynomial::monomial(1, m - i);
        }
        if (!(a == b))
            throw std::logic_error("h_poly: the two stellohedron forms disagree");
        return a;
    }
    case HMethod::orientation:
        return h_poly_orientation(m, n, true);
    }
    throw std::invalid_argument("h_poly: unknown method");
}

bool is_palindromic(const Polynomial& p, int d)
{
    if (p.degree() > d)
        return false;
    for (int i = 0; i <= d; ++i)
        if (p.coeff(i) != p.coeff(d - i))
            return false;
    return true;
}

bool comb_equiv_check(int m, int n1, int n2)
{
    if (f_vector(m, n1) != f_vector(m, n2))
        return false;
    auto c1 = enumerate_chains(m, n1, true);
    auto c2 = enumerate_chains(m, n2, true);
    if (c1 != c2)
        return false;
    for (auto& a : c1)
        for (auto& b : c1)
            if (chain_leq(a, b, m, n1) != chain_leq(a, b, m, n2))
                return false;
    return true;
}

}  // namespace pperm
