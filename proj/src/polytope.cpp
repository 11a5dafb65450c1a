#include "pperm/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace pperm {

PPSpec::PPSpec(int m_, int n_) : m(m_), n(n_)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("P(m,n) needs m >= 1 and n >= 1");
    if (m > 16)
        throw std::invalid_argument("P(m,n): m too large");
}

std::int64_t subset_bound(int n, int s)
{
    auto c2 = [](std::int64_t x) -> std::int64_t { return x <= 1 ? 0 : x * (x - 1) / 2; };
    return c2(n + 1) - c2(n + 1 - s);
}

void canonicalize(VRep& v)
{
    std::sort(v.points.begin(), v.points.end());
    v.points.erase(std::unique(v.points.begin(), v.points.end()), v.points.end());
}

void canonicalize(HRep& h)
{
    std::sort(h.rows.begin(), h.rows.end());
    h.rows.erase(std::unique(h.rows.begin(), h.rows.end()), h.rows.end());
}

VRep vertices(const PPSpec& spec)
{
    const int m = spec.m, n = spec.n;
    VRep out;
    out.dim = m;
    IntVec x(m, 0);
    std::function<void(int, int)> place = [&](int value, int left) {
        out.points.push_back(x);
        if (left == 0)
            return;
        for (int i = 0; i < m; ++i) {
            if (x[i] != 0)
                continue;
            x[i] = value;
            place(value - 1, left - 1);
            x[i] = 0;
        }
    };
    place(n, std::min(m, n));
    canonicalize(out);
    return out;
}

HRep facets(const PPSpec& spec)
{
    const int m = spec.m, n = spec.n;
    HRep h;
    h.dim = m;
    for (int i = 0; i < m; ++i) {
        IntVec a(m, 0);
        a[i] = -1;
        h.rows.push_back({a, 0});
    }
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
        int size = __builtin_popcount(s);
        if (!(size <= n - 1 || size == m))
            continue;
        IntVec a(m, 0);
        for (int i = 0; i < m; ++i)
            if ((s >> i) & 1u)
                a[i] = 1;
        h.rows.push_back({a, subset_bound(n, size)});
    }
    canonicalize(h);
    return h;
}

std::size_t vertex_count_formula(int m, int n)
{
    std::size_t total = 0;
    for (int k = 0; k <= std::min(m, n); ++k) {
        std::size_t f = 1;
        for (int j = 0; j < k; ++j)
            f *= static_cast<std::size_t>(m - j);
        total += f;
    }
    return total;
}

std::size_t facet_count_formula(int m, int n)
{
    BigInt total = m;
    for (int k = std::max(1, m - n + 1); k <= m; ++k)
        total += binomial(m, k);
    return static_cast<std::size_t>(total);
}

bool contains_point(const HRep& h, const IntVec& x)
{
    if (static_cast<int>(x.size()) != h.dim)
        throw std::invalid_argument("contains_point: dimension mismatch");
    for (auto& r : h.rows) {
        std::int64_t s = 0;
        for (int i = 0; i < h.dim; ++i)
            s += r.a[i] * x[i];
        if (s > r.b)
            return false;
    }
    return true;
}

bool contains_point(const HRep& h, const RatVec& x)
{
    if (static_cast<int>(x.size()) != h.dim)
        throw std::invalid_argument("contains_point: dimension mismatch");
    for (auto& r : h.rows) {
        Rational s = 0;
        for (int i = 0; i < h.dim; ++i)
            s += r.a[i] * x[i];
        if (s > r.b)
            return false;
    }
    return true;
}

// ------------------------------------------------------------------ counting

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

class Counter {
public:
    Counter(const HRep& h, std::int64_t t, const Box& box) : d_(h.dim), rows_(h.rows.size())
    {
        for (int i = 0; i < d_; ++i) {
            lo_.push_back(t * box.lo[i]);
            hi_.push_back(t * box.hi[i]);
        }
        for (auto& r : h.rows) {
            a_.push_back(r.a);
            rhs_.push_back(t * r.b);
        }
        // rest_[r][k]: least value of sum_{j>=k} a_rj x_j over the box
        rest_.assign(rows_, std::vector<std::int64_t>(d_ + 1, 0));
        for (size_t r = 0; r < rows_; ++r)
            for (int k = d_ - 1; k >= 0; --k)
                rest_[r][k] = rest_[r][k + 1] + std::min(a_[r][k] * lo_[k], a_[r][k] * hi_[k]);
    }

    std::int64_t first_lo() const { return lo_[0]; }
    std::int64_t first_hi() const { return hi_[0]; }

    // Count with x_0 fixed.
    std::uint64_t count_slice(std::int64_t x0) const
    {
        std::vector<std::int64_t> partial(rows_, 0);
        std::int64_t lo = lo_[0], hi = hi_[0];
        if (!narrow(0, partial, lo, hi) || x0 < lo || x0 > hi)
            return 0;
        if (d_ == 1)
            return 1;
        for (size_t r = 0; r < rows_; ++r)
            partial[r] = a_[r][0] * x0;
        return descend(1, partial);
    }

private:
    bool narrow(int k, const std::vector<std::int64_t>& partial, std::int64_t& lo, std::int64_t& hi) const
    {
        for (size_t r = 0; r < rows_; ++r) {
            std::int64_t room = rhs_[r] - partial[r] - rest_[r][k + 1];
            std::int64_t a = a_[r][k];
            if (a > 0)
                hi = std::min(hi, floor_div(room, a));
            else if (a < 0)
                lo = std::max(lo, ceil_div(room, a));
            else if (room < 0)
                return false;
            if (lo > hi)
                return false;
        }
        return true;
    }

    std::uint64_t descend(int k, std::vector<std::int64_t>& partial) const
    {
        std::int64_t lo = lo_[k], hi = hi_[k];
        if (!narrow(k, partial, lo, hi))
            return 0;
        if (k == d_ - 1)
            return static_cast<std::uint64_t>(hi - lo + 1);
        std::uint64_t total = 0;
        for (std::int64_t x = lo; x <= hi; ++x) {
            for (size_t r = 0; r < rows_; ++r)
                partial[r] += a_[r][k] * x;
            total += descend(k + 1, partial);
            for (size_t r = 0; r < rows_; ++r)
                partial[r] -= a_[r][k] * x;
        }
        return total;
    }

    int d_;
    size_t rows_;
    IntVec lo_, hi_;
    std::vector<IntVec> a_;
    IntVec rhs_;
    std::vector<std::vector<std::int64_t>> rest_;
};

}  // namespace

std::uint64_t count_points(const HRep& h, std::int64_t t, const Box& box, unsigned workers)
{
    if (t < 0)
        throw std::invalid_argument("count_points: negative dilation");
    if (static_cast<int>(box.lo.size()) != h.dim || static_cast<int>(box.hi.size()) != h.dim)
        throw std::invalid_argument("count_points: box dimension mismatch");
    if (h.dim == 0)
        return 1;
    Counter counter(h, t, box);
    workers = std::max(1u, workers);
    std::vector<std::uint64_t> partial(workers, 0);
    auto job = [&](unsigned w) {
        for (std::int64_t x = counter.first_lo() + w; x <= counter.first_hi(); x += workers)
            partial[w] += counter.count_slice(x);
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(job, w);
        for (auto& th : pool)
            th.join();
    }
    return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

std::uint64_t count_points(const PPSpec& spec, std::int64_t t, unsigned workers)
{
    if (t == 0)
        return 1;
    Box box{IntVec(spec.m, 0), IntVec(spec.m, spec.n)};
    return count_points(facets(spec), t, box, workers);
}

std::uint64_t count_points(const HRep& h, std::int64_t t, unsigned workers)
{
    auto box = bounding_box(h);
    if (!box)
        return 0;
    return count_points(h, t, *box, workers);
}

// -------------------------------------------------------------- anti-blocking

AntiBlockGraph antiblocking_vertices_edges(const AntiBlockSpec& spec)
{
    const IntVec& z = spec.z;
    const int m = static_cast<int>(z.size());
    if (m < 1)
        throw std::invalid_argument("anti-blocking: empty z");
    for (int i = 0; i < m; ++i)
        if (z[i] < 0 || (i && z[i] > z[i - 1]))
            throw std::invalid_argument("anti-blocking: z must be weakly decreasing and nonnegative");

    AntiBlockGraph g;
    g.vertices.dim = m;
    IntVec x(m, 0);
    std::vector<char> used(m, 0);
    std::function<void(int)> place = [&](int k) {
        g.vertices.points.push_back(x);
        if (k == m)
            return;
        for (int i = 0; i < m; ++i) {
            if (used[i])
                continue;
            used[i] = 1;
            x[i] = z[k];
            place(k + 1);
            x[i] = 0;
            used[i] = 0;
        }
    };
    place(0);
    canonicalize(g.vertices);

    std::map<IntVec, std::size_t> index;
    for (std::size_t i = 0; i < g.vertices.points.size(); ++i)
        index[g.vertices.points[i]] = i;

    std::set<std::pair<std::size_t, std::size_t>> edges;
    auto add = [&](std::size_t i, const IntVec& w) {
        auto it = index.find(w);
        if (it == index.end())
            throw std::logic_error("anti-blocking edge leads outside the vertex set");
        auto j = it->second;
        if (i != j)
            edges.insert({std::min(i, j), std::max(i, j)});
    };

    for (std::size_t vi = 0; vi < g.vertices.points.size(); ++vi) {
        const IntVec& v = g.vertices.points[vi];
        int nz = 0;
        std::int64_t smallest = 0;
        for (auto e : v)
            if (e != 0) {
                ++nz;
                smallest = smallest == 0 ? e : std::min(smallest, e);
            }
        // rule 1: zero out one occurrence of the smallest nonzero entry
        for (int p = 0; p < m && nz > 0; ++p)
            if (v[p] == smallest) {
                IntVec w = v;
                w[p] = 0;
                add(vi, w);
            }
        // rule 2: v carries the labels z_1..z_nz; swap z_i with z_{i+1}
        for (int i = 1; i < m; ++i) {
            std::int64_t zi = z[i - 1], zj = z[i];
            if (zi == zj)
                continue;
            bool carried = (i + 1 <= nz) || (i == nz && zj == 0);
            if (!carried)
                continue;
            for (int p = 0; p < m; ++p) {
                if (v[p] != zi)
                    continue;
                for (int q = 0; q < m; ++q) {
                    if (q == p || v[q] != zj)
                        continue;
                    IntVec w = v;
                    std::swap(w[p], w[q]);
                    add(vi, w);
                }
            }
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

AntiBlockSpec antiblocking_spec_for(const PPSpec& spec)
{
    AntiBlockSpec z;
    for (int i = 0; i < spec.m; ++i)
        z.z.push_back(std::max<std::int64_t>(0, spec.n - i));
    return z;
}

bool verify_antiblocking_identity(const PPSpec& spec)
{
    return antiblocking_vertices_edges(antiblocking_spec_for(spec)).vertices.points == vertices(spec).points;
}

// ------------------------------------------------------------ hull conversion

namespace {

// Bareiss determinant of a small integer matrix.
std::int64_t det_int(std::vector<std::vector<__int128>> M)
{
    const int n = static_cast<int>(M.size());
    if (n == 0)
        return 1;
    int sign = 1;
    __int128 prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k] == 0) {
            int p = k + 1;
            while (p < n && M[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(M[p], M[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return static_cast<std::int64_t>(sign * M[n - 1][n - 1]);
}

int affine_rank(const std::vector<IntVec>& pts, int d)
{
    if (pts.empty())
        return -1;
    RationalMatrix M;
    for (size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> row(d);
        for (int j = 0; j < d; ++j)
            row[j] = pts[i][j] - pts[0][j];
        M.push_back(std::move(row));
    }
    int rank = 0;
    for (int c = 0; c < d && rank < static_cast<int>(M.size()); ++c) {
        size_t piv = rank;
        while (piv < M.size() && M[piv][c] == 0)
            ++piv;
        if (piv == M.size())
            continue;
        std::swap(M[piv], M[rank]);
        for (size_t r = rank + 1; r < M.size(); ++r) {
            if (M[r][c] == 0)
                continue;
            Rational f = M[r][c] / M[rank][c];
            for (int k = c; k < d; ++k)
                M[r][k] -= f * M[rank][k];
        }
        ++rank;
    }
    return rank;
}

template <typename F>
void for_each_combination(int n, int k, F&& f)
{
    if (k > n || k < 0)
        return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

std::vector<RatVec> vertex_candidates(const HRep& h)
{
    const int d = h.dim;
    std::set<RatVec> found;
    for_each_combination(static_cast<int>(h.rows.size()), d, [&](const std::vector<int>& idx) {
        RationalMatrix A;
        std::vector<Rational> b;
        for (int i : idx) {
            A.emplace_back(h.rows[i].a.begin(), h.rows[i].a.end());
            b.emplace_back(h.rows[i].b);
        }
        auto x = solve_linear(std::move(A), std::move(b));
        if (x && contains_point(h, *x))
            found.insert(*x);
    });
    return {found.begin(), found.end()};
}

}  // namespace

HRep hull_v_to_h(const VRep& v)
{
    const int d = v.dim;
    if (d < 1 || d > 6)
        throw std::invalid_argument("hull_v_to_h: dimension out of range");
    for (auto& p : v.points)
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("hull_v_to_h: point dimension mismatch");
    if (affine_rank(v.points, d) != d)
        throw std::invalid_argument("hull_v_to_h: points are not full-dimensional");

    const auto& P = v.points;
    HRep h;
    h.dim = d;
    auto on = [&](const Inequality& r, const IntVec& p) {
        std::int64_t s = 0;
        for (int i = 0; i < d; ++i)
            s += r.a[i] * p[i];
        return s == r.b;
    };
    for_each_combination(static_cast<int>(P.size()), d, [&](const std::vector<int>& idx) {
        for (auto& r : h.rows) {
            bool all_on = true;
            for (int i : idx)
                if (!on(r, P[i])) {
                    all_on = false;
                    break;
                }
            if (all_on)
                return;
        }
        // normal from the cofactors of the difference vectors
        IntVec a(d, 0);
        for (int c = 0; c < d; ++c) {
            std::vector<std::vector<__int128>> M;
            for (int r = 1; r < d; ++r) {
                std::vector<__int128> row;
                for (int j = 0; j < d; ++j)
                    if (j != c)
                        row.push_back(P[idx[r]][j] - P[idx[0]][j]);
                M.push_back(std::move(row));
            }
            std::int64_t det = det_int(std::move(M));
            a[c] = (c % 2 == 0) ? det : -det;
        }
        std::int64_t g = 0;
        for (auto x : a)
            g = std::gcd(g, x < 0 ? -x : x);
        if (g == 0)
            return;
        for (auto& x : a)
            x /= g;
        std::int64_t b = 0;
        for (int i = 0; i < d; ++i)
            b += a[i] * P[idx[0]][i];
        int above = 0, below = 0;
        for (auto& p : P) {
            std::int64_t s = 0;
            for (int i = 0; i < d; ++i)
                s += a[i] * p[i];
            if (s > b)
                ++above;
            else if (s < b)
                ++below;
            if (above && below)
                return;
        }
        if (above) {
            for (auto& x : a)
                x = -x;
            b = -b;
        }
        h.rows.push_back({a, b});
    });
    canonicalize(h);
    return h;
}

RationalVRep hull_h_to_v(const HRep& h)
{
    const int d = h.dim;
    if (d < 1 || d > 6)
        throw std::invalid_argument("hull_h_to_v: dimension out of range");
    for (auto& r : h.rows)
        if (static_cast<int>(r.a.size()) != d)
            throw std::invalid_argument("hull_h_to_v: row dimension mismatch");

    // bounded iff the recession cone {Ax <= 0} is {0}
    HRep cone;
    cone.dim = d;
    for (auto& r : h.rows)
        cone.rows.push_back({r.a, 0});
    for (int i = 0; i < d; ++i) {
        IntVec e(d, 0);
        e[i] = 1;
        cone.rows.push_back({e, 1});
        e[i] = -1;
        cone.rows.push_back({e, 1});
    }
    for (auto& p : vertex_candidates(cone))
        for (auto& x : p)
            if (x != 0)
                throw std::invalid_argument("hull_h_to_v: unbounded polyhedron");

    RationalVRep out;
    out.dim = d;
    out.points = vertex_candidates(h);
    return out;
}

VRep to_lattice(const RationalVRep& v)
{
    VRep out;
    out.dim = v.dim;
    for (auto& p : v.points) {
        IntVec q;
        for (auto& x : p) {
            if (denominator(x) != 1)
                throw std::invalid_argument("to_lattice: vertex is not a lattice point");
            q.push_back(static_cast<std::int64_t>(numerator(x)));
        }
        out.points.push_back(std::move(q));
    }
    canonicalize(out);
    return out;
}

std::optional<Box> bounding_box(const HRep& h)
{
    auto v = hull_h_to_v(h);
    if (v.points.empty())
        return std::nullopt;
    Box box{IntVec(h.dim), IntVec(h.dim)};
    for (int i = 0; i < h.dim; ++i) {
        Rational lo = v.points[0][i], hi = v.points[0][i];
        for (auto& p : v.points) {
            lo = std::min(lo, p[i]);
            hi = std::max(hi, p[i]);
        }
        BigInt fl = numerator(lo) / denominator(lo);
        if (fl > lo)
            fl -= 1;
        BigInt cl = numerator(hi) / denominator(hi);
        if (cl < hi)
            cl += 1;
        box.lo[i] = static_cast<std::int64_t>(fl);
        box.hi[i] = static_cast<std::int64_t>(cl);
    }
    return box;
}

std::vector<std::pair<std::size_t, std::size_t>> polytope_edges(const HRep& h, const RationalVRep& v)
{
    const int d = h.dim;
    const size_t nv = v.points.size();
    std::vector<std::vector<char>> tight(nv, std::vector<char>(h.rows.size(), 0));
    for (size_t i = 0; i < nv; ++i)
        for (size_t r = 0; r < h.rows.size(); ++r) {
            Rational s = 0;
            for (int k = 0; k < d; ++k)
                s += h.rows[r].a[k] * v.points[i][k];
            tight[i][r] = (s == h.rows[r].b);
        }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (size_t i = 0; i < nv; ++i)
        for (size_t j = i + 1; j < nv; ++j) {
            std::vector<IntVec> common;
            std::vector<size_t> rows;
            for (size_t r = 0; r < h.rows.size(); ++r)
                if (tight[i][r] && tight[j][r]) {
                    rows.push_back(r);
                    common.push_back(h.rows[r].a);
                }
            if (static_cast<int>(common.size()) < d - 1)
                continue;
            // rank of the normals: affine rank of {0} plus the normals
            common.insert(common.begin(), IntVec(d, 0));
            if (affine_rank(common, d) != d - 1)
                continue;
            bool other = false;
            for (size_t k = 0; k < nv && !other; ++k) {
                if (k == i || k == j)
                    continue;
                bool all = true;
                for (auto r : rows)
                    if (!tight[k][r]) {
                        all = false;
                        break;
                    }
                other = all;
            }
            if (!other)
                edges.push_back({i, j});
        }
    return edges;
}

CutResult cut(const HRep& h, const IntVec& a, std::int64_t b)
{
    if (static_cast<int>(a.size()) != h.dim)
        throw std::invalid_argument("cut: dimension mismatch");
    IntVec neg(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        neg[i] = -a[i];

    CutResult res;
    res.removed = h;
    res.removed.rows.push_back({neg, -b});
    res.face = res.removed;
    res.face.rows.push_back({a, b});

    auto v = hull_h_to_v(h);
    Rational best;
    bool first = true;
    for (auto& p : v.points) {
        Rational s = 0;
        for (size_t i = 0; i < a.size(); ++i)
            s += a[i] * p[i];
        if (first || s > best)
            best = s;
        first = false;
    }
    res.removed_empty = first || best < b;
    if (res.removed_empty) {
        res.kept = h;
    } else {
        res.kept = h;
        res.kept.rows.push_back({a, b});
    }
    return res;
}

RationalVRep cut_vertices(const HRep& h, const IntVec& a, std::int64_t b)
{
    auto v = hull_h_to_v(h);
    auto edges = polytope_edges(h, v);
    auto value = [&](const RatVec& p) {
        Rational s = 0;
        for (size_t i = 0; i < a.size(); ++i)
            s += a[i] * p[i];
        return s;
    };
    std::set<RatVec> pts;
    for (auto& p : v.points)
        if (value(p) >= b)
            pts.insert(p);
    for (auto [i, j] : edges) {
        Rational vi = value(v.points[i]), vj = value(v.points[j]);
        if ((vi < b && vj > b) || (vj < b && vi > b)) {
            Rational lam = (Rational(b) - vi) / (vj - vi);
            RatVec p(h.dim);
            for (int k = 0; k < h.dim; ++k)
                p[k] = v.points[i][k] + lam * (v.points[j][k] - v.points[i][k]);
            pts.insert(p);
        }
    }
    RationalVRep out;
    out.dim = h.dim;
    out.points.assign(pts.begin(), pts.end());
    return out;
}

}  // namespace pperm
