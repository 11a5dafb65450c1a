#include "pperm/combinat.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pperm {

Subset Subset::of(std::initializer_list<int> elems)
{
    Subset s;
    for (int e : elems) {
        if (e < 1 || e > 32)
            throw std::invalid_argument("Subset element out of range");
        s.bits |= 1u << (e - 1);
    }
    return s;
}

std::vector<int> Subset::elements() const
{
    std::vector<int> r;
    for (int i = 0; i < 32; ++i)
        if ((bits >> i) & 1u)
            r.push_back(i + 1);
    return r;
}

bool Chain::valid() const
{
    for (size_t i = 1; i < sets.size(); ++i)
        if (!sets[i - 1].subset_of(sets[i]) || sets[i - 1] == sets[i])
            return false;
    return true;
}

bool operator<(const Chain& a, const Chain& b)
{
    if (a.sets.size() != b.sets.size())
        return a.sets.size() < b.sets.size();
    return a.sets < b.sets;
}

std::string to_string(const Chain& c)
{
    std::string out = "(";
    for (size_t i = 0; i < c.sets.size(); ++i) {
        if (i)
            out += " < ";
        out += "{";
        auto el = c.sets[i].elements();
        for (size_t j = 0; j < el.size(); ++j)
            out += (j ? "," : "") + std::to_string(el[j]);
        out += "}";
    }
    return out + ")";
}

bool in_cmn(const Chain& c, int m, int n)
{
    if (c.empty() || !c.valid() || !c.back().subset_of(Subset::full(m)))
        return false;
    if (!c.front().empty())
        return (c.back() - c.front()).size() <= n - 1;
    if (c.length() >= 2)
        return (c.back() - c.sets[1]).size() <= n - 1;
    return true;
}

std::vector<Chain> enumerate_chains(int m, int n, bool include_empty)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("enumerate_chains: need m >= 1 and n >= 1");
    if (m > 16)
        throw std::invalid_argument("enumerate_chains: m too large");
    std::vector<Chain> out;
    if (include_empty)
        out.push_back(Chain{});
    const std::uint32_t full = Subset::full(m).bits;
    Chain cur;
    std::function<void()> extend = [&]() {
        if (in_cmn(cur, m, n))
            out.push_back(cur);
        std::uint32_t last = cur.back().bits;
        std::uint32_t rest = full & ~last;
        // proper nonempty additions
        for (std::uint32_t add = rest; add; add = (add - 1) & rest) {
            cur.sets.push_back(Subset{last | add});
            extend();
            cur.sets.pop_back();
        }
    };
    for (std::uint32_t s = 0; s <= full; ++s) {
        cur.sets = {Subset{s}};
        extend();
    }
    std::sort(out.begin(), out.end());
    return out;
}

int missing_ranks(const Chain& c)
{
    if (c.empty())
        throw std::invalid_argument("missing_ranks: empty chain");
    return c.back().size() - c.length() + 1;
}

MarkerSet r_set(const Chain& c, int m, int n)
{
    MarkerSet r;
    if (c.empty()) {
        for (int i = 1; i <= m; ++i)
            r.insert({true, Subset::of({i})});
        for (std::uint32_t s = 1; s <= Subset::full(m).bits; ++s) {
            Subset S{s};
            if (S.size() <= n - 1 || S.size() == m)
                r.insert({false, S});
        }
        return r;
    }
    const Subset top = c.back();
    for (int i = 1; i <= m; ++i)
        if (!top.contains(i))
            r.insert({true, Subset::of({i})});
    const int l = c.length();
    if (!c.front().empty() || top.size() <= n - 1) {
        for (int j = 0; j < l - 1; ++j)
            r.insert({false, top - c.sets[j]});
    } else {
        for (int j = 1; j < l - 1; ++j)
            r.insert({false, top - c.sets[j]});
        r.insert({false, Subset::full(m)});
    }
    return r;
}

bool chain_leq(const Chain& c1, const Chain& c2, int m, int n)
{
    auto r1 = r_set(c1, m, n);
    auto r2 = r_set(c2, m, n);
    return std::includes(r1.begin(), r1.end(), r2.begin(), r2.end());
}

ROrder r_set_and_order(const Chain& c1, const Chain& c2, int m, int n)
{
    ROrder o{r_set(c1, m, n), r_set(c2, m, n), false};
    o.leq = std::includes(o.r1.begin(), o.r1.end(), o.r2.begin(), o.r2.end());
    return o;
}

// ---------------------------------------------------------------- draconian

std::vector<Subset> draconian_index_sets(int m)
{
    std::vector<Subset> I;
    for (int i = 1; i <= m; ++i)
        I.push_back(Subset::of({i}));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            I.push_back(Subset::of({i, j}));
    return I;
}

namespace {

void check_shape(const DraconianSeq& a, int m)
{
    if (static_cast<int>(a.size()) != m * (m + 1) / 2)
        throw std::invalid_argument("draconian sequence has wrong length");
    for (size_t k = 0; k < a.size(); ++k) {
        int cap = static_cast<int>(k) < m ? 1 : 2;
        if (a[k] < 0 || a[k] > cap)
            throw std::invalid_argument("draconian sequence entry out of bounds");
    }
}

// Tokens: a_k copies of I_k; feasible iff every token gets its own element of I_k.
bool matching_feasible(const DraconianSeq& a, const std::vector<Subset>& I, int m)
{
    std::vector<std::uint32_t> tokens;
    for (size_t k = 0; k < a.size(); ++k)
        for (int c = 0; c < a[k]; ++c)
            tokens.push_back(I[k].bits);
    if (static_cast<int>(tokens.size()) > m)
        return false;
    std::vector<int> owner(m, -1);
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int t) -> bool {
        for (int e = 0; e < m; ++e) {
            if (!((tokens[t] >> e) & 1u) || seen[e])
                continue;
            seen[e] = 1;
            if (owner[e] < 0 || augment(owner[e])) {
                owner[e] = t;
                return true;
            }
        }
        return false;
    };
    for (size_t t = 0; t < tokens.size(); ++t) {
        seen.assign(m, 0);
        if (!augment(static_cast<int>(t)))
            return false;
    }
    return true;
}

}  // namespace

bool draconian_check(const DraconianSeq& a, int m)
{
    check_shape(a, m);
    return matching_feasible(a, draconian_index_sets(m), m);
}

bool draconian_check_scan(const DraconianSeq& a, int m)
{
    check_shape(a, m);
    auto I = draconian_index_sets(m);
    const size_t L = I.size();
    if (L > 24)
        throw std::invalid_argument("draconian_check_scan: m too large for subset scan");
    for (std::uint64_t S = 1; S < (std::uint64_t{1} << L); ++S) {
        int sum = 0;
        Subset uni;
        for (size_t k = 0; k < L; ++k)
            if ((S >> k) & 1u) {
                sum += a[k];
                uni = uni | I[k];
            }
        if (sum > uni.size())
            return false;
    }
    return true;
}

namespace {

std::vector<DraconianSeq> enumerate(int m, bool volume_mode, bool singletons_zero)
{
    if (m < 1)
        throw std::invalid_argument("draconian enumeration needs m >= 1");
    auto I = draconian_index_sets(m);
    const int L = static_cast<int>(I.size());
    std::vector<DraconianSeq> out;
    DraconianSeq a(L, 0);
    std::function<void(int, int)> rec = [&](int k, int sum) {
        if (k == L) {
            if (!volume_mode || sum == m)
                out.push_back(a);
            return;
        }
        int cap = k < m ? (singletons_zero ? 0 : 1) : 2;
        for (int v = 0; v <= cap && sum + v <= m; ++v) {
            a[k] = v;
            if (v == 0 || matching_feasible(a, I, m))
                rec(k + 1, sum + v);
        }
        a[k] = 0;
    };
    rec(0, 0);
    return out;
}

}  // namespace

std::vector<DraconianSeq> enumerate_draconian(int m, DraconianMode mode)
{
    return enumerate(m, mode == DraconianMode::volume, false);
}

std::vector<DraconianSeq> enumerate_parking(int m, bool volume_mode)
{
    return enumerate(m, volume_mode, true);
}

// -------------------------------------------------------------- permutations

int descents(const std::vector<int>& perm)
{
    int d = 0;
    for (size_t i = 0; i + 1 < perm.size(); ++i)
        if (perm[i] > perm[i + 1])
            ++d;
    return d;
}

std::vector<int> inverse_permutation(const std::vector<int>& perm)
{
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) {
        int v = perm[i];
        if (v < 1 || v > static_cast<int>(perm.size()))
            throw std::invalid_argument("inverse_permutation: not a permutation");
        inv[v - 1] = static_cast<int>(i) + 1;
    }
    return inv;
}

}  // namespace pperm
